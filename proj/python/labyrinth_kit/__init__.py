"""Numerical toolkit: fractal force-law fitting, G variation, orbit quantization,
unmatter counting, number theory, s-geometry, beam spin flux and Bell checks."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, run_cli


def run(*args):
    """Run a CLI subcommand and return (exit_code, parsed JSON or None)."""
    code, out, _err = run_cli([str(a) for a in args])
    return code, (_json.loads(out) if out.strip().startswith("{") else None)
