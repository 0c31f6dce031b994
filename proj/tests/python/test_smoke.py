import math

import pytest

import labyrinth_kit as lk


def test_version():
    assert lk.__version__ == "0.3.0"


def test_incline_baseline():
    e = lk.velocity_sq_energy(2.0)
    law = lk.velocity_sq_law(2.0, 0.0)
    assert e == pytest.approx(1.0767e7, rel=1e-3)
    assert law == pytest.approx(1.1351e7, rel=5e-3)


def test_big_integers_round_trip():
    assert lk.count_unmatter(10) == 181398528
    assert lk.pseudo_smarandache(909) == 404
    assert lk.axiom_denial_count(21) == 2097151
    n = 2**64 + 1
    f = lk.factorize(n)
    assert math.prod(p**e for p, e in f.items()) == n


def test_cubic_and_classify():
    sols = lk.cubic_search(1, 1, 1, 1, 12)
    assert any(sorted(s) == [-12, 9, 10] for s in sols)
    assert lk.classify("u,~u") == "unmatter"


def test_bell_with_python_callable():
    lhs, ok = lk.bell_lhs(lambda t: -math.cos(t), math.pi / 3, 2 * math.pi / 3)
    assert lhs == pytest.approx(1.5, abs=1e-12)
    assert not ok
    s = 1 / math.sqrt(2)
    assert lk.holevo_pure([(0.5, 1, 0), (0.5, s, s)]) == pytest.approx(0.600876, abs=1e-5)


def test_errors_map_to_python_kinds():
    with pytest.raises(ValueError):
        lk.entropy([0.5, 0.7])
    with pytest.raises(ValueError):
        lk.count_unmatter(1)


def test_cli_is_deterministic():
    a = lk.run("bell", "lhv", "--samples", "5000", "--seed", "3")
    b = lk.run("bell", "lhv", "--samples", "5000", "--seed", "3")
    assert a == b
    assert a[0] == 0
    assert a[1]["meta"]["subcommand"] == "bell lhv"
