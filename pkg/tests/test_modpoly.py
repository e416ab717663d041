"""Symbolic iterates and dynamical modular polynomials."""

import random
from fractions import Fraction

import pytest

from repdyn.dynamics import Form, apply_type
from repdyn.modpoly import (
    MAX_WORD_LEN,
    clear_caches,
    degree_table,
    degree_table_csv,
    phi,
    phi_moebius_leftpower,
    phi_pair,
    phi_with_certificate,
    raw_iterate,
    specialize_phi,
)
from repdyn.polyring import variables
from repdyn.typeclasses import enumerate_classes

x, y = variables("x", "y")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_raw_iterate_matches_the_dynamics_pointwise():
    rng = random.Random(31)
    words = [t for N in range(1, 5) for t in enumerate_classes(N)]
    words += [("R",), ("R", "L"), ("R", "L", "L")]
    for t in words:
        px, py = raw_iterate(t)
        for _ in range(4):
            binding = {
                name: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                for name in ("c", "d", "x", "y")
            }
            form = Form(binding["c"], binding["d"])
            vec = apply_type(form, (binding["x"], binding["y"]), t)
            assert (px.eval_at(binding), py.eval_at(binding)) == vec


def test_phi_known_closed_forms():
    assert phi(("L",), "L").canonical_str() == "c*x^2 + d*y^2 - x"
    assert phi(("L", "L"), "L").canonical_str() == "c^2*x^2 + c*d*y^2 + c*x + 1"


def test_right_side_of_all_left_words_is_zero():
    for N in range(1, 6):
        assert phi(("L",) * N, "R").is_zero()


def test_phi_pair_bundles_both_sides():
    pair = phi_pair(("L", "R"))
    assert pair.t == ("L", "R")
    assert pair.phiL == phi(("L", "R"), "L")
    assert pair.phiR == phi(("L", "R"), "R")


def test_divisor_product_recovers_the_full_left_iterate():
    for N in range(1, 6):
        full = raw_iterate(("L",) * N)[0] - x
        prod = None
        for d in _divisors(N):
            factor = phi(("L",) * d, "L")
            assert phi_moebius_leftpower(N, d) == factor
            prod = factor if prod is None else prod * factor
        assert prod == full


def test_certificate_restores_the_raw_numerator():
    for N in range(1, 5):
        for t in enumerate_classes(N):
            it = raw_iterate(t)
            for side, coord, idx in (("L", x, 0), ("R", y, 1)):
                p, removed = phi_with_certificate(t, side)
                prod = p
                for factor in removed:
                    prod = prod * factor
                assert prod == it[idx] - coord


def test_degree_table_small():
    rows = degree_table(3)
    flat = [(r.word, r.univariate, r.degL, r.degR) for r in rows]
    assert flat == [
        (("L",), True, 2, 0),
        (("L", "L"), True, 2, 0),
        (("L", "R"), True, 2, 4),
        (("L", "L", "L"), True, 6, 0),
        (("L", "L", "R"), True, 2, 8),
    ]


def test_degree_table_csv_format():
    assert degree_table_csv(2) == (
        "type,univariate,degL,degR\r\n"
        "L,yes,2,0\r\n"
        "LL,yes,2,0\r\n"
        "LR,yes,2,4\r\n"
    )


def test_specialize_phi_matches_manual_substitution():
    C, D = Fraction(1), Fraction(6)
    for t in (("L", "R"), ("L", "R", "L", "R")):
        for side in ("L", "R"):
            direct = phi(t, side).specialize({"c": C, "d": D})
            assert specialize_phi(t, side, C, D) == direct


def test_caches_clear_and_rebuild_identically():
    before = phi(("L", "R", "L", "R"), "L")
    clear_caches()
    assert phi(("L", "R", "L", "R"), "L") == before


def test_word_length_guard():
    with pytest.raises(ValueError):
        phi(("L",) * (MAX_WORD_LEN + 1), "L")
    with pytest.raises(ValueError):
        phi(("L",), "X")
