"""Sparse multivariate polynomials: arithmetic, elimination, root finding."""

import random
from fractions import Fraction

import pytest

from repdyn.polyring import (
    ExactDivisionError,
    MPoly,
    det_bareiss,
    integer_roots,
    isolate_real_roots,
    parse_mpoly,
    quartic_factor_shape,
    rational_roots,
    resultant,
    resultant_bivariate,
    split_quartic,
    sturm_root_count,
    variables,
)


def _random_poly(rng, names, max_terms=4, max_exp=3, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = tuple((n, rng.randint(0, max_exp)) for n in names)
        key = tuple((n, e) for n, e in key if e)
        coeff = Fraction(rng.randint(-max_coeff, max_coeff), rng.randint(1, 4))
        terms[key] = terms.get(key, 0) + coeff
    p = MPoly.zero()
    for key, coeff in terms.items():
        mono = MPoly.const(coeff)
        for n, e in key:
            mono = mono * MPoly.var(n) ** e
        p = p + mono
    return p


def test_basic_arithmetic_identities():
    c, x = variables("c", "x")
    assert (c + x) ** 2 == c * c + 2 * c * x + x * x
    assert (c - x) * (c + x) == c * c - x * x
    assert (c * 0).is_zero()
    assert (c - c).is_zero()
    assert MPoly.const(Fraction(3, 4)).constant_value() == Fraction(3, 4)


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(101)
    for _ in range(25):
        p = _random_poly(rng, ("c", "x"))
        q = _random_poly(rng, ("x", "y"))
        r = _random_poly(rng, ("c", "y"))
        assert p * (q + r) == p * q + p * r
        assert (p + q) - q == p
        assert p * q == q * p


def test_canonical_str_parse_round_trip():
    rng = random.Random(202)
    for _ in range(40):
        p = _random_poly(rng, ("c", "d", "y"))
        assert parse_mpoly(p.canonical_str()) == p
    assert parse_mpoly("c^2*x^2 + c*d*y^2 + c*x + 1") == parse_mpoly(
        "1 + c*x + c*d*y^2 + c^2*x^2"
    )
    with pytest.raises(ValueError):
        parse_mpoly("")
    with pytest.raises(ValueError):
        parse_mpoly("c + q")


def test_exact_division_round_trip_and_failure():
    rng = random.Random(303)
    for _ in range(20):
        p = _random_poly(rng, ("c", "x"))
        q = _random_poly(rng, ("x", "y"))
        if q.is_zero():
            continue
        assert (p * q).exact_div(q) == p
        assert q.divides(p * q)
    x = variables("x")
    with pytest.raises(ExactDivisionError):
        (x * x + 1).exact_div(x + 1)
    assert not (x + 1).divides(x * x + 1)


def test_specialize_and_eval():
    c, d, x = variables("c", "d", "x")
    p = c * c * x + d - 2
    part = p.specialize({"c": Fraction(3)})
    assert part == 9 * x + d - 2
    assert p.eval_at({"c": Fraction(3), "d": Fraction(2), "x": Fraction(1, 9)}) == Fraction(1)
    with pytest.raises(ValueError):
        p.specialize({"q": Fraction(1)})
    with pytest.raises(ValueError):
        p.eval_at({"c": Fraction(1)})


def test_derivative_product_rule():
    rng = random.Random(404)
    for _ in range(15):
        p = _random_poly(rng, ("x", "y"))
        q = _random_poly(rng, ("x", "y"))
        lhs = (p * q).derivative("x")
        rhs = p.derivative("x") * q + p * q.derivative("x")
        assert lhs == rhs


def test_det_bareiss_known_values():
    one = MPoly.const(1)

    def m(v):
        return MPoly.const(Fraction(v))

    assert det_bareiss([[m(2), m(1)], [m(7), m(4)]]).constant_value() == 1
    # Vandermonde determinant in the symbolic variables c, d
    c, d = variables("c", "d")
    rows = [[one, c, c * c], [one, d, d * d], [one, c + d, (c + d) ** 2]]
    det = det_bareiss(rows)
    assert det == (d - c) * (c + d - c) * (c + d - d)


def test_resultant_detects_common_roots():
    c, d, x = variables("c", "d", "x")
    assert resultant(x * x - c, x * x - d, "x") == (c - d) ** 2
    # shared factor forces a zero resultant
    assert resultant(x * x - c, (x * x - c) * (x + 1), "x").is_zero()


def test_resultant_bivariate_matches_direct_resultant():
    rng = random.Random(505)
    for _ in range(10):
        p = _random_poly(rng, ("c", "x"))
        q = _random_poly(rng, ("c", "x"))
        if p.degree_in("x") < 1 or q.degree_in("x") < 1:
            continue
        assert resultant_bivariate(p, q, "x") == resultant(p, q, "x")


def _divisors(n):
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def _roots_oracle(coeffs):
    """Rational roots of an integer-coefficient polynomial, ascending order.

    Brute force over p/q with p dividing the trailing nonzero coefficient
    and q dividing the leading one.
    """
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    roots = set()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        coeffs = coeffs[k:]
    lead, trail = coeffs[-1], coeffs[0]
    for p in _divisors(trail):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(a * cand**i for i, a in enumerate(coeffs)) == 0:
                    roots.add(cand)
    return sorted(roots)


def test_rational_roots_against_divisor_oracle():
    rng = random.Random(606)
    trials = 0
    while trials < 100:
        deg = rng.randint(1, 4)
        coeffs = [rng.randint(-12, 12) for _ in range(deg)] + [rng.randint(1, 12)]
        if all(c == 0 for c in coeffs):
            continue
        trials += 1
        p = MPoly.univariate("y", [Fraction(a) for a in coeffs])
        assert sorted(rational_roots(p)) == _roots_oracle(coeffs)


def test_rational_roots_with_planted_fractions():
    rng = random.Random(707)
    y = variables("y")
    for _ in range(30):
        r1 = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        r2 = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        p = (y - r1) * (y - r2) * (y * y + 1)
        assert sorted(rational_roots(p)) == sorted({r1, r2})


def test_rational_roots_rejects_zero_polynomial():
    with pytest.raises(ValueError):
        rational_roots(MPoly.zero())


def test_integer_roots():
    assert integer_roots([6, -5, 1]) == [2, 3]
    assert integer_roots([0, 0, 1]) == [0]
    assert integer_roots([1, 0, 1]) == []
    with pytest.raises(ValueError):
        integer_roots([0])


def test_isolation_intervals_each_hold_one_root():
    # (y^2 - 2)(y - 1): roots -sqrt2, 1, sqrt2
    coeffs = [2, -2, -1, 1]  # ascending: 2 - 2y - y^2 + y^3
    y = variables("y")
    p = (y * y - 2) * (y - 1)
    assert p.univariate_coeffs("y") == [Fraction(a) for a in coeffs]
    intervals = isolate_real_roots(coeffs)
    assert len(intervals) == 3
    for lo, hi in intervals:
        assert lo < hi
        assert sturm_root_count(coeffs, lo, hi) == 1
    for (_, hi1), (lo2, _) in zip(intervals, intervals[1:]):
        assert hi1 <= lo2


def test_sturm_counts_only_interior_roots():
    coeffs = [-4, 0, 1]  # y^2 - 4, roots -2 and 2; intervals are (lo, hi]
    assert sturm_root_count(coeffs, Fraction(-3), Fraction(3)) == 2
    assert sturm_root_count(coeffs, Fraction(-2), Fraction(3)) == 1
    assert sturm_root_count(coeffs, Fraction(0), Fraction(1)) == 0


def test_split_quartic_recovers_planted_factors():
    y = variables("y")
    cases = [
        (y * y + y + 1, y * y - 2),
        (y * y + Fraction(1, 3) * y + Fraction(7, 135), y * y + Fraction(1, 4) * y + Fraction(5, 128)),
        (y + 5, y * y * y - 2),
    ]
    for a, b in cases:
        factors = split_quartic(a * b)
        assert len(factors) >= 2
        prod = MPoly.const(1)
        for f in factors:
            prod = prod * f
            lead = f.univariate_coeffs("y")[-1]
            assert lead == 1, "factors are monic"
        assert prod == (a * b) * (Fraction(1) / (a * b).univariate_coeffs("y")[-1])
        assert {f.canonical_str() for f in factors} == {a.canonical_str(), b.canonical_str()}


def test_split_quartic_irreducible_stays_whole():
    p = MPoly.univariate("y", [1, 0, 0, 0, 1])  # y^4 + 1
    assert [f.canonical_str() for f in split_quartic(p)] == ["y^4 + 1"]


def test_split_quartic_bad_inputs_rejected():
    y = variables("y")
    with pytest.raises(TypeError):
        split_quartic([1, 0, 1])
    with pytest.raises(ValueError):
        split_quartic((y - 1) ** 2 * (y * y + 1))
    with pytest.raises(ValueError):
        split_quartic(y**5 + 1)
    with pytest.raises(ValueError):
        split_quartic(MPoly.const(3))


def test_quartic_factor_shape_census():
    y = variables("y")
    assert quartic_factor_shape(MPoly.univariate("y", [1, 0, 0, 0, 1])) == (4,)
    assert quartic_factor_shape((y * y + 1) * (y * y + 2)) == (2, 2)
    assert quartic_factor_shape((y - 1) * (y**3 - 2)) == (1, 3)
    assert quartic_factor_shape((y - 1) * (y - 2) * (y * y + 1)) == (1, 1, 2)
    assert quartic_factor_shape((y - 1) * (y - 2) * (y - 3) * (y + 4)) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        quartic_factor_shape(y * y + 1)
    with pytest.raises(TypeError):
        quartic_factor_shape([0, 0, 0, 0, 1])
