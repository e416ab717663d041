"""Quartic-formula analysis of the period-4 polynomial.

The quartic's depressed form u^4 + b2*u^2 + b1*u + b0 drives everything
here: the biquadratic obstruction (b1 = 0) reduces to a quartic curve B2
in (c, d) that factors into two rational quadratics, each without 3-adic
points away from the origin; the resolvent cubic T and its discriminant
quantities give the radical expressions; the equality case of the radical
bound reduces to a degree-12 plane curve, again locally insoluble at 3;
and the requirement that the quartic formula produce a rational root cuts
out a surface in (c, d, z, n) which a height-bounded scan confirms has no
small rational points.

To keep every step in exact polynomial arithmetic, the rational-function
coefficients b2, b1, b0 are replaced throughout by their cleared integer
forms n2 = 8*a4^2*b2, n1 = 8*a4^3*b1, n0 = 256*a4^4*b0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .classify import r_coeff_polys
from .polyring import (
    ExactDivisionError,
    MPoly,
    rational_roots,
    resultant,
)
from .rationals import enumerate_rationals, sqrt_exact

__all__ = [
    "DepressedQuartic",
    "LocalVerdict",
    "depressed_coeffs",
    "cleared_generic",
    "depressed_identity_holds",
    "b2_curve_poly",
    "b2_curve_check",
    "resolvent_and_radicals",
    "isolate_resolvent_roots",
    "resolvent_roots_mpmath",
    "equality_curve_poly",
    "equality_curve_check",
    "EqualityCurveError",
    "b0_locus_poly",
    "surface_equations",
    "surface_master_identity",
    "surface_construction_identities",
    "surface_search",
    "surface_pair_hits",
    "resolvent_rational_root",
    "split_invariants",
    "split_via_resolvent",
    "qp_solvable",
]


# -- depressed quartic ------------------------------------------------


@dataclass(frozen=True)
class DepressedQuartic:
    """Coefficients of the monic depressed quartic u^4 + b2 u^2 + b1 u + b0."""

    b2: Fraction
    b1: Fraction
    b0: Fraction


_GEN_CACHE = {}


def cleared_generic():
    """(a4, n2, n1, n0) as integer polynomials in (c, d).

    n2 = -3 a3^2 + 8 a4 a2,  n1 = a3^3 - 4 a4 a2 a3 + 8 a4^2 a1,
    n0 = -3 a3^4 + 16 a4 a2 a3^2 - 64 a4^2 a1 a3 + 256 a4^3 a0,
    so that b2 = n2/(8 a4^2), b1 = n1/(8 a4^3), b0 = n0/(256 a4^4).
    """
    if "cleared" not in _GEN_CACHE:
        a0, a1, a2, a3, a4 = r_coeff_polys()
        n2 = -3 * a3.square() + 8 * a4 * a2
        n1 = a3 * a3.square() - 4 * a4 * a2 * a3 + 8 * a4.square() * a1
        n0 = (
            -3 * a3.square().square()
            + 16 * a4 * a2 * a3.square()
            - 64 * a4.square() * a1 * a3
            + 256 * a4 * a4.square() * a0
        )
        _GEN_CACHE["cleared"] = (a4, n2, n1, n0)
    return _GEN_CACHE["cleared"]


def depressed_coeffs(C, D):
    """Exact (b2, b1, b0) at a specific form; requires the leading a4 != 0."""
    C, D = Fraction(C), Fraction(D)
    if C == 0 or D == 0 or C == D:
        raise ValueError("depressed form needs C, D nonzero and distinct (a4 != 0)")
    a4, n2, n1, n0 = cleared_generic()
    at = {"c": C, "d": D}
    a4v = a4.eval_at(at)
    return DepressedQuartic(
        b2=n2.eval_at(at) / (8 * a4v**2),
        b1=n1.eval_at(at) / (8 * a4v**3),
        b0=n0.eval_at(at) / (256 * a4v**4),
    )


def depressed_identity_holds():
    """Master symbolic check of the depression substitution, denominator-free.

    sum_i a_i (4 a4 u - a3)^i (4 a4)^(4-i)  ==  a4 (256 a4^4 u^4 + 32 a4^2 n2 u^2
    + 32 a4 n1 u + n0) in Q[c, d, u]; equivalent to substituting
    y = u - a3/(4 a4) into the quartic and scaling to the monic depressed form.
    """
    coeffs = r_coeff_polys()
    a4, n2, n1, n0 = cleared_generic()
    a3 = coeffs[3]
    u = MPoly.var("u")
    shifted = 4 * a4 * u - a3
    lhs = MPoly.zero()
    for i, ai in enumerate(coeffs):
        lhs = lhs + ai * shifted**i * (4 * a4) ** (4 - i)
    rhs = a4 * (
        256 * a4.square().square() * u**4
        + 32 * a4.square() * n2 * u.square()
        + 32 * a4 * n1 * u
        + n0
    )
    return lhs == rhs


# -- the biquadratic obstruction --------------------------------------


def b2_curve_poly():
    """The printed quartic curve in (c, d) controlling b1 = 0."""
    c = MPoly.var("c")
    d = MPoly.var("d")
    return (
        -(d**4) + 10 * c * d**3 - 24 * c**2 * d**2 - 2 * c**3 * d + c**4
    )


@dataclass
class B2CurveReport:
    curve: MPoly
    scaling_identity: bool
    factors: tuple
    product_matches: bool
    factors_irreducible: bool
    verdicts: tuple


def _factor_b2_undetermined(curve):
    """Split the dehomogenization into two monic quadratics, exhaustively.

    The dehomogenized curve at d=1 is monic of degree 4 with integer
    coefficients, so any rational monic split is integral (Gauss); the
    coefficient search is bounded by 1 + the largest printed coefficient.
    """
    mono = curve.specialize({"d": 1}).univariate_coeffs()
    if mono[-1] < 0:
        mono = [-v for v in mono]
    B0, B1, B2c, B3, B4 = (int(v) for v in mono)
    assert B4 == 1
    bound = max(abs(int(v)) for v in mono) + 1
    for v in range(-bound, bound + 1):
        if v == 0 or B0 % v:
            continue
        z = B0 // v
        for u in range(-bound, bound + 1):
            w = B3 - u
            if u * w + v + z != B2c:
                continue
            if u * z + v * w != B1:
                continue
            return (u, v), (w, z)
    raise AssertionError("no two-quadratic split found for the b1 curve")


def b2_curve_check(max_level=10):
    """Verify the printed curve, its scaling role, its split, and p=3 insolubility.

    The curve times 512 c^4 d^5 (d-c)^5 must equal the cleared numerator n1
    of b1; the curve must split into two rational quadratic forms with no
    rational roots each; and each factor must have no 3-adic zeros away
    from the origin.
    """
    c = MPoly.var("c")
    d = MPoly.var("d")
    curve = b2_curve_poly()
    _, _, n1, _ = cleared_generic()
    scale = 512 * c**4 * d**5 * (d - c) ** 5
    scaling_ok = scale * curve == n1
    (u, v), (w, z) = _factor_b2_undetermined(curve)
    f1 = c.square() + u * c * d + v * d.square()
    f2 = c.square() + w * c * d + z * d.square()
    sign = 1 if curve.specialize({"d": 1}).univariate_coeffs()[-1] > 0 else -1
    product_ok = (f1 * f2 if sign > 0 else -(f1 * f2)) == curve
    irreducible = all(
        not rational_roots(f.specialize({"d": 1})) for f in (f1, f2)
    )
    verdicts = tuple(qp_solvable([f], 3, max_level) for f in (f1, f2))
    report = B2CurveReport(
        curve=curve,
        scaling_identity=scaling_ok,
        factors=(f1, f2),
        product_matches=product_ok,
        factors_irreducible=irreducible,
        verdicts=verdicts,
    )
    if not (scaling_ok and product_ok and irreducible):
        raise AssertionError(f"b1-curve structural check failed: {report}")
    for verdict in verdicts:
        if verdict.outcome != "NoPoints":
            raise AssertionError(
                f"b1-curve factor unexpectedly has 3-adic points: {verdict}"
            )
    return report


# -- resolvent cubic --------------------------------------------------


def resolvent_and_radicals(C, D):
    """The resolvent cubic T and the two cubic-formula quantities (p, q).

    T(x) = 2x^3 - b2 x^2 - 2 b0 x + (b2 b0 - b1^2/4);
    p = -b2^2/12 - b0;  q = -b2^3/108 + b2 b0/3 - b1^2/8.
    """
    dq = depressed_coeffs(C, D)
    b2, b1, b0 = dq.b2, dq.b1, dq.b0
    x = MPoly.var("x")
    T = 2 * x**3 - b2 * x**2 - 2 * b0 * x + (b2 * b0 - b1 * b1 / 4)
    pval = -b2 * b2 / 12 - b0
    qval = -b2 * b2 * b2 / 108 + b2 * b0 / 3 - b1 * b1 / 8
    return T, pval, qval


def isolate_resolvent_roots(C, D, width=Fraction(1, 10**20)):
    """Certified real-root intervals of T, narrowed below `width`.

    Entirely exact: Sturm isolation then Fraction bisection; each returned
    (lo, hi) satisfies a strict sign change of T across it (or an exact
    rational root, returned as a width-zero interval).
    """
    from .polyring import _q_eval, _sign_variations, _sturm_chain, isolate_real_roots

    T, _, _ = resolvent_and_radicals(C, D)
    coeffs = T.univariate_coeffs()
    chain = _sturm_chain(coeffs)
    out = []
    for lo, hi in isolate_real_roots(coeffs):
        vlo = _sign_variations(chain, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _q_eval(coeffs, mid) == 0:
                lo = hi = mid
                break
            vm = _sign_variations(chain, mid)
            if vlo - vm:
                hi = mid
            else:
                lo, vlo = mid, vm
        if lo != hi:
            # unconditional certificate: exactly one root in the half-open interval
            assert vlo - _sign_variations(chain, hi) == 1, "lost the root certificate"
        out.append((lo, hi))
    return out


def resolvent_roots_mpmath(C, D, dps=40):
    """Floating resolvent roots for illustration (validated residuals)."""
    import mpmath

    T, _, _ = resolvent_and_radicals(C, D)
    coeffs = T.univariate_coeffs()
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(int(v.numerator)) / int(v.denominator)
                                  for v in reversed(coeffs)])
        for r in roots:
            residual = mpmath.polyval([mpmath.mpf(int(v.numerator)) / int(v.denominator)
                                       for v in reversed(coeffs)], r)
            if abs(residual) > mpmath.mpf(10) ** (-dps // 2):
                raise AssertionError(f"resolvent root residual too large: {residual}")
        return [mpmath.mpc(r) for r in roots]


# -- the rational resolvent branch ------------------------------------


def resolvent_rational_root():
    """Closed-form rational root of the resolvent cubic: (numerator, denominator).

    The resolvent cubic of the depressed quartic has, identically in the
    form coefficients, the rational-function root

        rho = (d^4 - 5c d^3 + 41 c^2 d^2 - 3 c^3 d - 2 c^4)
              / (64 c^2 d^3 (d - c)),

    verified symbolically on first use and cached.  The quartic's generic
    splitting field is therefore dihedral rather than full-symmetric: its
    radical solution needs no cube roots, and the two-quadratics split is
    decided by squareness tests alone (see split_invariants).
    """
    if "rho" not in _GEN_CACHE:
        c = MPoly.var("c")
        d = MPoly.var("d")
        num = (d**4 - 5 * c * d**3 + 41 * c.square() * d.square()
               - 3 * c**3 * d - 2 * c**4)
        den = 64 * c.square() * d**3 * (d - c)
        a4, n2, n1, n0 = cleared_generic()
        # the cleared resolvent at u = num/den, multiplied by den^3
        residue = (
            4096 * a4**6 * num**3
            - 256 * a4**4 * n2 * num.square() * den
            - 16 * a4.square() * n0 * num * den.square()
            + (n2 * n0 - 8 * n1.square()) * den**3
        )
        if not residue.is_zero():
            raise AssertionError("rational resolvent root failed symbolic check")
        _GEN_CACHE["rho"] = (num, den)
    return _GEN_CACHE["rho"]


def split_invariants():
    """Integer forms (sigma, delta2) whose squareness decides the split.

    sigma = c^2 - 6cd + d^2 satisfies (4cd)^2 (2 rho - b2) = sigma
    identically, so the depressed quartic splits into two rational
    quadratics through the rational resolvent branch exactly when
    sigma(C, D) is a rational square.  delta2 = cd (3c^2 + 14cd + 3d^2)
    is, modulo rational squares, the discriminant of the resolvent's
    quadratic cofactor, so the remaining two branches are rational exactly
    when delta2(C, D) is a square.  Both identities are verified
    symbolically on first use and cached.
    """
    if "split_inv" not in _GEN_CACHE:
        c = MPoly.var("c")
        d = MPoly.var("d")
        num, den = resolvent_rational_root()
        a4, n2, _, n0 = cleared_generic()
        sigma = c.square() - 6 * c * d + d.square()
        # (4cd)^2 (2 rho - b2) == sigma, cleared over den * 8 a4^2
        lhs = (2 * num * 8 * a4.square() - n2 * den) * 16 * c.square() * d.square()
        rhs = sigma * den * 8 * a4.square()
        if lhs != rhs:
            raise AssertionError("sigma invariant failed symbolic check")
        # cofactor discriminant: disc2 = -3 rho^2 + b2 rho + b2^2/4 + 4 b0,
        # scaled by the perfect square 256 a4^4 = (16 a4^2)^2
        A = 256 * a4**4
        disc2A = (
            -3 * num.square() * A.exact_div(den.square())
            + n2 * num * A.exact_div(8 * a4.square() * den)
            + n2.square() * A.exact_div(4 * (8 * a4.square()).square())
            + 4 * n0
        )
        delta2 = c * d * (3 * c.square() + 14 * c * d + 3 * d.square())
        # disc2A == 2^20 c^7 d^9 (d-c)^6 (3c^2+14cd+3d^2); against the square
        # denominator (16 a4^2)^2 this leaves exactly the class of delta2
        expected = 2**20 * c**7 * d**9 * (d - c)**6 * (
            3 * c.square() + 14 * c * d + 3 * d.square()
        )
        if disc2A != expected:
            raise AssertionError("cofactor discriminant failed symbolic check")
        _GEN_CACHE["split_inv"] = (sigma, delta2)
    return _GEN_CACHE["split_inv"]


def split_via_resolvent(C, D):
    """Factor shape of the rootless specialized quartic, by squareness tests.

    For a specialization already known to have no rational roots, decides
    between the two-quadratics split and irreducibility using the rational
    resolvent branch: the generic branch splits when c^2 - 6cd + d^2 is a
    rational square, and the remaining branches are checked through the
    cofactor's discriminant.  Returns (shape, factors) where shape is
    (2, 2) or (4,) and factors are ascending coefficient triples of the
    monic quadratics in the depressed variable ((), when irreducible).
    Every claimed split is certified by re-expanding the product.

    A repeated factor cannot occur here: a repeated quadratic would force
    the odd depressed coefficient to vanish, which the nonvanishing of the
    square-root obstruction form rules out for nonzero distinct C, D.
    """
    C, D = Fraction(C), Fraction(D)
    # cheap squareness pre-tests: if neither branch invariant is a square,
    # no rational resolvent root has a square shift and the quartic is
    # irreducible -- without ever computing the depressed coefficients
    sig = C * C - 6 * C * D + D * D
    sig_root = sqrt_exact(sig)
    delta2 = C * D * (3 * C * C + 14 * C * D + 3 * D * D)
    delta2_root = sqrt_exact(delta2)
    if sig_root is None and delta2_root is None:
        return (4,), ()

    dq = depressed_coeffs(C, D)
    rho_num, rho_den = resolvent_rational_root()
    at = {"c": C, "d": D}
    rho = rho_num.eval_at(at) / rho_den.eval_at(at)

    def certify(alpha, s):
        m1 = alpha - dq.b1 / (2 * s)
        m2 = alpha + dq.b1 / (2 * s)
        if m1 + m2 - s * s != dq.b2 or s * (m2 - m1) != dq.b1 or m1 * m2 != dq.b0:
            raise AssertionError(
                f"claimed quadratic split failed re-expansion at ({C}, {D})"
            )
        return ((m1, s, Fraction(1)), (m2, -s, Fraction(1)))

    if sig_root is not None:
        if sig_root == 0:
            raise AssertionError("sigma vanishes at a rational pair")
        return (2, 2), certify(rho, sig_root / (4 * C * D))
    beta = rho - dq.b2 / 2
    gamma = rho * rho - dq.b2 * rho / 2 - dq.b0
    disc2 = beta * beta - 4 * gamma
    r = sqrt_exact(disc2)
    if r is None:
        raise AssertionError(
            f"cofactor discriminant squareness disagreed with its invariant "
            f"at ({C}, {D})"
        )
    for alpha in ((-beta + r) / 2, (-beta - r) / 2):
        s2 = 2 * alpha - dq.b2
        t = sqrt_exact(s2)
        if t:
            return (2, 2), certify(alpha, t)
    return (4,), ()


# -- the equality-case curve ------------------------------------------

_EQ12_TERMS = [
    (-25, 0, 12), (405, 1, 11), (-4752, 2, 10), (37104, 3, 9),
    (-172194, 4, 8), (438210, 5, 7), (-517584, 6, 6), (114504, 7, 5),
    (51027, 8, 4), (-10879, 9, 3), (-1608, 10, 2), (240, 11, 1), (16, 12, 0),
]


def equality_curve_poly():
    """The printed degree-12 homogeneous curve in (c, d)."""
    return MPoly.from_dict(("c", "d"), {(i, j): coeff for coeff, i, j in _EQ12_TERMS})


class EqualityCurveError(ArithmeticError):
    """A mandated consistency check of the equality-case curve failed.

    Carries the full report in `.report` so callers can inspect which
    checks passed; raised whenever the stored degree-12 curve fails the
    divisibility consistency against the alpha-elimination resultant or
    the 3-adic insolubility check.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass
class EqualityCurveReport:
    curve: MPoly
    homogeneous_degree: int
    resultant_closed_form_ok: bool
    divisibility: bool
    verdict: object
    true_locus: MPoly
    true_locus_rational_roots: tuple
    true_locus_verdict: object
    equality_case_closed: bool


def b0_locus_poly():
    """The cleaned numerator of b0: n0 = c^4 d^7 (d-c)^6 * (this polynomial).

    On roots alpha of the resolvent T the equality quantity satisfies the
    identity 8a^3 - 4a^2 b2 - b1^2 = 4T(a) + 4 b0 (2a - b2), and
    T(b2/2) = -b1^2/4, so the equality case forces b0 = 0 (the branch
    a = b2/2 would force b1 = 0, which the biquadratic obstruction rules
    out).  b0 = 0 at a valid specialization is exactly a projective
    rational zero of this degree-7 form.
    """
    _, _, _, n0 = cleared_generic()
    c = MPoly.var("c")
    d = MPoly.var("d")
    work = n0
    for fac in (c**4, d**7, (d - c) ** 6):
        work = work.exact_div(fac)
    return work.primitive()


def equality_curve_check(max_level=12):
    """Equality-case analysis: stored degree-12 curve versus the true locus.

    Performs, in order: (i) stores and shape-checks the degree-12 curve;
    (ii) computes the resultant in alpha of the cleared resolvent cubic and
    the cleared equality cubic 8a^3 - 4a^2 b2 - b1^2, verifies its exact
    closed form 2^30 a4^18 n0^3 n1^2 (a consequence of the identity
    E - 4T = 4 b0 (2a - b2)), and tests divisibility by the stored curve —
    which provably fails, since the curve is irreducible of degree 12 and
    coprime to a4, n0, and n1; (iii) checks the stored curve has no 3-adic
    points away from the origin (it does not); (iv) independently closes
    the equality case: the true locus b0 = 0 reduces to a degree-7 form
    with no rational roots in either chart and itself no 3-adic points.

    Raises EqualityCurveError (with the report attached) because the
    divisibility consistency in (ii) does not hold; the report documents
    that every other check passes and that the equality case is closed.
    """
    curve = equality_curve_poly()
    if not curve.is_homogeneous() or curve.total_degree() != 12:
        raise AssertionError("stored curve is not homogeneous of degree 12")
    a4, n2, n1, n0 = cleared_generic()
    u = MPoly.var("u")
    a4sq = a4.square()
    a46 = (a4 * a4sq).square()
    t_clear = (
        4096 * a46 * u**3
        - 256 * a4sq.square() * n2 * u.square()
        - 16 * a4sq * n0 * u
        + (n2 * n0 - 8 * n1.square())
    )
    e_clear = 512 * a46 * u**3 - 32 * a4sq.square() * n2 * u.square() - n1.square()
    res = resultant(t_clear, e_clear, "u")
    closed_form_ok = res == 2**30 * a4**18 * n0 * n0.square() * n1.square()
    try:
        res.primitive().exact_div(curve)
        divisibility = True
    except ExactDivisionError:
        divisibility = False
    verdict = qp_solvable([curve], 3, max_level)
    locus = b0_locus_poly()
    locus_roots = tuple(sorted(
        rational_roots(locus.specialize({"d": 1}))
        | rational_roots(locus.specialize({"c": 1}))
    ))
    locus_verdict = qp_solvable([locus], 3, max_level)
    report = EqualityCurveReport(
        curve=curve,
        homogeneous_degree=curve.total_degree(),
        resultant_closed_form_ok=closed_form_ok,
        divisibility=divisibility,
        verdict=verdict,
        true_locus=locus,
        true_locus_rational_roots=locus_roots,
        true_locus_verdict=locus_verdict,
        equality_case_closed=(not locus_roots and locus_verdict.outcome == "NoPoints"),
    )
    if not closed_form_ok:
        raise AssertionError("alpha-elimination resultant lost its closed form")
    if verdict.outcome != "NoPoints":
        raise EqualityCurveError(
            f"stored curve unexpectedly has 3-adic points: {verdict}", report
        )
    if not divisibility:
        raise EqualityCurveError(
            "stored degree-12 curve does not divide the alpha-elimination "
            "resultant: the resultant equals 2^30 a4^18 n0^3 n1^2 exactly, "
            "and the curve is coprime to each factor (the equality case is "
            "nevertheless closed via the b0 locus; see the attached report)",
            report,
        )
    return report


# -- the quartic-formula surface --------------------------------------


def surface_equations():
    """Cleared system (E1 in (c,d,z); E2 in (c,d,z,n)) cutting out the surface.

    E1 = a4^2 z^2 (8 a4^2 z^2 + n2)^2 - a4^2 n0 z^2 - n1^2 is the cleared
    form of z^2 (z^2+b2)^2 - 4 b0 z^2 - b1^2 (the resolvent condition with
    2 alpha - b2 = z^2); E2 = 8 a4^3 z^3 + 2 a4 n2 z + 8 a4^3 n^2 z - 2 n1
    clears z^3 + 2 b2 z + n^2 z - 2 b1.
    """
    if "surface" not in _GEN_CACHE:
        a4, n2, n1, n0 = cleared_generic()
        z = MPoly.var("z")
        n = MPoly.var("n")
        a4sq = a4.square()
        inner = 8 * a4sq * z.square() + n2
        E1 = a4sq * z.square() * inner.square() - a4sq * n0 * z.square() - n1.square()
        E2 = (
            8 * a4 * a4sq * z * z.square()
            + 2 * a4 * n2 * z
            + 8 * a4 * a4sq * n.square() * z
            - 2 * n1
        )
        _GEN_CACHE["surface"] = (E1, E2)
    return _GEN_CACHE["surface"]


def surface_master_identity():
    """Substituting the resolvent parametrization into the cleared cubic.

    With N = 8 a4^2 z^2 + n2 and M = 16 a4^2 (so u = N/M recovers
    alpha = (z^2+b2)/2), the cleared resolvent satisfies
    4096 a4^6 N^3 - 256 a4^4 n2 N^2 M - 16 a4^2 n0 N M^2
    + (n2 n0 - 8 n1^2) M^3 == 32768 a4^6 E1.
    """
    a4, n2, n1, n0 = cleared_generic()
    E1, _ = surface_equations()
    z = MPoly.var("z")
    a4sq = a4.square()
    a46 = (a4 * a4sq).square()
    N = 8 * a4sq * z.square() + n2
    M = 16 * a4sq
    lhs = (
        4096 * a46 * N * N.square()
        - 256 * a4sq.square() * n2 * N.square() * M
        - 16 * a4sq * n0 * N * M**2
        + (n2 * n0 - 8 * n1.square()) * M**3
    )
    return lhs == 32768 * a46 * E1


def surface_construction_identities(samples=((2, 3), (5, -7), (Fraction(1, 4), -2))):
    """Cleared surface equations match their rational-function numerators.

    Checks the symbolic master identity, then at sample specializations
    verifies E1/(64 a4^6) == z^2 (z^2+b2)^2 - 4 b0 z^2 - b1^2 and
    E2/(8 a4^3) == z^3 + 2 b2 z + n^2 z - 2 b1 as exact polynomial
    identities in z (and n) over the rationals.
    """
    if not surface_master_identity():
        return False
    E1, E2 = surface_equations()
    a4, _, _, _ = cleared_generic()
    z = MPoly.var("z")
    n = MPoly.var("n")
    for C, D in samples:
        at = {"c": Fraction(C), "d": Fraction(D)}
        dq = depressed_coeffs(C, D)
        a4v = a4.eval_at(at)
        lhs1 = E1.specialize(at) * Fraction(1, 64 * a4v**6)
        rhs1 = (z.square() * (z.square() + dq.b2).square()
                - 4 * dq.b0 * z.square() - MPoly.const(dq.b1**2))
        lhs2 = E2.specialize(at) * Fraction(1, 8 * a4v**3)
        rhs2 = (z * z.square() + 2 * dq.b2 * z + n.square() * z
                - MPoly.const(2 * dq.b1))
        if lhs1 != rhs1 or lhs2 != rhs2:
            return False
    return True


_SIEVE_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103)


def _w_cubic_polys():
    """Coefficients (A0, A1, A2, A3) of E1 as a cubic in w = z^2."""
    if "wcubic" not in _GEN_CACHE:
        a4, n2, n1, n0 = cleared_generic()
        a4sq = a4.square()
        _GEN_CACHE["wcubic"] = (
            -n1.square(),
            a4sq * n2.square() - a4sq * n0,
            16 * a4sq.square() * n2,
            64 * (a4sq * a4).square(),
        )
    return _GEN_CACHE["wcubic"]


def surface_search(height_bound, system=None):
    """All rational points of the surface system over small (C, D).

    Scans distinct nonzero rationals C, D of height up to the bound; for
    each pair the first equation is solved exactly for z (its rational
    roots) and the second for n, so every rational point over a scanned
    (C, D) is found regardless of the height of z or n.  With the default
    system a multi-prime residue sieve discards most pairs first, and the
    surviving exact work runs through the cubic in w = z^2 (a z-root is a
    rational square root of a w-root); a custom system (the scanner
    self-test) takes the plain exact path.  Returns (C, D, z, n) tuples.
    """
    if height_bound < 1:
        raise ValueError("height bound must be positive")
    default = system is None
    if default:
        _, E2 = surface_equations()
        E1 = None
    else:
        E1, E2 = system
    values = enumerate_rationals(height_bound)
    if default:
        pair_idx = _sieve_surface_pairs(values)
        pairs = [(values[i], values[j]) for i, j in pair_idx]
    else:
        pairs = [(Cv, Dv) for Cv in values for Dv in values if Cv != Dv]
    hits = []
    for Cv, Dv in pairs:
        if default:
            hits.extend((Cv, Dv, z0, n0) for z0, n0 in surface_pair_hits(Cv, Dv))
            continue
        at = {"c": Cv, "d": Dv}
        e1 = E1.specialize(at)
        if e1.is_zero():
            raise ArithmeticError(
                f"first surface equation vanished identically at ({Cv}, {Dv})"
            )
        if e1.is_constant():
            continue
        for z0 in sorted(rational_roots(e1)):
            e2 = E2.specialize(at).specialize({"z": z0})
            if e2.is_zero():
                raise ArithmeticError(
                    f"second surface equation vanished identically at ({Cv}, {Dv}, z={z0})"
                )
            if e2.is_constant():
                continue
            for n0 in sorted(rational_roots(e2)):
                hits.append((Cv, Dv, z0, n0))
    return hits


def surface_pair_hits(Cv, Dv):
    """Exact rational points (z, n) of the surface system at one pair.

    Solves the first equation through the cubic in w = z^2 (a z-root is a
    rational square root of a w-root), then the second for n at each z.
    """
    Cv, Dv = Fraction(Cv), Fraction(Dv)
    at = {"c": Cv, "d": Dv}
    _, E2 = surface_equations()
    A0, A1, A2, A3 = (poly.eval_at(at) for poly in _w_cubic_polys())
    if not any((A0, A1, A2, A3)):
        raise ArithmeticError(
            f"first surface equation vanished identically at ({Cv}, {Dv})"
        )
    zroots = []
    for w0 in rational_roots([A0, A1, A2, A3]):
        if w0 < 0:
            continue
        s = sqrt_exact(w0)
        if s is None:
            continue
        zroots.extend((s, -s) if s else (s,))
    zroots.sort()
    hits = []
    for z0 in zroots:
        e2 = E2.specialize(at).specialize({"z": z0})
        if e2.is_zero():
            raise ArithmeticError(
                f"second surface equation vanished identically at ({Cv}, {Dv}, z={z0})"
            )
        if e2.is_constant():
            continue
        for n0 in sorted(rational_roots(e2)):
            hits.append((z0, n0))
    return hits


def _sieve_surface_pairs(values, primes=_SIEVE_PRIMES):
    """Index pairs (i, j), i != j, passing a joint local test for E1 and E2.

    A rational hit (z, n) over (C, D) reduces mod p (when neither height
    denominator is divisible by p and a4 is a unit) to a residue z-bar with
    E1(z-bar) = 0 such that either z-bar = 0 (possible only when p divides
    the cleared b1 numerator) or n^2 = t(z-bar) is solvable, with t the
    n^2-coefficient transport of E2.  The test is necessary, never
    sufficient, so survivors get exact checks.
    """
    import numpy as np

    nv = len(values)
    ii, jj = np.meshgrid(np.arange(nv), np.arange(nv), indexing="ij")
    mask = ~np.eye(nv, dtype=bool)
    ci, di = ii[mask], jj[mask]
    survivors = np.ones(ci.shape, dtype=bool)
    for p in primes:
        table = _surface_local_table(p)
        vres = np.empty(nv, dtype=np.int64)
        for k, q in enumerate(values):
            vres[k] = -1 if q.denominator % p == 0 else (
                q.numerator * pow(q.denominator, -1, p)) % p
        cres, dres = vres[ci], vres[di]
        valid = (cres >= 0) & (dres >= 0)
        ok = np.ones(ci.shape, dtype=bool)
        ok[valid] = table[cres[valid], dres[valid]]
        survivors &= ok
        if not survivors.any():
            break
    return list(zip(ci[survivors].tolist(), di[survivors].tolist()))


def _grid_of(poly, cs, ds, p):
    import numpy as np

    acc = np.zeros(cs.shape, dtype=np.int64)
    for (i, j), coeff in _cd_terms(poly):
        acc = (acc + (coeff % p) * _powmod_grid(cs, i, p) * _powmod_grid(ds, j, p)) % p
    return acc


def _surface_local_table(p):
    """table[c,d] = the pair (E1, E2) admits a joint residue solution mod p.

    Cells with a4 = 0 or p dividing a height denominator are handled by the
    caller as automatic passes; here a4 = 0 cells are also marked True so
    the test never rejects a degenerate reduction it cannot reason about.
    """
    import numpy as np

    a4, n2, n1, _ = cleared_generic()
    A0, A1, A2, A3 = _w_cubic_polys()
    cs, ds = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    a4g = _grid_of(a4, cs, ds, p)
    n2g = _grid_of(n2, cs, ds, p)
    n1g = _grid_of(n1, cs, ds, p)
    A0g, A1g, A2g, A3g = (_grid_of(poly, cs, ds, p) for poly in (A0, A1, A2, A3))
    inv = np.zeros(p, dtype=np.int64)
    for r in range(1, p):
        inv[r] = pow(r, -1, p)
    is_sq = np.zeros(p, dtype=bool)
    for r in range(p):
        is_sq[(r * r) % p] = True
    # a4 = 0: degenerate reduction, pass; z = 0: needs p | n1 (then E1(0) = 0 too)
    table = (a4g == 0) | (n1g == 0)
    a4cu = (a4g * a4g % p) * a4g % p
    for z in range(1, p):
        w = (z * z) % p
        e1 = (((A3g * w + A2g) % p * w + A1g) % p * w + A0g) % p
        den = 8 * a4cu * z % p
        num = (2 * n1g - 8 * a4cu * (z * z % p) * z - 2 * a4g * n2g * z) % p
        t = num * inv[den] % p
        table |= (e1 == 0) & is_sq[t]
    return table


def _cd_terms(poly):
    names = poly.names
    ci = names.index("c") if "c" in names else None
    di = names.index("d") if "d" in names else None
    out = []
    for e, coeff in poly.terms.items():
        i = e[ci] if ci is not None else 0
        j = e[di] if di is not None else 0
        out.append(((i, j), int(coeff)))
    return out


def _powmod_grid(grid, e, p):
    import numpy as np

    out = np.ones_like(grid)
    base = grid % p
    while e:
        if e & 1:
            out = (out * base) % p
        base = (base * base) % p
        e >>= 1
    return out


# -- p-adic local solvability -----------------------------------------


@dataclass(frozen=True)
class LocalVerdict:
    """Outcome of a p-adic residue search.

    outcome is "NoPoints", "PointFound", or "Inconclusive"; for PointFound
    the witness is (residue vector, level) certified by the Hensel
    criterion (single-polynomial inputs only).
    """

    prime: int
    max_level: int
    outcome: str
    levels_explored: int
    witness: tuple | None = None

    def to_json(self):
        return {
            "prime": self.prime,
            "max_level": self.max_level,
            "outcome": self.outcome,
            "levels_explored": self.levels_explored,
            "witness": None if self.witness is None else
            {"residues": list(self.witness[0]), "level": self.witness[1]},
        }


_BRANCH_CAP = 200_000


def qp_solvable(polys, p, max_level):
    """Breadth-first residue lifting modulo p, p^2, ..., p^max_level.

    A residue vector survives level k when every polynomial vanishes mod
    p^k.  For a single polynomial, a survivor whose some partial derivative
    has p-adic valuation e with 2e < k is Hensel-liftable and certifies
    PointFound.  If every branch dies, the verdict NoPoints is exhaustive:
    no p-adic zero exists (for homogeneous systems: no zero with some
    coordinate a unit, i.e. away from the origin).  Surviving uncertified
    branches at max_level give Inconclusive.
    """
    if isinstance(polys, MPoly):
        polys = [polys]
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    if max_level < 1:
        raise ValueError("max_level must be positive")
    cleared = []
    for poly in polys:
        den = 1
        for v in poly.terms.values():
            f = Fraction(v)
            den = den * f.denominator // _igcd(den, f.denominator)
        cleared.append(poly * den)
    for poly in cleared:
        for v in poly.terms.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                raise ValueError("polynomial coefficients must clear to integers")
    names = sorted({v for poly in cleared for v in poly.names})
    if not names:
        # constants: zero constant has points everywhere, else nowhere
        all_zero = all(poly.is_zero() for poly in cleared)
        return LocalVerdict(p, max_level, "PointFound" if all_zero else "NoPoints", 0,
                            ((), 0) if all_zero else None)
    homogeneous = all(poly.is_homogeneous() and not poly.is_constant() for poly in cleared)
    evaluators = [_int_evaluator(poly, names) for poly in cleared]
    single = evaluators[0] if len(evaluators) == 1 else None
    partials = None
    if single is not None:
        partials = [_int_evaluator(cleared[0].derivative(v), names) for v in names]

    nvars = len(names)
    mod = p
    branches = []
    for vec in iter_product(range(p), repeat=nvars):
        if homogeneous and all(x % p == 0 for x in vec):
            continue
        if all(ev(vec) % p == 0 for ev in evaluators):
            branches.append(vec)
    level = 1
    while True:
        if not branches:
            return LocalVerdict(p, max_level, "NoPoints", level)
        if single is not None:
            for vec in branches:
                for pd in partials:
                    e = _valuation(pd(vec), p)
                    if e is not None and 2 * e < level:
                        return LocalVerdict(p, max_level, "PointFound", level,
                                            (tuple(vec), level))
        if level == max_level:
            return LocalVerdict(p, max_level, "Inconclusive", level)
        nxt = []
        new_mod = mod * p
        for vec in branches:
            for bump in iter_product(range(p), repeat=nvars):
                cand = tuple(x + mod * t for x, t in zip(vec, bump))
                if all(ev(cand) % new_mod == 0 for ev in evaluators):
                    nxt.append(cand)
            if len(nxt) > _BRANCH_CAP:
                return LocalVerdict(p, max_level, "Inconclusive", level)
        branches = nxt
        mod = new_mod
        level += 1


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _valuation(v, p):
    if v == 0:
        return None
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e


def _int_evaluator(poly, names):
    """Compile an MPoly with integer coefficients to a tuple evaluator."""
    pos = {v: i for i, v in enumerate(names)}
    terms = []
    for e, coeff in poly.terms.items():
        exps = [0] * len(names)
        for v, ei in zip(poly.names, e):
            exps[pos[v]] = ei
        terms.append((int(coeff), tuple(exps)))

    def evaluate(vec):
        total = 0
        for coeff, exps in terms:
            t = coeff
            for x, ei in zip(vec, exps):
                if ei:
                    t *= x**ei
            total += t
        return total

    return evaluate
