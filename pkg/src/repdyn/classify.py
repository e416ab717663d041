"""Classification of periodic vectors by period.

Period 1 is a rational parametrization plus, for integral vectors of
indefinite forms, a Pell-equation correspondence.  Periods 2 and 3 come as
parametrized families with exact verification.  Periods 4 and 5 reduce to
a single polynomial in y for each form — the quartic `r_poly` for the
alternating word (L,R,L,R) and the degree-10 `s_poly` for (L,L,R,L,R) —
whose roots are completed to full periodic vectors over the number field
each irreducible factor defines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .dynamics import Form, is_periodic_of_type, replace_step
from .modpoly import specialize_phi
from .numberfield import NFModulus, ZeroDivisorError, nf_poly_gcd
from .polyring import (
    MPoly,
    _q_deriv,
    _q_divmod,
    _q_gcd,
    rational_roots,
    resultant_bivariate,
    split_quartic,
)

__all__ = [
    "PellSolution",
    "PeriodicWitness",
    "DegenerateCycleError",
    "EliminationMismatchError",
    "GcdDegreeError",
    "WitnessVerificationError",
    "period1_point",
    "pell_fundamental",
    "pell_solutions",
    "period1_integral",
    "period2_family",
    "period3_family",
    "r_poly",
    "r_poly_symbolic",
    "r_poly_via_elimination",
    "lrlr_vectors",
    "s_poly",
    "s_poly_symbolic",
    "LlrlrReport",
    "llrlr_analyze",
    "witnesses_from_modulus",
    "witness_to_json",
]


class DegenerateCycleError(ValueError):
    """A parametrized family hit parameters that collapse the cycle."""


class EliminationMismatchError(AssertionError):
    """The elimination route disagreed with the closed-form polynomial."""


class GcdDegreeError(ArithmeticError):
    """The x-recovery gcd did not come out linear."""


class WitnessVerificationError(AssertionError):
    """A constructed witness failed the defining dynamics check."""


# -- period 1 ---------------------------------------------------------


@dataclass(frozen=True)
class PellSolution:
    X: int
    Y: int
    E: int

    def __post_init__(self):
        if self.X * self.X - self.E * self.Y * self.Y != 1:
            raise ValueError("not a solution of X^2 - E*Y^2 = 1")


def period1_point(C, D, tparam=None, trivial=False):
    """A rational vector fixed by the left replacement.

    With the `trivial` flag the t-free point (0, 0) is returned.  Otherwise
    the parametrized point (1/(C+D t^2), t/(C+D t^2)) on C x^2 - x + D y^2 = 0
    is built and its fixedness is checked exactly.
    """
    if trivial:
        return (Fraction(0), Fraction(0))
    if tparam is None:
        raise ValueError("tparam required unless trivial=True")
    C, D, t = Fraction(C), Fraction(D), Fraction(tparam)
    den = C + D * t * t
    if den == 0:
        raise ValueError("parameter hits the vanishing denominator C + D*t^2")
    v = (1 / den, t / den)
    if replace_step(Form(C, D), v, "L") != v:
        raise AssertionError("parametrized point failed the fixedness check")
    return v


def pell_fundamental(E):
    """Fundamental solution of X^2 - E*Y^2 = 1 by continued fractions.

    Walks the convergents of sqrt(E) and returns the first one solving the
    equation, which is the fundamental solution; errors when E is a perfect
    square (only the trivial solutions exist then).
    """
    E = int(E)
    if E <= 0:
        raise ValueError("E must be positive")
    a0 = isqrt(E)
    if a0 * a0 == E:
        raise ValueError("E is a perfect square; only trivial solutions exist")
    m, den, a = 0, 1, a0
    h_prev, h_cur = 1, a0
    k_prev, k_cur = 0, 1
    while True:
        if h_cur * h_cur - E * k_cur * k_cur == 1:
            return PellSolution(X=h_cur, Y=k_cur, E=E)
        m = den * a - m
        den = (E - m * m) // den
        a = (a0 + m) // den
        h_prev, h_cur = h_cur, a * h_cur + h_prev
        k_prev, k_cur = k_cur, a * k_cur + k_prev


def pell_solutions(E, count):
    """The first `count` solutions (powers of the fundamental one)."""
    if count < 1:
        return []
    fund = pell_fundamental(E)
    out = [fund]
    X, Y = fund.X, fund.Y
    for _ in range(count - 1):
        X, Y = fund.X * X + E * fund.Y * Y, fund.X * Y + fund.Y * X
        out.append(PellSolution(X=X, Y=Y, E=E))
    return out


def period1_integral(C, D, count=3):
    """Integral vectors fixed by the left replacement.

    For a definite form (C*D > 0), and likewise when 4|CD| is a perfect
    square, the only candidates are (0, 0) and (C, 0) for |C| = 1.  For the
    indefinite non-square case each Pell solution (X, Y) of
    X^2 - 4|CD| Y^2 = 1 yields x = (1 +- X)/(2C) paired with y = Y; every
    sign giving an integer is kept.  Results are verified and sorted.
    """
    C, D = int(C), int(D)
    if C == 0 or D == 0:
        raise ValueError("both form coefficients must be nonzero")
    out = {(0, 0)}
    if abs(C) == 1:
        out.add((C, 0))
    E = 4 * abs(C * D)
    if C * D < 0 and isqrt(E) ** 2 != E:
        for sol in pell_solutions(E, count):
            for sign in (1, -1):
                num = 1 + sign * sol.X
                if num % (2 * C) == 0:
                    out.add((num // (2 * C), sol.Y))
    form = Form(C, D)
    for v in out:
        fv = (Fraction(v[0]), Fraction(v[1]))
        if not is_periodic_of_type(form, fv, ("L",)):
            raise AssertionError(f"period-1 candidate {v} failed verification")
    return sorted(out)


# -- periods 2 and 3 --------------------------------------------------


def period2_family(mparam, nparam, C=1):
    """Two-cycle family: returns (C*D value, y0, the two x-values).

    The product constraint is C*D = -(n^2+3)/(4 m^2); with y0 = m the two
    x-values (-1 +- n)/(2C) are swapped by the left replacement.  Parameter
    choices that collapse the cycle to a fixed point raise
    DegenerateCycleError instead of returning silently.
    """
    m, n, C = Fraction(mparam), Fraction(nparam), Fraction(C)
    if m == 0:
        raise ValueError("mparam must be nonzero")
    if C == 0:
        raise ValueError("C must be nonzero")
    CD = -(n * n + 3) / (4 * m * m)
    D = CD / C
    y0 = m
    x1 = (-1 + n) / (2 * C)
    x2 = (-1 - n) / (2 * C)
    form = Form(C, D)
    if not is_periodic_of_type(form, (x1, y0), ("L", "L")):
        raise DegenerateCycleError(
            f"parameters (m={m}, n={n}) collapse the 2-cycle to a fixed point"
        )
    if replace_step(form, (x1, y0), "L") != (x2, y0):
        raise AssertionError("2-cycle x-values are not swapped by the left move")
    return (CD, y0, (x1, x2))


def period3_family(tau, nparam, C=1):
    """Three-cycle family: returns (C*D value, y0, the three x-values).

    C*D = -(t^6+2t^5+4t^4+8t^3+9t^2+4t+1)/(4 n^2 t^2 (t+1)^2) for the
    parameter t = tau; the cycle is recovered by rational-root extraction
    from the specialized three-step modular polynomial at y = n and checked
    to be cyclically permuted by the left replacement.
    """
    t, n, C = Fraction(tau), Fraction(nparam), Fraction(C)
    if t in (Fraction(-1), Fraction(0)):
        raise ValueError("tau must avoid -1 and 0")
    if n == 0:
        raise ValueError("nparam must be nonzero")
    if C == 0:
        raise ValueError("C must be nonzero")
    num = t**6 + 2 * t**5 + 4 * t**4 + 8 * t**3 + 9 * t**2 + 4 * t + 1
    CD = -num / (4 * n * n * t * t * (t + 1) ** 2)
    D = CD / C
    y0 = n
    cubic_cycle = specialize_phi(("L", "L", "L"), "L", C, D).specialize({"y": y0})
    roots = sorted(rational_roots(cubic_cycle))
    form = Form(C, D)
    for start in roots:
        a = start
        b = replace_step(form, (a, y0), "L")[0]
        c3 = replace_step(form, (b, y0), "L")[0]
        back = replace_step(form, (c3, y0), "L")[0]
        if back == a and len({a, b, c3}) == 3 and b in roots and c3 in roots:
            if is_periodic_of_type(form, (a, y0), ("L", "L", "L")):
                return (CD, y0, (a, b, c3))
    raise DegenerateCycleError(
        f"no rational 3-cycle found for (tau={t}, n={n}); roots were {roots}"
    )


# -- the period-4 quartic ---------------------------------------------

_R_CACHE = {}


def r_coeff_polys():
    """The five quartic coefficients as polynomials in (c, d), ascending."""
    if "coeffs" not in _R_CACHE:
        c = MPoly.var("c")
        d = MPoly.var("d")
        _R_CACHE["coeffs"] = [
            d**3 - 2 * c * d**2 + 5 * c**2 * d + c**3,
            (d**3 + 7 * c * d**2 - 3 * c**2 * d - c**3) * (d - c),
            (d**4 + 6 * c * d**3 + 12 * c**2 * d**2 - 2 * c**3 * d - c**4) * (d - c),
            8 * c * d**2 * (d + c) * (d - c).square(),
            16 * c**2 * d**3 * (d - c).square(),
        ]
    return _R_CACHE["coeffs"]


def r_poly_symbolic():
    """The quartic in y with coefficients in (c, d)."""
    if "poly" not in _R_CACHE:
        y = MPoly.var("y")
        acc = MPoly.zero()
        for i, coeff in enumerate(r_coeff_polys()):
            acc = acc + coeff * y**i
        _R_CACHE["poly"] = acc
    return _R_CACHE["poly"]


def r_poly(C, D):
    """The period-4 quartic in y, specialized exactly at (C, D)."""
    C, D = Fraction(C), Fraction(D)
    if C == 0 or D == 0:
        raise ValueError("both form coefficients must be nonzero")
    return r_poly_symbolic().specialize({"c": C, "d": D})


def _strip_y_power(coeffs):
    k = 0
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        k += 1
    return coeffs, k


def _divide_out_root(coeffs, root):
    """Divide by (y - root) as often as it divides exactly."""
    while len(coeffs) > 1:
        quot, rem = _q_divmod(coeffs, [-root, Fraction(1)])
        if rem:
            break
        coeffs = quot
    return coeffs


def r_poly_via_elimination(C, D):
    """The quartic recovered independently by eliminating x.

    Takes the resultant in x of the two specialized (L,R,L,R) modular
    polynomials, strips the known period-1 components (the zero vector
    contributes a power of y, the diagonal fixed point a power of
    (C+D)y - 1), and normalizes.  Raises EliminationMismatchError if the
    result is not a rational multiple of `r_poly`.
    """
    C, D = Fraction(C), Fraction(D)
    if C == D:
        raise ValueError("the alternating elimination needs C != D")
    phiL = specialize_phi(("L", "R", "L", "R"), "L", C, D)
    phiR = specialize_phi(("L", "R", "L", "R"), "R", C, D)
    res = resultant_bivariate(phiL, phiR, "x")
    if res.is_zero():
        raise EliminationMismatchError("resultant vanished identically")
    coeffs = res.univariate_coeffs("y")
    coeffs, _ = _strip_y_power(coeffs)
    if C + D != 0:
        coeffs = _divide_out_root(coeffs, 1 / (C + D))
    cleaned = MPoly.univariate("y", coeffs).primitive()
    target = r_poly(C, D).primitive()
    if cleaned != target:
        raise EliminationMismatchError(
            f"eliminated quartic disagrees with the closed form at ({C}, {D})"
        )
    return cleaned


# -- witnesses over number fields -------------------------------------


@dataclass(frozen=True)
class PeriodicWitness:
    """A verified periodic vector over Q[y]/(modulus)."""

    form: tuple
    word: tuple
    modulus: NFModulus
    vector: tuple

    def verify(self):
        return is_periodic_of_type(Form(*self.form), self.vector, self.word)


def _coeffs_over(modulus, p):
    """View an MPoly in (x, y) as a univariate in x over Q[y]/(m)."""
    out = []
    for coeff in p.as_poly_in("x"):
        out.append(modulus.element(coeff.univariate_coeffs()))
    return out


def witnesses_from_modulus(C, D, word, mod_poly, phiL=None, phiR=None):
    """Witnesses with y a root of `mod_poly`, x from the linear gcd.

    The two specialized modular polynomials are read as univariate in x
    over Q[y]/(mod_poly); their monic gcd must be linear, and its root is
    the x-coordinate.  A zero divisor encountered en route factors the
    modulus, and both halves are retried; every witness is verified through
    the dynamics before being returned.
    """
    C, D = Fraction(C), Fraction(D)
    if phiL is None:
        phiL = specialize_phi(word, "L", C, D)
    if phiR is None:
        phiR = specialize_phi(word, "R", C, D)
    modulus = NFModulus(mod_poly)
    try:
        g = nf_poly_gcd(_coeffs_over(modulus, phiL), _coeffs_over(modulus, phiR))
    except ZeroDivisorError as exc:
        first, second = modulus.split(exc.factor)
        return witnesses_from_modulus(C, D, word, first.poly(), phiL, phiR) + (
            witnesses_from_modulus(C, D, word, second.poly(), phiL, phiR)
        )
    if len(g) != 2:
        raise GcdDegreeError(
            f"x-recovery gcd has degree {len(g) - 1} at ({C}, {D}), modulus "
            f"{modulus.poly().canonical_str()}"
        )
    x0 = -g[0]
    y0 = modulus.generator()
    witness = PeriodicWitness(form=(C, D), word=tuple(word), modulus=modulus, vector=(x0, y0))
    if not witness.verify():
        raise WitnessVerificationError(
            f"constructed vector failed the period-type check at ({C}, {D})"
        )
    return [witness]


def _squarefree_part(coeffs):
    g = _q_gcd(coeffs, _q_deriv(coeffs))
    if len(g) <= 1:
        return coeffs
    quot, rem = _q_divmod(coeffs, g)
    assert not rem
    return quot


def lrlr_vectors(C, D):
    """All periodic vectors of the alternating four-step word at (C, D).

    Factors the quartic over Q (rational roots, then the two-quadratics
    split, else irreducible) and promotes each irreducible factor to a
    witness over its number field.  Returns [] when C equals D, where the
    quartic degenerates to a nonzero constant.
    """
    C, D = Fraction(C), Fraction(D)
    if C == 0 or D == 0:
        raise ValueError("both form coefficients must be nonzero")
    if C == D:
        return []
    word = ("L", "R", "L", "R")
    quartic = r_poly(C, D)
    coeffs = _squarefree_part(quartic.univariate_coeffs())
    reduced = MPoly.univariate("y", coeffs)
    out = []
    for factor in split_quartic(reduced):
        out.extend(witnesses_from_modulus(C, D, word, factor))
    return out


# -- the period-5 polynomial ------------------------------------------

_S_CACHE = {}


def _s_low_coeffs():
    c = MPoly.var("c")
    d = MPoly.var("d")
    return [
        c**7 + 7 * c**6 * d + 21 * c**5 * d**2 + 37 * c**4 * d**3 - 7 * c**3 * d**4
        + 91 * c**2 * d**5 - 6 * c * d**6 + d**7,
        c**8 - 25 * c**6 * d**2 - 59 * c**5 * d**3 - 76 * c**4 * d**4
        + 190 * c**3 * d**5 + 56 * c**2 * d**6 + 10 * c * d**7 + d**8,
        c**9 + c**8 * d + 7 * c**7 * d**2 + 104 * c**6 * d**3 + 55 * c**5 * d**4
        + 12 * c**4 * d**5 + 38 * c**3 * d**6 + 96 * c**2 * d**7 + 9 * c * d**8 + d**9,
        c * (c**9 + 2 * c**8 * d + 8 * c**7 * d**2 + 30 * c**6 * d**3
             - 192 * c**5 * d**4 + 210 * c**4 * d**5 - 112 * c**3 * d**6
             + 40 * c**2 * d**7 - 16 * c * d**8 + 16 * d**9),
        c**2 * (c**9 + c**8 * d - 14 * c**7 * d**2 - 30 * c**6 * d**3
                - 146 * c**5 * d**4 + 208 * c**4 * d**5 + 234 * c**3 * d**6
                - 128 * c**2 * d**7 - 136 * c * d**8 + 32 * d**9),
        c**3 * (c**9 + 2 * c**8 * d + 9 * c**7 * d**2 + 112 * c**6 * d**3
                + 56 * c**5 * d**4 + 160 * c**4 * d**5 - 32 * c**3 * d**6
                - 496 * c**2 * d**7 + 48 * c * d**8 - 96 * d**9),
        c**3 * (c**10 + 3 * c**9 * d + 11 * c**8 * d**2 + 41 * c**7 * d**3
                - 152 * c**6 * d**4 + 264 * c**5 * d**5 + 144 * c**4 * d**6
                + 240 * c**3 * d**7 - 64 * c**2 * d**8 - 288 * c * d**9
                + 64 * d**10),
    ]


def s_poly_symbolic():
    """The degree-10 period-5 polynomial in y over (c, d)."""
    if "poly" not in _S_CACHE:
        c = MPoly.var("c")
        d = MPoly.var("d")
        y = MPoly.var("y")
        a7 = c**6 - 7 * c**4 * d**2 + 54 * c**3 * d**3 + 36 * c**2 * d**4 \
            + 8 * c * d**5 - 32 * d**6
        a8 = c**6 + 5 * c**4 * d**2 - 14 * c**3 * d**3 + 28 * c**2 * d**4 \
            + 40 * c * d**5 - 16 * d**6
        a9 = -2 * c * d + 6 * d**2
        top = (
            256 * c**7 * d**6 * (c + d).square() * (c**2 - 3 * c * d + 4 * d**2) * y**10
            + 256 * c**7 * d**6 * (c + d) * a9 * y**9
            + 32 * c**5 * d**3 * (c + d) * a8 * y**8
            + 16 * c**5 * d**3 * a7 * y**7
        )
        low = MPoly.zero()
        for i, ai in enumerate(_s_low_coeffs()):
            low = low + ai * y**i
        _S_CACHE["poly"] = top + low
    return _S_CACHE["poly"]


def s_poly(C, D):
    """The period-5 polynomial specialized exactly at (C, D)."""
    C, D = Fraction(C), Fraction(D)
    if C == 0 or D == 0:
        raise ValueError("both form coefficients must be nonzero")
    return s_poly_symbolic().specialize({"c": C, "d": D})


@dataclass
class LlrlrReport:
    """Analysis of the period-5 polynomial at one form."""

    form: tuple
    degree: int
    degree_note: str
    roots: list
    witnesses: list
    cross_check: bool | None = None


def llrlr_analyze(C, D, cross_check=False):
    """Rational-root analysis of the period-5 polynomial at (C, D).

    Reports the polynomial's degree (noting the drop when C = -D kills the
    leading terms), its rational roots, and — when C != D — a verified
    witness for each root.  With `cross_check` the quartic-style elimination
    is run for the five-step word and the polynomial is checked to divide
    the cleaned resultant (slow; the x-degrees are 16 and 32).
    """
    C, D = Fraction(C), Fraction(D)
    poly = s_poly(C, D)
    degree = poly.total_degree()
    note = "" if degree == 10 else f"degree dropped to {degree} (leading terms vanish)"
    roots = sorted(rational_roots(poly)) if degree >= 1 else []
    word = ("L", "L", "R", "L", "R")
    witnesses = []
    if C != D:
        for root in roots:
            witnesses.extend(
                witnesses_from_modulus(C, D, word, MPoly.univariate("y", [-root, 1]))
            )
    check = None
    if cross_check:
        check = _llrlr_elimination_divisibility(C, D, poly)
    return LlrlrReport(
        form=(C, D),
        degree=degree,
        degree_note=note,
        roots=roots,
        witnesses=witnesses,
        cross_check=check,
    )


def _llrlr_elimination_divisibility(C, D, poly):
    phiL = specialize_phi(("L", "L", "R", "L", "R"), "L", C, D)
    phiR = specialize_phi(("L", "L", "R", "L", "R"), "R", C, D)
    res = resultant_bivariate(phiL, phiR, "x")
    coeffs = res.univariate_coeffs("y")
    coeffs, _ = _strip_y_power(coeffs)
    if C + D != 0:
        coeffs = _divide_out_root(coeffs, 1 / (C + D))
    cleaned = MPoly.univariate("y", coeffs)
    return poly.primitive().divides(cleaned)


# -- serialization ----------------------------------------------------


def _integral_coeff_strings(coeffs):
    """Scale to primitive integer form for display, keep exact strings."""
    fracs = [Fraction(ci) for ci in coeffs]
    den = 1
    for f in fracs:
        den = den * f.denominator // _gcd_int(den, f.denominator)
    ints = [f * den for f in fracs]
    g = 0
    for v in ints:
        g = _gcd_int(g, abs(int(v)))
    if g:
        ints = [v / g for v in ints]
    return [str(int(v)) for v in ints]


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def witness_to_json(witness):
    """Serializable dict for one witness (coefficients ascending)."""
    C, D = witness.form
    x0, y0 = witness.vector
    return {
        "C": str(C),
        "D": str(D),
        "type": "".join(witness.word),
        "modulus": _integral_coeff_strings(witness.modulus.coeffs),
        "x": [str(ci) for ci in x0.coeffs],
        "y": [str(ci) for ci in y0.coeffs],
        "verified": witness.verify(),
    }
