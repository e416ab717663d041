"""Dynamical modular polynomials of replacement words.

For the symbolic form f(x, y) = c*x^2 + d*y^2 and a word t, the iterate
f_t has two coordinate polynomials in Q[c,d,x,y].  The modular polynomial
of t on a side is the coordinate polynomial minus the matching variable,
with the modular polynomials of proper prefixes divided out whenever they
divide exactly; prefixes whose coordinate polynomial already equals the
full word's (the trailing letters never touched that side) contribute the
trivial zero difference and are skipped.  The left coordinate of an
all-left word, for example, factors through every divisor length, which is
the Moebius structure exposed by `phi_moebius_leftpower`.

All arithmetic is exact; results are cached per word, so computing a whole
degree table shares every intermediate iterate.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .polyring import ExactDivisionError, MPoly
from .typeclasses import enumerate_classes, is_univariate, word_to_string

__all__ = [
    "MAX_WORD_LEN",
    "ModularPolyPair",
    "DegreeRow",
    "raw_iterate",
    "phi",
    "phi_pair",
    "phi_with_certificate",
    "phi_moebius_leftpower",
    "degree_table",
    "degree_table_csv",
    "specialize_phi",
    "clear_caches",
]

MAX_WORD_LEN = 6

_VAR_X = MPoly.var("x")
_VAR_Y = MPoly.var("y")
_VAR_C = MPoly.var("c")
_VAR_D = MPoly.var("d")

_RAW_CACHE = {}
_PHI_CACHE = {}


def clear_caches():
    _RAW_CACHE.clear()
    _PHI_CACHE.clear()


def _check_word(t):
    t = tuple(t)
    if not t:
        raise ValueError("the empty word has no iterate")
    if len(t) > MAX_WORD_LEN:
        raise ValueError(
            f"word length {len(t)} exceeds the symbolic guard {MAX_WORD_LEN} "
            "(iterate degrees double per letter)"
        )
    if any(ch not in ("L", "R") for ch in t):
        raise ValueError(f"word letters must be 'L' or 'R': {t!r}")
    return t


def raw_iterate(t):
    """Both coordinate polynomials of the symbolic iterate f_t.

    Returns (left, right) in Q[c,d,x,y]; the word is applied left to right,
    each letter replacing its coordinate with c*x_cur^2 + d*y_cur^2.
    """
    t = _check_word(t)
    cached = _RAW_CACHE.get(t)
    if cached is not None:
        return cached
    if len(t) == 1:
        u, v = _VAR_X, _VAR_Y
    else:
        u, v = raw_iterate(t[:-1])
    w = _VAR_C * u.square() + _VAR_D * v.square()
    pair = (w, v) if t[-1] == "L" else (u, w)
    _RAW_CACHE[t] = pair
    return pair


def _side_index(side):
    if side in ("L", 0):
        return 0
    if side in ("R", 1):
        return 1
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def _divides_probe(dividend, divisor):
    """Cheap necessary test: specialize (c,d,y) and divide univariately in x.

    Returns False only when the full division certainly fails; True means
    the expensive exact multivariate division is worth attempting.
    """
    spec = {"c": 5, "d": 7, "y": 11}
    a = dividend.specialize(spec)
    b = divisor.specialize(spec)
    if b.is_zero():
        return True
    if a.is_zero():
        return True
    try:
        ac = a.univariate_coeffs()
        bc = b.univariate_coeffs()
    except ValueError:
        return True
    from .polyring import _q_divmod

    if len(bc) > len(ac):
        return False
    _, rem = _q_divmod(ac, bc)
    return not rem


def phi_with_certificate(t, side):
    """(modular polynomial, list of removed proper-prefix factors).

    The product of the removed factors times the returned polynomial equals
    the raw coordinate difference exactly; the factor list is in removal
    order (shortest prefix first, with multiplicity).
    """
    t = _check_word(t)
    idx = _side_index(side)
    key = (t, idx)
    cached = _PHI_CACHE.get(key)
    if cached is not None:
        return cached
    var = _VAR_X if idx == 0 else _VAR_Y
    raw = raw_iterate(t)[idx]
    result = raw - var
    removed = []
    if result.is_zero():
        entry = (result, [])
        _PHI_CACHE[key] = entry
        return entry
    changed = True
    while changed:
        changed = False
        for k in range(1, len(t)):
            pre = t[:k]
            if raw_iterate(pre)[idx] == raw:
                # trailing letters never touched this side: the prefix
                # difference is the full difference itself, not a factor
                continue
            factor, _ = phi_with_certificate(pre, "L" if idx == 0 else "R")
            if factor.is_zero() or factor.is_constant():
                continue
            while _divides_probe(result, factor):
                try:
                    result = result.exact_div(factor)
                except ExactDivisionError:
                    break
                removed.append(factor)
                changed = True
    entry = (result, removed)
    _PHI_CACHE[key] = entry
    return entry


def phi(t, side):
    """The dynamical modular polynomial of a word on one side."""
    return phi_with_certificate(t, side)[0]


@dataclass(frozen=True)
class ModularPolyPair:
    """Both modular polynomials of a word (either may be zero)."""

    t: tuple
    phiL: MPoly
    phiR: MPoly


def phi_pair(t):
    t = _check_word(t)
    return ModularPolyPair(t=t, phiL=phi(t, "L"), phiR=phi(t, "R"))


def _moebius(n):
    result = 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def phi_moebius_leftpower(N, dvar):
    """Moebius product for the all-left word of length N at divisor level d.

    Computes prod over m | d of (left iterate of L^m minus x) ** mu(d/m) by
    exact multiplication and division; a non-exact division would falsify
    the product factorization and raises ExactDivisionError.
    """
    if N < 1 or N > MAX_WORD_LEN:
        raise ValueError(f"N must be between 1 and {MAX_WORD_LEN}")
    if dvar < 1 or N % dvar:
        raise ValueError(f"{dvar} does not divide {N}")
    num = MPoly.const(1)
    dens = []
    for m in range(1, dvar + 1):
        if dvar % m:
            continue
        mu = _moebius(dvar // m)
        if mu == 0:
            continue
        factor = raw_iterate(("L",) * m)[0] - _VAR_X
        if mu == 1:
            num = num * factor
        else:
            dens.append(factor)
    for factor in dens:
        num = num.exact_div(factor)
    return num


@dataclass(frozen=True)
class DegreeRow:
    """One degree-table row: class representative and both total degrees."""

    word: tuple
    univariate: bool
    degL: int
    degR: int


def degree_table(maxN):
    """Degree table over all classes of period up to maxN (maxN <= 5).

    Degrees are total degrees in (x, y) only, with 0 for a zero polynomial;
    rows are ordered by period then lexicographic representative.
    """
    if maxN < 1 or maxN > 5:
        raise ValueError("maxN must be between 1 and 5")
    rows = []
    for N in range(1, maxN + 1):
        for word in enumerate_classes(N):
            pair = phi_pair(word)
            rows.append(
                DegreeRow(
                    word=word,
                    univariate=is_univariate(word),
                    degL=max(pair.phiL.degree_in_vars({"x", "y"}), 0),
                    degR=max(pair.phiR.degree_in_vars({"x", "y"}), 0),
                )
            )
    return rows


def degree_table_csv(maxN):
    """CSV text with columns: type, univariate, degL, degR."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["type", "univariate", "degL", "degR"])
    for row in degree_table(maxN):
        writer.writerow(
            [word_to_string(row.word), "yes" if row.univariate else "no", row.degL, row.degR]
        )
    return buf.getvalue()


def specialize_phi(t, side, C, D):
    """Exact substitution c=C, d=D into the modular polynomial."""
    C = Fraction(C)
    D = Fraction(D)
    if C == 0 or D == 0:
        raise ValueError("both form coefficients must be nonzero")
    return phi(t, side).specialize({"c": C, "d": D})
