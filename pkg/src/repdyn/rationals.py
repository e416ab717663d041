"""Exact rational arithmetic helpers.

Every computation in this package is exact: scalars are arbitrary-precision
rationals (``fractions.Fraction``), and the helpers here supply the few
operations the rest of the library needs on top of the stdlib type --
normalization from raw integer pairs, the naive height, exact square roots,
and "a/b" string round-tripping.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Rational",
    "normalize",
    "height",
    "height_int",
    "sqrt_exact",
    "isqrt_exact",
    "parse_rational",
    "format_rational",
    "enumerate_nonzero_integers",
    "enumerate_rationals",
]

# The scalar type of the package.  Fraction already maintains the invariants
# we need (reduced form, positive denominator, arbitrary precision).
Rational = Fraction


def normalize(num: int, den: int) -> Fraction:
    """Return num/den as a reduced fraction with positive denominator.

    Raises ZeroDivisionError when den == 0.
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def height(q: Fraction | int) -> int:
    """Naive height: max(|numerator|, denominator) for a reduced fraction.

    The height of an integer n is |n|, except height(0) = 1 (0 = 0/1).
    """
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


def height_int(n: int) -> int:
    """Height of an integer: |n| (0 has height 0 as a degenerate integer)."""
    return abs(n)


def isqrt_exact(n: int):
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(q: Fraction | int):
    """Exact non-negative square root of a rational, or None.

    Returns the Fraction r >= 0 with r*r == q when q is the square of a
    rational; returns None otherwise (including all negative inputs).
    """
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt_exact(q.numerator)
    if rn is None:
        return None
    rd = isqrt_exact(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def enumerate_nonzero_integers(bound: int) -> list:
    """All nonzero integers of absolute value <= bound, in height order.

    Within one height level h the negative value precedes the positive one,
    so the sequence starts -1, 1, -2, 2, ...  This is the canonical grid
    order used by the sweep harness; keep it stable.
    """
    out = []
    for h in range(1, bound + 1):
        out.append(-h)
        out.append(h)
    return out


def enumerate_rationals(bound: int) -> list:
    """All nonzero reduced rationals of height <= bound, in a fixed order.

    Height of a/b (reduced, b >= 1) is max(|a|, b).  Values are ordered by
    height level, then denominator, then numerator, so the sequence starts
    -1, 1, -2, 2, -1/2, 1/2, ...  Integers are included (b = 1).  This is
    the canonical grid order used by the sweep harness; keep it stable.
    """
    out = []
    for h in range(1, bound + 1):
        level = []
        for b in range(1, h + 1):
            if b < h:
                # max(|a|, b) == h forces |a| == h here.
                numerators = (-h, h)
            else:
                numerators = range(-h, h + 1)
            for a in numerators:
                if a == 0 or math.gcd(abs(a), b) != 1:
                    continue
                level.append(Fraction(a, b))
        level.sort(key=lambda q: (q.denominator, q.numerator))
        out.extend(level)
    return out


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" into an exact rational.

    Fraction's own parser accepts both forms as well as signs; decimal
    strings like "0.25" are also accepted (exactly).
    """
    return Fraction(text.strip())


def format_rational(q: Fraction | int) -> str:
    """Render a rational as "a" (integral) or "a/b"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
