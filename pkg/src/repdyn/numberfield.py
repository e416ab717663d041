"""Exact arithmetic in quotient rings Q[y]/(m(y)).

A modulus is a monic squarefree polynomial m; elements are residue classes
represented by coefficient vectors of length deg(m).  When m is irreducible
the quotient is a number field; when it merely has no repeated factors the
quotient is a product of fields, and inverting a zero divisor raises
``ZeroDivisorError`` carrying a discovered proper factor of m, so callers
can split the modulus and retry on each factor.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import MPoly, _q_deriv, _q_divmod, _q_gcd, _q_normalize

__all__ = [
    "ZeroDivisorError",
    "NFModulus",
    "NFElem",
    "nf_add",
    "nf_mul",
    "nf_inv",
    "nf_eval_bivariate",
    "nf_poly_gcd",
    "nf_poly_divmod",
]


class ZeroDivisorError(ArithmeticError):
    """Inversion of a zero divisor; `.factor` is a proper monic factor of m."""

    def __init__(self, message, factor):
        super().__init__(message)
        self.factor = factor


class NFModulus:
    """Monic squarefree modulus m(y) defining the quotient ring Q[y]/(m)."""

    __slots__ = ("coeffs", "var", "degree")

    def __init__(self, poly, var=None):
        if isinstance(poly, MPoly):
            if len(poly.names) != 1:
                raise ValueError("modulus must be univariate")
            var = poly.names[0] if var is None else var
            coeffs = poly.univariate_coeffs()
        else:
            coeffs = [Fraction(ci) for ci in poly]
            var = "y" if var is None else var
        coeffs = _q_normalize(coeffs)
        if len(coeffs) < 2:
            raise ValueError("modulus must have degree at least 1")
        lead = coeffs[-1]
        coeffs = [ci / lead for ci in coeffs]
        g = _q_gcd(coeffs, _q_deriv(coeffs))
        if len(g) > 1:
            raise ValueError("modulus must be squarefree")
        self.coeffs = tuple(coeffs)
        self.var = var
        self.degree = len(coeffs) - 1

    def poly(self):
        return MPoly.univariate(self.var, list(self.coeffs))

    def generator(self):
        """The residue class of the variable itself."""
        vec = [Fraction(0)] * self.degree
        if self.degree == 1:
            vec[0] = -self.coeffs[0]
        else:
            vec[1] = Fraction(1)
        return NFElem(self, vec)

    def element(self, coeffs):
        """Element from an arbitrary-length coefficient list (reduced mod m)."""
        return NFElem(self, _reduce([Fraction(ci) for ci in coeffs], self))

    def constant(self, q):
        vec = [Fraction(0)] * self.degree
        vec[0] = Fraction(q)
        return NFElem(self, vec)

    def split(self, factor):
        """Split by a proper monic factor: returns (Q[y]/(h), Q[y]/(m/h))."""
        if isinstance(factor, MPoly):
            fc = factor.univariate_coeffs()
        else:
            fc = [Fraction(ci) for ci in factor]
        fc = _q_normalize(fc)
        lead = fc[-1]
        fc = [ci / lead for ci in fc]
        quot, rem = _q_divmod(list(self.coeffs), fc)
        if rem:
            raise ValueError("claimed factor does not divide the modulus")
        if len(fc) < 2 or len(quot) < 2:
            raise ValueError("factor must be proper")
        return (
            NFModulus(MPoly.univariate(self.var, fc)),
            NFModulus(MPoly.univariate(self.var, quot)),
        )

    def __eq__(self, other):
        if not isinstance(other, NFModulus):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"NFModulus({self.poly().canonical_str()})"


def _reduce(coeffs, modulus):
    """Reduce a coefficient list mod the monic modulus; returns a tuple."""
    deg = modulus.degree
    work = [Fraction(ci) for ci in coeffs]
    body = modulus.coeffs
    while len(work) > deg:
        top = work.pop()
        if top:
            k = len(work) - deg
            for j in range(deg):
                work[k + j] -= top * body[j]
    while len(work) < deg:
        work.append(Fraction(0))
    return tuple(work)


class NFElem:
    """Residue class in Q[y]/(m), coefficients ascending in the generator."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus, coeffs):
        self.modulus = modulus
        coeffs = [Fraction(ci) for ci in coeffs]
        if len(coeffs) != modulus.degree:
            coeffs = list(_reduce(coeffs, modulus))
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- helpers ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.modulus != self.modulus:
                raise ValueError("elements live in different quotient rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.modulus.constant(other)
        return None

    def is_zero(self):
        return all(ci == 0 for ci in self.coeffs)

    def is_rational(self):
        return all(ci == 0 for ci in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.modulus, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.modulus, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = len(a)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return NFElem(self.modulus, _reduce(prod, self.modulus))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.modulus.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm.

        Raises ZeroDivisionError for zero, and ZeroDivisorError (with a
        discovered proper factor of the modulus) for a nonzero zero divisor.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in quotient ring")
        a = _q_normalize(list(self.coeffs))
        m = list(self.modulus.coeffs)
        # extended Euclid: track s with s*a = g (mod m)
        r0, r1 = m, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _q_normalize(r1):
            q, r = _q_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _q_sub(s0, _q_mul(q, s1))
        g = _q_normalize(r0)
        if len(g) > 1:
            lead = g[-1]
            factor = MPoly.univariate(self.modulus.var, [ci / lead for ci in g])
            raise ZeroDivisorError(
                "zero divisor in quotient ring (reducible modulus)", factor
            )
        scale = g[0]
        return NFElem(self.modulus, _reduce([ci / scale for ci in s0], self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def project(self, new_modulus):
        """Image under Q[y]/(m) -> Q[y]/(h) for a factor h of m."""
        return NFElem(new_modulus, _reduce(list(self.coeffs), new_modulus))

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (NFElem, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, self.coeffs))
        return self._hash

    def __repr__(self):
        sym = self.modulus.var
        parts = []
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            if i == 0:
                parts.append(str(ci))
            elif i == 1:
                parts.append(f"{ci}*{sym}" if abs(ci) != 1 else (sym if ci > 0 else f"-{sym}"))
            else:
                parts.append(f"{ci}*{sym}^{i}" if abs(ci) != 1 else (f"{sym}^{i}" if ci > 0 else f"-{sym}^{i}"))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _q_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _q_normalize(out)


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _q_normalize(out)


# -- module-level operation names ------------------------------------


def nf_add(a, b):
    return a + b


def nf_mul(a, b):
    return a * b


def nf_inv(a):
    return a.inv()


def nf_eval_bivariate(p, x0, y0):
    """Evaluate an MPoly in {x, y} at number-field arguments (Horner twice)."""
    if not set(p.names) <= {"x", "y"}:
        raise ValueError(f"polynomial must involve only x and y, got {p.names}")
    modulus = x0.modulus
    if y0.modulus != modulus:
        raise ValueError("arguments live in different quotient rings")
    xcoeffs = p.as_poly_in("x") if "x" in p.names else [p]
    acc = modulus.constant(0)
    for coeff in reversed(xcoeffs):
        # evaluate the y-coefficient, then fold into the x-Horner scheme
        ycoeffs = coeff.univariate_coeffs("y") if coeff.names else coeff.univariate_coeffs()
        cval = modulus.constant(0)
        for ci in reversed(ycoeffs or [Fraction(0)]):
            cval = cval * y0 + ci
        acc = acc * x0 + cval
    return acc


def nf_poly_divmod(a, b):
    """Division with remainder in A[x] for A = Q[y]/(m); coefficients NFElem.

    May raise ZeroDivisorError when the leading coefficient of b is a zero
    divisor; callers split the modulus and retry.
    """
    b = _nf_strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    modulus = b[-1].modulus
    zero = modulus.constant(0)
    r = _nf_strip(a)
    if len(r) < len(b):
        return [], r
    lead_inv = b[-1].inv()
    q = [zero] * (len(r) - len(b) + 1)
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        f = r[-1] * lead_inv
        if not f.is_zero():
            q[k] = f
            for i, bi in enumerate(b):
                r[i + k] = r[i + k] - f * bi
        r.pop()
        while r and r[-1].is_zero():
            r.pop()
    return q, r


def _nf_strip(coeffs):
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return out


def nf_poly_gcd(a, b):
    """Monic gcd in A[x] by the Euclidean algorithm (A = Q[y]/(m)).

    Valid whenever no zero divisor is hit; otherwise ZeroDivisorError
    propagates with a factor of the modulus for the caller's retry.
    """
    a = _nf_strip(a)
    b = _nf_strip(b)
    while b:
        _, r = nf_poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead_inv = a[-1].inv()
    return [ci * lead_inv for ci in a]
