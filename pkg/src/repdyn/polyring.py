"""Sparse multivariate polynomials over the exact rationals.

The ring is Q[c,d,x,y,z,n,u] with that fixed ambient variable order; every
``MPoly`` lives in the sub-ring generated by the variables it actually uses.
Monomials are compared in graded lexicographic order (total degree first,
then the exponent vector against the ambient order).

Alongside the ring operations the module provides the exact algorithms the
rest of the package is built on:

* exact division with a certified nonzero remainder on failure,
* Sylvester resultants via fraction-free (Bareiss) elimination, plus a
  fast evaluation/interpolation path for bivariate eliminations,
* rational-root extraction through an exact monic transform and Sturm-based
  real-root isolation (no integer factorization at any point),
* a factorization-shape classifier and explicit splitter for quartics.

Coefficients are stored as ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise; all arithmetic is exact.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd, isqrt

from .rationals import sqrt_exact

__all__ = [
    "AMBIENT_VARS",
    "MPoly",
    "ExactDivisionError",
    "variables",
    "parse_mpoly",
    "det_bareiss",
    "resultant",
    "resultant_bivariate",
    "rational_roots",
    "integer_roots",
    "isolate_real_roots",
    "quartic_factor_shape",
    "split_quartic",
    "sturm_root_count",
]

AMBIENT_VARS = ("c", "d", "x", "y", "z", "n", "u")
_AMBIENT_INDEX = {v: i for i, v in enumerate(AMBIENT_VARS)}


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _coeff(v):
    """Normalize a coefficient: integral Fractions become ints."""
    if type(v) is int:
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, int):
        return int(v)
    raise TypeError(f"unsupported coefficient type {type(v)!r}")


def _merge_names(a, b):
    if a == b:
        return a
    merged = set(a)
    merged.update(b)
    return tuple(sorted(merged, key=_AMBIENT_INDEX.__getitem__))


class MPoly:
    """Immutable sparse multivariate polynomial over Q."""

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, names, terms):
        # Internal: use the classmethod constructors / `variables()` instead.
        self.names = names
        self.terms = terms
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def _make(cls, names, terms):
        clean = {}
        for e, v in terms.items():
            v = _coeff(v)
            if v:
                clean[e] = v
        if not clean:
            return cls((), {})
        # prune variables that no term uses
        nvars = len(names)
        used = [False] * nvars
        for e in clean:
            for i in range(nvars):
                if e[i]:
                    used[i] = True
        if not all(used):
            keep = [i for i in range(nvars) if used[i]]
            names = tuple(names[i] for i in keep)
            clean = {tuple(e[i] for i in keep): v for e, v in clean.items()}
        return cls(names, clean)

    @classmethod
    def const(cls, q):
        q = _coeff(Fraction(q) if not isinstance(q, (int, Fraction)) else q)
        return cls((), {(): q}) if q else cls((), {})

    @classmethod
    def zero(cls):
        return cls((), {})

    @classmethod
    def var(cls, name):
        if name not in _AMBIENT_INDEX:
            raise ValueError(f"unknown variable {name!r}; ambient set is {AMBIENT_VARS}")
        return cls((name,), {(1,): 1})

    @classmethod
    def from_dict(cls, names, terms):
        """Build from {exponent tuple: coefficient}; validates the names."""
        for v in names:
            if v not in _AMBIENT_INDEX:
                raise ValueError(f"unknown variable {v!r}")
        order = [_AMBIENT_INDEX[v] for v in names]
        if order != sorted(order) or len(set(names)) != len(names):
            raise ValueError("variables must be distinct and in ambient order")
        return cls._make(tuple(names), dict(terms))

    @classmethod
    def univariate(cls, name, coeffs):
        """Polynomial in one variable from ascending coefficients."""
        return cls._make((name,), {(i,): ci for i, ci in enumerate(coeffs)})

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.names or all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        if not self.terms:
            return Fraction(0)
        return Fraction(next(iter(self.terms.values())))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if var not in self.names:
            return 0 if self.terms else -1
        i = self.names.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def degree_in_vars(self, varset):
        """Max combined exponent over the given variables (0 if none present)."""
        if not self.terms:
            return -1
        idx = [i for i, v in enumerate(self.names) if v in varset]
        if not idx:
            return 0
        return max(sum(e[i] for i in idx) for e in self.terms)

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def coefficient_of(self, var, power):
        """Coefficient of var**power, as a polynomial in the other variables."""
        if var not in self.names:
            if power == 0:
                return self
            return MPoly.zero()
        i = self.names.index(var)
        sub = {}
        for e, v in self.terms.items():
            if e[i] == power:
                sub[e[:i] + e[i + 1 :]] = v
        return MPoly._make(self.names[:i] + self.names[i + 1 :], sub)

    def as_poly_in(self, var):
        """Ascending coefficient list in `var`, entries in the other variables."""
        deg = self.degree_in(var)
        if deg < 0:
            return []
        return [self.coefficient_of(var, k) for k in range(deg + 1)]

    def univariate_coeffs(self, var=None):
        """Ascending Fraction coefficients; requires at most one variable."""
        if len(self.names) > 1:
            raise ValueError(f"polynomial is multivariate: {self.names}")
        if not self.terms:
            return []
        if not self.names:
            return [Fraction(self.terms[()])]
        if var is not None and self.names and self.names[0] != var:
            raise ValueError(f"polynomial is in {self.names[0]!r}, not {var!r}")
        deg = max(e[0] for e in self.terms)
        out = [Fraction(0)] * (deg + 1)
        for e, v in self.terms.items():
            out[e[0]] = Fraction(v)
        return out

    # -- arithmetic ---------------------------------------------------

    def _aligned(self, other):
        names = _merge_names(self.names, other.names)
        return names, _embed(self, names), _embed(other, names)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, v in b.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            elif e in out:
                del out[e]
        return MPoly._make(names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.names, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero()
            return MPoly._make(self.names, {e: v * other for e, v in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return MPoly.zero()
        names, a, b = self._aligned(other)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = tuple(map(int.__add__, e1, e2))
                v = get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return MPoly._make(names, out)

    __rmul__ = __mul__

    def square(self):
        """Exact square, exploiting symmetry of the term products."""
        if not self.terms:
            return MPoly.zero()
        items = list(self.terms.items())
        out = {}
        get = out.get
        for i, (e1, c1) in enumerate(items):
            k = tuple(v + v for v in e1)
            v = get(k)
            out[k] = c1 * c1 if v is None else v + c1 * c1
            for j in range(i + 1, len(items)):
                e2, c2 = items[j]
                k = tuple(map(int.__add__, e1, e2))
                cc = 2 * c1 * c2
                v = get(k)
                out[k] = cc if v is None else v + cc
        return MPoly._make(self.names, out)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            inv = Fraction(1, 1) / Fraction(other)
            return MPoly._make(self.names, {e: v * inv for e, v in self.terms.items()})
        return NotImplemented

    def exact_div(self, divisor):
        """Exact quotient self/divisor in the polynomial ring.

        Raises ExactDivisionError (carrying the nonzero remainder reached)
        when the division is not exact.  Fail-fast: if at any step the
        divisor's leading monomial does not divide the running remainder's,
        the division cannot be exact and the error is raised immediately.
        """
        if not isinstance(divisor, MPoly):
            divisor = MPoly.const(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero():
            return MPoly.zero()
        names, a, b = self._aligned(divisor)
        qexp, qcoeff = max(b, key=lambda t: (sum(t), t)), None
        qcoeff = b[qexp]
        rem = dict(a)
        heap = [(-sum(e), tuple(-v for v in e)) for e in rem]
        heapq.heapify(heap)
        quot = {}
        qitems = list(b.items())
        while rem:
            # pop the graded-lex leading live monomial
            while True:
                if not heap:
                    raise AssertionError("heap exhausted with live terms")
                negs, nege = heapq.heappop(heap)
                e = tuple(-v for v in nege)
                if e in rem:
                    break
            coeff = rem.pop(e)
            diff = tuple(map(int.__sub__, e, qexp))
            if any(v < 0 for v in diff):
                rem[e] = coeff
                raise ExactDivisionError(
                    "non-exact polynomial division (leading monomial obstruction)",
                    remainder=MPoly._make(names, rem),
                )
            qc = _coeff(Fraction(coeff) / Fraction(qcoeff))
            quot[diff] = qc
            for eq, cq in qitems:
                if eq == qexp:
                    continue
                k = tuple(map(int.__add__, diff, eq))
                v = rem.get(k, 0) - qc * cq
                if v:
                    rem[k] = v
                    heapq.heappush(heap, (-sum(k), tuple(-t for t in k)))
                elif k in rem:
                    del rem[k]
        return MPoly._make(names, quot)

    def divides(self, other):
        """True when self divides other exactly."""
        try:
            other.exact_div(self)
            return True
        except ExactDivisionError:
            return False

    # -- substitution -------------------------------------------------

    def specialize(self, bindings):
        """Substitute exact rational values for a subset of the variables.

        Bindings for variables the polynomial does not contain are ignored.
        Returns a polynomial in the remaining variables.
        """
        vals = {}
        for k, v in bindings.items():
            if k not in _AMBIENT_INDEX:
                raise ValueError(f"unknown variable {k!r}")
            vals[k] = _coeff(Fraction(v) if not isinstance(v, (int, Fraction)) else v)
        idx = [i for i, nm in enumerate(self.names) if nm in vals]
        if not idx:
            return self
        keep = [i for i in range(len(self.names)) if i not in idx]
        new_names = tuple(self.names[i] for i in keep)
        # cache powers of each bound value
        powcache = {i: {0: 1} for i in idx}
        out = {}
        for e, coeff in self.terms.items():
            scale = coeff
            for i in idx:
                p = e[i]
                cache = powcache[i]
                if p not in cache:
                    base = vals[self.names[i]]
                    cur = cache[max(cache)]
                    for k in range(max(cache) + 1, p + 1):
                        cur = cur * base
                        cache[k] = cur
                scale = scale * cache[p]
            if not scale:
                continue
            k = tuple(e[i] for i in keep)
            v = out.get(k, 0) + scale
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return MPoly._make(new_names, out)

    def eval_at(self, bindings):
        """Fully evaluate; all variables must be bound.  Returns a Fraction."""
        res = self.specialize(bindings)
        if not res.is_constant():
            missing = [v for v in res.names]
            raise ValueError(f"unbound variables {missing} in evaluation")
        return res.constant_value()

    # -- normal forms -------------------------------------------------

    def content(self):
        """Positive rational content (gcd of coefficients), 0 for the zero poly."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for v in self.terms.values():
            f = Fraction(v)
            num = gcd(num, abs(f.numerator))
            den = den * f.denominator // gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Primitive part: content removed, leading (graded-lex) coefficient > 0."""
        if not self.terms:
            return self
        c = self.content()
        _, lead = self.leading_term()
        if lead < 0:
            c = -c
        return self * (1 / c)

    def derivative(self, var):
        if var not in self.names:
            return MPoly.zero()
        i = self.names.index(var)
        out = {}
        for e, v in self.terms.items():
            if e[i]:
                k = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[k] = out.get(k, 0) + v * e[i]
        return MPoly._make(self.names, out)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    # -- comparison / display ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def canonical_str(self):
        """Canonical text form: graded-lex sorted "a/b*c^i*d^j" terms."""
        if not self.terms:
            return "0"
        parts = []
        for e, v in self.sorted_terms():
            f = Fraction(v)
            mono = []
            for nm, p in zip(self.names, e):
                if p == 1:
                    mono.append(nm)
                elif p > 1:
                    mono.append(f"{nm}^{p}")
            coeff_str = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
            if mono and abs(f) == 1:
                term = "*".join(mono)
                term = term if f > 0 else "-" + term
            elif mono:
                term = coeff_str + "*" + "*".join(mono)
            else:
                term = coeff_str
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    __str__ = canonical_str

    def __repr__(self):
        s = self.canonical_str()
        if len(s) > 120:
            s = s[:117] + "..."
        return f"MPoly({s})"


def _embed(p, names):
    if p.names == names:
        return p.terms
    pos = [names.index(v) for v in p.names]
    width = len(names)
    out = {}
    for e, v in p.terms.items():
        k = [0] * width
        for i, ei in zip(pos, e):
            k[i] = ei
        out[tuple(k)] = v
    return out


def _lift(v):
    if isinstance(v, MPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return MPoly.const(v)
    return NotImplemented


def variables(*names):
    """Convenience: variables("c","d") -> (MPoly c, MPoly d)."""
    if not names:
        names = AMBIENT_VARS
    out = tuple(MPoly.var(v) for v in names)
    return out if len(out) > 1 else out[0]


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"^([a-z])(?:\^(\d+))?$")


def parse_mpoly(text):
    """Parse the canonical text form (and modest variants) back to an MPoly.

    Accepts terms like "-3/4*c^2*x", "x", "5"; whitespace is ignored.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial string")
    if compact == "0":
        return MPoly.zero()
    result = MPoly.zero()
    pos = 0
    for m in _TERM_RE.finditer(compact):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
        pos = m.end()
        tok = m.group(0)
        sign = 1
        if tok[0] == "+":
            tok = tok[1:]
        elif tok[0] == "-":
            sign = -1
            tok = tok[1:]
        coeff = Fraction(sign)
        exps = {}
        for factor in tok.split("*"):
            if not factor:
                raise ValueError(f"empty factor in term {tok!r}")
            fm = _FACTOR_RE.match(factor)
            if fm:
                v, p = fm.group(1), int(fm.group(2) or 1)
                if v not in _AMBIENT_INDEX:
                    raise ValueError(f"unknown variable {v!r}")
                exps[v] = exps.get(v, 0) + p
            else:
                coeff *= Fraction(factor)
        names = tuple(sorted(exps, key=_AMBIENT_INDEX.__getitem__))
        term = MPoly._make(names, {tuple(exps[v] for v in names): coeff})
        result = result + term
    if pos != len(compact):
        raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
    return result


# -- determinants and resultants --------------------------------------


def det_bareiss(rows):
    """Exact determinant of a square MPoly matrix, fraction-free elimination.

    Every division performed is exact (Sylvester identity), so the whole
    computation stays inside the polynomial ring.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    M = [[_lift(v) for v in r] for r in rows]
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero()
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            head = row_i[k]
            for j in range(k + 1, n):
                t = row_i[j] * pivot - head * M[k][j]
                if k:
                    t = t.exact_div(prev)
                row_i[j] = t
            row_i[k] = MPoly.zero()
        prev = pivot
    result = M[n - 1][n - 1]
    return -result if sign < 0 else result


def sylvester_matrix(p, q, var):
    """Sylvester matrix of p and q with respect to `var` (entries MPoly)."""
    a = p.as_poly_in(var)
    b = q.as_poly_in(var)
    m = len(a) - 1
    n = len(b) - 1
    if m < 1 or n < 1:
        raise ValueError("both polynomials must have positive degree in the variable")
    size = m + n
    zero = MPoly.zero()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, ak in enumerate(reversed(a)):
            row[i + k] = ak
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, bk in enumerate(reversed(b)):
            row[i + k] = bk
        rows.append(row)
    return rows


def resultant(p, q, var):
    """Resultant of p and q with respect to `var`.

    Vanishes exactly when p and q share a factor of positive degree in
    `var` over the fraction field of the remaining variables.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined here")
    return det_bareiss(sylvester_matrix(p, q, var))


def _det_bareiss_int(M):
    """Destructive exact integer determinant (Bareiss)."""
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            head = row_i[k]
            row_k = M[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def _sylvester_int(acoeffs, bcoeffs):
    m = len(acoeffs) - 1
    n = len(bcoeffs) - 1
    size = m + n
    rows = []
    ra = list(reversed(acoeffs))
    rb = list(reversed(bcoeffs))
    for i in range(n):
        row = [0] * size
        row[i : i + m + 1] = ra
        rows.append(row)
    for i in range(m):
        row = [0] * size
        row[i : i + n + 1] = rb
        rows.append(row)
    return rows


def resultant_bivariate(p, q, elim_var):
    """Exact Res_{elim_var}(p, q) for bivariate p, q by evaluation/interpolation.

    Both inputs must involve exactly the variables {elim_var, w} for a single
    other variable w.  The kept variable is evaluated at enough integer points
    to pin the resultant down rigorously and the result is recovered by exact
    Newton interpolation.

    Degree bound: in general deg_w(Res) <= deg_v(p)*deg_w(q) + deg_v(q)*deg_w(p).
    When the `elim_var` leading coefficient of one input is free of w, the
    sharper bound deg_v(that input) * total_degree(other) applies to its side
    (root growth in w is at most linear), and symmetrically; the minimum of
    the valid bounds is used.
    """
    other = set(p.names) | set(q.names)
    other.discard(elim_var)
    if len(other) != 1:
        raise ValueError(f"expected exactly one kept variable, found {sorted(other)}")
    w = other.pop()
    dp = p.degree_in(elim_var)
    dq = q.degree_in(elim_var)
    if dp < 1 or dq < 1:
        raise ValueError("both polynomials must have positive degree in the eliminated variable")

    bound = dp * q.degree_in(w) + dq * p.degree_in(w)
    lcp = p.coefficient_of(elim_var, dp)
    lcq = q.coefficient_of(elim_var, dq)
    if lcp.degree_in(w) == 0 and lcq.degree_in(w) == 0:
        bound = min(bound, dp * q.total_degree(), dq * p.total_degree())

    # clear denominators once; rescale the result exactly at the end
    pc, pden = _int_bivariate_coeffs(p, elim_var, w)
    qc, qden = _int_bivariate_coeffs(q, elim_var, w)

    npts = bound + 1
    xs = []
    vs = []
    half = npts // 2
    for t in range(npts):
        x0 = t - half
        arow = [_eval_int_poly(ci, x0) for ci in pc]
        brow = [_eval_int_poly(ci, x0) for ci in qc]
        # degree drop at an evaluation point would compute the wrong minor:
        # the Sylvester matrix shape is fixed by the generic degrees, and
        # leading entries are the (possibly zero) top coefficients, which is
        # exactly the specialization of the generic resultant.
        xs.append(x0)
        vs.append(_det_bareiss_int(_sylvester_int(arow, brow)))
    coeffs = _newton_interpolate(xs, vs)
    # undo the clearing: Res(a*p, b*q) = a^dq * b^dp * Res(p, q)
    scale = Fraction(pden) ** dq * Fraction(qden) ** dp
    coeffs = [Fraction(ci) / scale for ci in coeffs]
    return MPoly.univariate(w, coeffs)


def _int_bivariate_coeffs(p, elim_var, w):
    """Coefficients of p in elim_var as dense int lists in w, plus the
    denominator cleared from the whole polynomial."""
    den = 1
    for v in p.terms.values():
        f = Fraction(v)
        den = den * f.denominator // gcd(den, f.denominator)
    out = []
    for coeff_poly in p.as_poly_in(elim_var):
        lst = [Fraction(ci) * den for ci in coeff_poly.univariate_coeffs(w)] or [Fraction(0)]
        out.append([int(ci) for ci in lst])
    return out, den


def _eval_int_poly(coeffs, x0):
    acc = 0
    for ci in reversed(coeffs):
        acc = acc * x0 + ci
    return acc


def _newton_interpolate(xs, vs):
    """Exact interpolation; returns ascending Fraction coefficients."""
    n = len(xs)
    divided = [Fraction(v) for v in vs]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form
    coeffs = [Fraction(0)] * n
    coeffs[0] = divided[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # multiply by (x - xs[k]) and add divided[k]
        xk = xs[k]
        for i in range(deg, -1, -1):
            coeffs[i + 1] += coeffs[i]
            coeffs[i] = -coeffs[i] * xk
        deg += 1
        coeffs[0] += divided[k]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# -- univariate utilities over Q --------------------------------------


def _q_normalize(coeffs):
    out = [Fraction(ci) for ci in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _q_divmod(a, b):
    a = _q_normalize(a)
    b = _q_normalize(b)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = a[:]
    lb = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / lb
        q[k] = f
        for i, bi in enumerate(b):
            r[i + k] -= f * bi
        while r and r[-1] == 0:
            r.pop()
    return q, r


def _q_gcd(a, b):
    a = _q_normalize(a)
    b = _q_normalize(b)
    while b:
        _, r = _q_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [ci / lead for ci in a]


def _q_deriv(a):
    return [i * ci for i, ci in enumerate(a)][1:]


def _q_eval(a, x):
    acc = Fraction(0)
    for ci in reversed(a):
        acc = acc * x + ci
    return acc


def _sturm_chain(coeffs):
    """Sturm chain of the squarefree part."""
    f = _q_normalize(coeffs)
    fp = _q_deriv(f)
    g = _q_gcd(f, fp)
    if len(g) > 1:
        f, _ = _q_divmod(f, g)
    chain = [f, _q_deriv(f)]
    while len(chain[-1]) > 0:
        _, r = _q_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-ci for ci in r])
    return chain


def _sign_variations(chain, x):
    signs = []
    for poly in chain:
        v = _q_eval(poly, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(coeffs, lo, hi):
    """Number of distinct real roots in (lo, hi] (exact, Sturm)."""
    chain = _sturm_chain(coeffs)
    return _sign_variations(chain, Fraction(lo)) - _sign_variations(chain, Fraction(hi))


def _cauchy_bound(coeffs):
    coeffs = _q_normalize(coeffs)
    lead = abs(coeffs[-1])
    if len(coeffs) == 1:
        return Fraction(1)
    m = max(abs(ci) for ci in coeffs[:-1])
    return 1 + m / lead


def isolate_real_roots(coeffs):
    """Disjoint half-open intervals (lo, hi], one distinct real root in each.

    Exact bisection driven by Sturm counts on the squarefree part.
    """
    f = _q_normalize(coeffs)
    if not f:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if len(f) == 1:
        return []
    chain = _sturm_chain(f)
    B = _cauchy_bound(f)
    lo, hi = -B - 1, B

    def var(x):
        return _sign_variations(chain, x)

    out = []
    stack = [(lo, hi, var(lo), var(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = var(mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    out.sort()
    return out


def integer_roots(int_coeffs):
    """All integer roots of an integer-coefficient polynomial (exact).

    Uses real-root isolation plus interval narrowing; no factorization.
    """
    coeffs = [int(c) for c in int_coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    roots = []
    shift = 0
    while coeffs[0] == 0:
        shift += 1
        coeffs = coeffs[1:]
    if shift:
        roots.append(0)
    if len(coeffs) == 1:
        return sorted(roots)
    frac = [Fraction(c) for c in coeffs]
    chain = _sturm_chain(frac)
    for lo, hi in isolate_real_roots(frac):
        # narrow to width < 1 so at most one integer candidate remains
        vlo = _sign_variations(chain, lo)
        while hi - lo >= 1:
            mid = (lo + hi) / 2
            vm = _sign_variations(chain, mid)
            if vlo - vm:
                hi = mid
            else:
                lo, vlo = mid, vm
        # candidates: integers in (lo, hi]
        k = _floor_fraction(hi)
        if k > lo and _eval_int_poly(coeffs, k) == 0:
            roots.append(k)
    return sorted(set(roots))


def _floor_fraction(q):
    return q.numerator // q.denominator


def rational_roots(p):
    """Exactly the rational roots of a univariate polynomial, as a set.

    Accepts an MPoly (in any single variable) or an ascending coefficient
    list.  Clears denominators, maps roots through the exact monic transform
    w = lead * t, extracts the integer roots of the transform, and verifies
    every candidate exactly.  Raises on the zero polynomial.
    """
    if isinstance(p, MPoly):
        coeffs = p.univariate_coeffs()
    else:
        coeffs = [Fraction(ci) for ci in p]
    coeffs = _q_normalize(coeffs)
    if not coeffs:
        raise ValueError("the zero polynomial has every value as a root")
    if len(coeffs) == 1:
        return set()
    den = 1
    for ci in coeffs:
        den = den * ci.denominator // gcd(den, ci.denominator)
    ic = [int(ci * den) for ci in coeffs]
    g = 0
    for ci in ic:
        g = gcd(g, abs(ci))
    ic = [ci // g for ci in ic]
    roots = set()
    if ic[0] == 0:
        roots.add(Fraction(0))
        while ic[0] == 0:
            ic = ic[1:]
    if len(ic) == 1:
        return roots
    lead = ic[-1]
    n = len(ic) - 1
    # w = lead * t: monic transform has coefficients a_k * lead^(n-1-k)
    monic = [ic[k] * lead ** (n - 1 - k) for k in range(n)] + [1]
    for w in integer_roots(monic):
        cand = Fraction(w, lead)
        if _q_eval([Fraction(ci) for ci in ic], cand) == 0:
            roots.add(cand)
    return roots


# -- quartic factorization shapes -------------------------------------


def _squarefree_check(coeffs):
    g = _q_gcd(coeffs, _q_deriv(coeffs))
    return len(g) <= 1


def split_quartic(p):
    """Irreducible factorization over Q of a squarefree polynomial of degree <= 4.

    Returns a list of monic MPoly factors in the input's variable (times a
    constant overall scale is dropped).  For the rootless quartic case the
    two-quadratics split is decided by the degree-three polynomial in Z = z^2
    whose roots are the squares of the middle coefficients of a monic split
    (x^2+zx+v)(x^2-zx+w); a rational Z that is a rational square yields the
    split, with the biquadratic z = 0 case checked through its discriminant.
    """
    if isinstance(p, MPoly):
        if len(p.names) != 1:
            raise ValueError("univariate polynomial required")
        var = p.names[0]
        coeffs = p.univariate_coeffs()
    else:
        raise TypeError("split_quartic expects an MPoly")
    coeffs = _q_normalize(coeffs)
    deg = len(coeffs) - 1
    if deg < 1 or deg > 4:
        raise ValueError(f"degree must be between 1 and 4, got {deg}")
    if not _squarefree_check(coeffs):
        raise ValueError("polynomial is not squarefree")
    lead = coeffs[-1]
    monic = [ci / lead for ci in coeffs]
    factors = []
    work = monic
    for r in sorted(rational_roots(list(work))):
        factors.append(MPoly.univariate(var, [-r, 1]))
        work, rem = _q_divmod(work, [-r, Fraction(1)])
        assert not rem
    res_deg = len(work) - 1
    if res_deg == 0:
        return factors
    if res_deg in (1, 2, 3):
        # residual with no rational roots: degrees 2 and 3 are irreducible;
        # degree 1 cannot occur (its root would have been extracted)
        if res_deg == 1:
            raise AssertionError("linear residual after root extraction")
        factors.append(MPoly.univariate(var, work))
        return factors
    # rootless quartic: depress and try the two-quadratics split
    a3 = work[3]
    shiftv = -a3 / 4
    dep = _taylor_shift(work, shiftv)
    assert dep[3] == 0
    b2, b1, b0 = dep[2], dep[1], dep[0]
    zcubic = [-(b1 * b1), b2 * b2 - 4 * b0, 2 * b2, Fraction(1)]
    for Z in sorted(rational_roots(zcubic)):
        if Z > 0:
            zr = sqrt_exact(Z)
            if zr is None:
                continue
            v = (b2 + Z - b1 / zr) / 2
            w = (b2 + Z + b1 / zr) / 2
            q1 = [v, zr, Fraction(1)]
            q2 = [w, -zr, Fraction(1)]
        elif Z == 0:
            disc = b2 * b2 - 4 * b0
            root = sqrt_exact(disc)
            if root is None:
                continue
            v = (b2 - root) / 2
            w = (b2 + root) / 2
            q1 = [v, Fraction(0), Fraction(1)]
            q2 = [w, Fraction(0), Fraction(1)]
        else:
            continue
        # shift back: factors of the depressed quartic at u = y - shiftv
        f1 = _taylor_shift(q1, -shiftv)
        f2 = _taylor_shift(q2, -shiftv)
        check = _poly_mul_q(f1, f2)
        assert check == work, "quadratic split failed verification"
        factors.append(MPoly.univariate(var, f1))
        factors.append(MPoly.univariate(var, f2))
        return factors
    factors.append(MPoly.univariate(var, work))
    return factors


def _taylor_shift(coeffs, h):
    """Coefficients of p(t + h) via repeated synthetic division by (t - h)."""
    work = [Fraction(ci) for ci in coeffs]
    h = Fraction(h)
    out = []
    while work:
        quot = [Fraction(0)] * (len(work) - 1)
        acc = Fraction(0)
        for i in range(len(work) - 1, 0, -1):
            acc = acc * h + work[i]
            quot[i - 1] = acc
        out.append(acc * h + work[0])
        work = quot
    return out


def _poly_mul_q(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _q_normalize(out)


def quartic_factor_shape(p):
    """Multiset of Q-irreducible factor degrees of a squarefree quartic.

    One of (1,1,1,1), (1,1,2), (1,3), (2,2), (4); raises on wrong degree or
    repeated factors.
    """
    if isinstance(p, MPoly):
        deg = p.total_degree()
    else:
        raise TypeError("quartic_factor_shape expects an MPoly")
    if deg != 4:
        raise ValueError(f"degree must be 4, got {deg}")
    factors = split_quartic(p)
    shape = tuple(sorted(f.total_degree() for f in factors))
    assert sum(shape) == 4
    return shape
