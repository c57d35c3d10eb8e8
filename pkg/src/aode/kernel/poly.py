"""Sparse multivariate polynomials with exact coefficients.

Variables are indexed 0..nvars-1 and ordered u0 < u1 < ... ; the monomial
order is lexicographic with the highest-indexed variable compared first.
Coefficients are ints, Fractions, or any exact field element that supports
the arithmetic operators (AlgebraicNumber, ParamRational).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from ..errors import ConstantPolynomial, NotDivisible


def norm_coeff(c):
    """Collapse integral Fractions to int so equal values hash alike."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def cdiv(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return norm_coeff(a / b)


def _coeff_key(c):
    if isinstance(c, (int, Fraction)):
        return (0, Fraction(c), "")
    return (1, Fraction(0), str(c))


def _lex_key(e):
    return e[::-1]


class Poly:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms=None, nvars=1):
        self.nvars = nvars
        self._hash = None
        t = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    if len(e) != nvars:
                        e = tuple(e) + (0,) * (nvars - len(e))
                    t[e] = norm_coeff(c)
        self.terms = t

    @classmethod
    def _raw(cls, terms, nvars):
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars=1):
        c = norm_coeff(c)
        return cls._raw({(0,) * nvars: c} if c != 0 else {}, nvars)

    @classmethod
    def var(cls, i, nvars, power=1):
        e = [0] * max(nvars, i + 1)
        e[i] = power
        return cls._raw({tuple(e): 1}, len(e))

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff}, len(exps))

    # -- structure -------------------------------------------------------

    def extend(self, nvars):
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            if any(any(e[nvars:]) for e in self.terms):
                raise ValueError("cannot drop variables that occur")
            return Poly._raw({e[:nvars]: c for e, c in self.terms.items()}, nvars)
        pad = (0,) * (nvars - self.nvars)
        return Poly._raw({e + pad: c for e, c in self.terms.items()}, nvars)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self, i):
        if not self.terms:
            return -1
        if i >= self.nvars:
            return 0
        return max(e[i] for e in self.terms)

    def degrees(self):
        d = [0] * self.nvars
        for e in self.terms:
            for i, a in enumerate(e):
                if a > d[i]:
                    d[i] = a
        return tuple(d)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def used_vars(self):
        return tuple(i for i, d in enumerate(self.degrees()) if d > 0)

    def max_var(self):
        """Index of the highest variable that occurs, or -1 for constants."""
        for i in range(self.nvars - 1, -1, -1):
            for e in self.terms:
                if e[i]:
                    return i
        return -1

    lv = max_var

    def coeffs_in(self, i):
        """Map k -> coefficient polynomial of u_i^k."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            key = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[key] = c
        return {k: Poly._raw(t, self.nvars) for k, t in out.items()}

    @classmethod
    def from_coeffs_in(cls, i, coeffs, nvars):
        t = {}
        for k, p in coeffs.items():
            for e, c in p.extend(nvars).terms.items():
                e2 = e[:i] + (e[i] + k,) + e[i + 1:]
                t[e2] = t.get(e2, 0) + c
        return cls(t, nvars)

    def coeff_in(self, i, k):
        t = {}
        for e, c in self.terms.items():
            if e[i] == k:
                t[e[:i] + (0,) + e[i + 1:]] = c
        return Poly._raw(t, self.nvars)

    def lc_in(self, i):
        """Leading coefficient w.r.t. u_i (the initial when i is the leading variable)."""
        return self.coeff_in(i, self.degree(i))

    def lead_term(self):
        e = max(self.terms, key=_lex_key)
        return e, self.terms[e]

    def lead_coeff(self):
        return self.lead_term()[1] if self.terms else 0

    def leading_data(self):
        """(lv, lc, init) of a non-constant polynomial; lc and init coincide."""
        v = self.max_var()
        if v < 0:
            raise ConstantPolynomial("leading data of a constant polynomial")
        init = self.lc_in(v)
        return v, init, init

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars == self.nvars:
                return self, other
            n = max(self.nvars, other.nvars)
            return self.extend(n), other.extend(n)
        return self, Poly.const(other, self.nvars)

    def __add__(self, other):
        a, b = self._coerce(other)
        t = dict(a.terms)
        for e, c in b.terms.items():
            s = t.get(e, 0) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = norm_coeff(s)
        return Poly._raw(t, a.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        a, b = self._coerce(other)
        t = dict(a.terms)
        for e, c in b.terms.items():
            s = t.get(e, 0) - c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = norm_coeff(s)
        return Poly._raw(t, a.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly._raw({}, self.nvars)
            return Poly._raw({e: norm_coeff(c * other) for e, c in self.terms.items()}, self.nvars)
        a, b = self._coerce(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        t = {}
        get = t.get
        for e2, c2 in b.terms.items():
            for e1, c1 in a.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = get(e, 0) + c1 * c2
        return Poly._raw({e: norm_coeff(c) for e, c in t.items() if c != 0}, a.nvars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self.exquo(other)
        return Poly._raw({e: cdiv(c, other) for e, c in self.terms.items()}, self.nvars)

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                a, b = self._coerce(other)
                return a.terms == b.terms
            return self.terms == other.terms
        if self.is_constant():
            return self.constant_value() == other
        return False

    def __hash__(self):
        if self._hash is None:
            # trailing all-zero variables do not change the hash
            n = self.nvars
            degs = self.degrees()
            while n > 0 and degs[n - 1] == 0:
                n -= 1
            self._hash = hash(frozenset((e[:n], c) for e, c in self.terms.items()))
        return self._hash

    def exquo(self, other):
        """Exact quotient; raises NotDivisible when other does not divide self."""
        if not isinstance(other, Poly):
            return self / other
        a, b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if b.is_constant():
            return a / b.constant_value()
        le, lc = b.lead_term()
        r = dict(a.terms)
        q = {}
        bterms = list(b.terms.items())
        while r:
            e = max(r, key=_lex_key)
            d = tuple(x - y for x, y in zip(e, le))
            if min(d) < 0:
                raise NotDivisible("not an exact divisor")
            c = cdiv(r[e], lc)
            q[d] = c
            for be, bc in bterms:
                k = tuple(x + y for x, y in zip(be, d))
                s = r.get(k, 0) - c * bc
                if s == 0:
                    r.pop(k, None)
                else:
                    r[k] = s
        return Poly._raw(q, a.nvars)

    def divides(self, other):
        try:
            other.exquo(self)
            return True
        except NotDivisible:
            return False

    # -- calculus and substitution --------------------------------------

    def diff(self, i):
        t = {}
        for e, c in self.terms.items():
            if i < self.nvars and e[i]:
                t[e[:i] + (e[i] - 1,) + e[i + 1:]] = norm_coeff(c * e[i])
        return Poly._raw(t, self.nvars)

    def subs(self, i, value):
        """Substitute u_i := value (a scalar or a Poly) via Horner in u_i."""
        if self.degree(i) <= 0:
            return self
        cs = self.coeffs_in(i)
        d = max(cs)
        acc = cs.get(d)
        for k in range(d - 1, -1, -1):
            acc = acc * value
            if k in cs:
                acc = acc + cs[k]
        if not isinstance(acc, Poly):
            acc = Poly.const(acc, self.nvars)
        return acc

    def evaluate(self, point):
        """Evaluate at a full point (sequence of scalars)."""
        total = 0
        for e, c in self.terms.items():
            m = c
            for x, a in zip(point, e):
                if a:
                    m = m * x ** a
            total = total + m
        return norm_coeff(total) if not isinstance(total, int) else total

    def compose(self, values, nvars=None):
        """Substitute every u_i := values[i] (Polys or scalars) simultaneously."""
        n = nvars if nvars is not None else next(
            (v.nvars for v in values if isinstance(v, Poly)), self.nvars)
        out = Poly.const(0, n)
        cache = {}
        for e, c in self.terms.items():
            m = Poly.const(c, n)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        v = values[i]
                        cache[key] = (v if isinstance(v, Poly) else Poly.const(v, n)) ** a
                    m = m * cache[key]
            out = out + m
        return out

    def map_coeffs(self, f):
        return Poly({e: f(c) for e, c in self.terms.items()}, self.nvars)

    def permute(self, perm, nvars=None):
        """Rename u_i -> u_perm[i]."""
        n = nvars or self.nvars
        t = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, a in enumerate(e):
                if a:
                    ne[perm[i]] += a
            t[tuple(ne)] = c
        return Poly(t, n)

    # -- integer normalisation ------------------------------------------

    def is_rational(self):
        return all(type(c) in (int, Fraction) for c in self.terms.values())

    def int_content(self):
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = igcd(num, c.numerator)
            den = den * c.denominator // igcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """(unit, primitive integer polynomial with positive leading coefficient)."""
        if not self.terms:
            return Fraction(1), self
        c = self.int_content()
        if self.lead_coeff() < 0:
            c = -c
        return c, self / c

    def monic(self):
        return self / self.lead_coeff()

    # -- printing --------------------------------------------------------

    def sort_key(self):
        return tuple(sorted(((_lex_key(e), _coeff_key(c)) for e, c in self.terms.items()),
                            reverse=True))

    def format(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"u{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=_lex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a)
            parts.append(_format_term(c, mono))
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r}, nvars={self.nvars})"


def _format_term(c, mono):
    if not mono:
        return _format_coeff(c, standalone=True)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    s = _format_coeff(c, standalone=False)
    return f"{s}*{mono}"


def _format_coeff(c, standalone):
    if type(c) in (int, Fraction):
        return str(c)
    s = str(c)
    if standalone or s.startswith("(") or all(ch not in s[1:] for ch in "+-"):
        return s
    return f"({s})"


def poly_from_terms(pairs, nvars):
    """Build from an iterable of (coeff, exponent-tuple) pairs, summing duplicates."""
    t = {}
    for c, e in pairs:
        t[tuple(e)] = t.get(tuple(e), 0) + c
    return Poly(t, nvars)
