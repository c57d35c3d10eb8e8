"""Simple algebraic extensions Q(a) and their elements.

A NumberField is fixed by a monic irreducible minimal polynomial over Q and
a root selector: an isolating rational interval for a real root, or the
index of a non-real root in a fixed numerical ordering.  Arithmetic never
looks at the selector; it only distinguishes embeddings for output and
equality of fields.
"""
from __future__ import annotations

from fractions import Fraction

from . import upoly


class NumberField:
    __slots__ = ("minpoly", "selector", "name")

    def __init__(self, minpoly, selector=None, name="a"):
        mp = upoly.monic([Fraction(c) for c in upoly.trim(list(minpoly))])
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have positive degree")
        self.minpoly = tuple(mp)
        self.selector = selector
        self.name = name

    @property
    def degree(self):
        return len(self.minpoly) - 1

    @property
    def gen(self):
        if self.degree == 1:
            return -self.minpoly[0]
        return AlgebraicNumber(self, [0, 1])

    def __eq__(self, other):
        return (isinstance(other, NumberField) and self.minpoly == other.minpoly
                and self.selector == other.selector)

    def __hash__(self):
        return hash((self.minpoly, self.selector))

    def __call__(self, coords):
        return AlgebraicNumber(self, coords)

    def minpoly_str(self, var="t"):
        return upoly.format_upoly(list(self.minpoly), var)

    def selector_str(self):
        if self.selector is None:
            return ""
        if self.selector[0] == "real":
            return f"[{self.selector[1]}, {self.selector[2]}]"
        return f"complex root #{self.selector[1]}"

    def approx(self, dps=30):
        import mpmath
        with mpmath.workdps(dps):
            if self.selector is not None and self.selector[0] == "real":
                lo, hi = self.selector[1], self.selector[2]
                lo, hi = refine_interval(list(self.minpoly), lo, hi, Fraction(1, 10 ** (dps + 2)))
                mid = (lo + hi) / 2
                return mpmath.mpf(mid.numerator) / mid.denominator
            roots = _sorted_complex_roots(list(self.minpoly), dps)
            idx = self.selector[1] if self.selector else 0
            return roots[idx]

    def __repr__(self):
        sel = self.selector_str()
        return f"NumberField({self.minpoly_str()}{', ' + sel if sel else ''})"


class AlgebraicNumber:
    """Element of Q(a) stored as coordinates in the power basis 1, a, a^2, ..."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = [Fraction(c) for c in coords]
        d = field.degree
        if len(coords) > d:
            coords = upoly.rem(coords, list(field.minpoly))
        coords = list(coords) + [Fraction(0)] * (d - len(coords))
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)

    def _other(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                if other.is_rational():
                    return other.coords
                if self.is_rational():
                    return None
                raise ValueError("arithmetic between different number fields")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, AlgebraicNumber):
                return other + self
            return NotImplemented
        return AlgebraicNumber(self.field, [a + b for a, b in zip(self.coords, o)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, AlgebraicNumber):
                return -(other - self)
            return NotImplemented
        return AlgebraicNumber(self.field, [a - b for a, b in zip(self.coords, o)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, [a * other for a in self.coords])
        o = self._other(other)
        if o is None:
            if isinstance(other, AlgebraicNumber):
                return other * self
            return NotImplemented
        prod = upoly.mul(upoly.trim(list(self.coords)), upoly.trim(list(o)))
        return AlgebraicNumber(self.field, upoly.rem(prod, list(self.field.minpoly)))

    __rmul__ = __mul__

    def inverse(self):
        a = upoly.trim(list(self.coords))
        if not a:
            raise ZeroDivisionError("inverse of zero algebraic number")
        g, s, _ = upoly.xgcd(a, list(self.field.minpoly))
        return AlgebraicNumber(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return AlgebraicNumber(self.field, [a / other for a in self.coords])
        if isinstance(other, AlgebraicNumber):
            if other.is_rational():
                return self / other.coords[0]
            if self.is_rational() and other.field != self.field:
                return other.inverse() * self.coords[0]
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgebraicNumber(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field == self.field:
                return self.coords == other.coords
            return self.is_rational() and other.is_rational() and self.coords[0] == other.coords[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field, self.coords))

    def __bool__(self):
        return not self.is_zero()

    def approx(self, dps=30):
        import mpmath
        with mpmath.workdps(dps):
            a = self.field.approx(dps)
            return sum((mpmath.mpf(c.numerator) / c.denominator) * a ** i
                       for i, c in enumerate(self.coords))

    def __str__(self):
        return upoly.format_upoly(upoly.trim(list(self.coords)), self.field.name)

    def __repr__(self):
        return f"AlgebraicNumber({self}, {self.field!r})"


# -- real root isolation ---------------------------------------------------

def sturm_sequence(f):
    seq = [upoly.trim([Fraction(c) for c in f])]
    seq.append(upoly.derivative(seq[0]))
    while len(seq[-1]) > 1:
        r = upoly.rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(upoly.neg(r))
    return seq


def _sign_changes(seq, x):
    signs = []
    for p in seq:
        v = upoly.evaluate(p, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(seq, lo, hi):
    """Number of distinct real roots in (lo, hi]."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(f):
    f = [Fraction(c) for c in f]
    lc = abs(f[-1])
    return 1 + max((abs(c) / lc for c in f[:-1]), default=Fraction(0))


def isolate_real_roots(f, width=Fraction(1, 8)):
    """Disjoint rational intervals [lo, hi], one per distinct real root, ascending.

    A rational root r is returned as the degenerate interval [r, r].
    """
    f = upoly.trim([Fraction(c) for c in f])
    if len(f) < 2:
        return []
    f = upoly.squarefree_part(f)
    seq = sturm_sequence(f)
    b = root_bound(f)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            if upoly.evaluate(f, hi) == 0:
                out.append((hi, hi))
                continue
            out.append(refine_interval(f, lo, hi, width, seq))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def refine_interval(f, lo, hi, width, seq=None):
    """Shrink an isolating interval (lo, hi] until hi - lo <= width."""
    if lo == hi:
        return lo, hi
    f = [Fraction(c) for c in f]
    seq = seq or sturm_sequence(upoly.squarefree_part(f))
    while hi - lo > width:
        mid = (lo + hi) / 2
        if upoly.evaluate(f, mid) == 0:
            return mid, mid
        if count_real_roots(seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _sorted_complex_roots(f, dps=30):
    import mpmath
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed([Fraction(x) for x in f])]
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * dps)
        roots = [mpmath.mpc(r) for r in roots]
        tol = mpmath.mpf(10) ** (-(dps // 2))
        nonreal = [r for r in roots if abs(r.imag) > tol]
        nonreal.sort(key=lambda r: (float(r.real), float(r.imag)))
        return nonreal


def fields_for_irreducible(f, name="a"):
    """One NumberField per root of the irreducible polynomial f (real roots first)."""
    f = upoly.monic([Fraction(c) for c in upoly.trim(list(f))])
    if len(f) == 2:
        raise ValueError("linear polynomial has a rational root")
    fields = [NumberField(f, ("real", lo, hi), name) for lo, hi in isolate_real_roots(f)]
    nonreal = len(f) - 1 - len(fields)
    fields += [NumberField(f, ("complex", k), name) for k in range(nonreal)]
    return fields
