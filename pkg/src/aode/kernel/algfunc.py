"""Elements of the function field Q(y0)[c] / (G(y0, c)).

Families of solutions whose slope c is an algebraic function of the
initial value y0 carry coefficients of this kind.  Values are stored as
num/den with both parts reduced below deg_c G, so zero testing is exact
when G is irreducible.
"""
from __future__ import annotations

from fractions import Fraction

from .gcd import poly_gcd, prem
from .poly import Poly


class AlgFunction:
    __slots__ = ("num", "den", "modulus")

    def __init__(self, num, den, modulus):
        g = modulus.extend(2)
        num, e1 = _reduce(num.extend(2), g)
        den, e2 = _reduce(den.extend(2), g)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes modulo the defining polynomial")
        lc = g.lc_in(1)
        if e2:
            num = num * lc ** e2
        if e1:
            den = den * lc ** e1
        if num.is_zero():
            den = Poly.const(1, 2)
        else:
            common = poly_gcd(num, den)
            if not common.is_constant():
                num, den = num.exquo(common), den.exquo(common)
            unit = den.primitive()[0] if den.is_rational() else den.lead_coeff()
            num, den = num / unit, den / unit
        self.num, self.den, self.modulus = num, den, g

    @classmethod
    def generators(cls, modulus):
        """(y0, c) as elements of the field."""
        one = Poly.const(1, 2)
        return cls(Poly.var(0, 2), one, modulus), cls(Poly.var(1, 2), one, modulus)

    def _lift(self, other):
        if isinstance(other, AlgFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return AlgFunction(Poly.const(other, 2), Poly.const(1, 2), self.modulus)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgFunction(self.num * o.den + o.num * self.den, self.den * o.den, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return AlgFunction(-self.num, self.den, self.modulus)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return AlgFunction(Poly.const(0, 2), Poly.const(1, 2), self.modulus)
            return AlgFunction(self.num * other, self.den, self.modulus)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgFunction(self.num * o.num, self.den * o.den, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in the function field")
        return AlgFunction(self.num * o.den, self.den * o.num, self.modulus)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        out = self._lift(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).num.is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def evaluate(self, y0, c):
        return self.num.evaluate([y0, c]) / self.den.evaluate([y0, c])

    def format(self, names=("y0", "c")):
        n = self.num.format(list(names))
        if self.den == Poly.const(1, 2):
            return n
        return f"({n})/({self.den.format(list(names))})"

    def __str__(self):
        return self.format()

    __repr__ = __str__


def _reduce(p, g):
    d, dg = p.degree(1), g.degree(1)
    if d < dg:
        return p, 0
    return prem(p, g, 1), d - dg + 1
