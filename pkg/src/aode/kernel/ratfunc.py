"""Rational functions in one transcendental parameter.

Free constants that appear in series solutions (for instance the shift of
y = x + c) are carried as ParamRational values: num/den with den monic and
coprime to num, coefficients in Q or Q(a).
"""
from __future__ import annotations

from fractions import Fraction

from . import upoly
from .numberfield import AlgebraicNumber


def _is_scalar(x):
    return isinstance(x, (int, Fraction, AlgebraicNumber))


class ParamRational:
    __slots__ = ("num", "den", "name")

    def __init__(self, num, den=(1,), name="c"):
        num, den = upoly.trim(list(num)), upoly.trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = [1]
        else:
            g = upoly.gcd(num, den)
            if len(g) > 1:
                num, den = upoly.quo(num, g), upoly.quo(den, g)
            lc = den[-1]
            if isinstance(lc, int):
                lc = Fraction(lc)
            if lc != 1:
                num = [x / lc for x in num]
                den = [x / lc for x in den]
        self.num = tuple(upoly.trim(num))
        self.den = tuple(upoly.trim(den))
        self.name = name

    @classmethod
    def param(cls, name="c"):
        return cls([0, 1], [1], name)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        return self.num[0] if self.num else 0

    def _lift(self, other):
        if isinstance(other, ParamRational):
            if other.name != self.name and not other.is_constant() and not self.is_constant():
                raise ValueError("rational functions in different parameters")
            return other
        if _is_scalar(other):
            return ParamRational([other], [1], self.name)
        return None

    def _name_with(self, o):
        return self.name if not self.is_constant() else o.name

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = upoly.add(upoly.mul(list(self.num), list(o.den)), upoly.mul(list(o.num), list(self.den)))
        return ParamRational(n, upoly.mul(list(self.den), list(o.den)), self._name_with(o))

    __radd__ = __add__

    def __neg__(self):
        return ParamRational([-x for x in self.num], list(self.den), self.name)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ParamRational(upoly.mul(list(self.num), list(o.num)),
                             upoly.mul(list(self.den), list(o.den)), self._name_with(o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return ParamRational(upoly.mul(list(self.num), list(o.den)),
                             upoly.mul(list(self.den), list(o.num)), self._name_with(o))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return ParamRational([1], [1], self.name) / (self ** (-n))
        return ParamRational(upoly.power(list(self.num), n), upoly.power(list(self.den), n), self.name)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den, self.name))

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, value):
        d = upoly.evaluate(list(self.den), value)
        if d == 0:
            raise ZeroDivisionError("parameter value is a pole")
        n = upoly.evaluate(list(self.num), value)
        return n / d if not isinstance(n, int) or not isinstance(d, int) else Fraction(n, d)

    def __str__(self):
        ns = upoly.format_upoly(list(self.num), self.name)
        if self.den == (1,):
            return ns
        ds = upoly.format_upoly(list(self.den), self.name)
        simple = sum(1 for x in self.den if x != 0) == 1
        if len(self.num) == 1 and type(self.num[0]) in (int, Fraction):
            c = Fraction(self.num[0])
            sign = "-" if c < 0 else ""
            if c.denominator != 1:
                return f"{sign}{abs(c.numerator)}/({c.denominator}*{ds})"
            return f"{sign}{abs(c.numerator)}/{ds if simple else f'({ds})'}"
        if sum(1 for x in self.num if x != 0) > 1:
            ns = f"({ns})"
        return f"{ns}/{ds if simple else f'({ds})'}"

    def __repr__(self):
        return f"ParamRational({self})"
