"""Finite Puiseux polynomials and solution truncations.

A PuiseuxPoly is a finite map from rational exponents to exact
coefficients.  At a finite point the variable is x - x0; at infinity it is
t = 1/x, and the derivative d/dx acts as -t^2 d/dt.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

ZERO = "zero"
INFINITY = "infinity"


class PuiseuxPoly:
    __slots__ = ("terms", "point")

    def __init__(self, terms=None, point=ZERO):
        t = {}
        for e, c in (terms or {}).items():
            if c != 0:
                t[Fraction(e)] = c
        self.terms = t
        self.point = point

    @classmethod
    def const(cls, c, point=ZERO):
        return cls({0: c}, point)

    def is_zero(self):
        return not self.terms

    def valuation(self):
        return min(self.terms) if self.terms else None

    def ramification(self):
        return lcm(1, *(e.denominator for e in self.terms))

    def __add__(self, other):
        if not isinstance(other, PuiseuxPoly):
            other = PuiseuxPoly.const(other, self.point)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return PuiseuxPoly._raw(t, self.point)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly._raw({e: -c for e, c in self.terms.items()}, self.point)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PuiseuxPoly) else -other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxPoly):
            if other == 0:
                return PuiseuxPoly._raw({}, self.point)
            return PuiseuxPoly._raw({e: c * other for e, c in self.terms.items()}, self.point)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return PuiseuxPoly._raw({e: c for e, c in t.items() if c != 0}, self.point)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = PuiseuxPoly.const(1, self.point)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self):
        """d/dx, in the local variable of the expansion point."""
        t = {}
        for e, c in self.terms.items():
            if e == 0:
                continue
            if self.point == INFINITY:
                t[e + 1] = -c * e
            else:
                t[e - 1] = c * e
        return PuiseuxPoly._raw(t, self.point)

    def truncate(self, order):
        return PuiseuxPoly._raw({e: c for e, c in self.terms.items() if e <= order}, self.point)

    @classmethod
    def _raw(cls, terms, point):
        p = cls.__new__(cls)
        p.terms = terms
        p.point = point
        return p

    def sorted_terms(self):
        return sorted(self.terms.items())


@dataclass
class PuiseuxTruncation:
    """A solution truncation y = sum c_e * X^e with X = x - x0 or X = 1/x.

    ``terms`` holds (exponent, coefficient) pairs in the local variable,
    ascending.  At infinity the local variable is t = 1/x, so the exponent
    of x is the negative of the stored exponent.
    """
    point: str
    terms: list
    truncation_order: Fraction
    unique_extension: bool
    certificate: dict = field(default_factory=dict)
    exact: bool = False
    center: Fraction = Fraction(0)
    parameters: tuple = ()
    field: object = None
    kind: str = "branch"
    initial_value: object = None

    @property
    def ramification(self):
        return lcm(1, *(Fraction(e).denominator for e, _ in self.terms))

    def as_poly(self, order=None):
        p = PuiseuxPoly({e: c for e, c in self.terms}, self.point)
        return p.truncate(order) if order is not None else p

    def leading(self):
        nz = [(e, c) for e, c in self.terms if c != 0]
        return nz[0] if nz else None

    def x_exponents(self):
        return [(-e if self.point == INFINITY else e, c) for e, c in self.terms]

    def key(self):
        return (self.point, self.center, tuple((e, _coeff_key(c)) for e, c in self.terms),
                self.truncation_order)


def _coeff_key(c):
    from .kernel.numberfield import AlgebraicNumber
    if isinstance(c, AlgebraicNumber):
        return (c.field.minpoly, c.field.selector, c.coords)
    return str(c)


@dataclass
class SolutionFamily:
    """Generic-initial-value family y = y0 + c*x + ..., c a root of H(y0, c) = 0."""
    factor: object
    constraints: list
    terms: list
    truncation_order: int
    slope_rational: bool
    parameter: str = "y0"
    slope_name: str = "c"
    unique_extension: bool = True
    certificate: dict = field(default_factory=dict)

    def as_poly(self):
        return PuiseuxPoly({e: c for e, c in self.terms}, ZERO)
