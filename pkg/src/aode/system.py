"""Autonomous differential systems in one unknown y.

Equation polynomials live in u_0, ..., u_m where u_i stands for y^(i).
"""
from __future__ import annotations

from dataclasses import dataclass

from .kernel.poly import Poly


def derivative_name(i, var="y"):
    if i <= 3:
        return var + "'" * i
    return f"{var}^({i})"


def var_names(nvars, var="y"):
    return [derivative_name(i, var) for i in range(nvars)]


@dataclass(frozen=True)
class DiffSystem:
    equations: tuple
    order: int
    var: str = "y"

    def __post_init__(self):
        eqs = tuple(p.extend(self.nvars) for p in self.equations)
        if not eqs:
            raise ValueError("a system needs at least one equation")
        if any(p.is_zero() for p in eqs):
            raise ValueError("identically zero equation")
        object.__setattr__(self, "equations", eqs)

    @classmethod
    def from_polys(cls, polys, var="y"):
        polys = list(polys)
        order = max(max(p.lv(), 0) for p in polys)
        return cls(tuple(polys), max(order, 1), var)

    @property
    def nvars(self):
        return self.order + 1

    def names(self):
        return var_names(self.nvars, self.var)

    def format(self):
        return "; ".join(p.format(self.names()) + " = 0" for p in self.equations)

    def __str__(self):
        return self.format()


def y_poly(i, nvars):
    return Poly.var(i, nvars)
