"""Exact residual check for solution truncations.

A truncation t of order N differs from a true solution y by a series of
valuation > N; its j-th derivative then differs by valuation > N - j at a
finite point and > N + j at infinity.  Taylor expansion of each equation F
around t gives the bound

    val F(t) > min over a != 0 of  val(d^a F(t) / a!) + sum_j a_j (N -/+ j)

which every truncation of a genuine solution satisfies.  The check is exact:
F(t) is evaluated on finite Puiseux polynomials without rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .series import INFINITY, PuiseuxPoly


@dataclass
class Verification:
    ok: bool
    residual_valuations: list
    bounds: list
    order: Fraction

    def __bool__(self):
        return self.ok


def derivatives(y, m):
    out = [y]
    for _ in range(m):
        out.append(out[-1].derivative())
    return out


def _taylor_terms(f):
    """(alpha, d^alpha f / alpha!) for every non-zero multi-index alpha."""
    n = f.nvars
    degs = [max(f.degree(i), 0) for i in range(n)]
    for alpha in product(*(range(d + 1) for d in degs)):
        if not any(alpha):
            continue
        g = f
        scale = 1
        for i, a in enumerate(alpha):
            for _ in range(a):
                g = g.diff(i)
            scale *= factorial(a)
        if g.is_zero():
            continue
        yield alpha, g / scale if scale != 1 else g


def _evaluate(f, values):
    v = f.evaluate(values)
    return v if isinstance(v, PuiseuxPoly) else PuiseuxPoly.const(v, values[0].point)


def residual_bound(f, derivs, order, point):
    sigma = 1 if point == INFINITY else -1
    best = None
    for alpha, g in _taylor_terms(f):
        gv = _evaluate(g, derivs).valuation()
        if gv is None:
            continue
        b = gv + sum(a * (order + sigma * j) for j, a in enumerate(alpha))
        best = b if best is None else min(best, b)
    return best


def verify_truncation(system, trunc, order=None):
    """Verification(ok, residual_valuations, bounds, order) for a PuiseuxTruncation.

    A residual valuation of None means the residual vanishes identically.
    """
    n = order if order is not None else trunc.truncation_order
    n = Fraction(n)
    if trunc.truncation_order < n and not trunc.exact:
        raise ValueError(f"truncation known to order {trunc.truncation_order} < {n}")
    y = trunc.as_poly(n) if not trunc.exact else trunc.as_poly()
    derivs = derivatives(y, system.nvars - 1)
    vals, bounds = [], []
    ok = True
    for f in system.equations:
        r = _evaluate(f, derivs).valuation()
        b = None if trunc.exact else residual_bound(f, derivs, n, trunc.point)
        vals.append(r)
        bounds.append(b)
        if r is not None and (b is None or r <= b):
            ok = False
    return Verification(ok, vals, bounds, n)
