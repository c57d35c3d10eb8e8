"""Algebraic and rational solutions.

For an irreducible autonomous first-order equation the non-constant
solutions form one shift family y(x + c), so a single series branch is
enough to find the minimal polynomial G(x, Y) of the family: solve the
linear system sum g_ij x^i y(x)^j = O(x^(N+1)) for the undetermined g_ij
within the degree bounds, then certify the candidate exactly by implicit
differentiation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AodeError
from .kernel import upoly
from .kernel.factor import factor_poly, univariate_roots
from .kernel.gcd import normalize, prem, squarefree_part
from .kernel.linalg import nullspace
from .kernel.numberfield import AlgebraicNumber
from .kernel.poly import Poly
from .puiseux import (branches_at, critical_values, exceptional_polys, linear_solutions,
                      prepare)
from .reduction import reduce_system
from .series import PuiseuxPoly

GUARD = 5
SEARCH = [Fraction(v) for v in (1, -1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 2),
                                                          Fraction(3, 2), Fraction(5), Fraction(1, 3)]


def degree_bounds(h):
    """(bound on deg_x G, bound on deg_Y G) for solutions of H."""
    dx = h.degree(1)
    return dx, h.degree(0) + dx


@dataclass
class AlgebraicSolutionFamily:
    G: Poly
    degree_x: int
    degree_Y: int
    source_factor: Poly
    bounds: tuple
    branch: object = None
    shift: Fraction = Fraction(0)
    checks: dict = field(default_factory=dict)

    def shifted(self, c):
        """G(x + c, Y)."""
        return shift_x(self.G, c)

    def k_form(self):
        """(lam, G) when G(x + c, Y) = G(x, Y) + lam * c, else None."""
        if self.degree_x != 1:
            return None
        a1 = self.G.coeff_in(0, 1)
        if not a1.is_constant():
            return None
        return a1.constant_value(), self.G


@dataclass
class RationalSolution:
    numerator: list
    denominator: list
    degree: int
    family: AlgebraicSolutionFamily = None


def shift_x(g, c):
    x, y = Poly.var(0, 2), Poly.var(1, 2)
    return g.compose([x + c, y], 2)


def _in_y(p):
    """A polynomial in u0 rewritten in the Y slot of (x, Y)."""
    return Poly({(0, e[0]): c for e, c in p.terms.items()}, 2)


def verify_algebraic(g, h):
    """True iff every root function of G(x, Y) solves H(y, y') = 0."""
    g = g.extend(2)
    if g.degree(1) < 1:
        return False
    h = Poly({e[:2]: c for e, c in h.extend(max(h.nvars, 2)).terms.items()}, 2)
    d = h.degree(1)
    gx, gy = g.diff(0), g.diff(1)
    total = Poly.const(0, 2)
    for j in range(d + 1):
        hj = h.coeff_in(1, j)
        if hj.is_zero():
            continue
        total = total + _in_y(hj) * (-gx) ** j * gy ** (d - j)
    return prem(total, g, 1).is_zero()


# -- series reconstruction -----------------------------------------------------

def _is_rational_series(t):
    return all(not isinstance(c, AlgebraicNumber) or c.is_rational() for _, c in t.terms) and \
        not t.parameters


def _candidate_branches(h, order):
    """Branches for reconstruction, rational ones first."""
    bad = exceptional_polys(h)

    def admissible(y0):
        return all(p.evaluate([y0, 0]) != 0 for p in bad)

    seen = []
    for y0 in SEARCH:
        if admissible(y0):
            coeffs = [h.coeff_in(1, k).evaluate([y0, 0]) for k in range(h.degree(1) + 1)]
            if any(isinstance(r, Fraction) and r != 0 for r, _ in univariate_roots(coeffs)):
                seen.append(y0)
    for c in SEARCH:
        coeffs = [h.coeff_in(0, k).evaluate([0, c]) for k in range(h.degree(0) + 1)]
        if len(upoly.trim(coeffs)) < 2:
            continue
        for r, _ in univariate_roots(coeffs):
            if isinstance(r, Fraction) and admissible(r) and r not in seen:
                seen.append(r)
    rational, other = [], []
    hits = 0
    for y0 in seen[:6]:
        found = False
        for t in branches_at(h, y0, order):
            if _is_rational_series(t):
                rational.append(t)
                found = True
            else:
                other.append(t)
        hits += found
        if hits >= 2:
            break
    if not rational:
        for y0 in critical_values(h):
            try:
                for t in branches_at(h, y0, order):
                    if _is_rational_series(t) and t.terms[0][0] >= 0:
                        rational.append(t)
            except AodeError:
                continue
    if not rational and not other:
        for y0 in SEARCH:
            if admissible(y0):
                other.extend(branches_at(h, y0, order))
                break
    return rational + other


def _powers(y, upto, order):
    out = [PuiseuxPoly.const(1)]
    for _ in range(upto):
        out.append((out[-1] * y).truncate(order))
    return out


def reconstruct(branch, dx, dy, order):
    """Candidate G (columns ordered by Y-degree then x-degree) or None."""
    y = branch.as_poly(order)
    if y.valuation() is not None and y.valuation() < 0:
        return None
    n = y.ramification()
    pw = _powers(y, dy, order)
    cols = [(j, i) for j in range(dy + 1) for i in range(dx + 1)]
    exps = [Fraction(k, n) for k in range(int(order * n) + 1)]
    rows = []
    for e in exps:
        rows.append([pw[j].terms.get(e - i, 0) for j, i in cols])
    basis = nullspace(rows, len(cols))
    if not basis:
        return None
    v = basis[0]
    return Poly({(i, j): c for (j, i), c in zip(cols, v) if c != 0}, 2)


def _annihilates(g, branch, order):
    y = branch.as_poly(order)
    x = PuiseuxPoly({1: 1})
    val = g.evaluate([x, y])
    if not isinstance(val, PuiseuxPoly):
        return val == 0
    return all(e > order for e in val.terms)


def _clean_candidate(g, branch, order):
    g = normalize(g)
    if g.degree(1) < 1:
        return None
    g = normalize(squarefree_part(g))
    if g.is_rational():
        for f, _ in factor_poly(g).factors:
            if f.degree(1) >= 1 and _annihilates(f, branch, order):
                return normalize(f)
        return None
    return g if _annihilates(g, branch, order) else None


def normalize_shift(g):
    """(G(x + s, Y), s) with s chosen to clear one coefficient of x^(dx - 1)."""
    dx = g.degree(0)
    if dx < 1:
        return g, Fraction(0)
    top, nxt = g.coeff_in(0, dx), g.coeff_in(0, dx - 1)
    j = min(e[1] for e in top.terms)
    a = top.terms[(0, j)]
    b = nxt.terms.get((0, j), 0)
    s = -Fraction(b) / (dx * Fraction(a)) if not isinstance(a, AlgebraicNumber) \
        and not isinstance(b, AlgebraicNumber) else -(b / (a * dx))
    if s == 0:
        return g, Fraction(0)
    return normalize(shift_x(g, s)), s


def alg_sol(h, guard=GUARD):
    """AlgebraicSolutionFamily of an irreducible H, or None if it has no algebraic solution."""
    h = h.extend(max(h.nvars, 2))
    h = Poly({e[:2]: c for e, c in h.terms.items()}, 2)
    if h.degree(1) < 1:
        return None
    h = normalize(squarefree_part(h))
    dx, dy = degree_bounds(h)
    order = Fraction((dx + 1) * (dy + 1) + guard)
    branches = _candidate_branches(h, order)
    for br in branches:
        cand = reconstruct(br, dx, dy, order)
        if cand is None:
            continue
        g = _clean_candidate(cand, br, order)
        if g is None or not verify_algebraic(g, h):
            continue
        g0 = g
        g, s = normalize_shift(g)
        if not verify_algebraic(g, h):
            g, s = g0, Fraction(0)
        fam = AlgebraicSolutionFamily(g, g.degree(0), g.degree(1), h, (dx, dy), br, s)
        fam.checks["verified"] = True
        fam.checks["within_bounds"] = fam.degree_x <= dx and fam.degree_Y <= dy
        fam.checks["second_branch"] = _cross_check(fam, branches, br, order)
        return fam
    return None


def _cross_check(fam, branches, used, order):
    """Does a second rational branch lie on a shift of the same curve?"""
    for br in branches:
        if br is used or not _is_rational_series(br) or br.terms[0][0] != 0:
            continue
        y0 = br.terms[0][1]
        coeffs = [fam.G.coeff_in(0, k).evaluate([0, y0]) for k in range(fam.degree_x + 1)]
        if len(upoly.trim(coeffs)) < 2:
            continue
        for s, _ in univariate_roots(coeffs):
            if isinstance(s, Fraction) and _annihilates(shift_x(fam.G, s), br, order):
                return True
        return False
    return None


def rational_solution_of(fam):
    if fam.degree_Y != 1:
        return None
    g1 = fam.G.coeff_in(1, 1)
    g0 = fam.G.coeff_in(1, 0)
    num = upoly.trim([-g0.coeff_in(0, k).constant_value() for k in range(max(g0.degree(0), 0) + 1)])
    den = upoly.trim([g1.coeff_in(0, k).constant_value() for k in range(max(g1.degree(0), 0) + 1)])
    common = upoly.gcd(num, den) if num else [1]
    if len(common) > 1:
        num, den = upoly.quo(num, common), upoly.quo(den, common)
    lc = den[-1]
    num = [Fraction(c) / lc if not isinstance(c, AlgebraicNumber) else c / lc for c in num]
    den = [Fraction(c) / lc if not isinstance(c, AlgebraicNumber) else c / lc for c in den]
    degree = max(len(num) - 1, len(den) - 1)
    return RationalSolution(num, den, degree, fam)


# -- systems ---------------------------------------------------------------------

@dataclass
class AlgebraicSolutions:
    reduced: object
    families: list
    no_solution_factors: list = field(default_factory=list)

    @property
    def rational(self):
        return [r for r in (rational_solution_of(f) for f in self.families) if r is not None]


def _linear_family(lin):
    x, y = Poly.var(0, 2), Poly.var(1, 2)
    g = normalize(y - x * lin.alpha)
    return AlgebraicSolutionFamily(g, 1, 1, None, (1, 1), None, Fraction(0),
                                   {"verified": True, "linear": True})


def alg_solution_system(system, reduced=None):
    red = reduced if reduced is not None else reduce_system(system)
    h = prepare(red.H)
    fams, none = [], []
    if not h.is_constant():
        for g, _ in factor_poly(h).factors:
            fam = alg_sol(g)
            if fam is None:
                none.append(g)
            else:
                fams.append(fam)
    for lin in linear_solutions(system):
        if lin.alpha == "free":
            continue
        fam = _linear_family(lin)
        if all(f.G != fam.G for f in fams):
            fams.append(fam)
    return AlgebraicSolutions(red, fams, none)


def rational_solutions(system, reduced=None):
    return alg_solution_system(system, reduced).rational


def rational_residuals(system, num, den, shift=True):
    """Numerators of every equation at y = num(x + c)/den(x + c); all zero for a solution."""
    x, c = Poly.var(0, 2), Poly.var(1, 2)
    arg = x + c if shift else x
    n = _upoly_at(num, arg)
    d = _upoly_at(den, arg)
    m = system.nvars
    ps = [n]
    for k in range(1, m):
        p = ps[-1]
        ps.append(p.diff(0) * d - p * d.diff(0) * k)
    out = []
    for f in system.equations:
        weight = max(sum(a * (k + 1) for k, a in enumerate(e)) for e in f.terms)
        total = Poly.const(0, 2)
        for e, coeff in f.terms.items():
            w = sum(a * (k + 1) for k, a in enumerate(e))
            term = Poly.const(coeff, 2) * d ** (weight - w)
            for k, a in enumerate(e):
                if a:
                    term = term * ps[k] ** a
            total = total + term
        out.append(total)
    return out


def _upoly_at(coeffs, arg):
    acc = Poly.const(0, 2)
    for ck in reversed(list(coeffs)):
        acc = acc * arg + ck
    return acc
