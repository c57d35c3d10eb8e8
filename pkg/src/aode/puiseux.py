"""Formal Puiseux solutions of autonomous systems.

Solutions of the reduced first-order equation H(y, y') = 0 come in three
flavours: a family over generic initial values y0, branches through the
finitely many critical initial values (including y(0) = infinity), and
expansions at x = infinity.  Linear solutions y = alpha x + beta of the
original system are found separately by undetermined coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .chains import triangularize
from .errors import AodeError
from .kernel.algfunc import AlgFunction
from .kernel.factor import factor_poly, univariate_roots
from .kernel.gcd import (as_univariate, content_in, normalize, resultant, squarefree_part,
                         strip_univariate_factors)
from .kernel.numberfield import AlgebraicNumber
from .kernel.poly import Poly
from .kernel.ratfunc import ParamRational
from .newton import expand, local_equation
from .oracle import verify_truncation
from .reduction import invert_poly, reduce_system
from .series import INFINITY, ZERO, PuiseuxPoly, PuiseuxTruncation, SolutionFamily


def default_order(h):
    return max(3, h.total_degree())


def prepare(h):
    """H* : square-free part of H with factors in y alone or y' alone removed."""
    h = h.extend(max(h.nvars, 2))
    h2 = Poly({e[:2]: c for e, c in h.terms.items()}, 2)
    if h2.is_constant():
        return h2
    return strip_univariate_factors(squarefree_part(h2))[0]


# -- critical initial values --------------------------------------------------

def exceptional_polys(h):
    """Univariate polynomials in u0 whose roots are the critical initial values."""
    out = []
    lc = h.lc_in(1)
    if not lc.is_constant():
        out.append(lc)
    if h.degree(1) >= 2:
        disc = resultant(h, h.diff(1), 1)
        if not disc.is_zero() and not disc.is_constant():
            out.append(disc)
    at0 = h.subs(1, 0)
    if not at0.is_zero() and not at0.is_constant():
        out.append(at0)
    return [normalize(squarefree_part(p)) for p in out]


def _value_key(v):
    if isinstance(v, AlgebraicNumber):
        return (v.field.degree, tuple(v.field.minpoly), str(v.field.selector_str()))
    return (1, (Fraction(v),), "")


def critical_values(h):
    prod = Poly.const(1, 2)
    for p in exceptional_polys(h):
        prod = prod * p
    if prod.is_constant():
        return []
    prod = normalize(squarefree_part(prod))
    roots = [r for r, _ in univariate_roots(as_univariate(prod, 0))]
    return sorted(roots, key=_value_key)


# -- branches through a given initial value ----------------------------------

def _wrap(br, point, y0=None, center=Fraction(0)):
    terms = [(Fraction(e), c) for e, c in br.terms]
    if y0 is not None and y0 != 0:
        terms = [(Fraction(0), y0)] + terms
    return PuiseuxTruncation(point, terms, Fraction(br.order), br.unique, dict(br.certificate),
                             br.exact, Fraction(center), tuple(br.params),
                             _field_of(terms), "branch", y0)


def _field_of(terms):
    for _, c in terms:
        if isinstance(c, AlgebraicNumber) and not c.is_rational():
            return c.field
        if isinstance(c, ParamRational):
            for x in c.num + c.den:
                if isinstance(x, AlgebraicNumber) and not x.is_rational():
                    return x.field
    return None


def branches_at(h, y0, order, center=Fraction(0)):
    """Non-constant truncations with y(center) = y0."""
    f = local_equation(h, y0)
    out = []
    for br in expand(f, Fraction(order)):
        if br.terms:
            out.append(_wrap(br, ZERO, y0, center))
    return out


def pole_branches(h, order):
    """Branches with y(0) = infinity, read off from 1/y solving the inverted equation."""
    inv = invert_poly(h, 2)
    if inv.is_constant():
        return []
    # factors in 1/y' alone are kept: 1/y = alpha x + beta is a pole solution
    inv = squarefree_part(inv)
    inv = inv.exquo(content_in(inv, 1)) if inv.degree(1) > 0 else inv
    if inv.is_constant() or inv.degree(1) <= 0:
        return []
    order = Fraction(order)
    out = []
    for br in expand(local_equation(inv, 0), order):
        if not br.terms:
            continue
        mu = br.terms[0][0]
        if not br.exact and br.order - 2 * mu < order:
            wider = [b for b in expand(local_equation(inv, 0), order + 2 * mu)
                     if b.terms[:1] == br.terms[:1]]
            br = wider[0] if wider else br
        out.append(_invert_branch(br, order))
    return out


def _invert_branch(br, order):
    mu, c = br.terms[0]
    known = order if br.exact else min(order, br.order - 2 * mu)
    rel = PuiseuxPoly({e - mu: a / c for e, a in br.terms[1:]})
    acc = PuiseuxPoly.const(1)
    power = PuiseuxPoly.const(1)
    limit = known + mu
    delta = rel.valuation()
    if delta is not None:
        k = 1
        while k * delta <= limit:
            power = (power * -rel).truncate(limit)
            acc = acc + power
            k += 1
    acc = acc.truncate(limit)
    terms = sorted((e - mu, a / c) for e, a in acc.terms.items())
    exact = br.exact and delta is None
    cert = dict(br.certificate)
    cert["inverted"] = True
    return PuiseuxTruncation(ZERO, terms, Fraction(known), br.unique, cert, exact,
                             Fraction(0), tuple(br.params), _field_of(terms), "pole",
                             "infinity")


def puiseux_solve_infinity(h, order):
    """Truncations at x = infinity; exponents are stored in t = 1/x."""
    h = prepare(h)
    if h.is_constant():
        return []
    out = []
    for br in expand(local_equation(h, at_infinity=True), Fraction(order), lb=None):
        if not br.terms or all(e == 0 for e, _ in br.terms):
            continue
        out.append(_wrap(br, INFINITY))
    return out


# -- generic families ---------------------------------------------------------

def _b_coefficients(g, order):
    """(N_k, e_k) with y^(k) = N_k / G_{u1}^e_k along G = 0, for k = 2..order."""
    s = g.diff(1)
    u1 = Poly.var(1, 2)
    b2 = (-g.diff(0) * u1, 1)
    out = [b2]
    n2 = b2[0]
    for _ in range(3, order + 1):
        n, e = out[-1]
        du0 = n.diff(0) * s - n * s.diff(0) * e
        du1 = n.diff(1) * s - n * s.diff(1) * e
        out.append((u1 * s * du0 + n2 * du1, e + 2))
    return out


def family_for_factor(g, order):
    order = int(order)
    g = normalize(g)
    constraints = exceptional_polys(g)
    if g.degree(1) == 1:
        y0 = ParamRational.param("y0")
        a, b = g.coeff_in(1, 1), g.coeff_in(1, 0)
        c = -_eval(b, y0, 0) / _eval(a, y0, 0)
        rational = True
    else:
        y0, c = AlgFunction.generators(g)
        rational = False
    s = g.diff(1)
    terms = [(Fraction(0), y0), (Fraction(1), c)]
    for k, (n, e) in enumerate(_b_coefficients(g, order), start=2):
        val = _eval(n, y0, c) / (_eval(s, y0, c) ** e * factorial(k))
        terms.append((Fraction(k), val))
    terms = [(ex, v) for ex, v in terms if v != 0 or ex == 0]
    return SolutionFamily(g, constraints, terms, order, rational,
                          certificate={"separant": s, "reason": "G_{y'}(y0, c) != 0"})


def _eval(p, y0, c):
    v = p.evaluate([y0, c])
    return v


def solution_families(h, order):
    h = prepare(h)
    if h.is_constant():
        return []
    out = []
    for g, _ in factor_poly(h).factors:
        if g.degree(1) >= 1 and g.degree(0) >= 0:
            out.append(family_for_factor(g, order))
    return out


def specialize_family(fam, y0):
    """Concrete truncations obtained by fixing the initial value (one per slope root)."""
    if any(as_univariate(p, 0) and _upoly_eval(p, y0) == 0 for p in fam.constraints):
        raise ValueError("initial value violates the family constraints")
    if fam.slope_rational:
        terms = [(e, v.evaluate(y0) if isinstance(v, ParamRational) else v) for e, v in fam.terms]
        return [PuiseuxTruncation(ZERO, _nonzero(terms), Fraction(fam.truncation_order), True,
                                  dict(fam.certificate), False, Fraction(0), (), None,
                                  "branch", y0)]
    slope = [fam.factor.coeff_in(1, k).evaluate([y0, 0]) for k in range(fam.factor.degree(1) + 1)]
    out = []
    for c, _ in univariate_roots(slope):
        terms = [(e, v.evaluate(y0, c)) for e, v in fam.terms]
        out.append(PuiseuxTruncation(ZERO, _nonzero(terms), Fraction(fam.truncation_order), True,
                                     dict(fam.certificate), False, Fraction(0), (),
                                     _field_of(terms), "branch", y0))
    return out


def _upoly_eval(p, x):
    return p.evaluate([x, 0])


def _nonzero(terms):
    return [(e, v) for e, v in terms if v != 0]


def family_truncation(fam):
    """The family as a parametric truncation (for verification)."""
    return PuiseuxTruncation(ZERO, fam.terms, Fraction(fam.truncation_order), True,
                             dict(fam.certificate), False, Fraction(0), ("y0",), None, "family")


@dataclass
class PuiseuxSolutions:
    families: list
    critical: list
    poles: list
    unresolved: list = field(default_factory=list)

    def __iter__(self):
        yield self.families
        yield self.critical + self.poles


def puiseux_solve(h, order):
    """Families over generic y0, branches at critical y0 and branches with y(0) = infinity."""
    h = prepare(h)
    if h.is_constant():
        return PuiseuxSolutions([], [], [])
    unresolved = []
    critical = []
    for y0 in critical_values(h):
        try:
            critical.extend(branches_at(h, y0, order))
        except AodeError as exc:
            unresolved.append((y0, str(exc)))
    try:
        poles = pole_branches(h, order)
    except AodeError as exc:
        poles = []
        unresolved.append(("infinity", str(exc)))
    return PuiseuxSolutions(solution_families(h, order), critical, poles, unresolved)


# -- linear solutions ---------------------------------------------------------

@dataclass
class LinearSolution:
    alpha: object
    beta: object = "free"

    def truncation(self):
        beta = ParamRational.param("c") if self.beta == "free" else self.beta
        alpha = ParamRational.param("a") if self.alpha == "free" else self.alpha
        terms = [(Fraction(0), beta), (Fraction(1), alpha)]
        return PuiseuxTruncation(ZERO, [(e, v) for e, v in terms if v != 0], Fraction(1), True,
                                 {"reason": "linear"}, True, Fraction(0),
                                 tuple(n for n, v in (("a", self.alpha), ("c", self.beta))
                                       if v == "free"), _field_of(terms), "linear")


def _linear_conditions(system):
    """Coefficients of x^k after substituting y = alpha x + beta, as polynomials in (alpha, beta)."""
    n = system.nvars
    alpha, beta, x = (Poly.var(i, 3) for i in range(3))
    values = [alpha * x + beta, alpha] + [Poly.const(0, 3)] * (n - 2)
    conds = []
    for f in system.equations:
        sub = f.compose(values, 3)
        for k, coeff in sub.coeffs_in(2).items():
            p = Poly({e[:2]: c for e, c in coeff.terms.items()}, 2)
            if not p.is_zero():
                conds.append(p)
    return conds


def linear_solutions(system):
    """Non-constant solutions y = alpha x + beta; beta is free by autonomy."""
    conds = _linear_conditions(system)
    if not conds:
        return [LinearSolution("free", "free")]
    if any(p.is_constant() for p in conds):
        return []
    alphas = []
    free_alpha = False
    for chain in triangularize(conds, 2):
        first = chain[0]
        if first.lv() != 0:
            free_alpha = True
            continue
        for r, _ in univariate_roots(as_univariate(first, 0)):
            if r != 0 and r not in alphas:
                alphas.append(r)
    out = []
    if free_alpha and _holds(system, ParamRational.param("a")):
        return [LinearSolution("free", "free")]
    for a in sorted(alphas, key=_value_key):
        if _holds(system, a):
            out.append(LinearSolution(a))
    return out


def _holds(system, alpha):
    beta = ParamRational.param("c") if not isinstance(alpha, ParamRational) else 0
    t = PuiseuxTruncation(ZERO, [(Fraction(0), beta), (Fraction(1), alpha)], Fraction(1), True,
                          exact=True)
    return verify_truncation(system, t).ok


# -- the whole pipeline -------------------------------------------------------

@dataclass
class SolutionSet:
    reduced: object
    H_star: Poly
    order: Fraction
    families: list = field(default_factory=list)
    critical: list = field(default_factory=list)
    poles: list = field(default_factory=list)
    infinity: list = field(default_factory=list)
    linear: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def truncations(self):
        return self.critical + self.poles + self.infinity

    def is_empty(self):
        return not (self.families or self.critical or self.poles or self.infinity or self.linear)


def _dedupe(truncs):
    seen, out = set(), []
    for t in truncs:
        k = t.key()
        if k not in seen:
            seen.add(k)
            out.append(t)
    return out


def puiseux_solve_system(system, order=None, at_infinity=False, reduced=None):
    """Reduce, solve the reduced equation, add linear solutions and verify everything."""
    red = reduced if reduced is not None else reduce_system(system)
    h = prepare(red.H)
    order = Fraction(order if order is not None else default_order(h))
    sols = SolutionSet(red, h, order)
    if not h.is_constant():
        res = puiseux_solve(h, order)
        sols.families = res.families
        sols.critical = _dedupe(res.critical)
        sols.poles = _dedupe(res.poles)
        sols.unresolved = res.unresolved
        if at_infinity:
            sols.infinity = _dedupe(puiseux_solve_infinity(h, order))
    sols.linear = linear_solutions(system)
    for i, fam in enumerate(sols.families):
        sols.checks[("family", i)] = verify_truncation(system, family_truncation(fam))
    for name in ("critical", "poles", "infinity"):
        for i, t in enumerate(getattr(sols, name)):
            sols.checks[(name, i)] = verify_truncation(system, t)
    for i, lin in enumerate(sols.linear):
        sols.checks[("linear", i)] = verify_truncation(system, lin.truncation())
    return sols


def solve_at_point(system, x0, y0, order=None, reduced=None):
    """Truncations with y(x0) = y0, in powers of x - x0 (autonomy shifts the origin)."""
    red = reduced if reduced is not None else reduce_system(system)
    h = prepare(red.H)
    order = Fraction(order if order is not None else default_order(h))
    if h.is_constant():
        return []
    out = []
    for t in branches_at(h, y0, order, center=Fraction(x0)):
        t.certificate["verified"] = verify_truncation(system, t).ok
        out.append(t)
    return out
