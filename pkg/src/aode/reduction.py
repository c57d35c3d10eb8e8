"""From a dimension-one autonomous system to its reduced first-order equation.

Each regular chain G_1(u0, u1), G_2, ..., G_m of the decomposition is
processed as follows.  G_1 is made square-free and stripped of factors in
u0 alone or u1 alone.  Differentiating G_1 = 0 gives u_j as a rational
function B_j(u0, u1) whose denominator is a power of the separant
dG_1/du1.  H_j is the numerator of G_j(u0, u1, B_2, ..., B_j), the chain
contributes gcd(H_1, ..., H_m), and the reduced equation is the lcm of the
chain contributions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .chains import RegularChain, chain_dimension, triangularize
from .errors import DimensionError, TrivialSystem
from .kernel.factor import univariate_roots
from .kernel.gcd import (as_univariate, normalize, poly_gcd, poly_gcd_list, poly_lcm,
                         squarefree_part, strip_univariate_factors)
from .kernel.poly import Poly
from .system import DiffSystem


class InvariantError(AssertionError):
    pass


def total_derivative(f, nvars=None):
    """Sum over i of df/du_i * u_{i+1}."""
    n = nvars or f.nvars + 1
    f = f.extend(max(n, f.nvars))
    n = f.nvars
    out = Poly.const(0, n)
    for i in range(n):
        if f.degree(i) > 0:
            if i + 1 >= n:
                raise ValueError("not enough variables for the derivative")
            out = out + f.diff(i) * Poly.var(i + 1, n)
    return out


def ritt_split(g1, j):
    """(separant, R) with the (j-1)-th total derivative of g1 equal to separant*u_j + R."""
    if g1.degree(1) <= 0:
        raise ValueError("G1 must depend on u1")
    n = max(g1.nvars, j + 1)
    d = g1.extend(n)
    for _ in range(j - 1):
        d = total_derivative(d, n)
    sep = g1.extend(n).diff(1)
    r = d - sep * Poly.var(j, n)
    if r.degree(j) > 0:
        raise InvariantError("derivative is not linear in the top variable")
    return sep, r


@dataclass(frozen=True)
class SepFraction:
    """num / sep**exp, the form of every B_j."""
    num: Poly
    exp: int

    def format(self, sep, names):
        if self.exp == 0:
            return self.num.format(names)
        den = sep.format(names)
        den = f"({den})" if len(sep.terms) > 1 else den
        power = f"^{self.exp}" if self.exp > 1 else ""
        return f"({self.num.format(names)})/{den}{power}"


def substitute_fractions(p, values, sep):
    """p with u_k replaced by values[k] (SepFraction), as a SepFraction."""
    exps = {}
    for e in p.terms:
        need = sum(a * values[k].exp for k, a in enumerate(e) if a and k in values)
        exps[e] = need
    top = max(exps.values(), default=0)
    n = sep.nvars
    out = Poly.const(0, n)
    cache = {}
    for e, c in p.terms.items():
        m = Poly.const(c, n)
        for k, a in enumerate(e):
            if not a:
                continue
            if k in values:
                key = (k, a)
                if key not in cache:
                    cache[key] = values[k].num ** a
                m = m * cache[key]
            else:
                m = m * Poly.var(k, n, a)
        if top - exps[e]:
            m = m * sep ** (top - exps[e])
        out = out + m
    return _cancel(SepFraction(out, top), sep)


def _cancel(fr, sep):
    num, e = fr.num, fr.exp
    if num.is_zero():
        return SepFraction(num, 0)
    while e > 0:
        try:
            num = num.exquo(sep)
        except ArithmeticError:
            break
        e -= 1
    return SepFraction(num, e)


def compute_B(g1, m):
    """[B_2, ..., B_m] as SepFractions over the separant of g1."""
    if m < 2:
        return []
    n = max(g1.nvars, m + 1)
    g1 = g1.extend(n)
    sep = g1.diff(1)
    out = {}
    for j in range(2, m + 1):
        _, r = ritt_split(g1, j)
        rs = substitute_fractions(r.extend(n), out, sep)
        out[j] = _cancel(SepFraction(-rs.num, rs.exp + 1), sep)
    return [out[j] for j in range(2, m + 1)]


def numerator_after_substitution(g, bs, sep):
    """Numerator of g(u0, u1, B_2, ...) with separant factors cancelled."""
    values = {k + 2: b for k, b in enumerate(bs)}
    fr = substitute_fractions(g.extend(sep.nvars), values, sep)
    num = fr.num
    if num.is_zero() or fr.exp == 0:
        return num
    common = poly_gcd(num, sep ** fr.exp)
    return num.exquo(common) if not common.is_constant() else num


@dataclass
class ChainReduction:
    chain: RegularChain
    g1: Poly
    g1_normalized: Poly
    y_factors: Poly
    yprime_factors: Poly
    B: list
    H_list: list
    H_chain: Poly


@dataclass
class ReducedEquation:
    H: Poly
    per_chain: list = field(default_factory=list)
    discarded: list = field(default_factory=list)
    constant_solutions: object = None
    system: DiffSystem = None

    def names(self):
        return self.system.names()[:2] if self.system else ["y", "y'"]


def normalize_g1(g1):
    """(G1*, y_factors, yprime_factors) for the first chain element."""
    sq = squarefree_part(g1)
    stripped, yf, ypf = strip_univariate_factors(sq)
    return stripped, yf, ypf, sq


def chain_reduced_equation(chain, g1_normalized=None):
    """ChainReduction for a chain with leading variables u1, ..., u_m."""
    polys = list(chain)
    n = polys[0].nvars
    g1 = polys[0]
    stripped, yf, ypf, sq = normalize_g1(g1)
    if g1_normalized is not None:
        stripped = g1_normalized
    base = stripped if not stripped.is_constant() else sq
    m = len(polys)
    bs = compute_B(base.extend(max(n, m + 1)), m)
    sep = base.extend(max(n, m + 1)).diff(1)
    hs = [normalize(base.extend(sep.nvars))]
    for j in range(1, m):
        hs.append(normalize(numerator_after_substitution(polys[j], bs[:j], sep)))
    if stripped.is_constant():
        h_chain = Poly.const(1, n)
    elif m == 1:
        h_chain = normalize(stripped)
    else:
        h_chain = poly_gcd_list(hs)
        if h_chain.is_zero():
            h_chain = normalize(stripped)
    return ChainReduction(RegularChain(tuple(polys), n) if not isinstance(chain, RegularChain)
                          else chain, g1, normalize(stripped), yf, ypf, bs,
                          [h.extend(n) for h in hs], h_chain.extend(max(n, h_chain.nvars)))


def constant_solutions(system):
    """Roots c with y = c a solution; 'all' if every constant works."""
    n = system.nvars
    g = None
    for p in system.equations:
        q = p
        for i in range(1, n):
            q = q.subs(i, 0)
        g = q if g is None else poly_gcd(g, q)
    if g is None or g.is_zero():
        return "all"
    if g.is_constant():
        return []
    return [r for r, _ in univariate_roots(as_univariate(g, 0))]


def reduce_system(system, keep_redundant=False):
    """ReducedEquation of a DiffSystem (raises DimensionError, TrivialSystem)."""
    n = system.nvars
    m = system.order
    chains = triangularize(list(system.equations), n, keep_redundant=keep_redundant)
    per_chain = []
    discarded = []
    for c in chains:
        dim = chain_dimension(c, n)
        if dim >= 2:
            raise DimensionError(
                f"component {c.format(system.names())} has dimension {dim}; "
                "only dimension-one systems are supported")
        if dim <= 0:
            discarded.append((c, "dimension zero: constant solutions only"))
            continue
        if c.lv_pattern[0] == 0:
            discarded.append((c, "starts with an algebraic equation in y"))
            continue
        if c.lv_pattern != tuple(range(1, m + 1)):
            raise InvariantError(f"unexpected leading-variable pattern {c.lv_pattern}")
        per_chain.append(chain_reduced_equation(c))
    consts = constant_solutions(system)
    if not per_chain:
        raise TrivialSystem("every component is discarded; only constant solutions exist")
    h = Poly.const(1, n)
    for cr in per_chain:
        h = poly_lcm(h, cr.H_chain)
    h = normalize(h)
    return ReducedEquation(h, per_chain, discarded, consts, system)


def invert_poly(g, nvars=None):
    """Numerator of g evaluated at y = 1/u0 and its derivatives, u0-power stripped."""
    n = nvars or g.nvars
    g = g.extend(n)
    top = max(g.lv(), 0)
    nn = max(n, top + 2)
    u0, u1 = Poly.var(0, nn), Poly.var(1, nn)
    nums = [Poly.const(1, nn)]
    exps = [1]
    for j in range(1, top + 1):
        prev, e = nums[-1], exps[-1]
        nums.append(total_derivative(prev, nn) * u0 - prev * u1 * e)
        exps.append(e + 1)
    values = {}
    big = 0
    for e in g.terms:
        big = max(big, sum(a * exps[k] for k, a in enumerate(e) if a))
    out = Poly.const(0, nn)
    for e, c in g.terms.items():
        term = Poly.const(c, nn)
        w = 0
        for k, a in enumerate(e):
            if a:
                key = (k, a)
                if key not in values:
                    values[key] = nums[k] ** a
                term = term * values[key]
                w += a * exps[k]
        out = out + term * u0 ** (big - w)
    while not out.is_zero() and all(e[0] > 0 for e in out.terms):
        out = out.exquo(u0)
    return normalize(out).extend(nn) if nn == n else normalize(out)


def invert_system(system):
    """The system satisfied by 1/y, each equation replaced by its normalized numerator."""
    eqs = [invert_poly(p, system.nvars).extend(system.nvars) for p in system.equations]
    return DiffSystem(tuple(eqs), system.order, system.var)
