"""Newton-polygon recursion for autonomous first-order equations.

The local problem is F(x; z, w) = 0 where w stands for dz/dx and z is a
Puiseux series whose exponents exceed a lower bound.  F is a dict mapping
(k, i, j) to the coefficient of x^k z^i w^j, with k rational.  Under the
ansatz z = c x^mu the monomial has valuation (k - j) + (i + j) mu, so it is
plotted at the point (p, q) = (k - j, i + j).

Once the linear part dominates (the "regular stage") each further
coefficient is fixed by the indicial function L(nu) = a_z + a_w nu; its
rational roots are the only exponents where a free constant can enter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import AodeError
from .kernel import upoly
from .kernel.factor import factor_univariate, univariate_roots
from .kernel.numberfield import AlgebraicNumber
from .kernel.ratfunc import ParamRational

MAX_DEPTH = 32
PARAM_NAMES = ("c", "d")


class BranchError(AodeError):
    """A branch left the supported arithmetic (for example two free constants)."""


@dataclass
class NewtonStep:
    mu: Fraction
    char_poly: list
    roots: list
    indicial: object = None
    free: bool = False


@dataclass
class LocalBranch:
    terms: list
    order: Fraction
    exact: bool
    unique: bool
    certificate: dict = field(default_factory=dict)
    params: tuple = ()


def local_equation(h, y0=0, at_infinity=False):
    """F(x; z, w) for H(y0 + z, z') at a finite point, or H(z, -t^2 z_t) at infinity."""
    out = {}
    for e, a in h.terms.items():
        i, j = e[0], e[1] if len(e) > 1 else 0
        if at_infinity:
            _acc(out, (Fraction(2 * j), i, j), a * (-1) ** j)
            continue
        for i1 in range(i + 1):
            coef = a * comb(i, i1)
            if i - i1:
                coef = coef * y0 ** (i - i1)
            _acc(out, (Fraction(0), i1, j), coef)
    return {k: v for k, v in out.items() if v != 0}


def _acc(d, key, val):
    if val == 0:
        return
    s = d.get(key, 0) + val
    if s == 0:
        d.pop(key, None)
    else:
        d[key] = s


def substitute(F, c, mu):
    """F with z -> c x^mu + z and w -> c mu x^(mu - 1) + w."""
    out = {}
    cmu = c * mu
    for (k, i, j), a in F.items():
        for i1 in range(i + 1):
            ci = a * comb(i, i1) * c ** (i - i1) if i - i1 else a
            for j1 in range(j + 1):
                dj = j - j1
                if dj and mu == 0:
                    continue
                coef = ci * comb(j, j1) * cmu ** dj if dj else ci
                _acc(out, (k + mu * (i - i1) + (mu - 1) * dj, i1, j1), coef)
    return out


def points(F):
    pts = {}
    for (k, i, j), a in F.items():
        pts.setdefault((k - j, i + j), []).append((j, a))
    return pts


def _vertex_coeffs(terms):
    cs = {}
    for j, a in terms:
        cs[j] = cs.get(j, 0) + a
    top = max(cs)
    return upoly.trim([cs.get(j, 0) for j in range(top + 1)])


def _vertex_value(terms, mu):
    return sum((a * mu ** j for j, a in terms), 0)


def _qvectors(coeffs):
    """Rational coordinate polynomials whose common roots are the rational roots."""
    if all(isinstance(c, (int, Fraction)) for c in coeffs):
        return [[Fraction(c) for c in coeffs]]
    if any(isinstance(c, ParamRational) for c in coeffs):
        return None
    dim = max(c.field.degree for c in coeffs if isinstance(c, AlgebraicNumber))
    out = []
    for b in range(dim):
        row = []
        for c in coeffs:
            if isinstance(c, AlgebraicNumber):
                row.append(c.coords[b] if b < len(c.coords) else Fraction(0))
            else:
                row.append(Fraction(c) if b == 0 else Fraction(0))
        out.append(row)
    return out


def rational_roots(coeffs):
    """Rational roots of a univariate polynomial with coefficients in Q or Q(a)."""
    coeffs = upoly.trim(list(coeffs))
    if len(coeffs) < 2:
        return []
    vecs = _qvectors(coeffs)
    if vecs is None:
        return []
    g = []
    for v in vecs:
        v = upoly.trim(v)
        if v:
            g = v if not g else upoly.gcd(g, v)
    if len(g) < 2:
        return []
    _, facs = factor_univariate(g)
    return sorted(Fraction(-f[0], f[1]) for f, _ in facs if len(f) == 2)


def newton_step(F, lb=Fraction(0)):
    """Admissible exponents mu > lb with characteristic polynomials and roots."""
    pts = points(F)
    keys = sorted(pts)
    mus = set()
    for (p1, q1), (p2, q2) in combinations(keys, 2):
        if q1 != q2:
            mu = Fraction(p1 - p2, q2 - q1)
            if lb is None or mu > lb:
                mus.add(mu)
    for key in keys:
        if key[1] >= 1:
            for mu in rational_roots(_vertex_coeffs(pts[key])):
                if lb is None or mu > lb:
                    mus.add(mu)
    steps = []
    for mu in sorted(mus):
        vals = {key: key[0] + key[1] * mu for key in keys}
        m = min(vals.values())
        active = [key for key in keys if vals[key] == m]
        phi = [0] * (max(q for _, q in active) + 1)
        for key in active:
            phi[key[1]] = phi[key[1]] + _vertex_value(pts[key], mu)
        phi = upoly.trim(phi)
        if not phi:
            steps.append(NewtonStep(mu, [], [], free=True))
            continue
        low = next(i for i, c in enumerate(phi) if c != 0)
        nz = phi[low:]
        if len(nz) < 2:
            continue
        if any(isinstance(c, ParamRational) and not c.is_constant() for c in nz):
            raise BranchError("characteristic polynomial depends on a free constant")
        nz = [c.constant_value() if isinstance(c, ParamRational) else c for c in nz]
        roots = univariate_roots(nz)
        steps.append(NewtonStep(mu, phi, roots))
    return steps


def regular_data(F, lb):
    """(s, a_z, a_w) when the linear part governs every exponent above lb, else None."""
    if lb is None:
        return None
    lin = [k - j for (k, i, j) in F if i + j == 1]
    if not lin:
        return None
    s = min(lin)
    for (k, i, j) in F:
        q = i + j
        if q >= 2 and (k - j) + (q - 1) * lb < s:
            return None
    return s, F.get((s, 1, 0), 0), F.get((s + 1, 0, 1), 0)


def indicial_root(a_z, a_w):
    """Rational root of L(nu) = a_z + a_w nu, or None."""
    if a_w == 0:
        return None
    r = -a_z / a_w if not isinstance(a_z, int) or not isinstance(a_w, int) else Fraction(-a_z, a_w)
    if isinstance(r, ParamRational):
        if not r.is_constant():
            return None
        r = r.constant_value()
    if isinstance(r, AlgebraicNumber):
        if not r.is_rational():
            return None
        r = r.to_rational()
    return Fraction(r)


def _prune(F, bound, lb):
    out = {}
    for (k, i, j), a in F.items():
        q = i + j
        v = k if q == 0 else (k - j) + q * lb
        if v <= bound:
            out[(k, i, j)] = a
    return out


def _free_param(params):
    if len(params) >= 1:
        raise BranchError("a second free constant would be needed")
    return ParamRational.param(PARAM_NAMES[len(params)]), params + (PARAM_NAMES[len(params)],)


def _regular(F, terms, lb, target, reg, params):
    s, a_z, a_w = reg
    root = indicial_root(a_z, a_w)
    pending = [root] if root is not None and root > lb else []
    goal = max([target] + pending)
    cert = {"s": s, "a_z": a_z, "a_w": a_w, "root": root, "from": lb, "goal": goal}
    terms = list(terms)
    start, full = len(terms), F
    F = _prune(F, s + goal, lb)
    while True:
        f0 = {k: a for (k, i, j), a in F.items() if i == 0 and j == 0}
        e0 = min(f0) if f0 else None
        nu0 = e0 - s if f0 else None
        nstar = pending[0] if pending else None
        if nu0 is None and nstar is None:
            return LocalBranch(terms, goal, _solves(full, terms[start:]), True, cert, params)
        if nu0 is not None and nu0 <= lb:
            return None
        nu = min(v for v in (nu0, nstar) if v is not None)
        if nu > goal:
            return LocalBranch(terms, goal, False, True, cert, params)
        if nstar is not None and nu == nstar:
            pending.pop(0)
            if nu0 == nstar:
                return None
            c, params = _free_param(params)
        else:
            c = -f0[e0] / (a_z + a_w * nu)
        terms.append((nu, c))
        lb = nu
        F = _prune(substitute(F, c, nu), s + goal, lb)


def _solves(F, terms):
    """True if z = sum of terms makes F vanish identically."""
    for mu, c in terms:
        F = substitute(F, c, mu)
    return not any(i == 0 and j == 0 for (_, i, j) in F)


def expand(F, target, lb=Fraction(0), terms=(), depth=0, params=()):
    """Every local branch of F = 0 with exponents above lb, extended to at least target."""
    terms = list(terms)
    reg = regular_data(F, lb)
    if reg is not None:
        br = _regular(F, terms, lb, target, reg, params)
        return [br] if br is not None else []
    out = []
    if depth >= MAX_DEPTH:
        return [LocalBranch(terms, lb, False, False, {"reason": "depth cap"}, params)]
    if terms and not any(i == 0 and j == 0 for (_, i, j) in F):
        out.append(LocalBranch(terms, max(target, lb), True, False, {"reason": "z = 0 solves"},
                               params))
    for step in newton_step(F, lb):
        if step.free:
            c, ps = _free_param(params)
            out += expand(substitute(F, c, step.mu), target, step.mu, terms + [(step.mu, c)],
                          depth + 1, ps)
            continue
        for c, _ in step.roots:
            out += expand(substitute(F, c, step.mu), target, step.mu, terms + [(step.mu, c)],
                          depth + 1, params)
    return out


def step_with_indicial(F, lb=Fraction(0)):
    """newton_step with the indicial function of each simple root attached."""
    steps = newton_step(F, lb)
    for st in steps:
        ind = []
        for c, mult in st.roots:
            reg = regular_data(substitute(F, c, st.mu), st.mu) if mult == 1 else None
            ind.append(None if reg is None else (reg[1], reg[2]))
        st.indicial = ind
    return steps
