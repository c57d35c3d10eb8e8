"""Triangular decomposition into regular chains.

A chain is a list of polynomials with strictly increasing leading
variables.  ``triangularize`` follows the characteristic-set method:
compute a Ritt-reduced characteristic set, split on its initials, split on
factors of elements in at most two variables, and split further whenever an
initial is a zero divisor modulo the lower part of the chain.  The union of
the quasi-components V(C) \\ V(prod init C) of the output equals V(input).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimit
from .kernel.factor import factor_poly
from .kernel.gcd import normalize, pquo, prem, resultant, squarefree_part, subresultant, poly_gcd
from .kernel.poly import Poly

MAX_BRANCHES = 2000


class DecompositionLimit(ResourceLimit):
    pass


def leading_data(f):
    """(lv, lc, init) of a non-constant polynomial."""
    return f.leading_data()


@dataclass(frozen=True)
class RegularChain:
    polys: tuple
    nvars: int
    initials: tuple = field(init=False)
    pinit: Poly = field(init=False)

    def __post_init__(self):
        inits = tuple(p.lc_in(p.lv()) for p in self.polys)
        object.__setattr__(self, "initials", inits)
        prod = Poly.const(1, self.nvars)
        for i in inits:
            prod = prod * i
        object.__setattr__(self, "pinit", prod)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def lv_pattern(self):
        return tuple(p.lv() for p in self.polys)

    def dimension(self, ambient=None):
        return chain_dimension(self, ambient if ambient is not None else self.nvars)

    def sort_key(self):
        return (self.lv_pattern, tuple(p.sort_key() for p in self.polys))

    def format(self, names=None):
        return "{" + ", ".join(p.format(names) for p in self.polys) + "}"


def chain_dimension(chain, ambient_vars):
    """Dimension of the quasi-component: number of variables minus chain length."""
    return ambient_vars - len(chain)


def is_triangular(polys):
    lvs = [p.lv() for p in polys]
    return all(v >= 0 for v in lvs) and all(a < b for a, b in zip(lvs, lvs[1:]))


def res_against_chain(f, chain):
    """Iterated resultant Res(f, T), eliminating from the highest leading variable down."""
    polys = list(chain)
    r = f
    for t in reversed(polys):
        if r.is_zero():
            return r
        r = resultant(r, t, t.lv())
    return r


def is_regular_chain(chain):
    polys = list(chain)
    if not is_triangular(polys):
        return False
    for j, t in enumerate(polys):
        init = t.lc_in(t.lv())
        if res_against_chain(init, polys[:j]).is_zero():
            return False
    return True


def reduce_by_chain(f, chain):
    """Successive pseudo-remainder of f by the chain, highest element first."""
    r = f
    for t in reversed(list(chain)):
        if r.is_zero():
            break
        v = t.lv()
        if r.degree(v) >= t.degree(v):
            r = prem(r, t, v)
    return r


# -- characteristic sets -------------------------------------------------

def _rank(p):
    v = p.lv()
    return (v, p.degree(v) if v >= 0 else 0, p.total_degree(), len(p.terms), p.sort_key())


def _reduced(p, basic):
    return all(p.degree(b.lv()) < b.degree(b.lv()) for b in basic)


def basic_set(polys):
    basic = []
    pool = sorted(polys, key=_rank)
    while True:
        last = basic[-1].lv() if basic else -1
        cand = [p for p in pool if p.lv() > last and _reduced(p, basic)]
        if not cand:
            return basic
        basic.append(cand[0])


def _clean(p):
    if p.is_zero() or p.is_constant():
        return p
    return normalize(squarefree_part(p))


def characteristic_set(polys):
    """Ritt-reduced characteristic set, or None if the system is inconsistent."""
    source = set()
    for p in polys:
        if p.is_zero():
            continue
        if p.is_constant():
            return None
        source.add(_clean(p))
    # each round works on input | basic set | fresh remainders
    pool = set(source)
    while True:
        basic = basic_set(pool)
        if not basic:
            return []
        if basic[0].is_constant():
            return None
        new = set()
        for p in pool:
            if p in basic:
                continue
            r = reduce_by_chain(p, basic)
            if r.is_zero():
                continue
            if r.is_constant():
                return None
            r = _clean(r)
            if r not in pool:
                new.add(r)
        if not new:
            return basic
        pool = source | set(basic) | new


# -- regularization ----------------------------------------------------------

def _top_index(p, chain):
    for i in range(len(chain) - 1, -1, -1):
        if p.degree(chain[i].lv()) > 0:
            return i
    return -1


def _regularize(p, chain):
    """None if p is regular modulo the chain, else a list of splitting polynomials.

    Every returned polynomial X yields a branch P + C + {X}; together these
    branches cover the quasi-component of the chain.
    """
    if p.is_constant():
        return None
    i = _top_index(p, chain)
    if i < 0:
        return None
    t = chain[i]
    x = t.lv()
    lower = chain[:i]
    r = resultant(p, t, x)
    if r.is_zero():
        g = poly_gcd(p, t)
        h = t.exquo(g)
        return [g, h] if not h.is_constant() else _subres_split(p, t, x, lower)
    red = reduce_by_chain(r, lower)
    if not red.is_zero():
        if lower and res_against_chain(red, lower).is_zero():
            return _regularize(red, lower)
        return None
    return _subres_split(p, t, x, lower)


def _subres_split(p, t, x, lower):
    dp = p.degree(x)
    for k in range(1, dp + 1):
        if k == dp:
            s_poly, s_lead = p, p.lc_in(x)
        else:
            s_poly, s_lead = subresultant(t, p, x, k)
        if reduce_by_chain(s_poly, lower).is_zero():
            continue
        if reduce_by_chain(s_lead, lower).is_zero():
            continue
        out = [s_poly, pquo(t, s_poly, x)]
        if not s_lead.is_constant():
            out.append(s_lead)
        return [normalize(q) for q in out if not q.is_constant()]
    return None


# -- decomposition -----------------------------------------------------------

def _factor_split(chain):
    for t in chain:
        if len(t.used_vars()) <= 2:
            facs = factor_poly(t).factors
            if len(facs) > 1:
                return [f for f, _ in facs]
    return None


def triangularize(system, nvars=None, keep_redundant=False):
    """Regular chains whose quasi-components cover V(system); [] if no solutions."""
    polys = [p for p in system if not p.is_zero()]
    if not polys:
        raise ValueError("empty system")
    n = nvars or max(p.nvars for p in polys)
    polys = [p.extend(n) for p in polys]
    stack = [frozenset(_clean(p) if not p.is_constant() else p for p in polys)]
    seen = set()
    found = []
    steps = 0
    while stack:
        sys_ = stack.pop()
        if sys_ in seen:
            continue
        seen.add(sys_)
        steps += 1
        if steps > MAX_BRANCHES:
            raise DecompositionLimit("triangular decomposition exceeded the branch limit")
        cs = characteristic_set(sys_)
        if cs is None:
            continue
        if not cs:
            raise ValueError("system has no non-trivial equation")
        base = set(sys_) | set(cs)
        facs = _factor_split(cs)
        if facs is not None:
            for f in reversed(facs):
                stack.append(frozenset(base | {f}))
            continue
        pending = []
        for t in cs:
            init = t.lc_in(t.lv())
            if not init.is_constant():
                pending.append(frozenset(base | {_clean(init)}))
        split = None
        for j, t in enumerate(cs):
            init = t.lc_in(t.lv())
            split = _regularize(init, cs[:j])
            if split is not None:
                break
        if split is not None:
            pending.extend(frozenset(base | {_clean(q)}) for q in split)
        else:
            found.append(RegularChain(tuple(cs), n))
        stack.extend(reversed(pending))
    chains = sorted(set(found), key=lambda c: c.sort_key())
    if not keep_redundant:
        chains = remove_redundant(chains)
    return chains


def _nonvanishing_on(r, chain):
    """True if every factor of r divides the product of initials of the chain."""
    if r.is_zero():
        return False
    r = squarefree_part(r) if not r.is_constant() else r
    pinit = chain.pinit
    while not r.is_constant():
        g = poly_gcd(r, pinit)
        if g.is_constant():
            return False
        r = r.exquo(g)
    return True


def _contained(small, big):
    """Sufficient test for W(small) being a subset of W(big)."""
    for t in big:
        if not reduce_by_chain(t, small).is_zero():
            return False
    for init in big.initials:
        if init.is_constant():
            continue
        if not _nonvanishing_on(reduce_by_chain(init, small), small):
            return False
    return True


def remove_redundant(chains):
    keep = list(chains)
    changed = True
    while changed:
        changed = False
        for c in keep:
            if any(d is not c and _contained(c, d) and not (_contained(d, c) and
                                                            keep.index(d) > keep.index(c))
                   for d in keep):
                keep.remove(c)
                changed = True
                break
    return keep
