"""Factorization over Q, over simple extensions Q(a), and root finding.

Univariate polynomials over Z are factored by the Zassenhaus method: a
Cantor-Zassenhaus split modulo a small prime, linear Hensel lifting and
subset recombination.  Bivariate polynomials are reduced to the univariate
case by evaluating the second variable at a good integer point and lifting
the factors in Q[X][[Y - a]].  Trager's norm method handles Q(a).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .. import _ext
from ..errors import ExtensionTowerLimit, FactorizationLimit
from . import upoly
from .gcd import (content_in, normalize, poly_gcd, resultant,
                  squarefree_decomposition)
from .numberfield import AlgebraicNumber, NumberField, fields_for_irreducible
from .poly import Poly

MAX_DEGREE = 60
MAX_MODULAR_FACTORS = 18
MAX_TOWER_HEIGHT = 1

_SMALL_PRIMES = [p for p in range(3, 2000) if all(p % q for q in range(2, isqrt(p) + 1))]


@dataclass
class Factorization:
    unit: object
    factors: list = field(default_factory=list)

    def expand(self, nvars=None):
        n = nvars or max((f.nvars for f, _ in self.factors), default=1)
        out = Poly.const(self.unit, n)
        for f, m in self.factors:
            out = out * f.extend(n) ** m
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


# -- modular layer ---------------------------------------------------------

def _ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f over GF(p)."""
    out = []
    h = [0, 1]
    x = [0, 1]
    i = 1
    rest = f
    while len(rest) - 1 >= 2 * i:
        h = _ext.zp_powmod(h, p, rest, p)
        g = _ext.zp_gcd(rest, _ext.zp_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, i))
            rest = _ext.zp_divmod(rest, g, p)[0]
            h = _ext.zp_rem(h, rest, p)
        i += 1
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _edf(g, d, p, rng):
    if len(g) - 1 == d:
        return [g]
    e = (p ** d - 1) // 2
    while True:
        a = _ext.zp_trim([rng.randrange(p) for _ in range(len(g) - 1)])
        if len(a) < 2:
            continue
        b = _ext.zp_sub(_ext.zp_powmod(a, e, g, p), [1], p)
        h = _ext.zp_gcd(g, b, p)
        if 1 < len(h) < len(g):
            return _edf(h, d, p, rng) + _edf(_ext.zp_divmod(g, h, p)[0], d, p, rng)


def factor_mod_p(f, p, seed=0):
    """Monic irreducible factors of a squarefree f over GF(p)."""
    f = _ext.zp_monic(_ext.zp_reduce(f, p), p)
    rng = random.Random(seed)
    out = []
    for g, d in _ddf(f, p):
        out.extend(_edf(g, d, p, rng))
    out.sort()
    return out


def _good_prime(f):
    df = upoly.derivative(f)
    for p in _SMALL_PRIMES:
        if f[-1] % p == 0:
            continue
        fp = _ext.zp_reduce(f, p)
        dp = _ext.zp_reduce(df, p)
        if len(_ext.zp_gcd(fp, dp, p)) == 1:
            return p
    raise FactorizationLimit("no good prime found")


# -- Hensel lifting over Z ---------------------------------------------------

def _mul_mod(a, b, m):
    return upoly.trim([c % m for c in upoly.mul(a, b)])


def _hensel_pair(f, g, h, p, k):
    """Lift f = g*h mod p (g monic) to mod p**k by linear lifting."""
    _, s, t = _xgcd_p(g, h, p)
    # the correction only needs g and h mod p, which lifting leaves unchanged
    g_p, h_p = _ext.zp_reduce(g, p), _ext.zp_reduce(h, p)
    m = p
    for _ in range(k - 1):
        e = upoly.sub(f, upoly.mul(g, h))
        e = [(c // m) % p for c in e]
        e = _ext.zp_trim(e)
        tau = _ext.zp_rem(_ext.zp_mul(t, e, p), g_p, p)
        sigma = _ext.zp_divmod(_ext.zp_sub(e, _ext.zp_mul(tau, h_p, p), p), g_p, p)[0]
        g = upoly.add(g, [c * m for c in tau])
        h = upoly.add(h, [c * m for c in sigma])
        m *= p
    return g, h


def _xgcd_p(a, b, p):
    r0, r1 = _ext.zp_reduce(a, p), _ext.zp_reduce(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _ext.zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _ext.zp_sub(s0, _ext.zp_mul(q, s1, p), p)
        t0, t1 = t1, _ext.zp_sub(t0, _ext.zp_mul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return [1], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _multi_hensel(f, factors, p, k):
    """Lift monic modular factors of f (lc(f) kept on the last cofactor)."""
    lifted = []
    rest = f
    mod = p ** k
    for i, g in enumerate(factors[:-1]):
        others = [1]
        for h in factors[i + 1:]:
            others = _ext.zp_mul(others, h, p)
        lc = rest[-1] % p
        others = [c * lc % p for c in others]
        g_l, h_l = _hensel_pair(rest, g, others, p, k)
        lifted.append([c % mod for c in g_l])
        rest = [c % mod for c in h_l]
    lifted.append(_monic_mod(rest, mod))
    return lifted


def _monic_mod(a, m):
    inv = pow(a[-1], -1, m)
    return [c * inv % m for c in a]


def _symmetric(a, m):
    half = m // 2
    return upoly.trim([c - m if c > half else c for c in a])


def _int_divides(g, f):
    q, r = upoly.divmod_(f, g)
    if r or any(type(c) is not int for c in q):
        return None
    return q


def _mignotte(f):
    n = len(f) - 1
    norm = isqrt(sum(c * c for c in f)) + 1
    return (2 ** n) * norm * abs(f[-1])


def _factor_sqf_int(f):
    """Irreducible factors over Z of a primitive squarefree f (positive lc)."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    if n > MAX_DEGREE:
        raise FactorizationLimit(f"degree {n} exceeds factorization bound {MAX_DEGREE}")
    p = _good_prime(f)
    modular = factor_mod_p(f, p)
    if len(modular) == 1:
        return [f]
    if len(modular) > MAX_MODULAR_FACTORS:
        raise FactorizationLimit(f"{len(modular)} modular factors exceed the recombination bound")
    bound = 2 * _mignotte(f)
    k = 1
    while p ** k <= bound:
        k += 1
    mod = p ** k
    lifted = _multi_hensel(f, modular, p, k)
    out = []
    remaining = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for subset in combinations(remaining, s):
            lc = f[-1]
            cand = [lc % mod]
            for i in subset:
                cand = _mul_mod(cand, lifted[i], mod)
            cand = _symmetric(cand, mod)
            _, cand = upoly.content_int(cand)
            q = _int_divides(cand, f)
            if q is not None:
                out.append(cand)
                f = q
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            s += 1
    out.append(upoly.content_int(f)[1])
    return out


def factor_univariate(coeffs):
    """Factorization of a univariate polynomial over Q given as a coefficient list.

    Returns (unit, [(integer coefficient list, multiplicity), ...]).
    """
    a = upoly.trim([Fraction(c) for c in coeffs])
    if not a:
        raise ValueError("cannot factor zero")
    unit, prim = upoly.content_int(a)
    if len(prim) == 1:
        return unit * prim[0], []
    factors = []
    for part, mult in upoly.squarefree_decomposition(prim):
        _, part = upoly.content_int(part)
        # pull out powers of t first, Zassenhaus needs a nonzero constant term
        shift = 0
        while part and part[0] == 0:
            part = part[1:]
            shift += 1
        if shift:
            factors.append(([0, 1], mult))
        if len(part) > 1:
            for g in _factor_sqf_int(part):
                factors.append((g, mult))
    prod = [1]
    for g, m in factors:
        prod = upoly.mul(prod, upoly.power(g, m))
    unit = Fraction(a[-1]) / Fraction(prod[-1])
    factors.sort(key=lambda gm: (len(gm[0]), gm[0], gm[1]))
    return unit, factors


# -- bivariate over Q -------------------------------------------------------

def factor_poly(f):
    """Irreducible factorization over Q of a polynomial in at most two variables."""
    if f.is_zero():
        raise ValueError("cannot factor zero")
    n = f.nvars
    if not f.is_rational():
        raise ValueError("factorization requires rational coefficients")
    used = f.used_vars()
    if len(used) > 2:
        raise FactorizationLimit("only univariate and bivariate inputs are factored")
    if f.total_degree() > MAX_DEGREE:
        raise FactorizationLimit(f"total degree {f.total_degree()} exceeds bound {MAX_DEGREE}")
    if not used:
        return Factorization(f.constant_value(), [])
    acc = {}
    for part, mult in squarefree_decomposition(f):
        for g in _factor_sqf(part):
            g = normalize(g)
            acc[g] = acc.get(g, 0) + mult
    factors = sorted(acc.items(), key=lambda gm: (gm[0].total_degree(), gm[0].sort_key()))
    prod = Poly.const(1, n)
    for g, m in factors:
        prod = prod * g ** m
    unit = Fraction(f.lead_coeff()) / Fraction(prod.lead_coeff())
    return Factorization(unit if unit.denominator != 1 else unit.numerator, factors)


factor_bivariate = factor_poly


def _univariate_of(p, v):
    return [p.coeff_in(v, k).constant_value() for k in range(p.degree(v) + 1)]


def _from_univariate(coeffs, v, n):
    return Poly({tuple(k if i == v else 0 for i in range(n)): c for k, c in enumerate(coeffs)}, n)


def _factor_sqf(f):
    """Irreducible factors of a primitive squarefree polynomial (<= 2 variables)."""
    n = f.nvars
    used = f.used_vars()
    if len(used) == 1:
        v = used[0]
        _, facs = factor_univariate(_univariate_of(f, v))
        return [_from_univariate(g, v, n) for g, _ in facs]
    x, y = used[1], used[0]
    out = []
    for v_c in (x, y):
        c = content_in(f, v_c)
        if not c.is_constant():
            out.extend(_factor_sqf(c))
            f = f.exquo(c)
    if f.is_constant():
        return out
    used = f.used_vars()
    if len(used) == 1:
        return out + _factor_sqf(f)
    return out + _factor_bivariate_primitive(f, x, y)


def _factor_bivariate_primitive(f, x, y):
    n = f.nvars
    dx = f.degree(x)
    lcx = f.lc_in(x)
    for a in _eval_points():
        if lcx.subs(y, a).is_zero():
            continue
        fa = f.subs(y, a)
        ua = _univariate_of(fa, x)
        if len(upoly.gcd(ua, upoly.derivative(ua))) > 1:
            continue
        break
    _, ufacs = factor_univariate(ua)
    if len(ufacs) <= 1:
        return [f]
    # shift so the lifting point is y = 0
    z = Poly.var(y, n) + a
    fs = f.subs(y, z)
    target = _to_series_poly(fs, x, y)
    lead = target[dx]
    precision = f.degree(y) + lcx.degree(y) + 1
    monic_target = _series_monic(target, lead, dx, precision)
    starts = [upoly.monic([Fraction(c) for c in g]) for g, _ in ufacs]
    lifted = _lift_series(monic_target, starts, precision)
    out = []
    remaining = list(range(len(lifted)))
    current = fs
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for subset in combinations(remaining, s):
            cand = [[Fraction(1)]]
            for i in subset:
                cand = _series_mul(cand, lifted[i], precision)
            cand = _series_scale_by(cand, lead, precision)
            g = _from_series(cand, x, y, n)
            if g.degree(x) <= 0:
                continue
            g = _primitive_in(g, x)
            try:
                q = current.exquo(g)
            except ArithmeticError:
                continue
            out.append(g)
            current = q
            remaining = [i for i in remaining if i not in subset]
            found = True
            break
        if not found:
            s += 1
    out.append(normalize(current))
    back = Poly.var(y, n) - a
    return [normalize(g.subs(y, back)) for g in out if not g.is_constant()]


def _eval_points():
    yield 0
    k = 1
    while k < 200:
        yield k
        yield -k
        k += 1
    raise FactorizationLimit("no good evaluation point")


def _primitive_in(g, x):
    c = content_in(g, x)
    return normalize(g.exquo(c)) if not c.is_constant() else normalize(g)


# Series in Y with polynomial-in-X coefficients: list indexed by Y-degree of
# coefficient lists in X.  _to_series_poly gives the transpose: X-degree ->
# list of Y coefficients, which is what the monic division needs.

def _to_series_poly(f, x, y):
    """X-degree -> list of rational coefficients in Y (lowest first)."""
    out = {}
    for e, c in f.terms.items():
        row = out.setdefault(e[x], [])
        k = e[y]
        while len(row) <= k:
            row.append(Fraction(0))
        row[k] += c
    d = max(out)
    return [out.get(i, []) for i in range(d + 1)]


def _ser_inv(a, prec):
    inv = [Fraction(1) / a[0]]
    for k in range(1, prec):
        s = sum(a[j] * inv[k - j] for j in range(1, min(k, len(a) - 1) + 1))
        inv.append(-s / a[0])
    return inv


def _ser_mul(a, b, prec):
    out = [Fraction(0)] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, yv in enumerate(b[:prec - i]):
                out[i + j] += x * yv
    return out


def _series_monic(target, lead, dx, prec):
    """Y-degree -> X-coefficient list of target / lead as a series in Y."""
    inv = _ser_inv(lead + [Fraction(0)] * prec, prec)
    cols = [_ser_mul(target[i] + [Fraction(0)] * prec, inv, prec) for i in range(dx + 1)]
    return [upoly.trim([cols[i][k] for i in range(dx + 1)]) for k in range(prec)]


def _series_mul(a, b, prec):
    out = [[] for _ in range(prec)]
    for i, p in enumerate(a[:prec]):
        if not p:
            continue
        for j, q in enumerate(b[:prec - i]):
            if q:
                out[i + j] = upoly.add(out[i + j], upoly.mul(p, q))
    return out


def _series_scale_by(a, lead, prec):
    return _series_mul(a, [[c] if c else [] for c in lead], prec)


def _from_series(s, x, y, n):
    t = {}
    for k, p in enumerate(s):
        for i, c in enumerate(p):
            if c:
                e = [0] * n
                e[x], e[y] = i, k
                t[tuple(e)] = c
    return Poly(t, n)


def _lift_series(target, starts, prec):
    """Lift monic factors of target[0] to factors of the monic series target."""
    r = len(starts)
    cof = []
    for i in range(r):
        others = [Fraction(1)]
        for j in range(r):
            if j != i:
                others = upoly.mul(others, starts[j])
        cof.append(others)
    # Bezout weights: sum_i s_i * cof_i = 1 with deg s_i < deg starts_i
    weights = _partial_fraction_weights(starts, cof)
    lifted = [[g] + [[] for _ in range(prec - 1)] for g in starts]
    for k in range(1, prec):
        prod = [[Fraction(1)]] + [[] for _ in range(k)]
        for g in lifted:
            prod = _series_mul(prod, g[:k + 1], k + 1)
        err = upoly.sub(target[k] if k < len(target) else [], prod[k])
        if not err:
            continue
        for i in range(r):
            lifted[i][k] = upoly.rem(upoly.mul(err, weights[i]), starts[i])
    return lifted


def _partial_fraction_weights(starts, cof):
    weights = []
    for i, g in enumerate(starts):
        _, s, _ = upoly.xgcd(cof[i], g)
        weights.append(s)
    return weights


# -- extensions ------------------------------------------------------------

def _as_fraction_coords(c, field_):
    if isinstance(c, AlgebraicNumber):
        return list(c.coords)
    return [Fraction(c)] + [Fraction(0)] * (field_.degree - 1)


def factor_over_field(coeffs, field_):
    """Monic irreducible factors over Q(a) of a squarefree univariate polynomial (Trager)."""
    f = upoly.monic(upoly.trim(list(coeffs)))
    if len(f) <= 2:
        return [f] if len(f) == 2 else []
    if field_ is None or field_.degree == 1:
        _, facs = factor_univariate([Fraction(c) for c in f])
        return [upoly.monic([Fraction(c) for c in g]) for g, _ in facs]
    alpha = field_.gen
    mp = [Fraction(c) for c in field_.minpoly]
    for s in range(0, 40):
        shifted = upoly.compose(f, [-s * alpha, 1]) if s else f
        norm = _norm(shifted, field_, mp)
        if len(upoly.gcd(norm, upoly.derivative(norm))) == 1:
            break
    else:
        raise FactorizationLimit("no squarefree norm found")
    _, nfacs = factor_univariate(norm)
    out = []
    g = shifted
    for nf, _ in nfacs:
        h = upoly.gcd(g, [Fraction(c) for c in nf])
        if len(h) > 1:
            back = upoly.compose(h, [s * alpha, 1]) if s else h
            out.append(upoly.monic(back))
    return out


def _norm(g, field_, mp):
    """Res_y(m(y), g(t, y)) with g's coefficients written as polynomials in y."""
    t = {}
    for i, c in enumerate(g):
        for j, q in enumerate(_as_fraction_coords(c, field_)):
            if q:
                t[(i, j)] = t.get((i, j), 0) + q
    gp = Poly(t, 2)
    m = Poly({(0, j): c for j, c in enumerate(mp)}, 2)
    r = resultant(m, gp, 1)
    return upoly.trim([r.coeff_in(0, k).constant_value() for k in range(r.degree(0) + 1)])


def _coeff_field(coeffs):
    field_ = None
    for c in coeffs:
        if isinstance(c, AlgebraicNumber) and not c.is_rational():
            if field_ is not None and c.field != field_:
                raise ExtensionTowerLimit("coefficients from two different extensions")
            field_ = c.field
    return field_


def univariate_roots(coeffs, field_=None, max_height=None):
    """All roots with multiplicities as a list of (root, multiplicity).

    Roots in Q are Fractions; other roots are AlgebraicNumbers.  When the
    coefficients already live in Q(a), roots outside Q(a) would need a
    second extension and raise ExtensionTowerLimit.
    """
    max_height = MAX_TOWER_HEIGHT if max_height is None else max_height
    a = [_clean(c) for c in upoly.trim(list(coeffs))]
    if not a:
        raise ValueError("roots of the zero polynomial")
    field_ = _coeff_field(a) or (field_ if field_ is not None and field_.degree > 1 else None)
    out = []
    if field_ is None:
        _, facs = factor_univariate(a)
        for g, m in facs:
            if len(g) == 2:
                out.append((Fraction(-g[0], g[1]), m))
            elif max_height < 1:
                raise ExtensionTowerLimit("extension required but tower height is zero")
            else:
                for fld in fields_for_irreducible(g):
                    out.append((fld.gen, m))
        return out
    for part, m in upoly.squarefree_decomposition(a):
        for g in factor_over_field(part, field_):
            if len(g) == 2:
                out.append((_clean(-g[0]), m))
            else:
                raise ExtensionTowerLimit(
                    "a root needs a second algebraic extension (tower height limit)")
    return out


def _clean(c):
    if isinstance(c, AlgebraicNumber) and c.is_rational():
        return c.to_rational()
    return c


__all__ = ["Factorization", "factor_poly", "factor_bivariate", "factor_univariate",
           "factor_mod_p", "factor_over_field", "univariate_roots", "NumberField"]
