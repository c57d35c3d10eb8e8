"""Gcd, pseudo-division, resultants and square-free decomposition for Poly.

Multivariate gcds over Q use the subresultant remainder sequence in the
highest occurring variable with recursive content removal.  Results are
normalised to primitive integer polynomials with a positive lex-leading
coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from . import upoly
from .poly import Poly


def normalize(p):
    """Primitive integer form with positive leading coefficient (monic otherwise)."""
    if p.is_zero():
        return p
    if p.is_rational():
        return p.primitive()[1]
    return p.monic()


def _one(n):
    return Poly.const(1, n)


def _same(f, g):
    n = max(f.nvars, g.nvars)
    return f.extend(n), g.extend(n), n


# -- pseudo-division ------------------------------------------------------

def pdivmod(f, g, v):
    """(q, r) with lc_v(g)^e * f = q*g + r, e = max(deg f - deg g + 1, 0)."""
    f, g, n = _same(f, g)
    dg = g.degree(v)
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    df = f.degree(v)
    if df < dg:
        return Poly.const(0, n), f
    lcg = g.lc_in(v)
    e = df - dg + 1
    q = Poly.const(0, n)
    r = f
    while not r.is_zero() and r.degree(v) >= dg:
        t = r.lc_in(v) * Poly.var(v, n, r.degree(v) - dg)
        r = lcg * r - t * g
        q = lcg * q + t
        e -= 1
    if e:
        s = lcg ** e
        q, r = q * s, r * s
    return q, r


def prem(f, g, v):
    return pdivmod(f, g, v)[1]


def pquo(f, g, v):
    return pdivmod(f, g, v)[0]


# -- gcd -----------------------------------------------------------------

def content_in(f, v):
    """Gcd of the coefficients of f viewed as a polynomial in u_v."""
    g = None
    for c in f.coeffs_in(v).values():
        g = c if g is None else _gcd_rec(g, c)
        if g.is_constant():
            return _one(f.nvars)
    return normalize(g) if g is not None else Poly.const(0, f.nvars)


def primitive_in(f, v):
    c = content_in(f, v)
    return c, f.exquo(c)


def _prs_last(a, b, v):
    """Last non-zero subresultant of a, b in u_v (both of positive degree)."""
    if a.degree(v) < b.degree(v):
        a, b = b, a
    n = a.nvars
    g = h = _one(n)
    while True:
        d = a.degree(v) - b.degree(v)
        r = prem(a, b, v)
        if r.is_zero():
            return b
        if r.degree(v) == 0:
            return _one(n)
        a, b = b, r.exquo(g * h ** d)
        g = a.lc_in(v)
        if d:
            h = (g ** d).exquo(h ** (d - 1))


def _gcd_rec(f, g):
    n = f.nvars
    if f.is_zero():
        return normalize(g)
    if g.is_zero():
        return normalize(f)
    if f.is_constant() or g.is_constant():
        return _one(n)
    if f == g:
        return normalize(f)
    v = max(f.max_var(), g.max_var())
    if f.degree(v) == 0:
        return _gcd_rec(f, content_in(g, v))
    if g.degree(v) == 0:
        return _gcd_rec(content_in(f, v), g)
    h = _heuristic_gcd(f, g)
    if h is not None:
        return h
    cf, pf = primitive_in(f, v)
    cg, pg = primitive_in(g, v)
    c = _gcd_rec(cf, cg)
    h = _prs_last(pf, pg, v)
    if h.degree(v) > 0:
        h = primitive_in(h, v)[1]
    else:
        h = _one(n)
    return normalize(c * h)


def _int_poly(p):
    return p if all(type(c) is int for c in p.terms.values()) else p / p.int_content()


def _max_norm(p):
    return max(abs(c) for c in p.terms.values())


def _eval_int(p, v, xi):
    """p(u_v = xi) for an integer polynomial, kept in the same variable count."""
    t = {}
    for e, c in p.terms.items():
        k = e[:v] + (0,) + e[v + 1:]
        t[k] = t.get(k, 0) + c * xi ** e[v]
    return Poly({k: c for k, c in t.items() if c}, p.nvars)


def _interpolate(h, v, xi):
    """Inverse of evaluation at xi using symmetric xi-adic digits coefficientwise."""
    out = {}
    half = xi // 2
    for e, c in h.terms.items():
        k = 0
        while c:
            d = c % xi
            if d > half:
                d -= xi
            if d:
                out[e[:v] + (k,) + e[v + 1:]] = d
            c = (c - d) // xi
            k += 1
    return Poly(out, h.nvars)


def _heu_rec(f, g, depth):
    """Heuristic gcd of integer polynomials, or None when it gives up."""
    if f.is_constant() or g.is_constant():
        a = f.constant_value() if f.is_constant() else f.int_content()
        b = g.constant_value() if g.is_constant() else g.int_content()
        return Poly.const(igcd(int(a), int(b)), f.nvars)
    cf, cg = int(f.int_content()), int(g.int_content())
    f, g = f / cf, g / cg
    c = igcd(cf, cg)
    v = max(f.max_var(), g.max_var())
    xi = 2 * min(_max_norm(f), _max_norm(g)) + 29
    for _ in range(4):
        fe, ge = _eval_int(f, v, xi), _eval_int(g, v, xi)
        if not fe.is_zero() and not ge.is_zero():
            he = _heu_rec(fe, ge, depth + 1)
            if he is not None:
                h = _interpolate(he, v, xi)
                if not h.is_zero():
                    h = h / h.int_content()
                    if h.lead_coeff() < 0:
                        h = -h
                    if h.divides(f) and h.divides(g):
                        return h * c
        xi = xi * 73794 // 27011
    return None


def _heuristic_gcd(f, g):
    f, g = _int_poly(f), _int_poly(g)
    h = _heu_rec(f, g, 0)
    if h is None:
        return None
    return normalize(h)


def _field_gcd(f, g):
    vs = set(f.used_vars()) | set(g.used_vars())
    if len(vs) > 1:
        raise NotImplementedError("multivariate gcd over an extension field")
    n = f.nvars
    if not vs:
        return _one(n)
    v = vs.pop()
    a = [f.coeff_in(v, k).constant_value() for k in range(f.degree(v) + 1)]
    b = [g.coeff_in(v, k).constant_value() for k in range(g.degree(v) + 1)]
    h = upoly.gcd(a, b)
    return Poly({tuple(k if i == v else 0 for i in range(n)): c for k, c in enumerate(h)}, n)


def poly_gcd(f, g):
    """Primitive gcd; gcd(0, 0) = 0."""
    f, g, n = _same(f, g)
    if f.is_zero() and g.is_zero():
        return f
    if not (f.is_rational() and g.is_rational()):
        if f.is_zero():
            return normalize(g)
        if g.is_zero():
            return normalize(f)
        return _field_gcd(f, g)
    return _gcd_rec(f, g)


def poly_gcd_list(polys):
    out = None
    for p in polys:
        out = p if out is None else poly_gcd(out, p)
        if out.is_constant() and not out.is_zero():
            return Poly.const(1, out.nvars)
    return normalize(out) if out is not None else Poly.const(0, 1)


def poly_lcm(f, g):
    f, g, n = _same(f, g)
    if f.is_zero() or g.is_zero():
        return Poly.const(0, n)
    return normalize((f * g).exquo(poly_gcd(f, g)))


# -- resultants ------------------------------------------------------------

def resultant(f, g, v):
    """Res_{u_v}(f, g) by the subresultant algorithm."""
    f, g, n = _same(f, g)
    if f.is_zero() or g.is_zero():
        return Poly.const(0, n)
    da, db = f.degree(v), g.degree(v)
    if da == 0 and db == 0:
        return _one(n)
    if da == 0:
        return f ** db
    if db == 0:
        return g ** da
    ca, a = _int_part(f)
    cb, b = _int_part(g)
    t = ca ** db * cb ** da
    s = 1
    if da < db:
        a, b = b, a
        if da % 2 and db % 2:
            s = -1
    g_ = h = _one(n)
    while True:
        dA, dB = a.degree(v), b.degree(v)
        d = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        r = prem(a, b, v)
        if r.is_zero():
            return Poly.const(0, n)
        a, b = b, r.exquo(g_ * h ** d)
        g_ = a.lc_in(v)
        if d != 1:
            h = (g_ ** d).exquo(h ** (d - 1)) if d else h
        else:
            h = g_
        if b.degree(v) <= 0:
            break
    dA = a.degree(v)
    h = (b ** dA).exquo(h ** (dA - 1)) if dA >= 1 else h
    return h * (s * t)


def _int_part(p):
    if p.is_rational():
        c = p.int_content()
        return c, p / c
    return 1, p


def _bareiss_det(m):
    """Fraction-free determinant of a square matrix of Poly entries."""
    m = [row[:] for row in m]
    k = len(m)
    if k == 0:
        return None
    n = m[0][0].nvars
    sign = 1
    prev = _one(n)
    for i in range(k - 1):
        if m[i][i].is_zero():
            for r in range(i + 1, k):
                if not m[r][i].is_zero():
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return Poly.const(0, n)
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[i][i] * m[r][c] - m[r][i] * m[i][c]).exquo(prev)
        prev = m[i][i]
    return m[k - 1][k - 1] * sign


def _shifted_rows(f, g, v, k):
    """Rows of the k-th subresultant matrix as coefficient lists (high to low)."""
    n = f.nvars
    m_, n_ = f.degree(v), g.degree(v)
    width = m_ + n_ - k
    fc = [f.coeff_in(v, d) for d in range(m_, -1, -1)]
    gc = [g.coeff_in(v, d) for d in range(n_, -1, -1)]
    zero = Poly.const(0, n)
    rows = []
    for i in range(n_ - k):
        rows.append([zero] * i + fc + [zero] * (width - i - len(fc)))
    for i in range(m_ - k):
        rows.append([zero] * i + gc + [zero] * (width - i - len(gc)))
    return rows, width


def sylvester_resultant(f, g, v):
    """Determinant of the Sylvester matrix (independent check of resultant)."""
    f, g, n = _same(f, g)
    if f.degree(v) <= 0 or g.degree(v) <= 0:
        return resultant(f, g, v)
    rows, _ = _shifted_rows(f, g, v, 0)
    return _bareiss_det(rows)


def subresultant(f, g, v, k):
    """(S_k, s_k): the k-th subresultant of f, g in u_v and its principal coefficient."""
    f, g, n = _same(f, g)
    if f.degree(v) < g.degree(v):
        f, g = g, f
    m_, n_ = f.degree(v), g.degree(v)
    if k >= n_:
        raise ValueError("subresultant index out of range")
    rows, width = _shifted_rows(f, g, v, k)
    size = len(rows)
    lead = [row[:size - 1] for row in rows]
    total = Poly.const(0, n)
    principal = Poly.const(0, n)
    for j in range(k + 1):
        col = width - 1 - j
        d = _bareiss_det([lead[i] + [rows[i][col]] for i in range(size)])
        if j == k:
            principal = d
        total = total + d * Poly.var(v, n, j)
    return total, principal


# -- square-free machinery ----------------------------------------------

def squarefree_part(f, main_var=None):
    """Product of the distinct irreducible factors of f (primitive)."""
    if f.is_zero():
        raise ValueError("square-free part of zero")
    if f.is_constant():
        return _one(f.nvars)
    v = f.max_var() if main_var is None or f.degree(main_var) <= 0 else main_var
    c, pp = primitive_in(f, v)
    d = pp.diff(v)
    g = poly_gcd(pp, d)
    part = pp.exquo(g) if not g.is_constant() else pp
    rest = squarefree_part(c) if not c.is_constant() else _one(f.nvars)
    return normalize(rest * part)


def squarefree_decomposition(f):
    """List of (factor, multiplicity); the product equals f up to a rational unit."""
    if f.is_zero():
        raise ValueError("square-free decomposition of zero")
    acc = {}
    _sqf_rec(f, acc)
    return sorted(acc.items(), key=lambda kv: (kv[1], kv[0].sort_key()))


def _sqf_rec(f, acc):
    if f.is_constant():
        return
    v = f.max_var()
    c, pp = primitive_in(f, v)
    _sqf_rec(c, acc)
    # Yun in u_v on the primitive part
    dp = pp.diff(v)
    g = poly_gcd(pp, dp)
    cc = pp.exquo(g)
    d = dp.exquo(g) - cc.diff(v)
    i = 1
    while cc.degree(v) > 0:
        h = poly_gcd(cc, d)
        cc = cc.exquo(h)
        if not h.is_constant():
            h = normalize(h)
            acc[h] = acc.get(h, 0) + i
        d = d.exquo(h) - cc.diff(v)
        i += 1


def strip_univariate_factors(f, y=0, yp=1):
    """(stripped, y_factors, yprime_factors) for a polynomial in u_y, u_yp."""
    if f.is_zero():
        raise ValueError("cannot strip the zero polynomial")
    n = f.nvars
    if f.is_constant():
        return _one(n), _one(n), _one(n)
    yf = content_in(f, yp) if f.degree(yp) > 0 else normalize(f)
    rest = f.exquo(yf)
    if rest.is_constant():
        return _one(n), yf, _one(n)
    ypf = content_in(rest, y) if rest.degree(y) > 0 else normalize(rest)
    stripped = rest.exquo(ypf)
    return normalize(stripped), normalize(yf), normalize(ypf)


def as_univariate(p, v):
    """Dense coefficient list of p in u_v; p must not involve other variables."""
    if p.is_zero():
        return []
    return upoly.trim([p.coeff_in(v, k).constant_value() for k in range(p.degree(v) + 1)])


def from_univariate(coeffs, v, nvars):
    return Poly({tuple(k if i == v else 0 for i in range(nvars)): c
                 for k, c in enumerate(coeffs)}, nvars)


