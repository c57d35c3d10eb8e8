"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros; [] is the zero polynomial.  Coefficients may be ints,
Fractions or any field element type of this package.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import cdiv, norm_coeff


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return [norm_coeff(c) for c in a[:n]]


def deg(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return trim(out)


def neg(a):
    return [-c for c in a]


def scale(a, c):
    if c == 0:
        return []
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, n):
    result = [1]
    while n:
        if n & 1:
            result = mul(result, a)
        n >>= 1
        if n:
            a = mul(a, a)
    return result


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    if len(a) - 1 < db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = cdiv(a[k + db], lc)
        q[k] = c
        if c != 0:
            for j in range(db + 1):
                a[k + j] = a[k + j] - c * b[j]
    return trim(q), trim(a[:db])


def rem(a, b):
    return divmod_(a, b)[1]


def quo(a, b):
    return divmod_(a, b)[0]


def monic(a):
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return list(a)
    return [cdiv(c, lc) for c in a]


def gcd(a, b):
    """Monic gcd (zero polynomial if both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    lc = r0[-1]
    return monic(r0), [cdiv(c, lc) for c in s0], [cdiv(c, lc) for c in t0]


def derivative(a):
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return norm_coeff(acc) if type(acc) is Fraction else acc


def compose(a, b):
    """a(b(t))."""
    acc = []
    for c in reversed(a):
        acc = add(mul(acc, b), [c])
    return acc


def shift(a, s):
    """a(t + s)."""
    return compose(a, trim([s, 1]))


def squarefree_part(a):
    g = gcd(a, derivative(a))
    return monic(quo(a, g)) if len(g) > 1 else monic(a)


def squarefree_decomposition(a):
    """Yun's algorithm: list of (monic factor, multiplicity) with product = monic(a)."""
    a = monic(trim(a))
    if len(a) <= 1:
        return []
    out = []
    da = derivative(a)
    g = gcd(a, da)
    c = quo(a, g)
    d = sub(quo(da, g), derivative(c))
    i = 1
    while len(c) > 1:
        h = gcd(c, d)
        c = quo(c, h)
        if len(h) > 1:
            out.append((h, i))
        d = sub(quo(d, h), derivative(c))
        i += 1
    return out


def to_fraction_list(a):
    return [Fraction(c) for c in a]


def content_int(a):
    """Clear denominators: (c, integer list) with a = c * list."""
    from math import gcd as igcd
    den = 1
    for c in a:
        c = Fraction(c)
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for x in ints:
        g = igcd(g, x)
    if g == 0:
        return Fraction(1), []
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [x // g for x in ints]


def format_upoly(a, name="t"):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            cs = str(c)
            if type(c) not in (int, Fraction) and any(ch in cs[1:] for ch in "+-"):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}")
    s = parts[0]
    for p in parts[1:]:
        s += " - " + p[1:] if p.startswith("-") else " + " + p
    return s
