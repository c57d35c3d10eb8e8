"""Dense polynomial arithmetic over Z/pZ, pure-Python backend.

Polynomials are lists of ints in [0, p), lowest degree first, trimmed.
The compiled twin in _zmod.pyx exposes the same functions.
"""


def zp_trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def zp_reduce(a, p):
    return zp_trim([x % p for x in a])


def zp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return zp_trim(out)


def zp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return zp_trim(out)


def zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return zp_trim([c % p for c in out])


def zp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], zp_trim(list(a))
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return zp_trim(q), zp_trim(r[:db])


def zp_rem(a, b, p):
    return zp_divmod(a, b, p)[1]


def zp_monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def zp_gcd(a, b, p):
    a, b = zp_trim(list(a)), zp_trim(list(b))
    while b:
        a, b = b, zp_rem(a, b, p)
    return zp_monic(a, p)


def zp_mulmod(a, b, f, p):
    return zp_rem(zp_mul(a, b, p), f, p)


def zp_powmod(a, e, f, p):
    result = [1]
    base = zp_rem(a, f, p)
    while e:
        if e & 1:
            result = zp_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = zp_mulmod(base, base, f, p)
    return zp_rem(result, f, p)
