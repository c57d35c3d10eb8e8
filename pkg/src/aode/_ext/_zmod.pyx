# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense polynomial arithmetic over Z/pZ, compiled backend (p < 2**31)."""


cdef list _trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def zp_trim(a):
    return _trim(list(a))


def zp_reduce(a, long long p):
    return _trim([x % p for x in a])


def zp_add(a, b, long long p):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = (<long long>out[i] + <long long>b[i]) % p
    return _trim(out)


def zp_sub(a, b, long long p):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef list out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (<long long>out[i] - <long long>b[i]) % p
    return _trim(out)


def zp_mul(a, b, long long p):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef long long x
    if na == 0 or nb == 0:
        return []
    cdef long long[::1] av = _as_array(a)
    cdef long long[::1] bv = _as_array(b)
    cdef long long[::1] out = _zeros(na + nb - 1)
    for i in range(na):
        x = av[i]
        if x:
            for j in range(nb):
                out[i + j] = (out[i + j] + x * bv[j]) % p
    return _trim([out[i] for i in range(na + nb - 1)])


cdef long long _powmod_int(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e:
        if e & 1:
            r = r * b % p
        e >>= 1
        b = b * b % p
    return r


def zp_divmod(a, b, long long p):
    cdef Py_ssize_t k, j, na = len(a), db = len(b) - 1
    cdef long long c, inv
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial mod p")
    if na - 1 < db:
        return [], _trim(list(a))
    inv = _powmod_int(b[db], p - 2, p)
    cdef long long[::1] r = _as_array(a)
    cdef long long[::1] bv = _as_array(b)
    cdef list q = [0] * (na - db)
    for k in range(na - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * bv[j]) % p
                if r[k + j] < 0:
                    r[k + j] += p
    return _trim(q), _trim([r[j] for j in range(db)])


def zp_rem(a, b, long long p):
    return zp_divmod(a, b, p)[1]


def zp_monic(a, long long p):
    if not a:
        return []
    cdef long long inv = _powmod_int(a[len(a) - 1], p - 2, p)
    return [x * inv % p for x in a]


def zp_gcd(a, b, long long p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, zp_rem(a, b, p)
    return zp_monic(a, p)


def zp_mulmod(a, b, f, long long p):
    return zp_rem(zp_mul(a, b, p), f, p)


def zp_powmod(a, e, f, long long p):
    result = [1]
    base = zp_rem(a, f, p)
    while e:
        if e & 1:
            result = zp_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = zp_mulmod(base, base, f, p)
    return zp_rem(result, f, p)


cdef long long[::1] _as_array(a):
    cdef Py_ssize_t i, n = len(a)
    cdef long long[::1] out = _zeros(n)
    for i in range(n):
        out[i] = a[i]
    return out


cdef long long[::1] _zeros(Py_ssize_t n):
    import array
    return array.array("q", bytes(8 * n))
