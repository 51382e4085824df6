# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels.

Mirror of ``edvar._kernels_py`` (that module's docstring is the contract).
Coefficients stay generic Python objects so gmpy2.mpq and Fraction both work;
the win comes from doing the tuple walking and dict merging at C level.
"""

BACKEND_NAME = "compiled"


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <object> a[i] + <object> b[i]
    return tuple(out)


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        if x < y:
            return None
        out[i] = x - y
    return tuple(out)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x > y:
            return False
    return True


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x >= y else y
    return tuple(out)


def mono_deg(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long t = 0
    for i in range(n):
        t += <long> a[i]
    return t


def mono_is_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] != 0 and <long> b[i] != 0:
            return False
    return True


def key_grevlex(tuple a):
    cdef Py_ssize_t i, n = len(a)
    cdef long t = 0
    cdef list neg = [0] * n
    for i in range(n):
        t += <long> a[i]
        neg[n - 1 - i] = -<long> a[i]
    return (t, tuple(neg))


def key_grevlex_subset(tuple a, tuple idx):
    cdef Py_ssize_t j, k = len(idx)
    cdef long t = 0
    cdef list neg = [0] * k
    for j in range(k):
        t += <long> a[<Py_ssize_t> idx[j]]
        neg[k - 1 - j] = -<long> a[<Py_ssize_t> idx[j]]
    return (t, tuple(neg))


def terms_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef Py_ssize_t i, n
    cdef list buf
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        n = len(ma)
        for mb, cb in b.items():
            buf = [0] * n
            for i in range(n):
                buf[i] = <long> ma[i] + <long> mb[i]
            m = tuple(buf)
            cur = out.get(m)
            if cur is None:
                out[m] = ca * cb
            else:
                cur = cur + ca * cb
                if cur:
                    out[m] = cur
                else:
                    del out[m]
    return out


def terms_iadd_scaled(dict dst, dict src, c, tuple shift):
    cdef tuple m, key
    cdef Py_ssize_t i, n
    cdef list buf
    for m, cs in src.items():
        n = len(m)
        buf = [0] * n
        for i in range(n):
            buf[i] = <long> m[i] + <long> shift[i]
        key = tuple(buf)
        cur = dst.get(key)
        if cur is None:
            dst[key] = c * cs
        else:
            cur = cur + c * cs
            if cur:
                dst[key] = cur
            else:
                del dst[key]


def terms_scaled(dict src, c):
    cdef dict out = {}
    cdef tuple m
    for m, v in src.items():
        out[m] = c * v
    return out
