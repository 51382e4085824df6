"""Pure-Python polynomial kernels.

Same surface as the compiled module ``edvar._speedups``; one of the two is
picked at import time by ``edvar._backend``.  Monomials are dense exponent
tuples, polynomials are dicts mapping exponent tuple -> coefficient.  The
coefficient type is opaque here (gmpy2.mpq or fractions.Fraction): kernels
only rely on +, *, and truthiness.
"""

BACKEND_NAME = "python"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent-wise a - b, or None if some entry would go negative."""
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_is_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def key_grevlex(a):
    """Sort key realizing graded reverse lexicographic order."""
    return (sum(a), tuple(-e for e in reversed(a)))


def key_grevlex_subset(a, idx):
    """Grevlex key of the sub-exponent-vector at positions ``idx``."""
    total = 0
    neg = []
    for i in idx:
        total += a[i]
    for i in reversed(idx):
        neg.append(-a[i])
    return (total, tuple(neg))


def terms_mul(a, b):
    """Schoolbook product of two term dicts."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = out.get(m)
            if c is None:
                out[m] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[m] = c
                else:
                    del out[m]
    return out


def terms_iadd_scaled(dst, src, c, shift):
    """In place: dst += c * x^shift * src, dropping cancelled terms."""
    for m, cs in src.items():
        key = tuple(x + y for x, y in zip(m, shift))
        cur = dst.get(key)
        if cur is None:
            dst[key] = c * cs
        else:
            cur = cur + c * cs
            if cur:
                dst[key] = cur
            else:
                del dst[key]


def terms_scaled(src, c):
    """New dict c * src (c must be nonzero)."""
    return {m: c * v for m, v in src.items()}
