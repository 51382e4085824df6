"""Sparse multivariate polynomials with exact rational coefficients.

The building blocks: variable rings with classed names (ambient / data /
radius / auxiliary), monomial orders (lex, grevlex, elimination blocks),
polynomials as exponent-tuple -> rational dicts, polynomial matrices with
fraction-free determinants, resultants, discriminants, canonical scalar
normalization and multivariate gcd.

Everything is exact: no floats anywhere in this module.  Values are
immutable after construction and all operations are pure, so instances can
be shared freely between threads.
"""

from __future__ import annotations

import heapq
import itertools
from enum import Enum

from ._backend import K, R0, R1, Rational, rat
from .errors import RingMismatchError, ValidationError

VAR_CLASSES = ("ambient", "data", "radius", "aux")


class VariableRing:
    """An ordered list of distinct named variables, each with a class."""

    __slots__ = ("names", "classes", "_index", "_hash")

    def __init__(self, names, classes):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate variable names in {names}")
        classes = dict(classes)
        for n in names:
            if classes.get(n) not in VAR_CLASSES:
                raise ValidationError(f"variable {n!r} has no valid class")
        radius = [n for n in names if classes[n] == "radius"]
        if len(radius) > 1:
            raise ValidationError("at most one radius variable is allowed")
        self.names = names
        self.classes = {n: classes[n] for n in names}
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, tuple(self.classes[n] for n in names)))

    def __eq__(self, other):
        return (
            isinstance(other, VariableRing)
            and self.names == other.names
            and self.classes == other.classes
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"VariableRing({', '.join(self.names)})"

    @property
    def nvars(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown variable {name!r}") from None

    def of_class(self, cls):
        return tuple(n for n in self.names if self.classes[n] == cls)

    def radius_var(self):
        r = self.of_class("radius")
        return r[0] if r else None

    def extend(self, names, cls):
        """New ring with extra variables of one class appended."""
        classes = dict(self.classes)
        for n in names:
            classes[n] = cls
        return VariableRing(self.names + tuple(names), classes)

    def restrict(self, names):
        """New ring keeping only the given variables (in this ring's order)."""
        keep = [n for n in self.names if n in set(names)]
        return VariableRing(keep, {n: self.classes[n] for n in keep})

    def canonical_order(self):
        """Order used to pick the sign in canonical normalization.

        The radius variable, when present, dominates; ties break by grevlex
        on the remaining variables.
        """
        s = self.radius_var()
        if s is not None:
            return BlockOrder(self, (s,))
        return GrevlexOrder(self)


def ring(ambient=(), data=(), radius=None, aux=()):
    """Convenience constructor grouping names by class."""
    names = list(ambient) + list(data) + ([radius] if radius else []) + list(aux)
    classes = {}
    for n in ambient:
        classes[n] = "ambient"
    for n in data:
        classes[n] = "data"
    if radius:
        classes[radius] = "radius"
    for n in aux:
        classes[n] = "aux"
    return VariableRing(names, classes)


class Ordering(Enum):
    Less = -1
    Equal = 0
    Greater = 1


class MonomialOrder:
    """Total order on monomials, compatible with multiplication."""

    ring: VariableRing

    def key(self, mono):
        raise NotImplementedError

    def leading(self, terms):
        return max(terms, key=self.key)


class LexOrder(MonomialOrder):
    def __init__(self, ring):
        self.ring = ring
        self.tag = ("lex",)

    def key(self, mono):
        return mono


class GrevlexOrder(MonomialOrder):
    def __init__(self, ring):
        self.ring = ring
        self.tag = ("grevlex",)
        self.key = K.key_grevlex


class BlockOrder(MonomialOrder):
    """Elimination order: two grevlex blocks, the first one dominant.

    Any monomial containing a variable of the elimination block ranks above
    every monomial free of the block.
    """

    def __init__(self, ring, elim_names):
        self.ring = ring
        elim = tuple(sorted(ring.index(n) for n in elim_names))
        keep = tuple(i for i in range(ring.nvars) if i not in set(elim))
        if not elim:
            raise ValidationError("empty elimination block")
        self.elim = elim
        self.keep = keep
        self.elim_names = tuple(ring.names[i] for i in elim)
        self.tag = ("block", elim)

    def key(self, mono):
        return (
            K.key_grevlex_subset(mono, self.elim),
            K.key_grevlex_subset(mono, self.keep),
        )


def cmp_monomials(a, b, order):
    """Compare two exponent tuples under a monomial order."""
    if len(a) != len(b):
        raise RingMismatchError("monomials over different rings")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return Ordering.Less
    if ka > kb:
        return Ordering.Greater
    return Ordering.Equal


def _as_coeff(c):
    if isinstance(c, int):
        return rat(c)
    return c


class MultiPoly:
    """Immutable sparse polynomial: exponent tuple -> nonzero rational."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _clean=True):
        self.ring = ring
        if _clean:
            terms = {m: _as_coeff(c) for m, c in terms.items() if c}
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring):
        return MultiPoly(ring, {}, _clean=False)

    @staticmethod
    def const(ring, c):
        c = _as_coeff(c)
        if not c:
            return MultiPoly.zero(ring)
        return MultiPoly(ring, {(0,) * ring.nvars: c}, _clean=False)

    @staticmethod
    def var(ring, name, power=1):
        if power < 0:
            raise ValidationError("negative exponent")
        e = [0] * ring.nvars
        e[ring.index(name)] = power
        return MultiPoly(ring, {tuple(e): R1}, _clean=False)

    @staticmethod
    def from_pairs(ring, pairs):
        out = {}
        for m, c in pairs:
            c = _as_coeff(c)
            if not c:
                continue
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                cur = cur + c
                if cur:
                    out[m] = cur
                else:
                    del out[m]
        return MultiPoly(ring, out, _clean=False)

    # -- basics ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return R0
        return self.terms.get((0,) * self.ring.nvars, R0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands over different rings: {self.ring} vs {other.ring}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = MultiPoly.const(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        K.terms_iadd_scaled(out, other.terms, R1, (0,) * self.ring.nvars)
        return MultiPoly(self.ring, out, _clean=False)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = MultiPoly.const(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        K.terms_iadd_scaled(out, other.terms, -R1, (0,) * self.ring.nvars)
        return MultiPoly(self.ring, out, _clean=False)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return MultiPoly(self.ring, K.terms_scaled(self.terms, -R1), _clean=False)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _as_coeff(other)
            if not c:
                return MultiPoly.zero(self.ring)
            return MultiPoly(self.ring, K.terms_scaled(self.terms, c), _clean=False)
        self._check(other)
        return MultiPoly(self.ring, K.terms_mul(self.terms, other.terms), _clean=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValidationError("pow exponent must be a non-negative integer")
        result = MultiPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(K.mono_deg(m) for m in self.terms)

    def degree_in(self, name):
        if not self.terms:
            return -1
        i = self.ring.index(name)
        return max(m[i] for m in self.terms)

    def variables(self):
        used = [False] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(n for i, n in enumerate(self.ring.names) if used[i])

    def leading(self, order):
        """(monomial, coefficient) of the order-largest term."""
        if not self.terms:
            raise ValidationError("zero polynomial has no leading term")
        m = order.leading(self.terms)
        return m, self.terms[m]

    def coeffs_in(self, name):
        """Map s-exponent -> coefficient polynomial (free of the variable)."""
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            key = m[:i] + (0,) + m[i + 1 :]
            bucket = out.setdefault(e, {})
            bucket[key] = bucket.get(key, R0) + c
        return {
            e: MultiPoly(self.ring, terms)
            for e, terms in out.items()
            if any(terms.values())
        }

    def coefficient(self, name, power):
        return self.coeffs_in(name).get(power, MultiPoly.zero(self.ring))

    def derivative(self, name):
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if not e:
                continue
            key = m[:i] + (e - 1,) + m[i + 1 :]
            out[key] = out.get(key, R0) + c * e
        return MultiPoly(self.ring, out)

    def evaluate(self, values):
        """Full evaluation; ``values`` maps every present variable to a rational."""
        vals = {self.ring.index(n): _as_coeff(v) for n, v in values.items()}
        total = R0
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                if not e:
                    continue
                if i not in vals:
                    raise ValidationError(
                        f"no value supplied for variable {self.ring.names[i]!r}"
                    )
                term = term * vals[i] ** e
            total = total + term
        return total

    def substitute(self, name, value):
        """Replace one variable by a rational or by a polynomial (same ring)."""
        i = self.ring.index(name)
        if isinstance(value, (int, Rational)):
            value = MultiPoly.const(self.ring, value)
        self._check(value)
        by_exp = self.coeffs_in(name)
        result = MultiPoly.zero(self.ring)
        power = MultiPoly.const(self.ring, 1)
        for e in range(0, max(by_exp) + 1 if by_exp else 0):
            coeff = by_exp.get(e)
            if coeff is not None:
                result = result + coeff * power
            power = power * value
        return result

    def transfer(self, target, rename=None):
        """Re-express over another ring, matching variables by (renamed) name."""
        rename = rename or {}
        mapping = []
        for i, n in enumerate(self.ring.names):
            tn = rename.get(n, n)
            mapping.append(target._index.get(tn, -1))
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for i, exp in enumerate(m):
                if not exp:
                    continue
                j = mapping[i]
                if j < 0:
                    raise ValidationError(
                        f"variable {self.ring.names[i]!r} is absent from target ring"
                    )
                e[j] = exp
            key = tuple(e)
            out[key] = out.get(key, R0) + c
        return MultiPoly(target, out)

    def is_homogeneous(self):
        degs = {K.mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogenize(self, target, name):
        """Homogenize into ``target`` (which contains ``name``) by total degree."""
        d = self.total_degree()
        j = target.index(name)
        out = {}
        for m, c in self.terms.items():
            base = MultiPoly(self.ring, {m: c}, _clean=False).transfer(target)
            (bm, bc), = base.terms.items()
            e = list(bm)
            e[j] += d - K.mono_deg(m)
            out[tuple(e)] = bc
        return MultiPoly(target, out)

    # -- rendering ---------------------------------------------------------

    def _mono_str(self, m):
        parts = []
        for i, e in enumerate(m):
            if e == 1:
                parts.append(self.ring.names[i])
            elif e > 1:
                parts.append(f"{self.ring.names[i]}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        order = self.ring.canonical_order()
        monos = sorted(self.terms, key=order.key, reverse=True)
        chunks = []
        for m in monos:
            c = self.terms[m]
            neg = c < 0
            ac = -c if neg else c
            ms = self._mono_str(m)
            num, den = int(ac.numerator), int(ac.denominator)
            if den != 1:
                cs = f"{num}/{den}"
            else:
                cs = str(num)
            if ms and cs == "1":
                body = ms
            elif ms:
                body = f"{cs}*{ms}"
            else:
                body = cs
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"MultiPoly({self})"


# -- the spec's operation surface -----------------------------------------


def arith(op, *operands):
    """Dispatch basic arithmetic: add, sub, mul, pow, eval."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "pow":
        a, n = operands
        return a**n
    if op == "eval":
        a, values = operands
        return a.evaluate(values)
    raise ValidationError(f"unknown arithmetic op {op!r}")


def _negkey(k):
    if isinstance(k, tuple):
        return tuple(_negkey(x) for x in k)
    return -k


def _prepare_divisors(divisors, order):
    prepped = []
    for g in divisors:
        if g.is_zero():
            raise ValidationError("zero divisor in division")
        lm, lc = g.leading(order)
        tail = {m: c for m, c in g.terms.items() if m != lm}
        prepped.append((lm, R1 / lc, tail))
    return prepped


def _reduce_terms(terms, prepped, order, want_quotients):
    """Multivariate division core; returns (quotients | None, remainder dict)."""
    work = dict(terms)
    rem = {}
    quots = [{} for _ in prepped] if want_quotients else None
    keyf = order.key
    heap = [(_negkey(keyf(m)), m) for m in work]
    heapq.heapify(heap)
    seen = set(work)
    while heap:
        _, m = heapq.heappop(heap)
        seen.discard(m)
        c = work.get(m)
        if c is None:
            continue
        for i, (lm, lcinv, tail) in enumerate(prepped):
            if K.mono_divides(lm, m):
                shift = K.mono_div(m, lm)
                coef = c * lcinv
                del work[m]
                if tail:
                    K.terms_iadd_scaled(work, tail, -coef, shift)
                    for tm in tail:
                        nm = K.mono_mul(tm, shift)
                        if nm in work and nm not in seen:
                            heapq.heappush(heap, (_negkey(keyf(nm)), nm))
                            seen.add(nm)
                if want_quotients:
                    q = quots[i]
                    q[shift] = q.get(shift, R0) + coef
                break
        else:
            del work[m]
            rem[m] = c
    return quots, {m: c for m, c in rem.items() if c}


def divmod_multi(f, divisors, order):
    """Divide f by an ordered list of divisors: f = sum(q_i g_i) + r.

    No term of r is divisible by any divisor's leading term under ``order``.
    """
    prepped = _prepare_divisors(divisors, order)
    quots, rem = _reduce_terms(f.terms, prepped, order, True)
    qpolys = [MultiPoly(f.ring, q) for q in quots]
    return qpolys, MultiPoly(f.ring, rem, _clean=False)


def normal_form_terms(f, prepped, order):
    """Remainder-only reduction (shared with the Groebner engine)."""
    _, rem = _reduce_terms(f.terms, prepped, order, False)
    return MultiPoly(f.ring, rem, _clean=False)


def exact_div(f, g):
    """Quotient f/g, requiring the division to be exact."""
    if g.is_zero():
        raise ValidationError("division by zero polynomial")
    order = GrevlexOrder(f.ring)
    q, r = divmod_multi(f, [g], order)
    if not r.is_zero():
        raise ValidationError("inexact polynomial division")
    return q[0]


def divides(g, f):
    if g.is_zero():
        return f.is_zero()
    order = GrevlexOrder(f.ring)
    _, r = divmod_multi(f, [g], order)
    return r.is_zero()


# -- polynomial matrices ---------------------------------------------------


class PolyMatrix:
    """Row-major matrix of polynomials over a shared ring."""

    __slots__ = ("rows", "cols", "entries", "ring")

    def __init__(self, rows, cols, entries):
        if rows <= 0 or cols <= 0:
            raise ValidationError("matrix dimensions must be positive")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValidationError("entry count does not match dimensions")
        ring = entries[0].ring
        for e in entries:
            if e.ring != ring:
                raise RingMismatchError("matrix entries over different rings")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.ring = ring

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def submatrix(self, row_idx, col_idx):
        ents = [self.at(i, j) for i in row_idx for j in col_idx]
        return PolyMatrix(len(row_idx), len(col_idx), ents)


def _det_cofactor(M):
    n = M.rows
    ring = M.ring
    cols = tuple(range(n))
    memo = {}

    def rec(row, colset):
        if not colset:
            return MultiPoly.const(ring, 1)
        key = colset
        if row == n - len(colset):
            cached = memo.get(key)
            if cached is not None:
                return cached
        acc = MultiPoly.zero(ring)
        sign = 1
        for k, j in enumerate(colset):
            e = M.at(row, j)
            if not e.is_zero():
                sub = rec(row + 1, colset[:k] + colset[k + 1 :])
                acc = acc + e * sub if sign > 0 else acc - e * sub
            sign = -sign
        memo[key] = acc
        return acc

    return rec(0, cols)


def _det_bareiss(M):
    n = M.rows
    ring = M.ring
    a = [[M.at(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    prev = MultiPoly.const(ring, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                return MultiPoly.zero(ring)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev) if not prev.is_constant() else num * (
                    R1 / prev.constant_value()
                )
            a[i][k] = MultiPoly.zero(ring)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det(M):
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond."""
    if M.rows != M.cols:
        raise ValidationError("determinant of a non-square matrix")
    if M.rows <= 4:
        return _det_cofactor(M)
    return _det_bareiss(M)


def minors(M, k):
    """All k x k minors, row-major lexicographic in (row-set, col-set)."""
    if k < 1 or k > min(M.rows, M.cols):
        raise ValidationError("minor size out of range")
    out = []
    for ri in itertools.combinations(range(M.rows), k):
        for ci in itertools.combinations(range(M.cols), k):
            out.append(det(M.submatrix(ri, ci)))
    return out


# -- resultants and friends ------------------------------------------------


def sylvester_matrix(f, g, name):
    m = f.degree_in(name)
    n = g.degree_in(name)
    fc = f.coeffs_in(name)
    gc = g.coeffs_in(name)
    ring = f.ring
    zero = MultiPoly.zero(ring)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for e, c in fc.items():
            row[i + (m - e)] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for e, c in gc.items():
            row[i + (n - e)] = c
        rows.append(row)
    return PolyMatrix(size, size, [x for row in rows for x in row])


def resultant(f, g, name):
    """Determinant of the Sylvester matrix of f and g in one variable."""
    if f.degree_in(name) < 1 or g.degree_in(name) < 1:
        raise ValidationError("resultant needs positive degree in the variable")
    return det(sylvester_matrix(f, g, name))


def discriminant(f, name):
    """Res(f, df/dx)/lc with the classical sign (-1)^(d(d-1)/2)."""
    d = f.degree_in(name)
    if d < 2:
        raise ValidationError("discriminant needs degree >= 2")
    fp = f.derivative(name)
    lc = f.coefficient(name, d)
    if fp.is_zero():
        return MultiPoly.zero(f.ring)
    res = resultant(f, fp, name)
    q = exact_div(res, lc)
    if (d * (d - 1) // 2) % 2:
        q = -q
    return q


# -- canonical normalization and gcd ---------------------------------------


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _int_lcm(a, b):
    return a // _int_gcd(a, b) * b


def rational_content(f):
    """The positive rational c with f/c integer-primitive (f nonzero)."""
    den = 1
    for c in f.terms.values():
        den = _int_lcm(den, int(c.denominator))
    num = 0
    for c in f.terms.values():
        num = _int_gcd(num, int(c.numerator) * (den // int(c.denominator)))
    return rat(num, den)


def primitive_normalize(f):
    """Canonical scalar representative: integer content 1, positive lead.

    The sign is fixed by the coefficient of the largest monomial under the
    ring's canonical order (radius variable heaviest, grevlex below).  This
    is the single arbiter of equality "up to a scalar factor".
    """
    if f.is_zero():
        raise ValidationError("cannot normalize the zero polynomial")
    scale = R1 / rational_content(f)
    g = f * scale
    _, lead = g.leading(f.ring.canonical_order())
    if lead < 0:
        g = -g
    return g


def equal_up_to_scalar(f, g):
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return primitive_normalize(f) == primitive_normalize(g)


def _prem(f, g, name):
    """Pseudo-remainder of f by g in one variable."""
    dg = g.degree_in(name)
    lcg = g.coefficient(name, dg)
    x = MultiPoly.var(f.ring, name)
    r = f
    while not r.is_zero() and r.degree_in(name) >= dg:
        dr = r.degree_in(name)
        lcr = r.coefficient(name, dr)
        r = r * lcg - g * lcr * x ** (dr - dg)
    return r


def _content_in(f, name):
    """Gcd of the coefficients of f viewed in one variable."""
    coeffs = list(f.coeffs_in(name).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = multigcd(g, c)
        if g.is_constant():
            break
    return g


def multigcd(f, g):
    """Greatest common divisor, canonicalized; primitive-part recursion."""
    if f.is_zero() and g.is_zero():
        raise ValidationError("gcd of two zero polynomials")
    if f.is_zero():
        return primitive_normalize(g)
    if g.is_zero():
        return primitive_normalize(f)
    if f.is_constant() or g.is_constant():
        return MultiPoly.const(f.ring, 1)
    fvars = set(f.variables())
    gvars = set(g.variables())
    common = [n for n in f.ring.names if n in fvars and n in gvars]
    if not common:
        return MultiPoly.const(f.ring, 1)
    name = common[-1]
    if name not in fvars or f.degree_in(name) == 0:
        return multigcd(_content_in(g, name), f)
    cf = _content_in(f, name)
    cg = _content_in(g, name)
    c = multigcd(cf, cg)
    fp = exact_div(f, cf)
    gp = exact_div(g, cg)
    if fp.degree_in(name) < gp.degree_in(name):
        fp, gp = gp, fp
    while not gp.is_zero():
        r = _prem(fp, gp, name)
        if r.is_zero():
            fp = gp
            break
        if r.degree_in(name) == 0:
            fp = MultiPoly.const(f.ring, 1)
            break
        fp, gp = gp, exact_div(r, _content_in(r, name))
        if gp.degree_in(name) > fp.degree_in(name):
            fp, gp = gp, fp
        if fp.degree_in(name) == 0 or (not gp.is_zero() and gp.degree_in(name) == 0):
            fp = MultiPoly.const(f.ring, 1)
            break
    result = c * exact_div(fp, _content_in(fp, name)) if not fp.is_constant() else c
    return primitive_normalize(result)
