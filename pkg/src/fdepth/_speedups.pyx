# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernel.

Mirrors fdepth._kernel_py function for function.  A polynomial is a
PolyData: a flat int64 buffer of terms with stride nvars+2, each term laid
out as [coeff, total_degree, e_0 .. e_{n-1}], strictly descending in the
active monomial order.  Exponents are capped at 2^31 on input and 2^62
after bracket powers, which keeps every comparison and degree sum inside
int64.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memcpy

import itertools

GREVLEX = 0
LEX = 1
BLOCK = 2

BACKEND_NAME = "cython"

cdef long long _EXP_INPUT_MAX = (<long long> 1) << 31
cdef long long _EXP_HARD_MAX = (<long long> 1) << 62


cdef class PolyData:
    cdef long long* buf
    cdef Py_ssize_t nterms
    cdef int nvars

    def __cinit__(self):
        self.buf = NULL
        self.nterms = 0
        self.nvars = 0

    def __dealloc__(self):
        if self.buf != NULL:
            PyMem_Free(self.buf)
            self.buf = NULL

    def __reduce__(self):
        return (_rebuild, (poly_terms(self), self.nvars))


def _rebuild(terms, n):
    return poly_from_descending(terms, n)


cdef PolyData _alloc(int nvars, Py_ssize_t nterms):
    cdef PolyData out = PolyData.__new__(PolyData)
    out.nvars = nvars
    out.nterms = nterms
    if nterms > 0:
        out.buf = <long long*> PyMem_Malloc(nterms * (nvars + 2) * sizeof(long long))
        if out.buf == NULL:
            raise MemoryError()
    return out


cdef inline int _term_cmp(long long* s, long long* t, int n, int okind, int split) noexcept nogil:
    cdef int i
    cdef long long da, db
    if okind == 0:
        if s[1] != t[1]:
            return 1 if s[1] > t[1] else -1
        for i in range(n - 1, -1, -1):
            if s[2 + i] != t[2 + i]:
                return 1 if s[2 + i] < t[2 + i] else -1
        return 0
    elif okind == 1:
        for i in range(n):
            if s[2 + i] != t[2 + i]:
                return 1 if s[2 + i] > t[2 + i] else -1
        return 0
    else:
        da = 0
        db = 0
        for i in range(split):
            da += s[2 + i]
            db += t[2 + i]
        if da != db:
            return 1 if da > db else -1
        for i in range(split - 1, -1, -1):
            if s[2 + i] != t[2 + i]:
                return 1 if s[2 + i] < t[2 + i] else -1
        da = 0
        db = 0
        for i in range(split, n):
            da += s[2 + i]
            db += t[2 + i]
        if da != db:
            return 1 if da > db else -1
        for i in range(n - 1, split - 1, -1):
            if s[2 + i] != t[2 + i]:
                return 1 if s[2 + i] < t[2 + i] else -1
        return 0


cdef inline long long _mod_inv(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# monomial helpers (tuple in, tuple out: these are not the hot path)

def mono_cmp(a, b, okind, split):
    cdef int n = len(a)
    cdef int i
    cdef long long x, y, da, db
    if okind == 1:
        for i in range(n):
            x = a[i]; y = b[i]
            if x != y:
                return 1 if x > y else -1
        return 0
    if okind == 0:
        blocks = ((0, n),)
    else:
        blocks = ((0, split), (split, n))
    for lo_hi in blocks:
        da = 0; db = 0
        for i in range(lo_hi[0], lo_hi[1]):
            da += a[i]; db += b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(lo_hi[1] - 1, lo_hi[0] - 1, -1):
            x = a[i]; y = b[i]
            if x != y:
                return 1 if x < y else -1
    return 0


def mono_key(a, okind, split):
    if okind == 0:
        return (sum(a), tuple(-e for e in reversed(a)))
    if okind == 1:
        return tuple(a)
    return (mono_key(a[:split], 0, 0), mono_key(a[split:], 0, 0))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


# ---------------------------------------------------------------------------
# construction / queries

def poly_zero(n):
    return _alloc(n, 0)


def poly_from_terms(pairs, p, n, okind, split):
    cdef dict acc = {}
    for c, e in pairs:
        e = tuple(int(x) for x in e)
        if len(e) != n:
            raise ValueError(f"expected {n} exponents, got {len(e)}")
        for x in e:
            if x < 0:
                raise ValueError("negative exponent")
            if x >= _EXP_INPUT_MAX:
                raise OverflowError("exponent exceeds 2^31")
        c = int(c) % p
        if not c:
            continue
        c0 = acc.get(e)
        if c0 is None:
            acc[e] = c
        else:
            c0 = (c0 + c) % p
            if c0:
                acc[e] = c0
            else:
                del acc[e]
    items = sorted(acc.items(), key=lambda kv: mono_key(kv[0], okind, split),
                   reverse=True)
    return poly_from_descending(tuple((c, e) for e, c in items), n)


def poly_from_descending(terms, n):
    cdef Py_ssize_t m = len(terms)
    cdef PolyData out = _alloc(n, m)
    cdef Py_ssize_t t
    cdef int i
    cdef int stride = n + 2
    cdef long long deg, x
    for t in range(m):
        c, e = terms[t]
        out.buf[t * stride] = c
        deg = 0
        for i in range(n):
            x = e[i]
            out.buf[t * stride + 2 + i] = x
            deg += x
        out.buf[t * stride + 1] = deg
    return out


def poly_terms(PolyData f):
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t t
    cdef int i
    out = []
    for t in range(f.nterms):
        out.append((f.buf[t * stride],
                    tuple(f.buf[t * stride + 2 + i] for i in range(f.nvars))))
    return tuple(out)


def poly_is_zero(PolyData f):
    return f.nterms == 0


def poly_nterms(PolyData f):
    return f.nterms


def poly_lt(PolyData f):
    cdef int i
    if f.nterms == 0:
        return None
    return (f.buf[0], tuple(f.buf[2 + i] for i in range(f.nvars)))


def poly_tail(PolyData f):
    cdef PolyData out
    cdef int stride = f.nvars + 2
    if f.nterms <= 1:
        return _alloc(f.nvars, 0)
    out = _alloc(f.nvars, f.nterms - 1)
    memcpy(out.buf, f.buf + stride, (f.nterms - 1) * stride * sizeof(long long))
    return out


def poly_eq(PolyData f, PolyData g):
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t i
    if f.nterms != g.nterms or f.nvars != g.nvars:
        return False
    for i in range(f.nterms * stride):
        if f.buf[i] != g.buf[i]:
            return False
    return True


def poly_total_degree(PolyData f):
    cdef long long best = -1
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t t
    for t in range(f.nterms):
        if f.buf[t * stride + 1] > best:
            best = f.buf[t * stride + 1]
    return best


def poly_is_homogeneous(PolyData f):
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t t
    if f.nterms == 0:
        return True
    for t in range(1, f.nterms):
        if f.buf[t * stride + 1] != f.buf[1]:
            return False
    return True


# ---------------------------------------------------------------------------
# arithmetic

def poly_neg(PolyData f, p):
    cdef PolyData out = _alloc(f.nvars, f.nterms)
    cdef int stride = f.nvars + 2
    cdef long long pp = p
    cdef Py_ssize_t t
    memcpy(out.buf, f.buf, f.nterms * stride * sizeof(long long))
    for t in range(f.nterms):
        out.buf[t * stride] = pp - out.buf[t * stride]
    return out


def poly_scale(PolyData f, c, p):
    cdef long long cc = c % p
    cdef long long pp = p
    cdef PolyData out
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t t
    if cc == 0:
        return _alloc(f.nvars, 0)
    out = _alloc(f.nvars, f.nterms)
    memcpy(out.buf, f.buf, f.nterms * stride * sizeof(long long))
    for t in range(f.nterms):
        out.buf[t * stride] = out.buf[t * stride] * cc % pp
    return out


def poly_mul_term(PolyData f, c, m, p):
    cdef long long cc = c % p
    cdef long long pp = p
    cdef PolyData out
    cdef int stride = f.nvars + 2
    cdef int n = f.nvars
    cdef Py_ssize_t t
    cdef int i
    cdef long long deg_m = 0
    if cc == 0 or f.nterms == 0:
        return _alloc(f.nvars, 0)
    out = _alloc(n, f.nterms)
    memcpy(out.buf, f.buf, f.nterms * stride * sizeof(long long))
    mm = tuple(m)
    cdef long long* shift = <long long*> PyMem_Malloc(n * sizeof(long long))
    if shift == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            shift[i] = mm[i]
            deg_m += shift[i]
        for t in range(f.nterms):
            out.buf[t * stride] = out.buf[t * stride] * cc % pp
            out.buf[t * stride + 1] += deg_m
            for i in range(n):
                out.buf[t * stride + 2 + i] += shift[i]
    finally:
        PyMem_Free(shift)
    return out


cdef PolyData _merge(PolyData f, PolyData g, long long cg, long long p,
                     int okind, int split, long long* shift, long long deg_m):
    """f + cg * x^shift * g, merged in one pass (shift may be NULL)."""
    cdef int n = f.nvars
    cdef int stride = n + 2
    cdef PolyData out = _alloc(n, f.nterms + g.nterms)
    cdef long long* tmp = <long long*> PyMem_Malloc(stride * sizeof(long long))
    cdef Py_ssize_t i = 0, j = 0, k = 0
    cdef long long* fb = f.buf
    cdef long long* gbuf = g.buf
    cdef long long* ob = out.buf
    cdef int cmpv, q
    cdef long long s
    if tmp == NULL:
        raise MemoryError()
    try:
        while i < f.nterms and j < g.nterms:
            tmp[0] = gbuf[j * stride]
            tmp[1] = gbuf[j * stride + 1] + deg_m
            if shift != NULL:
                for q in range(n):
                    tmp[2 + q] = gbuf[j * stride + 2 + q] + shift[q]
            else:
                for q in range(n):
                    tmp[2 + q] = gbuf[j * stride + 2 + q]
            cmpv = _term_cmp(fb + i * stride, tmp, n, okind, split)
            if cmpv > 0:
                memcpy(ob + k * stride, fb + i * stride, stride * sizeof(long long))
                k += 1
                i += 1
            elif cmpv < 0:
                memcpy(ob + k * stride, tmp, stride * sizeof(long long))
                ob[k * stride] = tmp[0] * cg % p
                if ob[k * stride] != 0:
                    k += 1
                j += 1
            else:
                s = (fb[i * stride] + tmp[0] * cg) % p
                if s != 0:
                    memcpy(ob + k * stride, fb + i * stride, stride * sizeof(long long))
                    ob[k * stride] = s
                    k += 1
                i += 1
                j += 1
        while i < f.nterms:
            memcpy(ob + k * stride, fb + i * stride, stride * sizeof(long long))
            k += 1
            i += 1
        while j < g.nterms:
            tmp[0] = gbuf[j * stride] * cg % p
            tmp[1] = gbuf[j * stride + 1] + deg_m
            if shift != NULL:
                for q in range(n):
                    tmp[2 + q] = gbuf[j * stride + 2 + q] + shift[q]
            else:
                for q in range(n):
                    tmp[2 + q] = gbuf[j * stride + 2 + q]
            if tmp[0] != 0:
                memcpy(ob + k * stride, tmp, stride * sizeof(long long))
                k += 1
            j += 1
    finally:
        PyMem_Free(tmp)
    out.nterms = k
    return out


def poly_add(PolyData f, PolyData g, p, okind, split):
    if f.nterms == 0:
        return g
    if g.nterms == 0:
        return f
    return _merge(f, g, 1, p, okind, split, NULL, 0)


def poly_sub(PolyData f, PolyData g, p, okind, split):
    if g.nterms == 0:
        return f
    return _merge(f, g, p - 1, p, okind, split, NULL, 0)


def poly_sub_mul_term(PolyData f, c, m, PolyData g, p, okind, split):
    """f - (c * x^m) * g."""
    cdef long long cc = c % p
    cdef long long pp = p
    cdef int n = f.nvars
    cdef int i
    cdef long long deg_m = 0
    if cc == 0 or g.nterms == 0:
        return f
    mm = tuple(m)
    cdef long long* shift = <long long*> PyMem_Malloc(n * sizeof(long long))
    if shift == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            shift[i] = mm[i]
            deg_m += shift[i]
        return _merge(f, g, (pp - cc) % pp, pp, okind, split, shift, deg_m)
    finally:
        PyMem_Free(shift)


def poly_mul(PolyData f, PolyData g, p, okind, split):
    cdef PolyData acc, small, big
    cdef int stride
    cdef Py_ssize_t t
    cdef long long deg_m
    cdef long long* shift
    cdef int n = f.nvars
    cdef int i
    if f.nterms == 0 or g.nterms == 0:
        return _alloc(n, 0)
    if f.nterms <= g.nterms:
        small, big = f, g
    else:
        small, big = g, f
    stride = n + 2
    acc = _alloc(n, 0)
    shift = <long long*> PyMem_Malloc(n * sizeof(long long))
    if shift == NULL:
        raise MemoryError()
    try:
        for t in range(small.nterms):
            deg_m = small.buf[t * stride + 1]
            for i in range(n):
                shift[i] = small.buf[t * stride + 2 + i]
            acc = _merge(acc, big, small.buf[t * stride], p, okind, split,
                         shift, deg_m)
    finally:
        PyMem_Free(shift)
    return acc


def poly_power_bracket(PolyData f, q, p):
    cdef long long qq = q
    cdef long long pp = p
    cdef PolyData out
    cdef int stride = f.nvars + 2
    cdef Py_ssize_t t
    cdef int i
    if qq == 1:
        return f
    out = _alloc(f.nvars, f.nterms)
    memcpy(out.buf, f.buf, f.nterms * stride * sizeof(long long))
    for t in range(f.nterms):
        out.buf[t * stride] = pow(out.buf[t * stride], qq, pp)
        if out.buf[t * stride + 1] > _EXP_HARD_MAX // qq:
            raise OverflowError("bracket power exceeds the exponent range")
        out.buf[t * stride + 1] *= qq
        for i in range(f.nvars):
            out.buf[t * stride + 2 + i] *= qq
    return out


# ---------------------------------------------------------------------------
# division

def poly_nf(PolyData f, basis, p, okind, split):
    """Full normal form; reducers in list order, leftmost reducible term
    first.  Mirrors the pure backend exactly."""
    cdef Py_ssize_t nb = len(basis)
    cdef int n = f.nvars
    cdef int stride = n + 2
    cdef long long pp = p
    cdef PolyData g, work, result
    cdef Py_ssize_t b, reducer
    cdef int i, divides
    cdef long long c0
    if f.nterms == 0 or nb == 0:
        return f

    cdef long long* heads = <long long*> PyMem_Malloc(nb * (n + 2) * sizeof(long long))
    # heads layout per reducer: [lcinv, deg, exps...]
    if heads == NULL:
        raise MemoryError()
    cdef long long* shift = <long long*> PyMem_Malloc(n * sizeof(long long))
    if shift == NULL:
        PyMem_Free(heads)
        raise MemoryError()

    cdef long long* out = <long long*> PyMem_Malloc(f.nterms * stride * sizeof(long long))
    cdef Py_ssize_t out_len = 0
    cdef Py_ssize_t out_cap = f.nterms
    cdef long long* tmp_out
    cdef long long deg_m
    if out == NULL:
        PyMem_Free(heads)
        PyMem_Free(shift)
        raise MemoryError()

    try:
        for b in range(nb):
            g = <PolyData> basis[b]
            heads[b * (n + 2)] = _mod_inv(g.buf[0], pp)
            heads[b * (n + 2) + 1] = g.buf[1]
            for i in range(n):
                heads[b * (n + 2) + 2 + i] = g.buf[2 + i]

        work = f
        while work.nterms > 0:
            reducer = -1
            for b in range(nb):
                if heads[b * (n + 2) + 1] > work.buf[1]:
                    continue
                divides = 1
                for i in range(n):
                    if heads[b * (n + 2) + 2 + i] > work.buf[2 + i]:
                        divides = 0
                        break
                if divides:
                    reducer = b
                    break
            if reducer < 0:
                if out_len == out_cap:
                    out_cap *= 2
                    tmp_out = <long long*> PyMem_Malloc(out_cap * stride * sizeof(long long))
                    if tmp_out == NULL:
                        raise MemoryError()
                    memcpy(tmp_out, out, out_len * stride * sizeof(long long))
                    PyMem_Free(out)
                    out = tmp_out
                memcpy(out + out_len * stride, work.buf, stride * sizeof(long long))
                out_len += 1
                work = poly_tail(work)
            else:
                g = <PolyData> basis[reducer]
                c0 = work.buf[0] * heads[reducer * (n + 2)] % pp
                deg_m = work.buf[1] - heads[reducer * (n + 2) + 1]
                for i in range(n):
                    shift[i] = work.buf[2 + i] - heads[reducer * (n + 2) + 2 + i]
                work = _merge(work, g, (pp - c0) % pp, pp, okind, split,
                              shift, deg_m)

        result = _alloc(n, out_len)
        memcpy(result.buf, out, out_len * stride * sizeof(long long))
        return result
    finally:
        PyMem_Free(heads)
        PyMem_Free(shift)
        PyMem_Free(out)
