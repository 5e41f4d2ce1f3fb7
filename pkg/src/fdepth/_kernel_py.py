"""Pure-Python polynomial kernel (fallback backend).

A polynomial over F_p in n variables is a tuple of terms, each term a pair
``(coeff, exps)`` with ``coeff`` an int in [1, p-1] and ``exps`` a tuple of n
non-negative ints.  Terms are strictly descending in the active monomial
order; the zero polynomial is the empty tuple.  All functions are pure and
never mutate their arguments, so values are safely shareable.

Monomial orders are passed as a pair of ints ``(okind, split)``:

* ``okind = 0`` -- grevlex: higher total degree wins, ties broken so that the
  last nonzero entry of a-b being negative means a > b;
* ``okind = 1`` -- lex;
* ``okind = 2`` -- block elimination: grevlex on ``exps[:split]`` first, then
  grevlex on ``exps[split:]``.

The compiled backend (``fdepth._speedups``) mirrors this module function for
function; representations are opaque to callers and may differ between
backends, so polynomials must never be mixed across backends.
"""

GREVLEX = 0
LEX = 1
BLOCK = 2

BACKEND_NAME = "python"


# ---------------------------------------------------------------------------
# monomials

def _grevlex_cmp(a, b):
    da = sum(a)
    db = sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


def mono_cmp(a, b, okind, split):
    """Three-way comparison of exponent tuples: 1 if a > b, -1 if a < b."""
    if okind == GREVLEX:
        return _grevlex_cmp(a, b)
    if okind == LEX:
        for x, y in zip(a, b):
            if x != y:
                return 1 if x > y else -1
        return 0
    c = _grevlex_cmp(a[:split], b[:split])
    if c:
        return c
    return _grevlex_cmp(a[split:], b[split:])


def mono_key(a, okind, split):
    """Sort key ascending in the order (key(a) < key(b) iff a < b)."""
    if okind == GREVLEX:
        return (sum(a), tuple(-e for e in reversed(a)))
    if okind == LEX:
        return a
    return (mono_key(a[:split], GREVLEX, 0), mono_key(a[split:], GREVLEX, 0))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


# ---------------------------------------------------------------------------
# polynomial construction / queries

def poly_zero(n):
    return ()


def poly_from_terms(pairs, p, n, okind, split):
    """Canonicalize arbitrary (coeff, exps) pairs: merge, mod p, sort."""
    acc = {}
    for c, e in pairs:
        e = tuple(int(x) for x in e)
        if len(e) != n:
            raise ValueError(f"expected {n} exponents, got {len(e)}")
        if any(x < 0 for x in e):
            raise ValueError("negative exponent")
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
    return tuple((c, e) for e, c in items)


def poly_from_descending(terms, n):
    """Trusting constructor: terms already canonical (sorted, reduced)."""
    return tuple(terms)


def poly_terms(f):
    """Terms as (coeff, exps) pairs, descending."""
    return f


def poly_is_zero(f):
    return not f


def poly_nterms(f):
    return len(f)


def poly_lt(f):
    """Leading term (coeff, exps), or None for the zero polynomial."""
    return f[0] if f else None


def poly_tail(f):
    return f[1:]


def poly_eq(f, g):
    return f == g


def poly_total_degree(f):
    """Max total degree over terms; -1 for zero."""
    if not f:
        return -1
    return max(sum(e) for _, e in f)


def poly_is_homogeneous(f):
    if not f:
        return True
    d = sum(f[0][1])
    return all(sum(e) == d for _, e in f)


# ---------------------------------------------------------------------------
# arithmetic

def poly_neg(f, p):
    return tuple((p - c, e) for c, e in f)


def poly_scale(f, c, p):
    c %= p
    if not c:
        return ()
    return tuple(((ci * c) % p, e) for ci, e in f)


def poly_mul_term(f, c, m, p):
    """f * (c * x^m).  Multiplying by a monomial preserves term order."""
    c %= p
    if not c or not f:
        return ()
    return tuple(((ci * c) % p, mono_mul(e, m)) for ci, e in f)


def poly_add(f, g, p, okind, split):
    if not f:
        return g
    if not g:
        return f
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        cf, ef = f[i]
        cg, eg = g[j]
        c = mono_cmp(ef, eg, okind, split)
        if c > 0:
            out.append((cf, ef))
            i += 1
        elif c < 0:
            out.append((cg, eg))
            j += 1
        else:
            s = (cf + cg) % p
            if s:
                out.append((s, ef))
            i += 1
            j += 1
    out.extend(f[i:])
    out.extend(g[j:])
    return tuple(out)


def poly_sub(f, g, p, okind, split):
    return poly_add(f, poly_neg(g, p), p, okind, split)


def poly_sub_mul_term(f, c, m, g, p, okind, split):
    """f - (c * x^m) * g, merged in one pass.  The reduction workhorse."""
    c %= p
    if not c or not g:
        return f
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        cf, ef = f[i]
        cg, eg = g[j]
        eg = mono_mul(eg, m)
        cmpv = mono_cmp(ef, eg, okind, split)
        if cmpv > 0:
            out.append((cf, ef))
            i += 1
        elif cmpv < 0:
            out.append(((p - cg * c % p) % p, eg))
            j += 1
        else:
            s = (cf - cg * c) % p
            if s:
                out.append((s, ef))
            i += 1
            j += 1
    out.extend(f[i:])
    for j in range(j, ng):
        cg, eg = g[j]
        out.append(((p - cg * c % p) % p, mono_mul(eg, m)))
    return tuple(out)


def poly_mul(f, g, p, okind, split):
    if not f or not g:
        return ()
    if len(f) > len(g):
        f, g = g, f
    acc = {}
    for cf, ef in f:
        for cg, eg in g:
            e = mono_mul(ef, eg)
            c0 = acc.get(e)
            if c0 is None:
                acc[e] = cf * cg % p
            else:
                c0 = (c0 + cf * cg) % p
                if c0:
                    acc[e] = c0
                else:
                    del acc[e]
    items = sorted(acc.items(), key=lambda kv: mono_key(kv[0], okind, split),
                   reverse=True)
    return tuple((c, e) for e, c in items)


def poly_power_bracket(f, q, p):
    """f^q for q a power of p: term-wise (Frobenius is a ring map)."""
    if q == 1:
        return f
    return tuple((pow(c, q, p), tuple(x * q for x in e)) for c, e in f)


# ---------------------------------------------------------------------------
# division

def poly_nf(f, basis, p, okind, split):
    """Full normal form of f against a list of nonzero polynomials.

    Deterministic: reducers are tried in list order and the leftmost
    (order-largest) reducible term is rewritten first.
    """
    heads = [(g[0][1], pow(g[0][0], p - 2, p), g) for g in basis]
    out = []
    work = f
    while work:
        c0, e0 = work[0]
        for lm, lcinv, g in heads:
            if mono_divides(lm, e0):
                work = poly_sub_mul_term(work, c0 * lcinv % p,
                                         mono_div(e0, lm), g, p, okind, split)
                break
        else:
            out.append((c0, e0))
            work = work[1:]
    return tuple(out)
