"""Groebner engine for ideals and submodules of free modules.

Submodules of R^r are handled with a position-over-term order (compare the
position first -- lower index wins -- then the ring's monomial order on the
entry).  Ideals are the r = 1 case of the same engine.  Syzygies and
division certificates both come from one primitive: the Groebner basis of
the graph module {(g_i, e_i)} in R^(r+k), whose elements with leading term
in the tail block generate the syzygy module, and whose normal forms yield
coefficient certificates for membership.

Everything is deterministic: generators are canonically sorted before any
basis computation, the pair queue is ordered by (lcm degree, lcm monomial,
indices), and reduced bases are returned in descending leading-term order.

Concurrency: Groebner caches on Ideal/Submodule are fill-once; populate
them eagerly (or from a single thread) before sharing across workers.
"""

import heapq
from functools import cmp_to_key

from ._kernel import impl as K
from .errors import (DimensionMismatch, NotMonomial, NotSquarefree,
                     ResourceExhausted, UnitIdeal, ZeroDimensional)
from .ring import Polynomial

DEFAULT_PAIR_CAP = 10 ** 6

# Self-check switch: when on, every computed basis is certified (inputs and
# all S-pairs reduce to zero) and syzygies are dotted against the generators.
VERIFY = False


def set_verify(on):
    global VERIFY
    VERIFY = bool(on)


# ---------------------------------------------------------------------------
# raw vectors: tuples of kernel polynomial handles

def _raw_zero_vec(r, n):
    z = K.poly_zero(n)
    return (z,) * r


def _vec_is_zero(v):
    return all(K.poly_is_zero(d) for d in v)


def _vec_lead(v):
    """(position, coeff, exps) of the POT-leading term, or None."""
    for i, d in enumerate(v):
        t = K.poly_lt(d)
        if t is not None:
            return (i, t[0], t[1])
    return None


def _vec_scale(v, c, p):
    return tuple(K.poly_scale(d, c, p) for d in v)


def _vec_monic(v, p):
    lead = _vec_lead(v)
    if lead is None or lead[1] == 1:
        return v
    inv = pow(lead[1], p - 2, p)
    return _vec_scale(v, inv, p)


def _vec_key(v, ctx):
    """Total deterministic key (used only for canonical sorting)."""
    ok, sp = ctx.okind, ctx.split
    return tuple(tuple((K.mono_key(e, ok, sp), c) for c, e in K.poly_terms(d))
                 for d in v)


def _vec_degree(v, shifts=None):
    """Max twisted degree over entries; -1 for the zero vector."""
    best = -1
    for i, d in enumerate(v):
        dd = K.poly_total_degree(d)
        if dd >= 0:
            if shifts is not None:
                dd += shifts[i]
            best = max(best, dd)
    return best


def _vec_is_homogeneous(v, shifts):
    deg = None
    for i, d in enumerate(v):
        if K.poly_is_zero(d):
            continue
        if not K.poly_is_homogeneous(d):
            return False
        dd = K.poly_total_degree(d) + (shifts[i] if shifts else 0)
        if deg is None:
            deg = dd
        elif deg != dd:
            return False
    return True


def _lead_cmp(a, b, ctx):
    """POT comparison of (pos, coeff, exps) leads: position first, lower
    index wins; ties decided by the ring's monomial order."""
    if a[0] != b[0]:
        return 1 if a[0] < b[0] else -1
    return K.mono_cmp(a[2], b[2], ctx.okind, ctx.split)


# ---------------------------------------------------------------------------
# normal form

class _Basis:
    """Reducer list bucketed by lead position, in fixed list order."""

    __slots__ = ("buckets", "rank")

    def __init__(self, rank):
        self.rank = rank
        self.buckets = {}

    def add(self, v, p):
        lead = _vec_lead(v)
        pos, c, e = lead
        inv = 1 if c == 1 else pow(c, p - 2, p)
        self.buckets.setdefault(pos, []).append((e, inv, v))

    @classmethod
    def from_vecs(cls, vecs, rank, p):
        b = cls(rank)
        for v in vecs:
            if not _vec_is_zero(v):
                b.add(v, p)
        return b


def _vec_nf(v, basis, ctx, stop_rank=None):
    """Full normal form of a raw vector against a _Basis.

    Reducers are tried in list order; the POT-leftmost reducible term is
    rewritten first.  Terms at positions >= stop_rank are never reduction
    targets (they still receive reduction tails), which is what certificate
    extraction wants.
    """
    p, ok, sp = ctx.p, ctx.okind, ctx.split
    r = len(v)
    stop = r if stop_rank is None else min(stop_rank, r)
    work = list(v)
    for pos in range(stop):
        bucket = basis.buckets.get(pos)
        ent = work[pos]
        if bucket is None or K.poly_is_zero(ent):
            continue
        if r == 1:
            work[0] = K.poly_nf(ent, [g[0] for _, _, g in bucket], p, ok, sp)
            break
        out = []
        while True:
            t = K.poly_lt(ent)
            if t is None:
                break
            c0, e0 = t
            for lm, lcinv, gvec in bucket:
                if K.mono_divides(lm, e0):
                    c = c0 * lcinv % p
                    m = K.mono_div(e0, lm)
                    ent = K.poly_sub_mul_term(ent, c, m, gvec[pos], p, ok, sp)
                    for q in range(pos + 1, r):
                        gq = gvec[q]
                        if not K.poly_is_zero(gq):
                            work[q] = K.poly_sub_mul_term(work[q], c, m, gq, p, ok, sp)
                    break
            else:
                out.append(t)
                ent = K.poly_tail(ent)
        work[pos] = K.poly_from_descending(tuple(out), ctx.n)
    return tuple(work)


# ---------------------------------------------------------------------------
# Buchberger for submodules of R^r (position-over-term)

def _spair(vi, leadi, vj, leadj, ctx):
    # both monic, leads at the same position
    _, ei = leadi[0], leadi[2]
    ej = leadj[2]
    lcm = K.mono_lcm(ei, ej)
    mi = K.mono_div(lcm, ei)
    mj = K.mono_div(lcm, ej)
    p, ok, sp = ctx.p, ctx.okind, ctx.split
    return tuple(
        K.poly_sub_mul_term(K.poly_mul_term(a, 1, mi, p), 1, mj, b, p, ok, sp)
        for a, b in zip(vi, vj))


class _ModuleGB:
    """A reduced Groebner basis of a submodule of R^r, plus its reducer index."""

    __slots__ = ("ctx", "rank", "elements", "basis")

    def __init__(self, ctx, rank, elements):
        self.ctx = ctx
        self.rank = rank
        self.elements = elements          # canonical descending-lead order
        self.basis = _Basis.from_vecs(elements, rank, ctx.p)

    def nf(self, v, stop_rank=None):
        return _vec_nf(v, self.basis, self.ctx, stop_rank)

    def contains(self, v):
        return _vec_is_zero(self.nf(v))


def _pair_key(lead_i, lead_j, i, j, ctx):
    lcm = K.mono_lcm(lead_i[2], lead_j[2])
    return (K.mono_deg(lcm), K.mono_key(lcm, ctx.okind, ctx.split),
            lead_i[0], i, j)


def _update_pairs(G, leads, P, heap, t, ctx, rank):
    """Gebauer-Moeller pair-set maintenance after appending element t."""
    lcm = K.mono_lcm
    div = K.mono_divides
    posf, _, lmf = leads[t]

    kept = set()
    for (i, j) in P:
        li, lj = leads[i], leads[j]
        if li[0] != posf:
            kept.add((i, j))
            continue
        lcm_ij = lcm(li[2], lj[2])
        if (not div(lmf, lcm_ij)
                or lcm(li[2], lmf) == lcm_ij
                or lcm(lj[2], lmf) == lcm_ij):
            kept.add((i, j))
    P.clear()
    P.update(kept)

    groups = {}
    for i in range(t):
        if leads[i][0] != posf:
            continue
        groups.setdefault(lcm(leads[i][2], lmf), []).append(i)
    if not groups:
        return
    ok, sp = ctx.okind, ctx.split
    minimal = []
    for L in sorted(groups, key=lambda m: (K.mono_deg(m), K.mono_key(m, ok, sp))):
        if not any(div(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        members = groups[L]
        if rank == 1 and any(
                lcm(leads[i][2], lmf) == K.mono_mul(leads[i][2], lmf)
                for i in members):
            continue  # Buchberger's product criterion (valid in rank 1 only)
        i = min(members)
        pair = (i, t)
        P.add(pair)
        heapq.heappush(heap, (*_pair_key(leads[i], leads[t], i, t, ctx), pair))


def _module_buchberger(vecs, rank, ctx, pair_cap=None):
    """Reduced Groebner basis of the span of raw vectors in R^rank."""
    cap = DEFAULT_PAIR_CAP if pair_cap is None else pair_cap
    p = ctx.p
    start = [_vec_monic(v, p) for v in vecs if not _vec_is_zero(v)]
    start.sort(key=lambda v: _vec_key(v, ctx))

    G = []
    leads = []
    live = _Basis(rank)
    P = set()
    heap = []

    def append(v):
        G.append(v)
        leads.append(_vec_lead(v))
        live.add(v, p)
        _update_pairs(G, leads, P, heap, len(G) - 1, ctx, rank)

    for v in start:
        nf = _vec_nf(v, live, ctx)
        if not _vec_is_zero(nf):
            append(_vec_monic(nf, p))

    reductions = 0
    while heap:
        *_, pair = heapq.heappop(heap)
        if pair not in P:
            continue
        P.discard(pair)
        i, j = pair
        s = _spair(G[i], leads[i], G[j], leads[j], ctx)
        nf = _vec_nf(s, live, ctx)
        reductions += 1
        if reductions > cap:
            raise ResourceExhausted(
                f"pair-reduction cap {cap} exceeded (rank {rank}, "
                f"{len(G)} basis elements)")
        if not _vec_is_zero(nf):
            append(_vec_monic(nf, p))

    return _interreduce(G, rank, ctx)


def _interreduce(G, rank, ctx):
    lead_sorted = sorted(
        ((_vec_lead(v), v) for v in G if not _vec_is_zero(v)),
        key=cmp_to_key(lambda a, b: _lead_cmp(a[0], b[0], ctx)))
    minimal = []
    for lead, v in lead_sorted:
        if not any(kl[0] == lead[0] and K.mono_divides(kl[2], lead[2])
                   for kl, _ in minimal):
            minimal.append((lead, v))

    reduced = []
    for idx, (lead, v) in enumerate(minimal):
        others = _Basis(rank)
        for k, (_, w) in enumerate(minimal):
            if k != idx:
                others.add(w, ctx.p)
        reduced.append((lead, _vec_nf(v, others, ctx)))

    reduced.sort(key=cmp_to_key(lambda a, b: -_lead_cmp(a[0], b[0], ctx)))
    return _ModuleGB(ctx, rank, [v for _, v in reduced])


def _certify_gb(gb, inputs, ctx):
    """Self-check: inputs and all S-pairs of the basis reduce to zero."""
    for v in inputs:
        assert _vec_is_zero(gb.nf(v)), "input does not reduce to zero"
    els = gb.elements
    leads = [_vec_lead(v) for v in els]
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if leads[i][0] != leads[j][0]:
                continue
            s = _spair(els[i], leads[i], els[j], leads[j], ctx)
            assert _vec_is_zero(gb.nf(s)), "S-pair does not reduce to zero"


def _gb_of_raw(vecs, rank, ctx, pair_cap=None):
    gb = _module_buchberger(vecs, rank, ctx, pair_cap)
    if VERIFY:
        _certify_gb(gb, vecs, ctx)
    return gb


# ---------------------------------------------------------------------------
# graph bases: span + syzygies + certificates from one computation

class _GraphGB:
    """Reduced GB of the graph module {(g_i, e_i)} <= R^(r+k) under POT.

    Elements whose lead sits in the head block project (on the head) to a
    Groebner basis of the span of the g_i; elements with zero head carry the
    syzygies in their tails.  Reducing (w, 0) until the head vanishes leaves
    minus the certificate in the tail.
    """

    __slots__ = ("ctx", "r", "k", "gb", "syz")

    def __init__(self, ctx, gens_raw, r, pair_cap=None):
        self.ctx = ctx
        self.r = r
        self.k = len(gens_raw)
        n = ctx.n
        z = K.poly_zero(n)
        one = K.poly_from_terms([(1, (0,) * n)], ctx.p, n, ctx.okind, ctx.split)
        embedded = []
        for i, v in enumerate(gens_raw):
            unit = [z] * self.k
            unit[i] = one
            embedded.append(tuple(v) + tuple(unit))
        self.gb = _gb_of_raw(embedded, r + self.k, ctx, pair_cap)
        self.syz = [g[r:] for g in self.gb.elements
                    if _vec_lead(g) is not None and _vec_lead(g)[0] >= r]

    def reduce_with_cert(self, w_raw):
        """Return (nf_head, cert) with w = sum(cert_i * g_i) + nf_head'...

        cert is valid exactly when nf_head is zero; callers needing plain
        membership should test that.
        """
        z = K.poly_zero(self.ctx.n)
        v = tuple(w_raw) + (z,) * self.k
        nf = self.gb.nf(v, stop_rank=self.r)
        head = nf[:self.r]
        cert = tuple(K.poly_neg(d, self.ctx.p) for d in nf[self.r:])
        return head, cert


# ---------------------------------------------------------------------------
# public types

class VectorPoly:
    """An element of a free module R^r, stored as a tuple of polynomials."""

    __slots__ = ("ctx", "entries")

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty vector")
        self.ctx = entries[0].ctx
        for e in entries:
            if e.ctx != self.ctx:
                raise DimensionMismatch("mixed rings in one vector")
        self.entries = entries

    @classmethod
    def from_raw(cls, ctx, raw):
        v = object.__new__(cls)
        v.ctx = ctx
        v.entries = tuple(Polynomial(ctx, d) for d in raw)
        return v

    @property
    def raw(self):
        return tuple(e.data for e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def __add__(self, other):
        return VectorPoly([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return VectorPoly([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return VectorPoly([-a for a in self.entries])

    def scale(self, f):
        """Multiply every entry by a polynomial (or int)."""
        return VectorPoly([e * f for e in self.entries])

    def __eq__(self, other):
        return (isinstance(other, VectorPoly) and self.ctx == other.ctx
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __repr__(self):
        return "(" + ", ".join(map(repr, self.entries)) + ")"


class Ideal:
    """An ideal given by generators; the reduced GB is cached lazily.

    All caches (GB, graph basis, resolution, Ext data, lift matrices) are
    fill-once: they never change an already-published value.
    """

    __slots__ = ("ctx", "gens", "_gb", "_graph", "_resolution", "_ext", "_phi")

    def __init__(self, ctx, gens):
        self.ctx = ctx
        kept = []
        for g in gens:
            if isinstance(g, str):
                from .ring import parse_polynomial
                g = parse_polynomial(g, ctx)
            if g.ctx != ctx:
                raise DimensionMismatch("generator from a different ring")
            if g:
                kept.append(g)
        self.gens = tuple(kept)
        self._gb = None
        self._graph = None
        self._resolution = None
        self._ext = {}
        self._phi = None

    def groebner(self, pair_cap=None):
        if self._gb is None:
            raw = [(g.data,) for g in self.gens]
            gb = _gb_of_raw(raw, 1, self.ctx, pair_cap)
            self._gb = tuple(Polynomial(self.ctx, v[0]) for v in gb.elements)
        return self._gb

    def _gb_basis(self):
        self.groebner()
        return _Basis.from_vecs([(g.data,) for g in self._gb], 1, self.ctx.p)

    def graph(self, pair_cap=None):
        if self._graph is None:
            raw = [(g.data,) for g in self.gens]
            self._graph = _GraphGB(self.ctx, raw, 1, pair_cap)
        return self._graph

    def is_zero_ideal(self):
        return not self.gens

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].degree == 0

    def is_monomial(self):
        return all(g.is_monomial() for g in self.gens)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def __repr__(self):
        return "Ideal(" + ", ".join(map(repr, self.gens)) + ")"


class Submodule:
    """A submodule of R^r given by generators, with the same caching deal."""

    __slots__ = ("ctx", "ambient_rank", "gens", "shifts", "_gb")

    def __init__(self, ctx, ambient_rank, gens, shifts=None):
        self.ctx = ctx
        self.ambient_rank = ambient_rank
        kept = []
        for v in gens:
            if len(v) != ambient_rank:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in R^{ambient_rank}")
            if not v.is_zero():
                kept.append(v)
        self.gens = tuple(kept)
        self.shifts = tuple(shifts) if shifts is not None else None
        self._gb = None

    def _raw_gens(self):
        return [v.raw for v in self.gens]

    def module_gb(self, pair_cap=None):
        if self._gb is None:
            self._gb = _gb_of_raw(self._raw_gens(), self.ambient_rank,
                                  self.ctx, pair_cap)
        return self._gb

    def groebner(self, pair_cap=None):
        gb = self.module_gb(pair_cap)
        return tuple(VectorPoly.from_raw(self.ctx, v) for v in gb.elements)

    def contains(self, v):
        if isinstance(v, VectorPoly):
            v = v.raw
        if _vec_is_zero(v):
            return True
        if not self.gens:
            return False
        return self.module_gb().contains(v)

    def contains_submodule(self, other):
        return all(self.contains(v) for v in other.gens)

    def equals(self, other):
        return self.contains_submodule(other) and other.contains_submodule(self)

    def is_zero(self):
        return not self.gens

    def __repr__(self):
        return (f"Submodule(rank={self.ambient_rank}, "
                f"gens={len(self.gens)})")


# ---------------------------------------------------------------------------
# spec operations

def reduce(f, basis):
    """Normal form of a Polynomial or VectorPoly against a list of the same
    kind.  Deterministic: reducers in list order, leftmost reducible term
    first."""
    if isinstance(f, Polynomial):
        ctx = f.ctx
        polys = [g.data for g in basis if g]
        return Polynomial(ctx, K.poly_nf(f.data, polys, ctx.p, ctx.okind, ctx.split))
    ctx = f.ctx
    b = _Basis.from_vecs([v.raw for v in basis], len(f), ctx.p)
    return VectorPoly.from_raw(ctx, _vec_nf(f.raw, b, ctx))


def buchberger(I, pair_cap=None):
    """Reduced Groebner basis of an ideal under its ring's order."""
    return I.groebner(pair_cap)


def membership(f, I):
    return reduce(f, list(I.groebner())).is_zero()


def ideal_equal(I, J):
    if I.ctx != J.ctx:
        raise DimensionMismatch("ideals from different rings")
    return I.groebner() == J.groebner()


def syzygies(M, pair_cap=None):
    """Generators of the kernel of R^k -> ambient, e_i |-> generator i.

    Accepts an Ideal (ambient R^1) or a Submodule.  The result is a
    Submodule of R^k where k = number of generators.
    """
    if isinstance(M, Ideal):
        ctx = M.ctx
        raw = [(g.data,) for g in M.gens]
        r = 1
        graph = M.graph(pair_cap)
    else:
        ctx = M.ctx
        raw = M._raw_gens()
        r = M.ambient_rank
        graph = _GraphGB(ctx, raw, r, pair_cap)
    k = len(raw)
    syz = Submodule(ctx, k, [VectorPoly.from_raw(ctx, s) for s in graph.syz])
    if VERIFY and raw:
        p, ok, sp = ctx.p, ctx.okind, ctx.split
        for s in graph.syz:
            for pos in range(r):
                acc = K.poly_zero(ctx.n)
                for ci, gi in zip(s, raw):
                    acc = K.poly_add(acc, K.poly_mul(ci, gi[pos], p, ok, sp),
                                     p, ok, sp)
                assert K.poly_is_zero(acc), "syzygy does not annihilate"
    return syz


def eliminate(I, drop, pair_cap=None):
    """I intersect F_p[remaining vars], via a block-elimination order.

    Returns an ideal over a fresh ring on the remaining variables (original
    relative order).  ``drop`` is an iterable of variable names or indices.
    """
    ctx = I.ctx
    drop_idx = set()
    for d in drop:
        drop_idx.add(d if isinstance(d, int) else ctx.var_index(d))
    if not drop_idx:
        return Ideal(ctx, I.gens)
    if not drop_idx < set(range(ctx.n)):
        raise ValueError("drop must be a proper subset of the variables")

    dropped = sorted(drop_idx)
    kept = [i for i in range(ctx.n) if i not in drop_idx]
    perm = dropped + kept
    split = len(dropped)
    bctx = ctx.__class__(ctx.p, [ctx.var_names[i] for i in perm],
                         "block", split)

    def permute(f):
        return Polynomial.from_terms(
            bctx, [(c, tuple(e.exponents[i] for i in perm)) for c, e in f.terms])

    J = Ideal(bctx, [permute(g) for g in I.gens])
    gb = J.groebner(pair_cap)

    order = ctx.order if ctx.order != "block" else "grevlex"
    new_ctx = ctx.__class__(ctx.p, [ctx.var_names[i] for i in kept], order)
    out = []
    for g in gb:
        if all(all(e.exponents[i] == 0 for i in range(split)) for _, e in g.terms):
            out.append(Polynomial.from_terms(
                new_ctx, [(c, e.exponents[split:]) for c, e in g.terms]))
    return Ideal(new_ctx, out)


def dim_quotient(I):
    """Krull dimension of R/I via independent sets of the initial ideal."""
    ctx = I.ctx
    if ctx.n > 12:
        raise ValueError("independent-set dimension capped at n <= 12")
    if I.is_unit():
        return -1
    lms = [g.lm_exps() for g in I.groebner()]
    supports = [frozenset(i for i, e in enumerate(exps) if e) for exps in lms]
    best = 0
    for mask in range(1, 1 << ctx.n):
        s = frozenset(i for i in range(ctx.n) if mask >> i & 1)
        if len(s) <= best:
            continue
        if not any(sup <= s for sup in supports):
            best = len(s)
    return best


def height(I):
    if I.is_unit():
        raise UnitIdeal("height of the unit ideal is undefined")
    return I.ctx.n - dim_quotient(I)


def _monomial_supports(I):
    sup = []
    for g in I.gens:
        if not g.is_monomial():
            raise NotMonomial(f"{g!r} is not a monomial")
        _, m = g.lt()
        sup.append(m.exponents)
    return sup


def radical_monomial(I):
    """sqrt(I) for a monomial ideal: squarefree supports, re-minimalized."""
    ctx = I.ctx
    squarefree = {tuple(1 if e else 0 for e in exps)
                  for exps in _monomial_supports(I)}
    minimal = []
    for e in sorted(squarefree, key=sum):
        if not any(K.mono_divides(m, e) for m in minimal):
            minimal.append(e)
    minimal.sort(key=lambda e: K.mono_key(e, ctx.okind, ctx.split), reverse=True)
    return Ideal(ctx, [Polynomial.from_terms(ctx, [(1, e)]) for e in minimal])


def minimal_primes_monomial(I):
    """Minimal primes of a squarefree monomial ideal, as variable-name
    tuples (= minimal vertex covers of the hypergraph of supports)."""
    ctx = I.ctx
    supports = []
    for exps in _monomial_supports(I):
        if any(e > 1 for e in exps):
            raise NotSquarefree("generator is not squarefree")
        supports.append(frozenset(i for i, e in enumerate(exps) if e))
    covers = {frozenset()}
    for s in supports:
        nxt = set()
        for c in covers:
            if c & s:
                nxt.add(c)
            else:
                for v in s:
                    nxt.add(c | {v})
        covers = {c for c in nxt
                  if not any(d < c for d in nxt)}
    out = sorted((tuple(sorted(c)) for c in covers), key=lambda c: (len(c), c))
    return [tuple(ctx.var_names[i] for i in c) for c in out]


def punctured_connected(I):
    """Connectedness (plain, over F_p) of V(I) minus the origin: minimal
    primes are the vertices, with an edge when the union of their variable
    sets is not all variables (the two components meet off the origin)."""
    ctx = I.ctx
    if I.is_unit():
        raise UnitIdeal("V(I) is empty")
    if dim_quotient(I) < 1:
        raise ZeroDimensional("punctured spectrum is empty")
    primes = minimal_primes_monomial(I)
    allvars = set(ctx.var_names)
    m = len(primes)
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in range(m):
            if b not in seen and set(primes[a]) | set(primes[b]) != allvars:
                seen.add(b)
                stack.append(b)
    return len(seen) == m


# ---------------------------------------------------------------------------
# graded minimal generating sets (used by the resolution builder)

def prune_to_minimal(vecs_raw, rank, ctx, shifts=None, pair_cap=None):
    """Deterministic minimal generating set of the span of raw vectors.

    Candidates are processed in ascending (degree, canonical-key) order and
    kept exactly when they are not in the span of the already-kept ones,
    which for graded input yields a minimal (Nakayama) generating set.
    """
    cands = [v for v in vecs_raw if not _vec_is_zero(v)]
    cands.sort(key=lambda v: (_vec_degree(v, shifts), _vec_key(v, ctx)))
    kept = []
    gb = None
    for v in cands:
        if gb is not None and gb.contains(v):
            continue
        kept.append(v)
        gb = _gb_of_raw(kept, rank, ctx, pair_cap)
    return kept
