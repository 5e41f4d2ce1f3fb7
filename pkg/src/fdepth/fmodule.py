"""Frobenius machinery: bracket powers, the pullback functor, Ext modules
as subquotients, the comparison map into the pullback, and the kernel-chain
nilpotency decision procedure.

Everything runs on the finitely generated side.  Ext^j(R/I, R) is presented
as ker(d_{j+1}^T)/im(d_j^T) inside R^{b_j} from the dualised minimal
resolution, and the comparison map

    psi : Ext^j(R/I, R)  ->  F* Ext^j(R/I, R)

is the transpose of a chain-map lift of the natural surjection
R/I^[p] -> R/I, where the resolution of R/I^[p] is taken to be the
entrywise p-th power of the base resolution (never recomputed; that choice
makes Ext^j(R/I^[p], R) literally equal to the entrywise-powered
presentation of Ext^j(R/I, R), because dualising commutes with powering
entry by entry).

Convention note: abstract structural maps are often written in the other
direction, from the pullback into the module.  On the dual side computed
here the natural arrow points into the pullback, and vanishing of the
direct limit of iterates of psi is exactly the nilpotency being decided;
this direction is fixed throughout the package.

The chain itself is the ascending kernel filtration K_0 = 0,
K_{e+1} = psi^{-1}(F* K_e), whose members are the kernels of the composites
E -> F^{e*} E.  One-step stabilization is permanent, so the first
K_e = K_{e+1} stops the scan; a chain that stabilizes at the whole module
is the Nilpotent verdict, a proper stable kernel is NonNilpotent, and
hitting max_e without stabilizing is reported as capped (verdict Unknown),
never guessed.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from ._kernel import impl as K
from . import groebner as gb
from .errors import LiftFailed
from .resolution import (FreeComplex, GradedFreeModule, free_resolution,
                         hilbert_numerator, mat_from_columns_raw, mat_mul,
                         mat_transpose)
from .ring import Polynomial

NILPOTENT = "Nilpotent"
NON_NILPOTENT = "NonNilpotent"

# Direct product enumeration in cofinality_check switches to the pigeonhole
# split above this many product generators.
_COFINALITY_ENUM_LIMIT = 20000


# ---------------------------------------------------------------------------
# subquotients

class Subquotient:
    """A module presented as (numerator gens)/(denominator gens) in R^r."""

    __slots__ = ("ctx", "ambient_rank", "numerator", "denominator")

    def __init__(self, ctx, ambient_rank, numerator, denominator):
        self.ctx = ctx
        self.ambient_rank = ambient_rank
        self.numerator = numerator
        self.denominator = denominator
        if gb.VERIFY:
            assert self.numerator.contains_submodule(self.denominator), \
                "denominator not contained in numerator"

    def is_zero(self):
        if not self.numerator.gens:
            return True
        return self.denominator.contains_submodule(self.numerator)

    def __repr__(self):
        return (f"Subquotient(rank={self.ambient_rank}, "
                f"num={len(self.numerator.gens)}, "
                f"den={len(self.denominator.gens)})")


class SubquotientMap:
    """A map of subquotients given by a lift on the ambient free modules."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix
        if gb.VERIFY:
            self.check_well_defined()

    def apply_raw(self, v_raw):
        ctx = self.source.ctx
        p, ok, sp = ctx.p, ctx.okind, ctx.split
        out = []
        for row in self.matrix:
            acc = K.poly_zero(ctx.n)
            for m, x in zip(row, v_raw):
                if not (K.poly_is_zero(m.data) or K.poly_is_zero(x)):
                    acc = K.poly_add(acc, K.poly_mul(m.data, x, p, ok, sp),
                                     p, ok, sp)
            out.append(acc)
        return tuple(out)

    def check_well_defined(self):
        """Numerator maps into numerator, denominator into denominator."""
        tgt_num = self.target.numerator
        tgt_den = self.target.denominator
        for v in self.source.numerator.gens:
            assert tgt_num.contains(self.apply_raw(v.raw)), \
                "map does not send numerator into numerator"
        for v in self.source.denominator.gens:
            assert tgt_den.contains(self.apply_raw(v.raw)), \
                "map does not send denominator into denominator"
        return True


@dataclass(frozen=True)
class ChainResult:
    """Outcome of a kernel chain at one cohomological index.

    ``capped=True`` means max_e was reached before stabilization; then
    ``verdict`` and ``stab_e`` are None and the result reads as Unknown.
    """

    j: int
    verdict: str | None
    stab_e: int | None
    capped: bool = False

    @property
    def unknown(self):
        return self.capped

    def verdict_str(self):
        return self.verdict if self.verdict is not None else "Unknown"


# ---------------------------------------------------------------------------
# Frobenius powers and pullbacks

def frobenius_power(I, e):
    """The bracket power: the ideal generated by g^(p^e) over I's generators.

    Well defined because (af + bg)^(p^e) = a^(p^e) f^(p^e) + b^(p^e) g^(p^e)
    in characteristic p.
    """
    if e < 0:
        raise ValueError("e must be >= 0")
    if e == 0:
        return I
    ctx = I.ctx
    q = ctx.p ** e
    return gb.Ideal(ctx, [Polynomial(ctx, K.poly_power_bracket(g.data, q, ctx.p))
                          for g in I.gens])


def _power_raw_vec(v, q, p):
    return tuple(K.poly_power_bracket(d, q, p) for d in v)


def frobenius_pullback(obj, e, pair_cap=None):
    """Apply the e-th Frobenius pullback: every polynomial entry goes to its
    p^e-th power and graded shifts scale by p^e.  Exactness of complexes is
    preserved (the ambient ring is regular), which the self-check mode
    re-verifies via d o d = 0 and the Hilbert-numerator substitution
    t -> t^(p^e)."""
    if e < 0:
        raise ValueError("e must be >= 0")
    if e == 0:
        return obj
    if isinstance(obj, Polynomial):
        q = obj.ctx.p ** e
        return Polynomial(obj.ctx, K.poly_power_bracket(obj.data, q, obj.ctx.p))
    if isinstance(obj, gb.VectorPoly):
        ctx = obj.ctx
        q = ctx.p ** e
        return gb.VectorPoly.from_raw(ctx, _power_raw_vec(obj.raw, q, ctx.p))
    if isinstance(obj, gb.Submodule):
        ctx = obj.ctx
        q = ctx.p ** e
        gens = [gb.VectorPoly.from_raw(ctx, _power_raw_vec(v.raw, q, ctx.p))
                for v in obj.gens]
        shifts = tuple(s * q for s in obj.shifts) if obj.shifts else None
        return gb.Submodule(ctx, obj.ambient_rank, gens, shifts)
    if isinstance(obj, Subquotient):
        return Subquotient(obj.ctx, obj.ambient_rank,
                           frobenius_pullback(obj.numerator, e),
                           frobenius_pullback(obj.denominator, e))
    if isinstance(obj, SubquotientMap):
        ctx = obj.source.ctx
        q = ctx.p ** e
        matrix = tuple(tuple(Polynomial(ctx, K.poly_power_bracket(m.data, q, ctx.p))
                             for m in row) for row in obj.matrix)
        return SubquotientMap(frobenius_pullback(obj.source, e),
                              frobenius_pullback(obj.target, e), matrix)
    if isinstance(obj, FreeComplex):
        ctx = obj.ctx
        q = ctx.p ** e
        modules = [GradedFreeModule(m.rank, tuple(s * q for s in m.shifts))
                   for m in obj.modules]
        maps = tuple(
            tuple(tuple(Polynomial(ctx, K.poly_power_bracket(x.data, q, ctx.p))
                        for x in row) for row in m)
            for m in obj.maps)
        out = FreeComplex(ctx, modules, maps, obj.homogeneous)
        if gb.VERIFY:
            assert out.composes_to_zero(), "pullback broke d o d = 0"
            if obj.homogeneous:
                base = hilbert_numerator(obj)
                pulled = hilbert_numerator(out)
                expected = [0] * ((len(base) - 1) * q + 1)
                for d, c in enumerate(base):
                    expected[d * q] = c
                assert tuple(expected) == pulled, \
                    "pullback broke the Hilbert numerator"
        return out
    raise TypeError(f"cannot pull back {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Ext modules from the dualised resolution

def ext_module(I, j, pair_cap=None):
    """Ext^j(R/I, R) = ker(d_{j+1}^T)/im(d_j^T) inside R^(b_j).

    Dualising transposes the differentials; the kernel is a syzygy
    computation on the rows of d_{j+1} and the image is spanned by the rows
    of d_j.  Beyond the resolution length the answer is the zero module.
    """
    ctx = I.ctx
    if not (0 <= j <= ctx.n):
        raise ValueError(f"j={j} outside [0, {ctx.n}]")
    if j in I._ext:
        return I._ext[j]
    C = free_resolution(I, pair_cap)
    if j > C.length:
        zero = gb.Submodule(ctx, 0, [])
        E = Subquotient(ctx, 0, zero, zero)
        I._ext[j] = E
        return E

    rank = C.modules[j].rank
    dual_shifts = tuple(-s for s in C.modules[j].shifts)

    if j == C.length:
        basis = []
        z = K.poly_zero(ctx.n)
        one = ctx.one().data
        for i in range(rank):
            v = [z] * rank
            v[i] = one
            basis.append(gb.VectorPoly.from_raw(ctx, tuple(v)))
        num = gb.Submodule(ctx, rank, basis, dual_shifts)
    else:
        rows = [tuple(x.data for x in row) for row in C.maps[j]]
        graph = gb._GraphGB(ctx, rows, C.modules[j + 1].rank, pair_cap)
        num = gb.Submodule(ctx, rank,
                           [gb.VectorPoly.from_raw(ctx, s) for s in graph.syz],
                           dual_shifts)

    if j == 0:
        den = gb.Submodule(ctx, rank, [], dual_shifts)
    else:
        den = gb.Submodule(ctx, rank,
                           [gb.VectorPoly.from_raw(ctx, tuple(x.data for x in row))
                            for row in C.maps[j - 1]],
                           dual_shifts)

    E = Subquotient(ctx, rank, num, den)
    I._ext[j] = E
    return E


def _lift_matrices(I, level, pair_cap=None):
    """Chain-map lifts phi_k, k <= level, of R/I^[p] -> R/I over the base
    resolution and its entrywise p-th power; phi_0 is the identity."""
    ctx = I.ctx
    C = free_resolution(I, pair_cap)
    if I._phi is None:
        I._phi = [((ctx.one(),),)]
    phi = I._phi
    p = ctx.p
    while len(phi) <= level:
        k = len(phi)
        q_map = tuple(tuple(Polynomial(ctx, K.poly_power_bracket(x.data, p, p))
                            for x in row) for row in C.maps[k - 1])
        target = mat_mul(phi[k - 1], q_map)
        graph = C.level_graph(k, pair_cap)
        cols = []
        rows = len(target)
        for jcol in range(len(target[0])):
            w = tuple(target[i][jcol].data for i in range(rows))
            head, cert = graph.reduce_with_cert(w)
            if not gb._vec_is_zero(head):
                raise LiftFailed(f"no lift at homological degree {k}")
            cols.append(cert)
        phi.append(mat_from_columns_raw(ctx, cols, C.modules[k].rank))
    return phi


def structural_map(I, j, pair_cap=None):
    """The comparison map psi: Ext^j(R/I,R) -> F* Ext^j(R/I,R), as the
    transpose of the chain-map lift at homological degree j."""
    ctx = I.ctx
    if not (0 <= j <= ctx.n):
        raise ValueError(f"j={j} outside [0, {ctx.n}]")
    E = ext_module(I, j, pair_cap)
    FE = frobenius_pullback(E, 1)
    C = free_resolution(I, pair_cap)
    if j > C.length:
        return SubquotientMap(E, FE, ())
    phi = _lift_matrices(I, j, pair_cap)
    return SubquotientMap(E, FE, mat_transpose(phi[j]))


# ---------------------------------------------------------------------------
# the kernel chain

def _step_kernel(psi_cols_on_num, num_raw, S_raw, ctx, rank, pair_cap=None):
    """One chain step: generators of {v in N : psi(v) in <S^[p]>}.

    ``psi_cols_on_num`` are the images psi(N_i) (fixed across steps); the
    preimage is read off the syzygies of [psi(N) | S^[p]] through the
    numerator parametrization.
    """
    p = ctx.p
    T = [_power_raw_vec(v, p, p) for v in S_raw]
    cols = list(psi_cols_on_num) + T
    graph = gb._GraphGB(ctx, cols, rank, pair_cap)
    s = len(psi_cols_on_num)
    out = []
    seen = set()
    for syz in graph.syz:
        u = syz[:s]
        acc = list(gb._raw_zero_vec(rank, ctx.n))
        for ui, ngen in zip(u, num_raw):
            if K.poly_is_zero(ui):
                continue
            for pos in range(rank):
                if not K.poly_is_zero(ngen[pos]):
                    acc[pos] = K.poly_add(
                        acc[pos],
                        K.poly_mul(ui, ngen[pos], p, ctx.okind, ctx.split),
                        p, ctx.okind, ctx.split)
        v = tuple(acc)
        if not gb._vec_is_zero(v):
            key = gb._vec_key(v, ctx)
            if key not in seen:
                seen.add(key)
                out.append(gb._vec_monic(v, p))
    out.sort(key=lambda v: gb._vec_key(v, ctx))
    return out


def kernel_chain(psi, max_e, j=0, pair_cap=None):
    """The chain engine on a bare comparison map psi: E -> F*E.

    Computes K_0 = 0, K_{e+1} = psi^{-1}(F* K_e) inside E = psi.source and
    stops at the first K_e = K_{e+1} (permanent by construction).  K_e is
    the kernel of the composite E -> F^{e*}E, so stabilizing at all of E is
    the Nilpotent verdict, a proper stable kernel is NonNilpotent, and
    running out of max_e is a capped (Unknown) result.
    """
    if max_e < 1:
        raise ValueError("max_e must be >= 1")
    E = psi.source
    ctx = E.ctx
    if E.is_zero():
        return ChainResult(j, NILPOTENT, 0)
    rank = E.ambient_rank
    num_raw = [v.raw for v in E.numerator.gens]
    psi_on_num = [psi.apply_raw(v) for v in num_raw]

    S = [v.raw for v in E.denominator.gens]
    S_gb = gb._gb_of_raw(S, rank, ctx, pair_cap) if S else None

    def span_contains_all(span_gb, vecs):
        if span_gb is None:
            return all(gb._vec_is_zero(v) for v in vecs)
        return all(span_gb.contains(v) for v in vecs)

    for e in range(max_e + 1):
        if span_contains_all(S_gb, num_raw):
            result = ChainResult(j, NILPOTENT, e)
            if gb.VERIFY and e < max_e:
                nxt = _step_kernel(psi_on_num, num_raw, S, ctx, rank, pair_cap)
                ngb = gb._gb_of_raw(nxt, rank, ctx, pair_cap) if nxt else None
                assert span_contains_all(ngb, num_raw), \
                    "stabilized chain dropped below the whole module"
            return result
        if e == max_e:
            return ChainResult(j, None, None, capped=True)
        nxt = _step_kernel(psi_on_num, num_raw, S, ctx, rank, pair_cap)
        if gb.VERIFY:
            ngb_check = gb._gb_of_raw(nxt, rank, ctx, pair_cap) if nxt else None
            assert span_contains_all(ngb_check, S), "kernel chain not ascending"
        if span_contains_all(S_gb, nxt):
            result = ChainResult(j, NON_NILPOTENT, e)
            if gb.VERIFY:
                nxt2 = _step_kernel(psi_on_num, num_raw, nxt, ctx, rank, pair_cap)
                assert span_contains_all(S_gb, nxt2), \
                    "one-step stabilization was not permanent"
            return result
        S = nxt
        S_gb = gb._gb_of_raw(S, rank, ctx, pair_cap)
    raise AssertionError("unreachable")


def frobenius_chain(I, j, max_e=8, pair_cap=None):
    """Decide F-nilpotency at cohomological index j for Ext^j(R/I, R)."""
    if max_e < 1:
        raise ValueError("max_e must be >= 1")
    E = ext_module(I, j, pair_cap)
    if E.is_zero():
        return ChainResult(j, NILPOTENT, 0)
    psi = structural_map(I, j, pair_cap)
    return kernel_chain(psi, max_e, j, pair_cap)


# ---------------------------------------------------------------------------
# cofinality of bracket powers with ordinary powers

def _products(I, exponent):
    """Generators of I^exponent: products over generator multisets."""
    out = []
    for combo in combinations_with_replacement(range(len(I.gens)), exponent):
        f = I.gens[combo[0]]
        for i in combo[1:]:
            f = f * I.gens[i]
        out.append(f)
    return out


def cofinality_check(I, pair_cap=None):
    """Verify I^[p] <= I^p and I^(mu(p-1)+1) <= I^[p] by membership.

    When the second power has too many product generators to enumerate, the
    products with some generator repeated >= p times are skipped: such a
    product is a multiple of a bracket generator, hence lies in I^[p] by
    the ideal property alone, and the pigeonhole bound makes every product
    of mu(p-1)+1 generators that shape.
    """
    ctx = I.ctx
    p = ctx.p
    mu = len(I.gens)
    if mu == 0:
        return True

    bracket = frobenius_power(I, 1)
    ordinary_p = gb.Ideal(ctx, _products(I, p))
    if not all(gb.membership(g, ordinary_p) for g in bracket.gens):
        return False

    a = mu * (p - 1) + 1
    if comb(mu + a - 1, a) <= _COFINALITY_ENUM_LIMIT:
        big = _products(I, a)
    else:
        big = []
        for mult in _bounded_compositions(mu, a, p - 1):
            f = ctx.one()
            for i, m in enumerate(mult):
                for _ in range(m):
                    f = f * I.gens[i]
            big.append(f)
    return all(gb.membership(f, bracket) for f in big)


def _bounded_compositions(parts, total, bound):
    """Multiplicity vectors of length ``parts`` summing to ``total`` with
    every entry <= bound.  Empty whenever total > parts*bound."""
    if total > parts * bound:
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(min(total, bound) + 1):
        for rest in _bounded_compositions(parts - 1, total - head, bound):
            yield (head,) + rest
