"""Minimal graded free resolutions of R/I and the invariants they carry.

The resolution is built level by level: the columns of each differential
are a minimal generating set (degree-sorted Nakayama pruning) of the kernel
of the previous one, so no differential has a nonzero constant entry and
the complex is minimal as produced.  Each level keeps the graph Groebner
basis of its columns around; it already encodes both the syzygies that feed
the next level and the division certificates that chain-map lifting needs.
"""

from . import groebner as gb
from .errors import NotHomogeneous, UnitIdeal
from .ring import Polynomial


class GradedFreeModule:
    """A free module with one integer twist per basis vector."""

    __slots__ = ("rank", "shifts")

    def __init__(self, rank, shifts):
        shifts = tuple(shifts)
        if len(shifts) != rank:
            raise ValueError("shifts length must equal rank")
        self.rank = rank
        self.shifts = shifts

    def __eq__(self, other):
        return (isinstance(other, GradedFreeModule)
                and (self.rank, self.shifts) == (other.rank, other.shifts))

    def __repr__(self):
        return f"GradedFreeModule(rank={self.rank}, shifts={self.shifts})"


# ---------------------------------------------------------------------------
# polynomial matrices (tuples of rows of Polynomial)

def mat_shape(m):
    return (len(m), len(m[0]) if m else 0)


def mat_transpose(m):
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def mat_mul(a, b):
    """Product of Polynomial matrices (rows x cols convention)."""
    if not a or not b:
        return ()
    assert len(a[0]) == len(b), "inner dimensions differ"
    out = []
    for row in a:
        out_row = []
        for j in range(len(b[0])):
            acc = row[0] * b[0][j]
            for k in range(1, len(b)):
                acc = acc + row[k] * b[k][j]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_is_zero(m):
    return all(e.is_zero() for row in m for e in row)


def mat_columns_raw(m):
    """Columns as raw kernel vectors in R^(row count)."""
    rows, cols = mat_shape(m)
    return [tuple(m[i][j].data for i in range(rows)) for j in range(cols)]


def mat_from_columns_raw(ctx, cols, nrows):
    return tuple(tuple(Polynomial(ctx, col[i]) for col in cols)
                 for i in range(nrows))


class FreeComplex:
    """A chain of maps d_k : F_k -> F_{k-1} between graded free modules.

    ``maps[k-1]`` is the matrix of d_k with rank(F_{k-1}) rows and
    rank(F_k) columns.  For resolutions produced here the complex also
    carries the per-level graph bases used to build it (``level_graph``).
    """

    __slots__ = ("ctx", "modules", "maps", "homogeneous", "_graphs")

    def __init__(self, ctx, modules, maps, homogeneous, graphs=None):
        for k, m in enumerate(maps):
            rows, cols = mat_shape(m)
            if rows != modules[k].rank or cols != modules[k + 1].rank:
                raise ValueError(f"map {k + 1} has shape {rows}x{cols}, "
                                 f"expected {modules[k].rank}x{modules[k + 1].rank}")
        self.ctx = ctx
        self.modules = tuple(modules)
        self.maps = tuple(maps)
        self.homogeneous = homogeneous
        self._graphs = list(graphs) if graphs is not None else [None] * len(maps)

    @property
    def length(self):
        return len(self.maps)

    def betti(self):
        return tuple(m.rank for m in self.modules)

    def differential(self, k):
        """Matrix of d_k (1-based), as rows."""
        return self.maps[k - 1]

    def level_graph(self, k, pair_cap=None):
        """Graph basis of the columns of d_k; built on demand, kept."""
        g = self._graphs[k - 1]
        if g is None:
            cols = mat_columns_raw(self.maps[k - 1])
            g = gb._GraphGB(self.ctx, cols, self.modules[k - 1].rank, pair_cap)
            self._graphs[k - 1] = g
        return g

    def composes_to_zero(self):
        return all(mat_is_zero(mat_mul(self.maps[k], self.maps[k + 1]))
                   for k in range(len(self.maps) - 1))

    def is_minimal(self):
        """No differential entry is a nonzero constant."""
        return all(e.is_zero() or e.degree > 0
                   for m in self.maps for row in m for e in row)

    def check_homogeneous(self):
        """Every nonzero entry of d_k has degree shifts_k[j] - shifts_{k-1}[i]."""
        for k, m in enumerate(self.maps, start=1):
            src = self.modules[k].shifts
            tgt = self.modules[k - 1].shifts
            for i, row in enumerate(m):
                for j, e in enumerate(row):
                    if e.is_zero():
                        continue
                    if not e.is_homogeneous() or e.degree != src[j] - tgt[i]:
                        return False
        return True

    def __repr__(self):
        return f"FreeComplex(betti={self.betti()})"


def free_resolution(I, pair_cap=None):
    """Minimal graded free resolution of R/I for homogeneous proper I.

    F_0 = R, d_1 = a row of minimal generators, and each later differential
    has minimal-generator columns of the previous kernel; length <= n by
    the syzygy theorem (asserted).  Cached on the ideal.
    """
    if I._resolution is not None:
        return I._resolution
    ctx = I.ctx
    for g in I.gens:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"generator {g!r} is not homogeneous")
    if I.is_unit():
        raise UnitIdeal("R/I is zero; no resolution")

    modules = [GradedFreeModule(1, (0,))]
    maps = []
    graphs = []
    cols = gb.prune_to_minimal([(g.data,) for g in I.gens], 1, ctx,
                               shifts=(0,), pair_cap=pair_cap)
    prev_shifts = (0,)
    while cols:
        rank_prev = modules[-1].rank
        new_shifts = tuple(gb._vec_degree(c, prev_shifts) for c in cols)
        for c in cols:
            assert gb._vec_is_homogeneous(c, prev_shifts), \
                "non-homogeneous syzygy in a graded resolution"
        maps.append(mat_from_columns_raw(ctx, cols, rank_prev))
        modules.append(GradedFreeModule(len(cols), new_shifts))
        graph = gb._GraphGB(ctx, cols, rank_prev, pair_cap)
        graphs.append(graph)
        assert len(maps) <= ctx.n, "resolution longer than the variable count"
        cols = gb.prune_to_minimal(graph.syz, len(cols), ctx,
                                   shifts=new_shifts, pair_cap=pair_cap)
        prev_shifts = new_shifts

    C = FreeComplex(ctx, modules, maps, homogeneous=True, graphs=graphs)
    assert C.is_minimal(), "constant entry in a differential"
    if gb.VERIFY:
        assert C.composes_to_zero(), "d o d != 0"
        assert C.check_homogeneous(), "graded degree bookkeeping is off"
    I._resolution = C
    return C


def pd(I, pair_cap=None):
    """Projective dimension of R/I (length of the minimal resolution)."""
    return free_resolution(I, pair_cap).length


def depth_quotient(I, pair_cap=None):
    """depth of R/I at the irrelevant maximal ideal, via the graded
    Auslander-Buchsbaum identity depth = n - pd."""
    return I.ctx.n - pd(I, pair_cap)


def hilbert_numerator(C):
    """sum_k (-1)^k sum_j t^{shift_{k,j}} as a coefficient tuple.

    For the resolution of R/I this is the numerator of the Hilbert series
    of R/I over (1-t)^n.  Index = degree; trailing zeros trimmed.
    """
    if not C.homogeneous:
        raise NotHomogeneous("Hilbert numerator needs a homogeneous complex")
    top = max((s for m in C.modules for s in m.shifts), default=0)
    coeffs = [0] * (top + 1)
    sign = 1
    for m in C.modules:
        for s in m.shifts:
            coeffs[s] += sign
        sign = -sign
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)
