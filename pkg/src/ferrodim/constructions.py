"""Derived objects built from a graph: the couple graph H(D), the arc-vertex
digraph J(D), the two-clique completion of a bigraph, the Ferrers factor of an
interval graph, and the extraction of a Ferrers bigraph from a two-clique
interval graph.

Vertex orders are fixed (row-major zeros for H, row-major arcs for J) so that
golden-value tests and serialized output stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Bigraph,
    DenseDigraph,
    ReflexiveGraph,
    ZeroPosition,
    intersect,
    transpose,
)
from .recognition import (
    IntervalModel,
    consecutive_arrangement,
    is_ferrers,
    is_ferrers_bigraph,
    maximal_cliques,
)


@dataclass(frozen=True)
class CoupleGraph:
    """Undirected graph on matrix positions; for H(D) the vertices are the
    zeros of the source (row-major) and edges are couples."""

    zeros: tuple[ZeroPosition, ...]
    adj: tuple[int, ...]  # adj[i] bit j set iff vertices i, j adjacent

    @property
    def vertex_count(self) -> int:
        return len(self.zeros)

    def has_edge(self, i: int, j: int) -> bool:
        return self.adj[i] >> j & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.vertex_count)
            for j in range(i + 1, self.vertex_count)
            if self.adj[i] >> j & 1
        ]

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.vertex_count)) // 2


@dataclass(frozen=True)
class JDigraph:
    """Digraph on the arcs of a source digraph: an arrow from arc ab to arc cd
    iff ab != cd and ad is also an arc of the source."""

    arcs: tuple[ZeroPosition, ...]
    out: tuple[int, ...]  # out[i] bit j set iff arrow i -> j

    @property
    def vertex_count(self) -> int:
        return len(self.arcs)

    def has_arrow(self, i: int, j: int) -> bool:
        return self.out[i] >> j & 1 == 1

    def arrow_target_entry(self, i: int, j: int) -> ZeroPosition:
        """The source entry (a_i, d_j) that licenses the arrow i -> j."""
        return ZeroPosition(self.arcs[i].row, self.arcs[j].col)


@dataclass(frozen=True)
class TwoCliqueCover:
    """Two disjoint cliques covering all vertices of a reflexive graph."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def validate(self, g: ReflexiveGraph) -> None:
        xs, ys = set(self.x), set(self.y)
        if xs & ys:
            raise ValueError("cover sets are not disjoint")
        if xs | ys != set(range(g.n)):
            raise ValueError("cover sets do not cover all vertices")
        for part in (self.x, self.y):
            for i, u in enumerate(part):
                for v in part[i + 1 :]:
                    if not g.has_edge(u, v):
                        raise ValueError(f"cover set is not a clique: {u}-{v} missing")


# ----------------------------------------------------------------------


def couple_graph(d: DenseDigraph) -> CoupleGraph:
    """H(D): vertices are the zeros of A(D) in row-major order, joined iff the
    two zeros form a couple."""
    zs = d.zeros()
    z = len(zs)
    adj = [0] * z
    for i, (a, b) in enumerate(zs):
        for j in range(i + 1, z):
            c, dd = zs[j]
            if a != c and b != dd and d.has(a, dd) and d.has(c, b):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CoupleGraph(tuple(zs), tuple(adj))


def j_digraph(d: DenseDigraph) -> JDigraph:
    """J(D) on the arcs of ``d`` in row-major order."""
    arcs = d.arcs()
    m = len(arcs)
    out = [0] * m
    for i, (a, _b) in enumerate(arcs):
        for j in range(m):
            if i != j and d.has(a, arcs[j].col):
                out[i] |= 1 << j
    return JDigraph(tuple(arcs), tuple(out))


def undirected_skeleton(j: JDigraph) -> CoupleGraph:
    """Forget arrow directions: same vertex set, edge iff an arrow either way."""
    m = j.vertex_count
    adj = [0] * m
    for i in range(m):
        adj[i] = j.out[i]
    for i in range(m):
        r = j.out[i]
        while r:
            k = (r & -r).bit_length() - 1
            r &= r - 1
            adj[k] |= 1 << i
    for i in range(m):
        adj[i] &= ~(1 << i)
    return CoupleGraph(j.arcs, tuple(adj))


def hat(b: Bigraph) -> tuple[ReflexiveGraph, TwoCliqueCover]:
    """Two-clique completion: both partite sets become cliques, loops added;
    the adjacency matrix is the block matrix [[1, A], [A^T, 1]]."""
    n = b.p + b.q
    rows = []
    x_block = (1 << b.p) - 1
    y_block = ((1 << b.q) - 1) << b.p
    for x in range(b.p):
        rows.append(x_block | (b.rows[x] << b.p))
    for y in range(b.q):
        bits = y_block
        for x in range(b.p):
            bits |= (b.rows[x] >> y & 1) << x
        rows.append(bits)
    graph = ReflexiveGraph(DenseDigraph(n, tuple(rows)))
    cover = TwoCliqueCover(tuple(range(b.p)), tuple(range(b.p, n)))
    return graph, cover


def ferrers_factor(model: IntervalModel) -> DenseDigraph:
    """The reflexive Ferrers digraph F with F cap F^T equal to the model's
    graph: F is the complement of the strict-precedence digraph (uv iff the
    interval of u ends before that of v starts)."""
    n = model.n
    rows = []
    for u in range(n):
        _lu, ru = model.intervals[u]
        bits = 0
        for v in range(n):
            lv, _rv = model.intervals[v]
            if not ru < lv:
                bits |= 1 << v
        rows.append(bits)
    f = DenseDigraph(n, tuple(rows))
    if not f.is_reflexive():
        raise RuntimeError("internal: ferrers factor lost the diagonal")
    if is_ferrers(f) is None:
        raise RuntimeError("internal: ferrers factor is not a Ferrers digraph")
    if n and intersect([f, transpose(f)]) != model.to_graph().underlying:
        raise RuntimeError("internal: ferrers factor does not factorize the model")
    return f


def two_clique_orders(
    model: IntervalModel, cover: TwoCliqueCover
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row and column vertex orders used by `two_clique_to_ferrers`:
    lexicographic by interval, ties by vertex id."""
    key = lambda v: (model.intervals[v][0], model.intervals[v][1], v)
    return tuple(sorted(cover.x, key=key)), tuple(sorted(cover.y, key=key))


def two_clique_to_ferrers(
    g: ReflexiveGraph, cover: TwoCliqueCover
) -> tuple[Bigraph, IntervalModel]:
    """Extract the Ferrers bigraph hiding in a two-clique interval graph.

    Follows the constructive interval-clamping procedure: build a consecutive
    clique ordering, locate the cliques C_i >= X and C_j >= Y, clamp the X
    intervals' right endpoints to j and the Y intervals' left endpoints to i
    (mirrored when j < i), pin the outer endpoints, then read off the X x Y
    block A with both sides in lexicographic interval order.  The returned
    bigraph is Ferrers and the clamped model still represents ``g``.
    """
    cover.validate(g)
    cliques = maximal_cliques(g)
    arrangement = consecutive_arrangement(cliques, g.n)
    if arrangement is None:
        raise ValueError("graph is not an interval graph")
    first = [0] * g.n
    last = [0] * g.n
    for idx, clique in enumerate(arrangement.cliques, start=1):
        for v in clique:
            if first[v] == 0:
                first[v] = idx
            last[v] = idx
    base = IntervalModel(tuple(zip(first, last)))

    if not cover.x or not cover.y:
        bigraph = Bigraph(len(cover.x), len(cover.y), (0,) * len(cover.x))
        return bigraph, base

    def containing_index(part: tuple[int, ...]) -> int:
        members = set(part)
        for idx, clique in enumerate(arrangement.cliques, start=1):
            if members <= set(clique):
                return idx
        raise RuntimeError("internal: clique cover member not inside any maximal clique")

    i = containing_index(cover.x)
    j = containing_index(cover.y)

    intervals = list(base.intervals)
    if i == j:
        # X and Y inside one maximal clique forces g complete
        model = base
    elif i < j:
        for x in cover.x:
            _l, r = intervals[x]
            intervals[x] = (i, min(r, j))
        for y in cover.y:
            l, _r = intervals[y]
            intervals[y] = (max(l, i), j)
        model = IntervalModel(tuple(intervals))
    else:
        for y in cover.y:
            _l, r = intervals[y]
            intervals[y] = (j, min(r, i))
        for x in cover.x:
            l, _r = intervals[x]
            intervals[x] = (max(l, j), i)
        model = IntervalModel(tuple(intervals))

    if not model.represents(g):
        raise RuntimeError("internal: clamped model no longer represents the graph")

    x_order, y_order = two_clique_orders(model, cover)
    rows = []
    for x in x_order:
        bits = 0
        for col, y in enumerate(y_order):
            if g.has_edge(x, y):
                bits |= 1 << col
        rows.append(bits)
    bigraph = Bigraph(len(x_order), len(y_order), tuple(rows))
    if is_ferrers_bigraph(bigraph) is None:
        raise RuntimeError("internal: extracted block is not a Ferrers bigraph")
    return bigraph, model


__all__ = [
    "CoupleGraph",
    "JDigraph",
    "TwoCliqueCover",
    "couple_graph",
    "j_digraph",
    "undirected_skeleton",
    "hat",
    "ferrers_factor",
    "two_clique_orders",
    "two_clique_to_ferrers",
]
