"""Decision procedures with certificates for the graph classes the library
manipulates: couples, Ferrers digraphs/bigraphs, transitive orientations,
interval graphs, quasi-linear matrices, interval orders, indifference graphs
and induced-pattern containment.

Searches are exhaustive with pruning; every positive answer comes with a
witness that is re-checkable independently of the search that produced it, and
ties break deterministically (lexicographically least witness) so results are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import (
    DenseDigraph,
    K13,
    ReflexiveGraph,
    Bigraph,
    ZeroPosition,
    transpose,
)

QUASI_LINEAR_MAX_N = 8
CONTAINS_INDUCED_MAX_N = 10


class FerrersWitness(NamedTuple):
    """Row/column permutations that turn the matrix into a staircase."""

    row_order: tuple[int, ...]
    col_order: tuple[int, ...]


@dataclass(frozen=True)
class CliqueOrdering:
    """A consecutive linear ordering of the maximal cliques."""

    cliques: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer intervals [l_v, r_v], one per vertex (1-based clique
    indices when produced by `is_interval`)."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for l, r in self.intervals:
            if l > r:
                raise ValueError(f"empty interval [{l}, {r}]")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def intersects(self, u: int, v: int) -> bool:
        lu, ru = self.intervals[u]
        lv, rv = self.intervals[v]
        return lu <= rv and lv <= ru

    def to_graph(self) -> ReflexiveGraph:
        n = self.n
        rows = []
        for u in range(n):
            bits = 0
            for v in range(n):
                if self.intersects(u, v):
                    bits |= 1 << v
            rows.append(bits)
        return ReflexiveGraph(DenseDigraph(n, tuple(rows)))

    def represents(self, g: ReflexiveGraph) -> bool:
        if self.n != g.n:
            return False
        return all(
            self.intersects(u, v) == g.has_edge(u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )


@dataclass(frozen=True)
class Orientation:
    """An assignment of one direction per edge of a loopless symmetric graph."""

    underlying: DenseDigraph
    source: DenseDigraph

    def __post_init__(self) -> None:
        if not self.source.is_symmetric() or not self.source.is_loopless():
            raise ValueError("orientation source must be symmetric and loopless")
        t = transpose(self.underlying)
        for u in range(self.source.n):
            if self.underlying.rows[u] & t.rows[u]:
                raise ValueError("orientation contains a 2-cycle or loop")
            if self.underlying.rows[u] | t.rows[u] != self.source.rows[u]:
                raise ValueError("orientation does not cover the source edges exactly")


# ----------------------------------------------------------------------
# couples and Ferrers digraphs / bigraphs
# ----------------------------------------------------------------------


def find_couple(d: DenseDigraph) -> tuple[ZeroPosition, ZeroPosition] | None:
    """First (lexicographically, in row-major zero order) pair of zeros
    (a,b),(c,d) with a != c, b != d and ones at (a,d) and (c,b)."""
    zs = d.zeros()
    for i, (a, b) in enumerate(zs):
        for j in range(i + 1, len(zs)):
            c, dd = zs[j]
            if a != c and b != dd and d.has(a, dd) and d.has(c, b):
                return zs[i], zs[j]
    return None


def _chain_witness(masks: Sequence[int], n_cols: int) -> FerrersWitness | None:
    """Witness that the given row masks are linearly ordered by inclusion.

    Rows are ordered by descending popcount (ties by index); columns by
    descending height (number of rows containing them, ties by index), which
    realizes the staircase when the rows do form a chain.
    """
    order = sorted(range(len(masks)), key=lambda u: (-masks[u].bit_count(), u))
    for a, b in zip(order, order[1:]):
        if masks[a] | masks[b] != masks[a]:
            return None
    heights = [0] * n_cols
    for m in masks:
        for v in range(n_cols):
            if m >> v & 1:
                heights[v] += 1
    col_order = sorted(range(n_cols), key=lambda v: (-heights[v], v))
    return FerrersWitness(tuple(order), tuple(col_order))


def is_ferrers(d: DenseDigraph) -> FerrersWitness | None:
    """Witness iff the successor sets form a chain under inclusion."""
    return _chain_witness(d.rows, d.n)


def is_ferrers_bigraph(b: Bigraph) -> FerrersWitness | None:
    """Same chain-of-rows contract on the p x q biadjacency matrix."""
    return _chain_witness(b.rows, b.q)


def is_staircase(
    matrix_rows: Sequence[int],
    n_cols: int,
    row_order: Sequence[int],
    col_order: Sequence[int],
) -> bool:
    """Check that permuting rows/columns by the given orders yields a matrix
    whose rows are prefixes of ones with monotone lengths (either direction)."""
    lengths = []
    for u in row_order:
        row = matrix_rows[u]
        k = 0
        for v in col_order:
            if row >> v & 1:
                k += 1
            else:
                break
        # no 1 may appear after the first 0
        if any(row >> v & 1 for v in col_order[k:]):
            return False
        lengths.append(k)
    non_inc = all(a >= b for a, b in zip(lengths, lengths[1:]))
    non_dec = all(a <= b for a, b in zip(lengths, lengths[1:]))
    return non_inc or non_dec


# ----------------------------------------------------------------------
# orientations and transitivity
# ----------------------------------------------------------------------


def is_oriented(d: DenseDigraph) -> bool:
    """Every arc has a unique direction: uv in E implies vu not in E (hence no loops)."""
    t = transpose(d)
    return all(d.rows[u] & t.rows[u] == 0 for u in range(d.n))


def is_transitive(d: DenseDigraph) -> bool:
    """ab, bc in E implies ac in E, for all (not necessarily distinct) vertices."""
    for u in range(d.n):
        r = d.rows[u]
        m = r
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if d.rows[v] & ~r:
                return False
    return True


def is_transitively_oriented(d: DenseDigraph) -> bool:
    return is_oriented(d) and is_transitive(d)


def transitive_orientation(g: DenseDigraph) -> Orientation | None:
    """Some transitive orientation of the loopless symmetric graph ``g``, or None.

    Backtracking over edge directions; assigning a direction propagates the
    forced consequences (transitive closure arcs, and the reversal forced when
    the closure arc would be a non-edge), so the search is exhaustive with
    heavy pruning.  Branches in lexicographic edge order, trying u->v before
    v->u, which makes the returned orientation deterministic.
    """
    if not g.is_symmetric() or not g.is_loopless():
        raise ValueError("transitive_orientation expects a symmetric loopless digraph")
    n = g.n
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if g.has(u, v)]
    if not edges:
        return Orientation(DenseDigraph.all_zeros(n), g)

    out = [0] * n  # partial orientation

    def assigned(a: int, b: int) -> bool:
        return bool(out[a] >> b & 1 or out[b] >> a & 1)

    def set_arc(a: int, b: int, trail: list[tuple[int, int]]) -> bool:
        """Orient edge ab as a->b and propagate; False on conflict."""
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if out[x] >> y & 1:
                continue
            if out[y] >> x & 1:
                return False  # already oriented the other way
            out[x] |= 1 << y
            trail.append((x, y))
            # x->y and y->z force x->z (conflict if xz is a non-edge)
            m = out[y]
            while m:
                z = (m & -m).bit_length() - 1
                m &= m - 1
                if z == x:
                    return False
                if not g.has(x, z):
                    return False
                queue.append((x, z))
            # w->x and x->y force w->y
            for w in range(n):
                if out[w] >> x & 1:
                    if w == y or not g.has(w, y):
                        return False
                    queue.append((w, y))
            # x->y plus edge yc with xc a non-edge forces c->y
            r = g.rows[y]
            while r:
                c = (r & -r).bit_length() - 1
                r &= r - 1
                if c != x and not g.has(x, c):
                    queue.append((c, y))
            # x->y plus edge xc with yc a non-edge forces x->c
            r = g.rows[x]
            while r:
                c = (r & -r).bit_length() - 1
                r &= r - 1
                if c != y and not g.has(y, c):
                    queue.append((x, c))
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for x, y in trail:
            out[x] &= ~(1 << y)

    def dfs(i: int) -> bool:
        while i < len(edges) and assigned(*edges[i]):
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            trail: list[tuple[int, int]] = []
            if set_arc(a, b, trail) and dfs(i + 1):
                return True
            undo(trail)
        return False

    if not dfs(0):
        return None
    oriented = DenseDigraph(n, tuple(out))
    if not is_transitively_oriented(oriented):
        raise RuntimeError("internal: propagation produced a non-transitive orientation")
    return Orientation(oriented, g)


# ----------------------------------------------------------------------
# interval recognition via maximal cliques + consecutive arrangement
# ----------------------------------------------------------------------


def maximal_cliques(g: ReflexiveGraph) -> list[tuple[int, ...]]:
    """All maximal cliques of the loopless skeleton, deterministically ordered."""
    n = g.n
    adj = g.skeleton_rows()
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best, best_cnt = pivot, (p & adj[pivot]).bit_count()
        m = pivot_pool
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cnt = (p & adj[u]).bit_count()
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        cand = p & ~adj[best]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        expand(0, (1 << n) - 1, 0)
    cliques = [tuple(v for v in range(n) if m >> v & 1) for m in out]
    cliques.sort()
    return cliques


def consecutive_arrangement(
    cliques: Sequence[Sequence[int]], n: int
) -> CliqueOrdering | None:
    """An ordering of the cliques in which every vertex's cliques are
    contiguous, or None.  Exhaustive with pruning; returns the
    lexicographically least ordering by clique index."""
    masks = [sum(1 << v for v in c) for c in cliques]
    r = len(masks)
    order: list[int] = []
    used = [False] * r

    def dfs(last: int, closed: int) -> bool:
        if len(order) == r:
            return True
        for i in range(r):
            if used[i] or masks[i] & closed:
                continue
            used[i] = True
            order.append(i)
            if dfs(masks[i], closed | (last & ~masks[i])):
                return True
            order.pop()
            used[i] = False
        return False

    if not dfs(0, 0):
        return None
    return CliqueOrdering(tuple(tuple(cliques[i]) for i in order))


def is_interval(g: ReflexiveGraph) -> IntervalModel | None:
    """Interval model from a consecutive clique arrangement, or None.

    Each vertex gets the closed interval [first, last] of 1-based indices of
    the cliques containing it; the model is re-checked against ``g`` edge by
    edge before returning.
    """
    cliques = maximal_cliques(g)
    arrangement = consecutive_arrangement(cliques, g.n)
    if arrangement is None:
        return None
    first = [0] * g.n
    last = [0] * g.n
    for idx, clique in enumerate(arrangement.cliques, start=1):
        for v in clique:
            if first[v] == 0:
                first[v] = idx
            last[v] = idx
    model = IntervalModel(tuple(zip(first, last)))
    if not model.represents(g):
        raise RuntimeError("internal: clique-path model does not reproduce the graph")
    return model


def quasi_linear_order(g: ReflexiveGraph) -> tuple[int, ...] | None:
    """A simultaneous row/column permutation under which the ones are
    consecutive right of (and, by symmetry, below) the diagonal, or None.

    Brute force over permutations with gap pruning; n <= 8.
    """
    n = g.n
    if n > QUASI_LINEAR_MAX_N:
        raise ValueError(f"quasi_linear_order supports n <= {QUASI_LINEAR_MAX_N}, got {n}")
    rows = g.underlying.rows
    perm: list[int] = []
    used = [False] * n

    def extension_ok(w: int) -> bool:
        # placing w at position k: a 1 at column k right after a 0 at column
        # k-1 in any earlier row is a gap
        k = len(perm)
        if k == 0:
            return True
        prev = perm[-1]
        for i in range(k - 1):
            if rows[perm[i]] >> w & 1 and not rows[perm[i]] >> prev & 1:
                return False
        return True

    def dfs() -> bool:
        if len(perm) == n:
            return True
        for w in range(n):
            if not used[w] and extension_ok(w):
                used[w] = True
                perm.append(w)
                if dfs():
                    return True
                perm.pop()
                used[w] = False
        return False

    if not dfs():
        return None
    return tuple(perm)


# ----------------------------------------------------------------------
# pattern containment and the order-theoretic classes
# ----------------------------------------------------------------------


def contains_induced(
    host: DenseDigraph, pattern: DenseDigraph
) -> tuple[int, ...] | None:
    """Injective vertex map realizing ``pattern`` as an induced subdigraph of
    ``host`` (lexicographically least), or None."""
    if not pattern.n <= host.n <= CONTAINS_INDUCED_MAX_N:
        raise ValueError(
            f"contains_induced needs pattern.n <= host.n <= {CONTAINS_INDUCED_MAX_N}"
        )
    mapping: list[int] = []
    used = [False] * host.n

    def consistent(c: int) -> bool:
        i = len(mapping)
        if host.has(c, c) != pattern.has(i, i):
            return False
        for j, mj in enumerate(mapping):
            if host.has(c, mj) != pattern.has(i, j):
                return False
            if host.has(mj, c) != pattern.has(j, i):
                return False
        return True

    def dfs() -> bool:
        if len(mapping) == pattern.n:
            return True
        for c in range(host.n):
            if not used[c] and consistent(c):
                used[c] = True
                mapping.append(c)
                if dfs():
                    return True
                mapping.pop()
                used[c] = False
        return False

    if not dfs():
        return None
    return tuple(mapping)


def is_interval_order(d: DenseDigraph) -> bool:
    """Loopless, transitive, and ax, by in E implies ay or bx in E."""
    if not d.is_loopless() or not is_transitive(d):
        return False
    arcs = d.arcs()
    for a, x in arcs:
        for b, y in arcs:
            if not (d.has(a, y) or d.has(b, x)):
                return False
    return True


def is_indifference(g: ReflexiveGraph) -> bool:
    """Interval and claw-free (no induced reflexive K_{1,3})."""
    if is_interval(g) is None:
        return False
    if g.n < 4:
        return True
    return contains_induced(g.underlying, K13.underlying) is None
