"""Dense bit-matrix graphs: digraphs, reflexive graphs and bigraphs.

Every graph is stored as one machine-word bitmask per row, which keeps the
whole library exact and fast at desk scale (n <= 16; enumeration-heavy callers
enforce stricter caps of their own).  Values are immutable after construction
and all operations are pure, so everything here is safe to share across
threads.

Vertices are 0-based integers throughout; human-readable output maps 0..15 to
the letters a..p (see `ferrodim.matrixio`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

MAX_N = 16
CANONICAL_MAX_N = 7


class ZeroPosition(NamedTuple):
    """A matrix position (row, col).

    Primarily names a 0-entry of the digraph it indexes (the vertices of
    couple graphs); the same pair type carries arc positions when building
    arc-vertex digraphs.
    """

    row: int
    col: int


@dataclass(frozen=True)
class DenseDigraph:
    """Digraph on ``n`` <= 16 vertices; ``rows[u]`` has bit ``v`` set iff arc u->v.

    Loops are allowed (diagonal bits).  Bits outside the n x n window are
    rejected at construction time.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside supported range 0..{MAX_N}")
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(rows)}")
        window = (1 << self.n) - 1
        for r in rows:
            if r < 0 or r & ~window:
                raise ValueError("adjacency bits outside the n x n window")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "DenseDigraph":
        n = len(matrix)
        rows = []
        for row in matrix:
            if len(row) != n:
                raise ValueError("matrix is not square")
            bits = 0
            for v, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"matrix entry {entry!r} is not 0/1")
                bits |= entry << v
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "DenseDigraph":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def all_ones(cls, n: int) -> "DenseDigraph":
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    @classmethod
    def all_zeros(cls, n: int) -> "DenseDigraph":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "DenseDigraph":
        return cls(n, tuple(1 << v for v in range(n)))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def window(self) -> int:
        return (1 << self.n) - 1

    def has(self, u: int, v: int) -> bool:
        return self.rows[u] >> v & 1 == 1

    def arcs(self) -> list[ZeroPosition]:
        """All 1-positions in row-major order."""
        return [
            ZeroPosition(u, v)
            for u in range(self.n)
            for v in range(self.n)
            if self.rows[u] >> v & 1
        ]

    def zeros(self) -> list[ZeroPosition]:
        """All 0-positions in row-major order."""
        return [
            ZeroPosition(u, v)
            for u in range(self.n)
            for v in range(self.n)
            if not self.rows[u] >> v & 1
        ]

    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def matrix(self) -> list[list[int]]:
        return [[self.rows[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    def is_symmetric(self) -> bool:
        return all(
            self.rows[u] >> v & 1 == self.rows[v] >> u & 1
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    def is_reflexive(self) -> bool:
        return all(self.rows[v] >> v & 1 for v in range(self.n))

    def is_loopless(self) -> bool:
        return not any(self.rows[v] >> v & 1 for v in range(self.n))


@dataclass(frozen=True)
class ReflexiveGraph:
    """Symmetric digraph with a loop at every vertex; the carrier for interval
    graphs and for G in boxicity computations."""

    underlying: DenseDigraph

    def __post_init__(self) -> None:
        if not self.underlying.is_symmetric():
            raise ValueError("reflexive graph must be symmetric")
        if not self.underlying.is_reflexive():
            raise ValueError("reflexive graph must have a loop at every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "ReflexiveGraph":
        rows = [1 << v for v in range(n)]
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(DenseDigraph(n, tuple(rows)))

    @classmethod
    def complete(cls, n: int) -> "ReflexiveGraph":
        return cls(DenseDigraph.all_ones(n))

    @classmethod
    def empty(cls, n: int) -> "ReflexiveGraph":
        return cls(DenseDigraph.identity(n))

    @classmethod
    def cycle(cls, n: int) -> "ReflexiveGraph":
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "ReflexiveGraph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def rows(self) -> tuple[int, ...]:
        return self.underlying.rows

    def has_edge(self, u: int, v: int) -> bool:
        return self.underlying.has(u, v)

    def skeleton_rows(self) -> tuple[int, ...]:
        """Adjacency rows with the diagonal cleared (the loopless skeleton)."""
        return tuple(r & ~(1 << v) for v, r in enumerate(self.underlying.rows))

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.has_edge(u, v)
        ]

    def nonedge_pairs(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]

    def is_complete(self) -> bool:
        return all(r == self.underlying.window for r in self.underlying.rows)


@dataclass(frozen=True)
class Bigraph:
    """Bipartite graph as a p x q biadjacency bit matrix (rows = X, cols = Y)."""

    p: int
    q: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("bigraph dimensions must be non-negative")
        if max(self.p, self.q) > MAX_N:
            raise ValueError(f"bigraph dimensions exceed hard cap {MAX_N}")
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.p:
            raise ValueError(f"expected {self.p} rows, got {len(rows)}")
        window = (1 << self.q) - 1
        for r in rows:
            if r < 0 or r & ~window:
                raise ValueError("biadjacency bits outside the p x q window")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], q: int | None = None) -> "Bigraph":
        p = len(matrix)
        if q is None:
            q = len(matrix[0]) if p else 0
        rows = []
        for row in matrix:
            if len(row) != q:
                raise ValueError("ragged biadjacency matrix")
            bits = 0
            for y, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"matrix entry {entry!r} is not 0/1")
                bits |= entry << y
            rows.append(bits)
        return cls(p, q, tuple(rows))

    @classmethod
    def all_ones(cls, p: int, q: int) -> "Bigraph":
        full = (1 << q) - 1
        return cls(p, q, (full,) * p)

    def has(self, x: int, y: int) -> bool:
        return self.rows[x] >> y & 1 == 1

    def zeros(self) -> list[ZeroPosition]:
        return [
            ZeroPosition(x, y)
            for x in range(self.p)
            for y in range(self.q)
            if not self.rows[x] >> y & 1
        ]

    def matrix(self) -> list[list[int]]:
        return [[self.rows[x] >> y & 1 for y in range(self.q)] for x in range(self.p)]


# ----------------------------------------------------------------------
# the complement / transpose / intersection algebra
# ----------------------------------------------------------------------


def complement(d: DenseDigraph) -> DenseDigraph:
    """Flip every bit, including the diagonal (reflexive <-> irreflexive)."""
    window = d.window
    return DenseDigraph(d.n, tuple(~r & window for r in d.rows))


def transpose(d: DenseDigraph) -> DenseDigraph:
    rows = [0] * d.n
    for u, r in enumerate(d.rows):
        while r:
            v = (r & -r).bit_length() - 1
            rows[v] |= 1 << u
            r &= r - 1
    return DenseDigraph(d.n, tuple(rows))


def _check_same_n(ds: Sequence[DenseDigraph]) -> int:
    if not ds:
        raise ValueError("need at least one digraph")
    n = ds[0].n
    for d in ds[1:]:
        if d.n != n:
            raise ValueError(f"dimension mismatch: {d.n} != {n}")
    return n


def intersect(ds: Sequence[DenseDigraph]) -> DenseDigraph:
    """Bitwise AND of all adjacency matrices (arc-set intersection)."""
    n = _check_same_n(ds)
    rows = list(ds[0].rows)
    for d in ds[1:]:
        for u in range(n):
            rows[u] &= d.rows[u]
    return DenseDigraph(n, tuple(rows))


def union(ds: Sequence[DenseDigraph]) -> DenseDigraph:
    """Bitwise OR of all adjacency matrices (arc-set union)."""
    n = _check_same_n(ds)
    rows = list(ds[0].rows)
    for d in ds[1:]:
        for u in range(n):
            rows[u] |= d.rows[u]
    return DenseDigraph(n, tuple(rows))


def induced(d: DenseDigraph, vertices: Iterable[int]) -> DenseDigraph:
    """Induced subdigraph on ``vertices``, relabelled in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} out of range 0..{d.n - 1}")
    rows = []
    for u in vs:
        bits = 0
        for j, v in enumerate(vs):
            bits |= (d.rows[u] >> v & 1) << j
        rows.append(bits)
    return DenseDigraph(len(vs), tuple(rows))


def relabel(d: DenseDigraph, perm: Sequence[int]) -> DenseDigraph:
    """Apply the vertex permutation ``perm`` (old vertex u becomes perm[u])."""
    if sorted(perm) != list(range(d.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * d.n
    for u in range(d.n):
        r = d.rows[u]
        bits = 0
        while r:
            v = (r & -r).bit_length() - 1
            bits |= 1 << perm[v]
            r &= r - 1
        rows[perm[u]] = bits
    return DenseDigraph(d.n, tuple(rows))


def symmetric_digraph_of(g: ReflexiveGraph) -> DenseDigraph:
    """The digraph D(G) with the same adjacency matrix as G (a type recast)."""
    return g.underlying


def bigraph_to_digraph(b: Bigraph) -> DenseDigraph:
    """Pad the biadjacency matrix with all-zero rows/columns to a square digraph."""
    m = max(b.p, b.q)
    rows = list(b.rows) + [0] * (m - b.p)
    return DenseDigraph(m, tuple(rows))


def bigraph_complement(b: Bigraph) -> Bigraph:
    """Flip every bit of the biadjacency matrix (the bigraph converse)."""
    window = (1 << b.q) - 1
    return Bigraph(b.p, b.q, tuple(~r & window for r in b.rows))


def canonical_form(d: DenseDigraph) -> str:
    """Lexicographically minimal row-major bitstring over simultaneous
    row/column permutations; equal strings iff the digraphs are isomorphic.

    Brute force over all n! permutations, so capped at n <= 7.
    """
    if d.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {d.n}")
    best: str | None = None
    verts = range(d.n)
    for perm in permutations(verts):
        s = "".join(
            "1" if d.rows[u] >> v & 1 else "0" for u in perm for v in perm
        )
        if best is None or s < best:
            best = s
    return best if best is not None else ""


# ----------------------------------------------------------------------
# pattern library: the named constant graphs of the write-up
# ----------------------------------------------------------------------

#: Loopless digraph on a,b,c,d with arcs a->b and c->d only (the unique
#: orientation type of 2K2).
D1 = DenseDigraph.from_arcs(4, [(0, 1), (2, 3)])

#: Reflexive 4-cycle and 6-cycle (vertices in natural cycle order).
C4 = ReflexiveGraph.cycle(4)
C6 = ReflexiveGraph.cycle(6)

#: Reflexive claw K_{1,3}, centre 0.
K13 = ReflexiveGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

#: The two 2x2 permutation matrices (the "couple" patterns).
COUPLE_PATTERNS = (
    DenseDigraph.from_matrix([[1, 0], [0, 1]]),
    DenseDigraph.from_matrix([[0, 1], [1, 0]]),
)
