"""Immutable simple undirected graphs on dense vertex labels 0..n-1.

Adjacency is stored as one bitmask row per vertex, which keeps every
exponential solver in the package working on machine integers.  All
construction operations relabel deterministically (first operand's block
first), so family constructors are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid construction or out-of-contract input."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]  # rows[u] = bitmask of neighbors of u

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if self.n > MAX_VERTICES:
            raise GraphError(f"graphs are capped at {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic accessors -------------------------------------------------

    @property
    def q(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return bits(self.rows[u])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, q={self.q})"

    # -- traversal helpers ----------------------------------------------

    def reach_mask(self, seed: int, allowed: int) -> int:
        """Vertices reachable from the seed mask inside ``allowed``."""
        comp = seed & allowed
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= self.rows[v]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        return comp

    def component_masks(self, allowed: int | None = None) -> list[int]:
        rem = self.full_mask if allowed is None else allowed
        comps = []
        while rem:
            comp = self.reach_mask(rem & -rem, rem)
            comps.append(comp)
            rem &= ~comp
        return comps

    def count_components(self, allowed: int | None = None) -> int:
        return len(self.component_masks(allowed))

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.reach_mask(1, self.full_mask) == self.full_mask


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- construction --------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list; duplicates collapse."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle graph needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(edgeless(a), edgeless(b))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


_PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),      # outer 5-cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),      # inner 5-cycle (pentagram)
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),      # spokes
]


def petersen() -> Graph:
    return from_edge_list(10, _PETERSEN_EDGES)


# -- algebra -------------------------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint copies plus all cross edges; g1's block keeps labels 0..n1-1."""
    n1, n2 = g1.n, g2.n
    shift_full = ((1 << n2) - 1) << n1
    lower_full = (1 << n1) - 1
    rows = [g1.rows[u] | shift_full for u in range(n1)]
    rows += [(g2.rows[u] << n1) | lower_full for u in range(n2)]
    return Graph(n1 + n2, tuple(rows))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    n = 0
    rows: list[int] = []
    for g in parts:
        rows.extend(row << n for row in g.rows)
        n += g.n
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << u) for u, row in enumerate(g.rows)))


def delete_vertices(g: Graph, remove: Iterable[int]) -> Graph:
    rm = mask_of(remove)
    if rm & ~g.full_mask:
        raise GraphError("vertex set to delete is out of range")
    return induced_subgraph(g, g.full_mask & ~rm)


def induced_subgraph(g: Graph, keep_mask: int) -> Graph:
    """Induced subgraph on the masked vertices, relabeled in ascending order."""
    keep = bits(keep_mask)
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in bits(g.rows[v] & keep_mask):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def all_distances(g: Graph, source: int) -> list[int]:
    """BFS distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in bits(frontier):
            dist[v] = d
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path edge count, or None across components."""
    g._check_vertex(u)
    g._check_vertex(v)
    d = all_distances(g, u)[v]
    return None if d < 0 else d


def power(g: Graph, k: int) -> Graph:
    """Graph power: u~v iff 1 <= dist(u,v) <= k."""
    if k < 1:
        raise GraphError("power exponent must be >= 1")
    rows = []
    for u in range(g.n):
        dist = all_distances(g, u)
        row = 0
        for v in range(g.n):
            if v != u and 0 < dist[v] <= k:
                row |= 1 << v
        rows.append(row)
    return Graph(g.n, tuple(rows))


def component_count(g: Graph) -> int:
    return g.count_components()


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking; intended for small graphs."""
    if g1.n != g2.n or g1.q != g2.q or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    deg1, deg2 = g1.degrees(), g2.degrees()
    mapping = [-1] * n
    used = 0

    def extend(u: int) -> bool:
        nonlocal used
        if u == n:
            return True
        for v in range(n):
            if used >> v & 1 or deg1[u] != deg2[v]:
                continue
            ok = True
            for w in range(u):
                if (g1.rows[u] >> w & 1) != (g2.rows[v] >> mapping[w] & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used |= 1 << v
                if extend(u + 1):
                    return True
                used ^= 1 << v
        return False

    return extend(0)
