"""Uncolored graph machinery on dense integer vertex labels.

Adjacency is kept as one int bitmask per vertex; all searches here are
exhaustive and aimed at graphs with at most about 20 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .closed_forms import HParams
from .errors import InvalidParameter

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be >= 0, got {self.n}")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"edge ({u},{v}) outside [0,{self.n})")
            clean.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def without_edges(self, drop: Iterable[Edge]) -> "Graph":
        drop = {norm_edge(*e) for e in drop}
        return Graph(self.n, self.edges - drop)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with both classes of size ``ell``.

    Edges are pairs ``(a, b)`` of class-local indices. In the vertex-sequence
    view used by cycles, side A vertex ``a`` is ``a`` and side B vertex ``b``
    is ``ell + b``.
    """

    ell: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.edges:
            if not (0 <= a < self.ell and 0 <= b < self.ell):
                raise InvalidParameter(f"bipartite edge ({a},{b}) outside [0,{self.ell})")
        object.__setattr__(self, "edges", frozenset(self.edges))

    def as_graph(self) -> Graph:
        return Graph(2 * self.ell, frozenset((a, self.ell + b) for a, b in self.edges))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def build_h_graph(p: HParams) -> Graph:
    """H(n,k,a) with A = [0, a), B = [a, a+|B|), C = the rest.

    A is joined to everything; C is a clique; B is independent.
    """
    a, b = p.size_a, p.size_b
    core = list(range(a)) + list(range(a + b, p.n))
    edges = {norm_edge(u, v) for i, u in enumerate(core) for v in core[i + 1:]}
    edges.update((x, y) for x in range(a) for y in range(a, a + b))
    return Graph(p.n, frozenset(edges))


def components(g: Graph) -> list[frozenset]:
    """Connected components, largest first, ties by smallest vertex."""
    seen = 0
    out = []
    adj = g.adj
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(i for i in range(g.n) if comp >> i & 1))
    out.sort(key=lambda c: (-len(c), min(c)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bridges(g: Graph) -> set[Edge]:
    """Cut edges via iterative low-link DFS."""
    adj = [sorted(i for i in range(g.n) if m >> i & 1) for m in g.adj]
    order = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    counter = 0
    for root in range(g.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    break
                low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > order[parent]:
                        found.add(norm_edge(parent, v))
    return found


def has_path_on(g: Graph, k: int) -> Optional[list[int]]:
    """A path on exactly ``k`` vertices, or None.

    Backtracks from each start vertex in ascending order, extending by the
    smallest unused neighbour first, so the witness is reproducible.
    """
    if k < 1:
        raise InvalidParameter(f"path needs k >= 1 vertices, got {k}")
    if k > g.n:
        return None
    adj = g.adj
    path: list[int] = []

    def extend(v: int, used: int) -> bool:
        if len(path) == k:
            return True
        cand = adj[v] & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            if extend(w, used | low):
                return True
            path.pop()
            cand ^= low
        return False

    for start in range(g.n):
        path[:] = [start]
        if extend(start, 1 << start):
            return list(path)
    return None


def is_path_in(g: Graph, vertices: list[int]) -> bool:
    return len(set(vertices)) == len(vertices) and all(
        g.has_edge(u, v) for u, v in zip(vertices, vertices[1:])
    )


def bipartite_hamilton_cycle(b: BipartiteGraph) -> Optional[list[int]]:
    """A cycle through all 2*ell vertices, as a vertex sequence starting at A-vertex 0.

    Vertices use the :meth:`BipartiteGraph.as_graph` labels.
    """
    if b.ell < 2:
        raise InvalidParameter(f"ell must be >= 2, got {b.ell}")
    g = b.as_graph()
    adj = g.adj
    total = 2 * b.ell
    if any(m.bit_count() < 2 for m in adj):
        return None
    path = [0]

    def extend(v: int, used: int) -> bool:
        if len(path) == total:
            return bool(adj[v] & 1)
        cand = adj[v] & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            path.append(w)
            if extend(w, used | low):
                return True
            path.pop()
            cand ^= low
        return False

    return list(path) if extend(0, 1) else None
