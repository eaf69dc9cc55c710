"""Edge colorings, the two extremal constructions, representing graphs and
the good-coloring decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .closed_forms import PathSpec
from .errors import InvalidParameter, OutOfRange, PreconditionViolation
from .graphs import Edge, Graph, bridges, complete_graph, components, norm_edge


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Surjective map from the host's edges onto colors ``0 .. c-1``."""

    host: Graph
    color_of: Mapping[Edge, int]
    c: int = field(init=False)

    def __post_init__(self):
        colors = {norm_edge(*e): col for e, col in self.color_of.items()}
        if set(colors) != set(self.host.edges):
            raise InvalidParameter("coloring must assign exactly the host's edges")
        used = set(colors.values())
        if used != set(range(len(used))):
            raise InvalidParameter("colors must be exactly 0..c-1")
        object.__setattr__(self, "color_of", MappingProxyType(colors))
        object.__setattr__(self, "c", len(used))

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> "EdgeColoring":
        colors = {}
        for u, v, col in triples:
            e = norm_edge(u, v)
            if e in colors:
                raise InvalidParameter(f"duplicate edge {e}")
            colors[e] = col
        return cls(Graph(n, frozenset(colors)), colors)

    @property
    def n(self) -> int:
        return self.host.n

    def color(self, u: int, v: int) -> int:
        return self.color_of[norm_edge(u, v)]

    def classes(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(self.c)]
        for e in sorted(self.color_of):
            out[self.color_of[e]].append(e)
        return out

    def triples(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.color_of[(u, v)]) for u, v in sorted(self.color_of)]

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.host == other.host and dict(self.color_of) == dict(other.color_of)

    def __hash__(self):
        return hash((self.host, frozenset(self.color_of.items())))


def relabel_by_first_use(host: Graph, raw: Mapping[Edge, object]) -> EdgeColoring:
    """Renumber arbitrary color labels to 0.. in order of first appearance along sorted edges."""
    ids: dict[object, int] = {}
    colors = {}
    for e in sorted(raw):
        colors[e] = ids.setdefault(raw[e], len(ids))
    return EdgeColoring(host, colors)


@dataclass(frozen=True, eq=False)
class RepresentingGraph:
    """One chosen edge per color class of ``base``."""

    base: EdgeColoring
    chosen: tuple[Edge, ...]

    def __post_init__(self):
        chosen = tuple(norm_edge(*e) for e in self.chosen)
        if len(chosen) != self.base.c:
            raise InvalidParameter("need exactly one chosen edge per color")
        for col, e in enumerate(chosen):
            if self.base.color_of.get(e) != col:
                raise InvalidParameter(f"edge {e} is not of color {col}")
        object.__setattr__(self, "chosen", chosen)

    @property
    def graph(self) -> Graph:
        return Graph(self.base.n, frozenset(self.chosen))

    def largest_component(self) -> int:
        comps = components(self.graph)
        return len(comps[0]) if comps else 0

    def swapped(self, e: Edge) -> "RepresentingGraph":
        """Replace the chosen edge of ``e``'s color by ``e``."""
        e = norm_edge(*e)
        chosen = list(self.chosen)
        chosen[self.base.color_of[e]] = e
        return RepresentingGraph(self.base, tuple(chosen))


@dataclass(frozen=True)
class StarConstructionParams:
    n: int
    k: int
    t: int = field(init=False)
    extra_colors: int = field(init=False)

    def __post_init__(self):
        spec = PathSpec(self.k)
        object.__setattr__(self, "t", (self.k - 3) // 2)
        object.__setattr__(self, "extra_colors", spec.epsilon)

    @property
    def x(self) -> range:
        return range(self.t)


@dataclass(frozen=True)
class GoodColoringResult:
    representing: RepresentingGraph
    cut_set: frozenset
    cut_colors: frozenset
    parts: tuple[frozenset, ...]


def _check_construction_range(n: int, k: int) -> None:
    if not (n >= k >= 5):
        raise OutOfRange(f"constructions need n >= k >= 5, got n={n} k={k}")


def construct_clique_coloring(n: int, k: int) -> EdgeColoring:
    """Rainbow K_{k-2} on vertices 0..k-3; every other edge gets one extra color."""
    _check_construction_range(n, k)
    host = complete_graph(n)
    clique = k - 2
    colors = {}
    nxt = 0
    for e in sorted(host.edges):
        if e[1] < clique:
            colors[e] = nxt
            nxt += 1
    rest = comb(clique, 2)
    for e in host.edges:
        colors.setdefault(e, rest)
    return EdgeColoring(host, colors)


def construct_star_coloring(n: int, k: int) -> EdgeColoring:
    """Every edge meeting X = {0..t-1} gets its own color; the remaining edges
    share one color (odd k) or are split in two by the parity of ``u - t`` (even k)."""
    _check_construction_range(n, k)
    p = StarConstructionParams(n, k)
    host = complete_graph(n)
    colors = {}
    nxt = 0
    for u, v in sorted(host.edges):
        if u < p.t:
            colors[(u, v)] = nxt
            nxt += 1
    for u, v in sorted(host.edges):
        if u >= p.t:
            split = (u - p.t) % 2 if p.extra_colors == 2 else 0
            colors[(u, v)] = nxt + split
    return EdgeColoring(host, colors)


def arbitrary_representing(col: EdgeColoring) -> RepresentingGraph:
    """Lexicographically least edge of every color class."""
    return RepresentingGraph(col, tuple(cls[0] for cls in col.classes()))


def max_component_representing(col: EdgeColoring) -> RepresentingGraph:
    """Greedy exchange towards a representing graph with a largest possible component.

    Starting from :func:`arbitrary_representing`, an edge ``xy`` joining two
    components replaces the chosen edge of its color whenever that strictly
    grows the largest component. Stops at a local maximum.
    """
    host = col.host
    if len(host.edges) != comb(host.n, 2):
        raise PreconditionViolation("max_component_representing needs a complete host")
    rep = arbitrary_representing(col)
    best = rep.largest_component()
    improved = True
    while improved:
        improved = False
        comp_of = {}
        for i, comp in enumerate(components(rep.graph)):
            for v in comp:
                comp_of[v] = i
        for e in sorted(host.edges):
            if comp_of[e[0]] == comp_of[e[1]]:
                continue
            cand = rep.swapped(e)
            size = cand.largest_component()
            if size > best:
                rep, best, improved = cand, size, True
                break
    return rep


def bridge_colors(rep: RepresentingGraph) -> frozenset:
    return frozenset(rep.base.color_of[e] for e in bridges(rep.graph))


def good_coloring_decompose(
    col: EdgeColoring,
    rep: RepresentingGraph,
    seed_colors: Optional[Iterable[int]] = None,
) -> Optional[GoodColoringResult]:
    """Run the deletion procedure from ``seed_colors`` (default: all bridge colors).

    Each round deletes from the representing graph every chosen edge whose color
    is marked, then marks every color found on a host edge joining two of the
    resulting components, until nothing new is marked. Returns None if the
    fixpoint marks a chosen edge that is not a bridge of ``rep``.
    """
    if rep.base is not col and rep.base != col:
        raise PreconditionViolation("representing graph belongs to a different coloring")
    g = rep.graph
    if len(components(g)) != 1:
        raise PreconditionViolation("representing graph must be connected")
    cut_edges = bridges(g)
    if not cut_edges:
        raise PreconditionViolation("representing graph has no cut edge")
    marked = set(bridge_colors(rep) if seed_colors is None else seed_colors)
    if not marked:
        raise PreconditionViolation("empty seed color set")
    if not marked <= set(range(col.c)):
        raise InvalidParameter("seed colors outside 0..c-1")

    while True:
        kept = Graph(col.n, frozenset(e for c_, e in enumerate(rep.chosen) if c_ not in marked))
        parts = components(kept)
        part_of = {v: i for i, comp in enumerate(parts) for v in comp}
        crossing = {
            c_ for e, c_ in col.color_of.items() if part_of[e[0]] != part_of[e[1]]
        }
        if crossing <= marked:
            break
        marked |= crossing

    cut_set = frozenset(rep.chosen[c_] for c_ in marked)
    if not cut_set <= cut_edges:
        return None
    return GoodColoringResult(rep, cut_set, frozenset(marked), tuple(parts))


def is_good_decomposition(col: EdgeColoring, res: GoodColoringResult) -> bool:
    """Check the defining property directly against the host coloring."""
    if not res.cut_set or not res.cut_set <= bridges(res.representing.graph):
        return False
    if res.cut_colors != frozenset(col.color_of[e] for e in res.cut_set):
        return False
    part_of = {v: i for i, comp in enumerate(res.parts) for v in comp}
    return all(
        c_ in res.cut_colors
        for e, c_ in col.color_of.items()
        if part_of[e[0]] != part_of[e[1]]
    )
