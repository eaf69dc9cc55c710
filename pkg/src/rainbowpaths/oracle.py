"""Brute-force ground truth for the closed forms, plus numeric lemma sweeps.

Nothing in here trusts the closed forms when computing a value; they are only
consulted on the other side of a comparison.
"""

from __future__ import annotations

import itertools
import logging
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import closed_forms as cf
from .colorings import (
    EdgeColoring,
    RepresentingGraph,
    good_coloring_decompose,
    is_good_decomposition,
)
from .errors import InvalidParameter, Refused
from .graphs import (
    BipartiteGraph,
    bipartite_hamilton_cycle,
    bridges,
    complete_graph,
    is_connected,
)
from .rainbow import find_rainbow_path_exact

log = logging.getLogger(__name__)


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    pruned_by_rainbow: int = 0
    pruned_by_bound: int = 0
    elapsed: float = 0.0

    def add(self, other: "SearchStats") -> None:
        self.nodes_expanded += other.nodes_expanded
        self.pruned_by_rainbow += other.pruned_by_rainbow
        self.pruned_by_bound += other.pruned_by_bound

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "pruned_by_rainbow": self.pruned_by_rainbow,
            "pruned_by_bound": self.pruned_by_bound,
            "elapsed": round(self.elapsed, 6),
        }


@dataclass
class SweepReport:
    range_descriptor: str
    instances_checked: int = 0
    counterexamples: list = field(default_factory=list)
    tight_cases: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return (
            f"instances={self.instances_checked} "
            f"counterexamples={len(self.counterexamples)} tight={len(self.tight_cases)}"
        )


@dataclass(frozen=True)
class PartsInstance:
    k1: int
    k2: int
    n0: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if not (self.k1 >= self.k2 >= 3):
            raise InvalidParameter("need k1 >= k2 >= 3")
        if not self.parts or min(self.parts) < 1:
            raise InvalidParameter("need t >= 1 parts, each of size >= 1")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise InvalidParameter("parts must be non-increasing")
        if self.n0 < self.k1 - 1:
            raise InvalidParameter("need n0 >= k1 - 1")
        if self.n < self.k1 + self.k2 - 1:
            raise InvalidParameter("need n >= k1 + k2 - 1")

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return self.n0 + sum(self.parts)

    def lhs(self) -> int:
        return (
            cf.turan_path_connected(self.n0, self.k1)
            + sum(cf.turan_path_connected(m, self.k2) for m in self.parts)
            + self.t
            - 1
        )

    def rhs(self) -> int:
        return cf.ar_value(self.n, self.k1 + self.k2 - 1).value


def default_workers() -> int:
    env = os.environ.get("RAINBOW_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidParameter(f"RAINBOW_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# exact anti-Ramsey number by set-partition search


EXACT_AR_RANGE = {(5, 5), (6, 5), (6, 6), (7, 5)}
EXACT_AR_EXPERIMENTAL = {(7, 6), (7, 7)}


def _paths_by_last_edge(n: int, k: int) -> list[list[tuple[int, ...]]]:
    """Every k-vertex path of K_n as edge indices, filed under its largest index.

    Edges are colored in index order, so a path is fully colored exactly when
    its largest edge is, and that is the only moment it needs checking.
    """
    index = {(u, v): i for i, (u, v) in enumerate(itertools.combinations(range(n), 2))}
    out: list[list[tuple[int, ...]]] = [[] for _ in index]
    for perm in itertools.permutations(range(n), k):
        if perm[0] > perm[-1]:
            continue
        es = tuple(index[(min(a, b), max(a, b))] for a, b in zip(perm, perm[1:]))
        out[max(es)].append(es)
    return out


class _PartitionSearch:
    """Restricted-growth-string search for a rainbow-P_k-free coloring of K_n
    with at least ``target`` colors."""

    def __init__(self, n: int, k: int, target: int):
        self.n, self.k, self.target = n, k, target
        self.m = n * (n - 1) // 2
        self.by_last = _paths_by_last_edge(n, k)
        self.stats = SearchStats()

    def _rainbow_free_at(self, col: list[int], i: int) -> bool:
        need = self.k - 1
        for p in self.by_last[i]:
            if len({col[e] for e in p}) == need:
                return False
        return True

    def run(self, prefix: tuple[int, ...] = (), stop_depth: Optional[int] = None):
        """DFS from a valid prefix.

        Returns the first complete coloring reaching the target, or, when
        ``stop_depth`` is given, the list of all surviving prefixes of that length.
        """
        m, target, stats = self.m, self.target, self.stats
        col = list(prefix) + [0] * (m - len(prefix))
        collected: list[tuple[int, ...]] = []

        def rec(i: int, nc: int) -> bool:
            stats.nodes_expanded += 1
            if stop_depth is not None and i == stop_depth:
                collected.append(tuple(col[:i]))
                return False
            if i == m:
                return nc >= target
            rem = m - i - 1
            for c in range(nc + 1):
                nn = nc + 1 if c == nc else nc
                if nn + rem < target:
                    stats.pruned_by_bound += 1
                    continue
                col[i] = c
                if not self._rainbow_free_at(col, i):
                    stats.pruned_by_rainbow += 1
                    continue
                if rec(i + 1, nn):
                    return True
            return False

        nc = max(prefix) + 1 if prefix else 0
        if rec(len(prefix), nc):
            return list(col)
        return collected if stop_depth is not None else None


def _run_prefix(args):
    n, k, target, prefix = args
    search = _PartitionSearch(n, k, target)
    found = search.run(prefix)
    return found, search.stats


def _feasible(n: int, k: int, target: int, workers: int, stats: SearchStats):
    if workers <= 1:
        search = _PartitionSearch(n, k, target)
        found = search.run()
        stats.add(search.stats)
        return found
    splitter = _PartitionSearch(n, k, target)
    depth = min(splitter.m, 7)
    prefixes = splitter.run(stop_depth=depth)
    stats.add(splitter.stats)
    if not prefixes:
        return None
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        # imap keeps prefix order, so the first hit is the lexicographically least
        for found, sub in pool.imap(_run_prefix, [(n, k, target, p) for p in prefixes]):
            stats.add(sub)
            if found is not None:
                pool.terminate()
                return found
    return None


@dataclass
class ExactARResult:
    value: int
    witness: EdgeColoring
    stats: SearchStats


def exact_ar(n: int, k: int, experimental: bool = False, workers: Optional[int] = None) -> ExactARResult:
    """AR(n, P_k) straight from the definition, by exhaustive search.

    Colorings of K_n are enumerated as set partitions of its edge list (edges in
    lexicographic order, restricted-growth strings, so color relabelings are
    never revisited). A branch dies as soon as its colored edges hold a rainbow
    P_k, or when even giving every remaining edge a fresh color cannot reach the
    target. Targets rise one at a time; the value is the last feasible target,
    and the witness is the lexicographically least optimal coloring.
    """
    allowed = EXACT_AR_RANGE | (EXACT_AR_EXPERIMENTAL if experimental else set())
    if (n, k) not in allowed:
        hint = " (pass experimental=True / --experimental)" if (n, k) in EXACT_AR_EXPERIMENTAL else ""
        raise Refused(
            f"exact_ar supports (n,k) in {sorted(EXACT_AR_RANGE)}{hint}; got ({n},{k})"
        )
    workers = default_workers() if workers is None else max(1, workers)
    stats = SearchStats()
    start = time.perf_counter()
    edges = list(itertools.combinations(range(n), 2))
    target = 1
    best = None
    while True:
        found = _feasible(n, k, target, workers, stats)
        if found is None:
            break
        best = found
        target = max(found) + 2
        log.debug("exact_ar(%d,%d): feasible with %d colors", n, k, target - 1)
    stats.elapsed = time.perf_counter() - start
    witness = EdgeColoring(complete_graph(n), dict(zip(edges, best)))
    if find_rainbow_path_exact(witness, k) is not None:
        raise AssertionError("exact_ar produced a witness containing a rainbow path")
    return ExactARResult(witness.c, witness, stats)


# ---------------------------------------------------------------------------
# brute-force Turán numbers


def _has_path_masks(adj: list[int], n: int, k: int) -> bool:
    def extend(v: int, used: int, left: int) -> bool:
        if left == 0:
            return True
        cand = adj[v] & ~used
        while cand:
            low = cand & -cand
            if extend(low.bit_length() - 1, used | low, left - 1):
                return True
            cand ^= low
        return False

    return any(extend(s, 1 << s, k - 1) for s in range(n))


def _max_path_free(n: int, k: int, connected: bool) -> tuple[int, SearchStats]:
    """Largest P_k-free (optionally connected) graph on n labeled vertices.

    Include/exclude search over all 2^C(n,2) edge subsets. Being P_k-free is
    closed under deleting edges, so a branch whose partial graph already holds
    a P_k is dead, and a branch that cannot beat the incumbent even by taking
    every remaining edge is skipped.
    """
    stats = SearchStats()
    start = time.perf_counter()
    edges = list(itertools.combinations(range(n), 2))
    m = len(edges)
    adj = [0] * n
    best = -1

    def connected_now() -> bool:
        seen = frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << n) - 1

    def rec(i: int, count: int) -> None:
        nonlocal best
        stats.nodes_expanded += 1
        if count + (m - i) <= best:
            stats.pruned_by_bound += 1
            return
        if i == m:
            if not connected or n <= 1 or connected_now():
                best = count
            return
        u, v = edges[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if _has_path_masks(adj, n, k):
            stats.pruned_by_rainbow += 1
        else:
            rec(i + 1, count + 1)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        rec(i + 1, count)

    if k > n:
        best = m
    else:
        rec(0, 0)
    stats.elapsed = time.perf_counter() - start
    return best, stats


def brute_ex_with_stats(n: int, k: int) -> tuple[int, SearchStats]:
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if not 0 <= n <= 7:
        raise Refused(f"brute_ex supports 0 <= n <= 7, got n={n}")
    return _max_path_free(n, k, connected=False)


def brute_ex(n: int, k: int) -> int:
    return brute_ex_with_stats(n, k)[0]


def brute_ex_con_with_stats(n: int, k: int) -> tuple[int, SearchStats]:
    if k < 4:
        raise InvalidParameter(f"brute_ex_con needs k >= 4, got {k}")
    if not 1 <= n <= 7:
        raise Refused(f"brute_ex_con supports 1 <= n <= 7, got n={n}")
    return _max_path_free(n, k, connected=True)


def brute_ex_con(n: int, k: int) -> int:
    return brute_ex_con_with_stats(n, k)[0]


# ---------------------------------------------------------------------------
# sweeps


def integer_partitions(m: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of positive integers summing to m."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield (first,) + rest


def iter_parts_instances(max_k: int, max_n: int, max_t: int) -> Iterator[PartsInstance]:
    for k1 in range(4, max_k + 1):
        for k2 in range(4, k1 + 1):
            for t in range(1, max_t + 1):
                for n0 in range(k1 - 1, max_n - t + 1):
                    rest_max = max_n - n0
                    for total in range(t, rest_max + 1):
                        if n0 + total < k1 + k2 - 1:
                            continue
                        for parts in integer_partitions(total):
                            if len(parts) == t:
                                yield PartsInstance(k1, k2, n0, parts)


def verify_lemma_parts(max_k: int = 9, max_n: int = 30, max_t: int = 4) -> SweepReport:
    """ex_con(n0,P_k1) + sum ex_con(ni,P_k2) + t - 1 <= ar(n, k1+k2-1) over a box."""
    if max_k > 9 or max_n > 30 or max_t > 4:
        raise Refused("verify_lemma_parts budget is max_k <= 9, max_n <= 30, max_t <= 4")
    report = SweepReport(f"4<=k2<=k1<={max_k}, n<={max_n}, 1<=t<={max_t}")
    for inst in iter_parts_instances(max_k, max_n, max_t):
        lhs, rhs = inst.lhs(), inst.rhs()
        report.instances_checked += 1
        row = {"k1": inst.k1, "k2": inst.k2, "n0": inst.n0, "parts": list(inst.parts),
               "n": inst.n, "lhs": lhs, "rhs": rhs}
        if lhs > rhs:
            report.counterexamples.append(row)
        elif lhs == rhs:
            report.tight_cases.append(row)
        _note_slack(report, rhs - lhs)
    return report


def _note_slack(report: SweepReport, slack: int) -> None:
    cur = report.details.get("min_slack")
    report.details["min_slack"] = slack if cur is None else min(cur, slack)


def verify_subadditivity(k: int, max_m: int = 18) -> SweepReport:
    """sum ex(m_i,P_k) + t - 1 <= ex(m,P_k) + s over every partition of every m <= max_m,
    where m = s(k-1) + r with 1 <= r <= k-1."""
    if not 2 <= k <= 8 or max_m > 18:
        raise Refused("verify_subadditivity budget is 2 <= k <= 8, max_m <= 18")
    report = SweepReport(f"k={k}, 1<=m<={max_m}, all partitions")
    for m in range(1, max_m + 1):
        s = cf.TuranDecomposition.of(m, k, "ceil").s
        rhs = cf.turan_path(m, k) + s
        for parts in integer_partitions(m):
            lhs = sum(cf.turan_path(p, k) for p in parts) + len(parts) - 1
            report.instances_checked += 1
            row = {"k": k, "m": m, "parts": list(parts), "lhs": lhs, "rhs": rhs}
            if lhs > rhs:
                report.counterexamples.append(row)
            elif lhs == rhs:
                report.tight_cases.append(row)
            _note_slack(report, rhs - lhs)
    return report


def verify_bipartite_lemma(ell: int) -> SweepReport:
    """Every bipartite graph with classes of size ell and at least
    (ell-1)*ell + 2 edges has a cycle through all 2*ell vertices.

    Also counts graphs with one edge fewer that have no such cycle, which
    shows the edge bound cannot be lowered.
    """
    if not 2 <= ell <= 5:
        raise Refused(f"verify_bipartite_lemma supports 2 <= ell <= 5, got {ell}")
    threshold = (ell - 1) * ell + 2
    full = [(a, b) for a in range(ell) for b in range(ell)]
    report = SweepReport(f"ell={ell}, e>={threshold}")
    for removed in range(len(full) - threshold + 1):
        for drop in itertools.combinations(full, removed):
            g = BipartiteGraph(ell, frozenset(full) - frozenset(drop))
            report.instances_checked += 1
            if bipartite_hamilton_cycle(g) is None:
                report.counterexamples.append({"ell": ell, "edges": sorted(g.edges)})
            elif len(g.edges) == threshold:
                report.tight_cases.append({"ell": ell, "edges": sorted(g.edges)})
    below = 0
    for drop in itertools.combinations(full, len(full) - threshold + 1):
        if bipartite_hamilton_cycle(BipartiteGraph(ell, frozenset(full) - frozenset(drop))) is None:
            below += 1
    report.details["non_hamiltonian_one_below_threshold"] = below
    return report


def formula_consistency_sweep(max_k: int = 60, max_n: int = 300) -> SweepReport:
    """Both anti-Ramsey expressions agree, and the branch flips where the thresholds say."""
    if max_k > 60 or max_n > 300:
        raise Refused("formula_consistency_sweep budget is max_k <= 60, max_n <= 300")
    report = SweepReport(f"5<=k<={max_k}, k<=n<={max_n}")
    for k in range(5, max_k + 1):
        threshold = cf.clique_threshold(k)
        for n in range(k, max_n + 1):
            direct = cf.anti_ramsey(n, k)
            via_h = cf.ar_value(n, k)
            report.instances_checked += 1
            expected = (
                cf.Branch.TIE if n == threshold
                else cf.Branch.CLIQUE if n < threshold
                else cf.Branch.STAR
            )
            if direct != via_h or via_h.branch is not expected:
                report.counterexamples.append(
                    {"n": n, "k": k, "anti_ramsey": direct.value, "ar": via_h.value,
                     "branch": via_h.branch.value, "expected_branch": expected.value}
                )
            elif via_h.branch is cf.Branch.TIE:
                report.tight_cases.append({"n": n, "k": k, "value": via_h.value})
    return report


# ---------------------------------------------------------------------------
# good colorings at tiny scale


def representing_graphs(col: EdgeColoring) -> Iterator[RepresentingGraph]:
    for choice in itertools.product(*col.classes()):
        yield RepresentingGraph(col, tuple(choice))


def bridge_color_core(col: EdgeColoring) -> Optional[frozenset]:
    """Colors that sit on a cut edge of every connected representing graph.

    Exponential in the number of colors; refused above 6 vertices. None when
    no representing graph is connected.
    """
    if col.n > 6:
        raise Refused("bridge_color_core enumerates all representing graphs; n <= 6 only")
    core = None
    for rep in representing_graphs(col):
        g = rep.graph
        if not is_connected(g):
            continue
        here = frozenset(col.color_of[e] for e in bridges(g))
        core = here if core is None else core & here
        if not core:
            return core
    return core


def random_coloring(rng: random.Random, n: int, max_colors: Optional[int] = None) -> EdgeColoring:
    host = complete_graph(n)
    edges = sorted(host.edges)
    c = rng.randint(1, max_colors or len(edges))
    raw = {e: rng.randrange(c) for e in edges}
    ids: dict[int, int] = {}
    colors = {e: ids.setdefault(raw[e], len(ids)) for e in edges}
    return EdgeColoring(host, colors)


def verify_good_coloring_lemma(trials: int = 300, max_n: int = 6, seed: int = 0) -> SweepReport:
    """Whenever the bridge-color core C0 is nonempty, some connected representing
    graph admits a good decomposition whose cut colors contain C0."""
    if max_n > 6:
        raise Refused("verify_good_coloring_lemma needs max_n <= 6")
    rng = random.Random(seed)
    report = SweepReport(f"{trials} random colorings of K_n, 4<=n<={max_n}")
    every_rep_failures = 0
    for _ in range(trials):
        n = rng.randint(4, max_n)
        col = random_coloring(rng, n, max_colors=n + 3)
        core = bridge_color_core(col)
        if not core:
            continue
        report.instances_checked += 1
        ok_any = False
        for rep in representing_graphs(col):
            if not is_connected(rep.graph):
                continue
            res = good_coloring_decompose(col, rep, core)
            if res is not None and core <= res.cut_colors and is_good_decomposition(col, res):
                ok_any = True
            else:
                every_rep_failures += 1
        if not ok_any:
            report.counterexamples.append({"triples": col.triples(), "core": sorted(core)})
    report.details["per_representing_graph_failures"] = every_rep_failures
    return report
