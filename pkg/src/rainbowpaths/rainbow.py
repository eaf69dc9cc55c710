"""Rainbow path detection in edge-colored graphs."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .colorings import EdgeColoring
from .errors import InvalidParameter
from .graphs import norm_edge


@dataclass(frozen=True)
class RainbowCertificate:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @classmethod
    def along(cls, col: EdgeColoring, vertices) -> "RainbowCertificate":
        vertices = tuple(vertices)
        return cls(vertices, tuple(col.color(u, v) for u, v in zip(vertices, vertices[1:])))


def validate_certificate(col: EdgeColoring, cert: RainbowCertificate) -> bool:
    vs, cs = cert.vertices, cert.colors
    if len(vs) < 1 or len(cs) != len(vs) - 1 or len(set(vs)) != len(vs):
        return False
    for (u, v), c in zip(zip(vs, vs[1:]), cs):
        if col.color_of.get(norm_edge(u, v)) != c:
            return False
    return len(set(cs)) == len(cs)


def _color_table(col: EdgeColoring) -> tuple[list[int], list[list[int]]]:
    """Neighbour masks plus an n x n color matrix (-1 where no edge)."""
    n = col.n
    table = [[-1] * n for _ in range(n)]
    for (u, v), c in col.color_of.items():
        table[u][v] = table[v][u] = c
    return list(col.host.adj), table


def find_rainbow_path_exact(col: EdgeColoring, k: int) -> Optional[RainbowCertificate]:
    """First rainbow path on ``k`` vertices in (start, next, ...) ascending order."""
    if k < 2:
        raise InvalidParameter(f"rainbow path needs k >= 2, got {k}")
    n = col.n
    if k > n:
        return None
    adj, table = _color_table(col)
    path = [0] * k

    def extend(depth: int, v: int, used_v: int, used_c: int) -> bool:
        if depth == k:
            return True
        row = table[v]
        cand = adj[v] & ~used_v
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cbit = 1 << row[w]
            if not used_c & cbit:
                path[depth] = w
                if extend(depth + 1, w, used_v | low, used_c | cbit):
                    return True
            cand ^= low
        return False

    for start in range(n):
        path[0] = start
        if extend(1, start, 1 << start, 0):
            return RainbowCertificate.along(col, path)
    return None


def default_iterations(k: int, failure: float = 0.01) -> int:
    """Iterations giving success probability >= 1 - failure when a witness exists."""
    b = k - 1
    if b <= 1:
        return 1
    per_round = math.factorial(b) / b**b
    return math.ceil(math.log(1 / failure) / per_round)


def _colorful_path(adj, table, bucket, n: int, k: int) -> Optional[list[int]]:
    full = (1 << (k - 1)) - 1
    # reach[mask] = vertex bitmask ending a colorful walk whose edge buckets are exactly mask
    reach = {0: (1 << n) - 1}
    layer = [0]
    for _ in range(k - 1):
        nxt: dict[int, int] = {}
        for mask in layer:
            ends = reach[mask]
            while ends:
                low = ends & -ends
                u = low.bit_length() - 1
                row = table[u]
                cand = adj[u]
                while cand:
                    lw = cand & -cand
                    w = lw.bit_length() - 1
                    b = bucket[row[w]]
                    if not mask & b:
                        m2 = mask | b
                        nxt[m2] = nxt.get(m2, 0) | lw
                    cand ^= lw
                ends ^= low
        reach.update(nxt)
        layer = list(nxt)
    if not reach.get(full):
        return None

    # Walk the layered state graph backwards, keeping vertices distinct.
    path: list[int] = []

    def back(v: int, mask: int, used: int) -> bool:
        path.append(v)
        if mask == 0:
            return True
        row = table[v]
        cand = adj[v] & ~used
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            b = bucket[row[u]]
            if mask & b and reach.get(mask ^ b, 0) & low:
                if back(u, mask ^ b, used | low):
                    return True
            cand ^= low
        path.pop()
        return False

    ends = reach[full]
    while ends:
        low = ends & -ends
        v = low.bit_length() - 1
        if back(v, full, low):
            return path[::-1]
        ends ^= low
    return None


def find_rainbow_path_colorcoding(
    col: EdgeColoring, k: int, iterations: Optional[int] = None, seed: int = 0
) -> Optional[RainbowCertificate]:
    """Randomized one-sided search; None does not prove absence.

    Every iteration hashes colors into k-1 buckets and looks for a path whose
    edges fall into pairwise distinct buckets.
    """
    if k < 2:
        raise InvalidParameter(f"rainbow path needs k >= 2, got {k}")
    if iterations is None:
        iterations = default_iterations(k)
    if iterations < 1:
        raise InvalidParameter(f"iterations must be >= 1, got {iterations}")
    n = col.n
    if k > n or not col.color_of:
        return None
    adj, table = _color_table(col)
    rng = random.Random(seed)
    for _ in range(iterations):
        bucket = [1 << rng.randrange(k - 1) for _ in range(col.c)]
        found = _colorful_path(adj, table, bucket, n, k)
        if found is not None:
            cert = RainbowCertificate.along(col, found)
            if validate_certificate(col, cert):
                return cert
    return None
