import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from rainbowpaths.colorings import EdgeColoring, construct_star_coloring
from rainbowpaths.errors import InvalidParameter
from rainbowpaths.graphs import Graph, complete_graph
from rainbowpaths.rainbow import (
    RainbowCertificate,
    default_iterations,
    find_rainbow_path_colorcoding,
    find_rainbow_path_exact,
    validate_certificate,
)


def naive_rainbow(col, k):
    for perm in itertools.permutations(range(col.n), k):
        colors = []
        for a, b in zip(perm, perm[1:]):
            e = (min(a, b), max(a, b))
            if e not in col.color_of:
                break
            colors.append(col.color_of[e])
        else:
            if len(set(colors)) == k - 1:
                return True
    return False


def random_instance(rng, n):
    p = rng.random()
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    c = rng.randint(1, max(1, len(edges)))
    raw = {e: rng.randrange(c) for e in edges}
    ids = {}
    colors = {e: ids.setdefault(raw[e], len(ids)) for e in sorted(edges)}
    return EdgeColoring(Graph(n, frozenset(edges)), colors)


def rainbow_k(n):
    g = complete_graph(n)
    return EdgeColoring(g, {e: i for i, e in enumerate(sorted(g.edges))})


def mono_k(n):
    g = complete_graph(n)
    return EdgeColoring(g, {e: 0 for e in g.edges})


def test_exact_examples():
    cert = find_rainbow_path_exact(rainbow_k(5), 5)
    assert cert is not None and validate_certificate(rainbow_k(5), cert)
    assert cert.vertices == (0, 1, 2, 3, 4)
    assert find_rainbow_path_exact(mono_k(6), 3) is None
    assert find_rainbow_path_exact(construct_star_coloring(8, 7), 7) is None


def test_k2_any_edge():
    cert = find_rainbow_path_exact(mono_k(3), 2)
    assert cert.vertices == (0, 1)
    assert find_rainbow_path_exact(EdgeColoring(Graph(3), {}), 2) is None


def test_k_too_small():
    with pytest.raises(InvalidParameter):
        find_rainbow_path_exact(mono_k(3), 1)
    with pytest.raises(InvalidParameter):
        find_rainbow_path_colorcoding(mono_k(3), 1, 5, 0)
    with pytest.raises(InvalidParameter):
        find_rainbow_path_colorcoding(mono_k(3), 3, 0, 0)


def test_validate_certificate():
    col = rainbow_k(5)
    good = RainbowCertificate.along(col, [0, 1, 2, 3, 4])
    assert validate_certificate(col, good)
    repeat = RainbowCertificate((0, 1, 0), (col.color(0, 1), col.color(0, 1)))
    assert not validate_certificate(col, repeat)
    two_colors = EdgeColoring(complete_graph(3), {(0, 1): 0, (1, 2): 0, (0, 2): 1})
    same = RainbowCertificate.along(two_colors, [0, 1, 2])
    assert not validate_certificate(two_colors, same)
    wrong_color = RainbowCertificate((0, 1, 2), (col.color(0, 1), col.color(0, 2)))
    assert not validate_certificate(col, wrong_color)
    missing_edge = EdgeColoring(Graph(3, frozenset({(0, 1)})), {(0, 1): 0})
    assert not validate_certificate(missing_edge, RainbowCertificate((0, 2), (0,)))


def test_exact_agrees_with_naive():
    rng = random.Random(17)
    for _ in range(1500):
        n = rng.randint(2, 7)
        col = random_instance(rng, n)
        for k in range(2, n + 1):
            cert = find_rainbow_path_exact(col, k)
            assert (cert is not None) == naive_rainbow(col, k)
            if cert is not None:
                assert len(cert.vertices) == k and validate_certificate(col, cert)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 7))
def test_colorcoding_never_beats_exact(seed, n):
    rng = random.Random(seed)
    col = random_instance(rng, n)
    k = rng.randint(2, n)
    cc = find_rainbow_path_colorcoding(col, k, 20, seed)
    if cc is not None:
        assert validate_certificate(col, cc) and len(cc.vertices) == k
        assert find_rainbow_path_exact(col, k) is not None


def test_colorcoding_examples():
    cert = find_rainbow_path_colorcoding(rainbow_k(6), 4, 50, 7)
    assert cert is not None and validate_certificate(rainbow_k(6), cert)
    assert find_rainbow_path_colorcoding(mono_k(6), 3, 200, 1) is None


def test_colorcoding_reproducible():
    rng = random.Random(4)
    col = random_instance(rng, 7)
    runs = {find_rainbow_path_colorcoding(col, 4, 30, 99) for _ in range(3)}
    assert len(runs) == 1


def test_default_iterations():
    assert default_iterations(6) == 120
    b = 6
    assert default_iterations(7) == math.ceil(math.log(100) * b**b / math.factorial(b))
    assert default_iterations(2) == 1


def _positive_12_vertex_instance():
    rng = random.Random(123)
    g = complete_graph(12)
    # few colors with one planted rainbow P_6, so witnesses are scarce
    colors = {e: rng.randrange(2) for e in g.edges}
    plant = [0, 3, 6, 9, 11, 5]
    for i, (a, b) in enumerate(zip(plant, plant[1:])):
        colors[(min(a, b), max(a, b))] = 2 + i
    return EdgeColoring(g, colors)


def test_colorcoding_success_rate_against_exact():
    col = _positive_12_vertex_instance()
    assert find_rainbow_path_exact(col, 6) is not None
    hits = sum(find_rainbow_path_colorcoding(col, 6, 400, seed) is not None for seed in range(100))
    assert hits >= 99
