from math import comb

import pytest
from hypothesis import given, strategies as st

from rainbowpaths import closed_forms as cf
from rainbowpaths.closed_forms import Branch, HParams
from rainbowpaths.errors import InvalidParameter, OutOfRange, Unsupported
from rainbowpaths.graphs import build_h_graph


@pytest.mark.parametrize("k, eps", [(5, 1), (6, 2), (3, 1), (4, 2)])
def test_epsilon_of(k, eps):
    assert cf.epsilon_of(k) == eps


def test_epsilon_rejects_short_paths():
    with pytest.raises(InvalidParameter):
        cf.epsilon_of(2)


@pytest.mark.parametrize("k", range(3, 30))
def test_path_spec_invariants(k):
    spec = cf.PathSpec(k)
    assert spec.ell == (k - 1) // 2
    assert (spec.epsilon == 1) == (k % 2 == 1)
    assert spec.parity == ("odd" if k % 2 else "even")


# expected values counted on the explicitly built graph, not the formula
@pytest.mark.parametrize("n, k, a, expected", [(2, 2, 1, 1), (10, 6, 2, 18), (7, 6, 1, 12)])
def test_h_value_examples(n, k, a, expected):
    p = HParams(n, k, a)
    assert len(build_h_graph(p).edges) == expected
    assert cf.h_value(p) == expected
    assert cf.h_value(n, k, a) == expected


@pytest.mark.parametrize("n, k, a", [(5, 6, 1), (6, 4, 3), (5, 4, -1)])
def test_h_params_invalid(n, k, a):
    with pytest.raises(InvalidParameter):
        HParams(n, k, a)


def test_h_value_matches_construction_up_to_40():
    for n in range(0, 41):
        for k in range(0, n + 1):
            for a in range(0, k // 2 + 1):
                p = HParams(n, k, a)
                assert cf.h_value(p) == len(build_h_graph(p).edges), p


@pytest.mark.parametrize("n, k, conv, s, r", [
    (10, 5, "floor", 2, 2),
    (8, 5, "floor", 2, 0),
    (8, 5, "ceil", 1, 4),
    (9, 5, "ceil", 2, 1),
    (1, 5, "ceil", 0, 1),
])
def test_turan_decomposition(n, k, conv, s, r):
    d = cf.TuranDecomposition.of(n, k, conv)
    assert (d.s, d.r) == (s, r)
    assert d.n == d.s * (k - 1) + d.r


@given(st.integers(1, 500), st.integers(2, 40))
def test_decomposition_ranges(n, k):
    t2 = cf.TuranDecomposition.of(n, k, "floor")
    ap = cf.TuranDecomposition.of(n, k, "ceil")
    assert 0 <= t2.r <= k - 2 and 1 <= ap.r <= k - 1
    assert t2.s * (k - 1) + t2.r == n == ap.s * (k - 1) + ap.r


@pytest.mark.parametrize("n, k, expected", [(4, 5, 6), (10, 5, 13), (6, 4, 6)])
def test_turan_path_examples(n, k, expected):
    assert cf.turan_path(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(10, 7, 18), (6, 7, 15), (7, 5, 7)])
def test_turan_path_connected_examples(n, k, expected):
    assert cf.turan_path_connected(n, k) == expected


def test_turan_path_connected_refuses_k3():
    with pytest.raises(Unsupported):
        cf.turan_path_connected(5, 3)
    assert cf.turan_path_connected(2, 3) == 1


@pytest.mark.parametrize("n, k, value, branch", [
    (5, 5, 5, Branch.STAR),
    (9, 9, 22, Branch.TIE),
    (10, 6, 11, Branch.STAR),
    (7, 7, 12, Branch.STAR),
    (6, 6, 7, Branch.TIE),
])
def test_ar_value_examples(n, k, value, branch):
    fv = cf.ar_value(n, k)
    assert (fv.value, fv.branch) == (value, branch)
    assert cf.anti_ramsey(n, k) == fv


def test_ar_terms_from_graph_edge_counts():
    # h-terms of ar(n,k) counted on built graphs, compared with the direct expression
    for k in range(5, 14):
        ell = (k - 1) // 2
        i = 0 if k % 2 else 1
        for n in range(k, 25):
            clique = len(build_h_graph(HParams(k, k - 1, 1)).edges) - 1
            star = len(build_h_graph(HParams(n, k - 1, ell - 1)).edges) - i
            assert cf.anti_ramsey(n, k).value == max(clique, star)


@pytest.mark.parametrize("n, k", [(4, 5), (5, 4), (7, 4)])
def test_anti_ramsey_out_of_range(n, k):
    with pytest.raises(OutOfRange):
        cf.anti_ramsey(n, k)
    with pytest.raises(OutOfRange):
        cf.ar_value(n, k)


@pytest.mark.parametrize("n, k, branch", [(9, 9, Branch.TIE), (10, 9, Branch.STAR), (7, 7, Branch.STAR),
                                          (9, 7, Branch.STAR), (8, 8, Branch.CLIQUE)])
def test_attaining_branch(n, k, branch):
    assert cf.attaining_branch(n, k) is branch


def test_attaining_branch_thresholds():
    for k in range(5, 40):
        thr = cf.clique_threshold(k)
        for n in range(k, 120):
            b = cf.attaining_branch(n, k)
            assert (b in (Branch.CLIQUE, Branch.TIE)) == (n <= thr)


@given(st.integers(5, 60), st.integers(0, 400))
def test_monotone_in_n(k, extra):
    n = k + extra
    assert cf.anti_ramsey(n + 1, k).value >= cf.anti_ramsey(n, k).value


@given(st.integers(5, 60), st.integers(0, 300))
def test_two_expressions_agree(k, extra):
    n = k + extra
    assert cf.anti_ramsey(n, k) == cf.ar_value(n, k)


def test_clique_term_is_construction_count():
    for k in range(5, 30):
        assert cf.ar_value(k, k).value >= comb(k - 2, 2) + 1
