from collections import deque
from math import gcd

import pytest

from htgaut import group as grp
from htgaut.aut import are_isomorphic
from htgaut.errors import (
    DegenerateMultigraphError,
    DuplicateEdgeError,
    EllRangeError,
    NOddError,
    NotNormalFormError,
    NTooSmallError,
    ParityMismatchError,
)
from htgaut.graph import build_graph, girth, structural_profile
from htgaut.htg import (
    Color,
    HtgParams,
    build_htg,
    color_cycle_lengths,
    girth_by_parameters,
    normal_form,
    raw_edges,
    validate_params,
)
from htgaut.named import Kind, named
from tests.conftest import all_valid_triples


def test_validate_ok():
    assert validate_params(3, 6, 3) == HtgParams(3, 6, 3)


@pytest.mark.parametrize(
    "triple, error",
    [
        ((1, 6, 2), ParityMismatchError),
        ((1, 6, 1), DegenerateMultigraphError),
        ((1, 6, 5), DegenerateMultigraphError),
        ((1, 7, 3), NOddError),
        ((2, 2, 0), NTooSmallError),
        ((2, 6, 6), EllRangeError),
        ((2, 6, -2), EllRangeError),
    ],
)
def test_validate_errors(triple, error):
    with pytest.raises(error):
        validate_params(*triple)


def test_degenerate_triple_really_is_a_multigraph():
    with pytest.raises(DuplicateEdgeError):
        build_graph(6, raw_edges(1, 6, 1))
    with pytest.raises(DuplicateEdgeError):
        build_graph(10, raw_edges(1, 10, 9))


@pytest.mark.parametrize(
    "triple, expected", [((2, 8, 6), (2, 8, 2)), ((1, 14, 5), (1, 14, 5)), ((3, 6, 3), (3, 6, 3))]
)
def test_normal_form(triple, expected):
    assert normal_form(validate_params(*triple)) == HtgParams(*expected)


def test_build_examples():
    k33 = build_htg(validate_params(1, 6, 3))
    assert (k33.graph.order, len(k33.graph.edges)) == (6, 9)
    assert are_isomorphic(k33.graph, named(Kind.K33))
    pappus = build_htg(validate_params(3, 6, 3))
    assert (pappus.graph.order, len(pappus.graph.edges)) == (18, 27)
    assert structural_profile(pappus.graph)["is_bipartite"]


def test_vertex_and_edge_counts():
    for p in all_valid_triples(120):
        g = build_htg(p, check=False).graph
        assert g.order == p.order
        assert len(g.edges) == 3 * p.order // 2


def test_each_vertex_meets_each_color_once():
    for p in all_valid_triples(60):
        htg = build_htg(p, check=False)
        for v in range(p.order):
            assert sorted(htg.color(v, w).value for w in htg.graph.adjacency[v]) == ["blue", "green", "red"]


def _cayley_edges_under_labels(p):
    """Cayley edge set pulled back through the vertex labels, built independently."""
    spec = grp.group_spec(p)
    t, tx, ty = grp.generators(spec)
    index = {}
    for i in range(p.m):
        for j in range(p.n // 2):
            index[grp.GroupElement(j, i, 0)] = i * p.n + (i + 2 * j) % p.n
            index[grp.GroupElement(j, i, 1)] = i * p.n + (i + 2 * j + 1) % p.n
    edges = {}
    for g, v in index.items():
        for color, s in zip(Color, (t, tx, ty)):
            w = index[grp.multiply(spec, g, s)]
            edges[(min(v, w), max(v, w))] = color
    return edges


def test_construction_equals_cayley_graph_edge_for_edge():
    for p in all_valid_triples(120):
        htg = build_htg(p, check=False)
        assert htg.colors == _cayley_edges_under_labels(p), p


def test_girth_formula_matches_bfs():
    for p in all_valid_triples(120, normal_only=True):
        assert girth_by_parameters(p) == girth(build_htg(p, check=False).graph), p


def test_girth_formula_examples():
    assert girth_by_parameters(validate_params(1, 6, 3)) == 4
    assert girth_by_parameters(validate_params(1, 16, 7)) == 4
    assert girth_by_parameters(validate_params(1, 26, 7)) == 6
    with pytest.raises(NotNormalFormError):
        girth_by_parameters(validate_params(2, 8, 6))


def _two_color_cycle_lengths(htg, colors):
    adj = {v: [] for v in range(htg.graph.order)}
    for (u, v), c in htg.colors.items():
        if c in colors:
            adj[u].append(v)
            adj[v].append(u)
    seen, lengths = set(), set()
    for s in adj:
        if s in seen:
            continue
        comp, queue = 0, deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            comp += 1
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        lengths.add(comp)
    return lengths


def test_color_cycle_length_examples():
    assert color_cycle_lengths(validate_params(3, 6, 3)) == (6, 6, 6)
    assert color_cycle_lengths(validate_params(1, 14, 5)) == (14, 14, 14)


def test_color_cycle_lengths_match_two_colored_subgraphs():
    pairs = [(Color.RED, Color.BLUE), (Color.RED, Color.GREEN), (Color.BLUE, Color.GREEN)]
    for p in all_valid_triples(120):
        htg = build_htg(p, check=False)
        expected = color_cycle_lengths(p)
        assert expected[0] == p.n
        for pair, length in zip(pairs, expected):
            assert _two_color_cycle_lengths(htg, pair) == {length}, (p, pair)
        assert expected[1] == 2 * p.m * p.n // gcd(p.n, p.ell + p.m)


def test_generic_six_cycles_close():
    for p in all_valid_triples(80):
        htg = build_htg(p, check=False)
        for start in range(p.order):
            v, walk = start, [start]
            for c in [Color.RED, Color.BLUE, Color.GREEN] * 2:
                v = htg.neighbor(v, c)
                walk.append(v)
            assert v == start
            assert len(set(walk[:-1])) == 6


def test_normal_form_isomorphism_up_to_96():
    for p in all_valid_triples(96):
        q = HtgParams(p.m, p.n, (p.n - p.ell) % p.n)
        if q.ell == p.ell or (p.m == 1 and q.ell in (1, p.n - 1)):
            continue
        assert are_isomorphic(build_htg(p, check=False).graph, build_htg(q, check=False).graph), p
