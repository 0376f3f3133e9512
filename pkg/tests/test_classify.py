import itertools

import numpy as np
import pytest

from htgaut.aut import PermGroup, are_isomorphic, automorphisms
from htgaut.aut.perm import compose, is_identity
from htgaut.classify import (
    Category,
    ColorGroup,
    classify,
    color_aut_subgroup,
    color_automorphism,
    color_map,
    condition,
    condition_flags,
    flag_sweep,
    left_regular_generators,
    normal_form_triples,
)
from htgaut.group import generators, multiply
from htgaut.htg import Color, build_htg, validate_params, vertex_element
from htgaut.named import Kind, named
from tests.conftest import all_valid_triples

R, B, G = Color.RED, Color.BLUE, Color.GREEN
SWAP_BG = {R: R, B: G, G: B}
SWAP_RG = {R: G, B: B, G: R}
SWAP_RB = {R: B, B: R, G: G}
CYCLE = {R: B, B: G, G: R}
CYCLE_INV = {R: G, B: R, G: B}
IDENTITY = {R: R, B: B, G: G}
ALL_SIGMAS = [SWAP_BG, SWAP_RG, SWAP_RB, CYCLE, CYCLE_INV]


@pytest.mark.parametrize(
    "triple, which",
    [((1, 10, 3), "c2"), ((2, 6, 0), "c3"), ((1, 26, 7), "c4")],
)
def test_condition_examples(triple, which):
    assert condition(validate_params(*triple), which)


def test_condition_examples_false():
    p = validate_params(1, 18, 5)
    assert condition_flags(p).as_tuple() == (False, False, False, False)
    assert condition_flags(validate_params(1, 26, 7)).as_tuple() == (False, False, False, True)


@pytest.mark.parametrize(
    "triple, expected",
    [((4, 8, 4), ColorGroup.SYM3), ((1, 26, 7), ColorGroup.CYCLIC3), ((1, 18, 5), ColorGroup.TRIVIAL)],
)
def test_color_subgroup_examples(triple, expected):
    assert color_aut_subgroup(validate_params(*triple)) is expected


def test_swap_example_fixes_identity_and_t():
    p = validate_params(4, 8, 4)
    perm = color_automorphism(p, SWAP_BG)
    assert perm is not None
    htg = build_htg(p)
    one = htg.vertex_of[vertex_element(p, 0)]
    assert perm[one] == one
    t_vertex = htg.neighbor(one, R)
    tx_vertex, ty_vertex = htg.neighbor(one, B), htg.neighbor(one, G)
    assert perm[t_vertex] == t_vertex
    assert (perm[tx_vertex], perm[ty_vertex]) == (ty_vertex, tx_vertex)


def test_absent_and_identity_cases():
    p = validate_params(1, 18, 5)
    assert all(color_automorphism(p, s) is None for s in ALL_SIGMAS)
    assert color_automorphism(p, IDENTITY) == tuple(range(18))


def test_color_automorphisms_are_involutions_or_of_order_three():
    for p in all_valid_triples(120):
        for sigma in ALL_SIGMAS:
            perm = color_automorphism(p, sigma)
            if perm is None:
                continue
            square = compose(perm, perm)
            if sigma in (CYCLE, CYCLE_INV):
                assert not is_identity(square) and is_identity(compose(perm, square))
            else:
                assert is_identity(square)


def test_raw_color_map_is_automorphism_iff_condition():
    """Conditions checked against the group itself: is the generator-image map
    a bijective homomorphism sending each generator where sigma says?

    The generator check matters for m = 1, where normal forms never use y and
    the extended map can be an automorphism that moves ty elsewhere.
    """
    sigma_condition = [(SWAP_BG, "c1"), (SWAP_RG, "c2"), (SWAP_RB, "c3"), (CYCLE, "c4"), (CYCLE_INV, "c4")]
    for p in all_valid_triples(120):
        for sigma, which in sigma_condition:
            mapping, spec = color_map(p, sigma)
            els = list(spec.elements())
            gens = dict(zip(Color, generators(spec)))
            on_gens = all(mapping[gens[c]] == gens[sigma[c]] for c in Color)
            hom = on_gens and len(set(mapping.values())) == len(els) and all(
                mapping[multiply(spec, a, b)] == multiply(spec, mapping[a], mapping[b])
                for a in els
                for b in gens.values()  # enough: the generators generate G
            )
            assert hom == condition(p, which), (p, which)


@pytest.mark.parametrize(
    "triple, category, order",
    [
        ((1, 14, 5), Category.EXCEPTIONAL, 336),
        ((2, 12, 6), Category.TWO_ARC_REGULAR, 144),
        ((1, 26, 7), Category.ONE_ARC_REGULAR, 78),
        ((1, 18, 5), Category.REGULAR, 18),
    ],
)
def test_classify_examples(triple, category, order):
    res = classify(validate_params(*triple))
    assert res.category is category and res.predicted_aut_order == order


def test_classify_heawood_is_not_normal():
    res = classify(validate_params(1, 14, 5))
    assert not res.is_normal_cayley and res.label == "Exceptional:Heawood"
    assert res.girth == 6


def test_classify_normalizes():
    assert classify(validate_params(2, 8, 6)).params == validate_params(2, 8, 2)


def test_non_exceptional_invariants():
    for p in normal_form_triples(400):
        res = classify(p)
        if res.category is Category.EXCEPTIONAL:
            continue
        assert res.is_normal_cayley
        assert res.predicted_aut_order == p.order * res.predicted_stabilizer
        assert res.predicted_stabilizer in (1, 2, 3, 6)


def test_flag_sweep_matches_scalar():
    sweep = flag_sweep(200)
    triples = all_valid_triples(200)
    assert len(sweep["m"]) == len(triples)
    keyed = {
        (int(m), int(n), int(l)): (bool(a), bool(b), bool(c), bool(d))
        for m, n, l, a, b, c, d in zip(*(sweep[k] for k in ("m", "n", "ell", "c1", "c2", "c3", "c4")))
    }
    for p in triples:
        assert keyed[(p.m, p.n, p.ell)] == condition_flags(p).as_tuple()


def test_flag_sweep_normal_only_matches_normal_form_triples():
    sweep = flag_sweep(300, normal_only=True)
    listed = {(p.m, p.n, p.ell) for p in normal_form_triples(300)}
    assert set(zip(sweep["m"].tolist(), sweep["n"].tolist(), sweep["ell"].tolist())) == listed


def test_two_flags_force_all_four_and_the_families():
    sweep = flag_sweep(2000)
    flags = np.stack([sweep[k] for k in ("c1", "c2", "c3", "c4")])
    count = flags.sum(axis=0)
    assert not np.any((count >= 2) & (count < 4))
    normal = 2 * sweep["ell"] <= sweep["n"]
    hits = {
        (int(m), int(n), int(l))
        for m, n, l in zip(sweep["m"][normal & (count == 4)], sweep["n"][normal & (count == 4)], sweep["ell"][normal & (count == 4)])
    }
    expected = {(m, 2 * m, m) for m in range(2, 32)} | {(m, 6 * m, 3 * m) for m in range(1, 19)}
    assert hits == expected


def test_left_regular_generators_generate_regular_group():
    for p in list(normal_form_triples(120))[::4]:
        gens = left_regular_generators(p)
        htg = build_htg(p, check=False)
        for q in gens:
            for (u, v), c in htg.colors.items():
                assert htg.color(q[u], q[v]) is c
        group = PermGroup.from_generators(p.order, gens)
        assert group.order() == p.order


def test_regular_case_generators_give_full_group():
    p = validate_params(1, 18, 5)
    group = PermGroup.from_generators(18, left_regular_generators(p))
    assert group.order() == automorphisms(build_htg(p).graph).order() == 18


@pytest.mark.parametrize("k", [3, 4, 5, 8, 10])
def test_prism_identification(k):
    if k % 2:
        return
    p = validate_params(2, k, 0)
    assert are_isomorphic(build_htg(p).graph, named(Kind.PRISM, k))


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_moebius_ladder_identification(k):
    p = validate_params(1, 2 * k, k)
    g = build_htg(p).graph
    assert are_isomorphic(g, named(Kind.MOEBIUS_LADDER, k))
    if k > 3:
        assert automorphisms(g).order() == 2 * p.order
        assert classify(p).category is Category.STABILIZER_TWO
