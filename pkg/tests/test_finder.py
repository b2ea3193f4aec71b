import pytest

from rcm.colouring import BLUE, RED, CliquePacking, build_colouring, extend_packing, is_monochromatic_clique, vertex_set
from rcm.extremal import add_vertex, burr_colouring, perturbed_burr, planted_colouring, random_colouring
from rcm.finder import (
    Augmentation,
    BlueStructure,
    BlueWin,
    CliqueClassification,
    Params,
    PreconditionError,
    StructureViolation,
    TypeI,
    TypeII,
    analyse_blue_structure,
    apply_augmentation,
    check_triple_blue,
    choose_search_colour,
    classify_all,
    classify_clique,
    embed_blue_matching,
    exchange_search,
    find_connected_clique_matching,
    select_target,
)
from rcm.oracle import verify_certificate

from conftest import all_blue, all_red, structured


def _red_and_disjoint(g, cliques, r):
    used = 0
    for c in cliques:
        m = vertex_set(c)
        assert len(c) == r and m.bit_count() == r and not m & used
        assert is_monochromatic_clique(g, m, RED)
        used |= m


# Params

def test_params_regime():
    assert Params(4, 18, 231).theorem_regime
    assert not Params(4, 18, 230).theorem_regime
    assert not Params(4, 17, 500).theorem_regime
    assert not Params(3, 10, 500).theorem_regime
    # r >= 5 needs a caller-supplied R(K_r)
    assert not Params(5, 43, 2000).theorem_regime
    assert Params(5, 43, 21 * 43 - 4, ramsey_bound=43).theorem_regime


# choose_search_colour

def test_choose_colour(pentagon):
    assert choose_search_colour(all_red(5)) == (RED, False)
    assert choose_search_colour(all_blue(5)) == (BLUE, True)
    assert choose_search_colour(pentagon) == (RED, False)


# analyse_blue_structure

def test_analyse_three_blue_cliques():
    g, comps, _ = structured([7, 7, 7], 0, {})
    found = analyse_blue_structure(g, CliquePacking(RED), 4, 2)
    assert isinstance(found, BlueStructure)
    assert [c.bit_count() for c in found.components] == [7, 7, 7]
    assert found.components == comps and found.pairwise_red


def test_analyse_blue_win():
    g = all_blue(8)
    found = analyse_blue_structure(g, CliquePacking(RED), 4, 2)
    assert isinstance(found, BlueWin)
    assert found.cliques == [(0, 1, 2, 3), (4, 5, 6, 7)]


def test_analyse_burr_plus_red_vertex():
    g = add_vertex(burr_colouring(4, 18), 1, 0)
    found = analyse_blue_structure(g, CliquePacking(RED), 4, 18)
    assert isinstance(found, Augmentation) and found.rule == "component-count"
    assert found.install == ((0, 71, 142, 213),)
    _red_and_disjoint(g, found.install, 4)


def test_analyse_red_edge_inside():
    # three blue K_3's, pairwise red, with edge 0-1 red inside the first
    g, _, _ = structured([3, 3, 3], 0, {}, red_inside=[(0, 1)])
    found = analyse_blue_structure(g, CliquePacking(RED), 4, 2)
    assert isinstance(found, Augmentation) and found.rule == "red-edge-inside"
    assert found.install == ((0, 1, 3, 6),)
    _red_and_disjoint(g, found.install, 4)


def test_analyse_too_few_components():
    g, _, _ = structured([3, 3], 0, {})
    with pytest.raises(StructureViolation) as err:
        analyse_blue_structure(g, CliquePacking(RED), 4, 2)
    assert err.value.stage == "component-count"


# classify_clique

def _clique_fixture(blue_to, blue_between=()):
    g, comps, extras = structured([5, 5, 5], 4, blue_to, blue_between=blue_between)
    return g, BlueStructure(comps), tuple(extras)


def test_classify_type_one():
    # v1 blue to B_1 except vertex 0; v2 blue to all of B_1; v3 -> B_2; v4 -> B_3
    g, s, c = _clique_fixture({
        15: {0: {1, 2, 3, 4}}, 16: {0: "all"}, 17: {1: "all"}, 18: {2: "all"},
    })
    kind = classify_clique(c, s, g)
    assert isinstance(kind, TypeI)
    assert kind.selections == (16, 17, 18)


def test_classify_type_two():
    g, s, c = _clique_fixture({15: {0: "all"}, 16: {0: "all"}, 17: {0: "all"}, 18: {1: "all"}})
    kind = classify_clique(c, s, g)
    assert isinstance(kind, TypeII)
    assert kind.triple == (15, 16, 17) and kind.triple_component == 0
    assert kind.singles == ((1, 18),)


def test_classify_two_pairs():
    g, s, c = _clique_fixture({15: {0: "all"}, 16: {0: "all"}, 17: {1: "all"}, 18: {1: "all"}})
    kind = classify_clique(c, s, g)
    assert isinstance(kind, Augmentation) and kind.rule == "two-pairs"
    assert kind.retire == (c,)
    assert kind.install == ((5, 10, 15, 16), (0, 11, 17, 18))
    _red_and_disjoint(g, kind.install, 4)


def test_classify_four_with_same():
    g, s, c = _clique_fixture({v: {0: "all"} for v in range(15, 19)})
    kind = classify_clique(c, s, g)
    assert kind.rule == "four-with-same"
    assert len(kind.install) == 2
    _red_and_disjoint(g, kind.install, 4)


def test_classify_red_neighbour_plus_pair():
    # v1 has red neighbours everywhere, v2 and v3 share home B_1
    g, s, c = _clique_fixture({15: {0: {1}}, 16: {0: "all"}, 17: {0: "all"}, 18: {1: "all"}})
    kind = classify_clique(c, s, g)
    assert kind.rule == "red-neighbour-plus-pair"
    _red_and_disjoint(g, kind.install, 4)


def test_classify_two_red_neighbours():
    g, s, c = _clique_fixture({15: {0: {0}}, 16: {1: {5}}, 17: {0: "all"}, 18: {2: "all"}})
    kind = classify_clique(c, s, g)
    assert kind.rule == "two-red-neighbours"
    _red_and_disjoint(g, kind.install, 4)


def test_exchange_search_finds_two_from_one():
    g, s, c = _clique_fixture({15: {0: "all"}, 16: {0: "all"}, 17: {1: "all"}, 18: {1: "all"}})
    aug = exchange_search(g, [c], s.components, 4)
    assert aug is not None and aug.rule == "exchange-search"
    assert len(aug.install) == 2
    _red_and_disjoint(g, aug.install, 4)


def test_exchange_search_none_when_impossible():
    g, s, c = _clique_fixture({15: {0: "all"}, 16: {0: "all"}, 17: {0: "all"}, 18: {1: "all"}})
    assert exchange_search(g, [c], s.components, 4) is None


# check_triple_blue

def _two_triples(red_cross=()):
    blue_to = {v: {0: "all"} for v in (15, 16, 17, 19, 20, 21)}
    blue_to[18] = {1: "all"}
    blue_to[22] = {2: "all"}
    cross = [(x, y) for x in range(15, 19) for y in range(19, 23) if (x, y) not in red_cross]
    g, comps, _ = structured([5, 5, 5], 8, blue_to, blue_between=cross)
    return g, BlueStructure(comps), [((15, 16, 17, 18), (15, 16, 17)), ((19, 20, 21, 22), (19, 20, 21))]


def test_triples_all_blue():
    g, s, triples = _two_triples()
    assert check_triple_blue(triples, 0, s, g) is None


def test_triples_red_edge():
    g, s, triples = _two_triples(red_cross={(15, 19)})
    aug = check_triple_blue(triples, 0, s, g)
    assert aug.rule == "triple-red-edge"
    assert aug.retire == ((15, 16, 17, 18), (19, 20, 21, 22))
    assert len(aug.install) == 3
    _red_and_disjoint(g, aug.install, 4)
    assert {15, 19} <= set(aug.install[0])


def test_single_triple_vacuous():
    g, s, triples = _two_triples(red_cross={(15, 19)})
    assert check_triple_blue(triples[:1], 0, s, g) is None


# select_target

def _classification(d_sizes, delta_sizes=None, s_count=0):
    k = len(d_sizes)
    delta_sizes = delta_sizes or [0] * k
    t_delta = [[(0, 0, 0)] * (d // 3) for d in delta_sizes]
    return CliqueClassification(
        components=[0] * k, type_s=[None] * s_count, type_t=[], s_sets=[[] for _ in range(k)],
        t_star=[[] for _ in range(k)], t_delta=t_delta, d_sets=[(1 << d) - 1 for d in d_sizes],
    )


def test_select_target_exact_rn():
    assert select_target(_classification([72, 71, 71], s_count=17), 4, 18) == 0


def test_select_target_above_rn():
    assert select_target(_classification([73, 60, 60], [3, 0, 0]), 4, 18) == 0


def test_select_target_blocked_by_single_triangle():
    assert select_target(_classification([72, 72, 59], [3, 0, 0], s_count=16), 4, 18) == 1


def test_select_target_none():
    with pytest.raises(StructureViolation) as err:
        select_target(_classification([71, 71, 71]), 4, 18)
    assert "stage=select-target" in err.value.dump()


# embed_blue_matching

def _embed_fixture(b_size, triangles, r):
    """Blue K_b plus `triangles` red triangles, blue across and to B."""
    tri = [list(range(b_size + 3 * t, b_size + 3 * t + 3)) for t in range(triangles)]
    red = [(a, b) for t in tri for a, b in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]]
    g = build_colouring(b_size + 3 * triangles, red)
    comp = (1 << b_size) - 1
    d = g.full
    cls = CliqueClassification([comp], [], [], [[]], [[]], [[tuple(t) for t in tri]], [d])
    return g, cls


def _blue_disjoint(g, cliques, r):
    used = 0
    for c in cliques:
        m = vertex_set(c)
        assert m.bit_count() == r and not m & used and is_monochromatic_clique(g, m, BLUE)
        used |= m
    return used


def test_embed_plain():
    g, cls = _embed_fixture(8, 0, 4)
    out = embed_blue_matching(0, cls, g, 4, 2)
    assert out == [(0, 1, 2, 3), (4, 5, 6, 7)]


def test_embed_two_triangles():
    g, cls = _embed_fixture(6, 2, 4)
    out = embed_blue_matching(0, cls, g, 4, 3)
    used = _blue_disjoint(g, out, 4)
    assert len(out) == 3
    assert used & 0b111111 == 0b111111  # all of B consumed
    for c in out:
        assert sum(v >= 6 for v in c) == 2


def test_embed_single_triangle():
    g, cls = _embed_fixture(6, 1, 4)
    out = embed_blue_matching(0, cls, g, 4, 2)
    _blue_disjoint(g, out, 4)
    assert out == [(0, 1, 2, 6), (3, 4, 5, 7)]  # vertex 8 abandoned


def test_embed_many_triangles_column_major():
    g, cls = _embed_fixture(10, 5, 4)
    out = embed_blue_matching(0, cls, g, 4, 5)
    _blue_disjoint(g, out, 4)
    assert len(out) == 5


def test_embed_with_partners():
    # S vertex 8 is red to B vertex 0 and blue to the rest
    g = build_colouring(9, [(8, 0)])
    cls = CliqueClassification([0xFF], [], [], [[8]], [[]], [[]], [0x1FF])
    out = embed_blue_matching(0, cls, g, 4, 2)
    _blue_disjoint(g, out, 4)
    assert out[0] == (1, 2, 3, 8)


def test_embed_runs_out():
    g, cls = _embed_fixture(7, 0, 4)
    with pytest.raises(StructureViolation):
        embed_blue_matching(0, cls, g, 4, 2)


# apply_augmentation

def _packing3():
    return CliquePacking(RED, [(0, 1, 2, 3), (4, 5, 6, 7), (8, 9, 10, 11)])


def test_apply_one_for_two():
    g = all_red(20)
    aug = Augmentation(((0, 1, 2, 3),), ((0, 1, 2, 12), (3, 13, 14, 15)), "two-pairs")
    assert len(apply_augmentation(g, _packing3(), aug)) == 4


def test_apply_two_for_three():
    g = all_red(20)
    aug = Augmentation(((0, 1, 2, 3), (4, 5, 6, 7)),
                       ((0, 1, 2, 12), (3, 4, 5, 13), (6, 7, 14, 15)), "triple-red-edge")
    assert len(apply_augmentation(g, _packing3(), aug)) == 4


def test_apply_rejects_overlap():
    g = all_red(20)
    aug = Augmentation(((0, 1, 2, 3),), ((0, 1, 2, 12), (3, 8, 14, 15)), "two-pairs")
    with pytest.raises(ValueError):
        apply_augmentation(g, _packing3(), aug)


def test_apply_rejects_non_growth():
    g = all_red(20)
    with pytest.raises(ValueError):
        apply_augmentation(g, _packing3(), Augmentation(((0, 1, 2, 3),), ((0, 1, 2, 12),), "x"))


# find_connected_clique_matching

def test_find_all_red():
    res = find_connected_clique_matching(all_red(231), 4, 18)
    assert res.outcome == "red-packing" and res.certificate.colour is RED
    assert res.certificate.cliques[0] == (0, 1, 2, 3) and len(res.certificate.cliques) == 18
    assert verify_certificate(all_red(231), res.certificate, 4, 18) is None


def test_find_all_blue_swaps():
    g = all_blue(231)
    res = find_connected_clique_matching(g, 4, 18)
    assert res.swapped and res.certificate.colour is BLUE
    assert res.certificate.colour_roles_swapped
    assert verify_certificate(g, res.certificate, 4, 18) is None


def test_find_perturbed_burr():
    g = perturbed_burr(4, 18, 10, 1)
    res = find_connected_clique_matching(g, 4, 18)
    assert verify_certificate(g, res.certificate, 4, 18) is None


def test_find_planted_uses_embedding():
    g = planted_colouring(4, 18, 3, cross_red=0)
    res = find_connected_clique_matching(g, 4, 18)
    assert res.outcome == "blue-embedding" and not res.augmentations
    assert verify_certificate(g, res.certificate, 4, 18) is None
    # counting identity as reported
    assert res.report["S"] + sum(map(int, res.report["D"].split(","))) == g.order


def test_find_scrambled_planted_augments():
    rules = set()
    for seed in range(12):
        g = planted_colouring(4, 18, seed, scrambled=True)
        res = find_connected_clique_matching(g, 4, 18)
        assert verify_certificate(g, res.certificate, 4, 18) is None
        for e in res.augmentations:
            assert e.after > e.before
            rules.add(e.rule)
    assert rules  # the exchange rules are exercised


def test_find_refuses_below_bound():
    with pytest.raises(PreconditionError):
        find_connected_clique_matching(random_colouring(230, "1/2", 1), 4, 18)
    with pytest.raises(PreconditionError):
        find_connected_clique_matching(all_red(300), 3, 18)


def test_find_deterministic():
    g = planted_colouring(4, 18, 5, scrambled=True)
    a = find_connected_clique_matching(g, 4, 18)
    b = find_connected_clique_matching(g, 4, 18)
    assert a.certificate == b.certificate and a.augmentations == b.augmentations


def test_find_r5_with_supplied_bound():
    g = planted_colouring(5, 43, 2)
    res = find_connected_clique_matching(g, 5, 43, ramsey_bound=43)
    assert verify_certificate(g, res.certificate, 5, 43) is None


def test_classify_all_on_planted_is_consistent():
    g = planted_colouring(4, 18, 7, cross_red=0)
    packing = extend_packing(g, CliquePacking(RED), 4)
    found = analyse_blue_structure(g, packing, 4, 18)
    assert isinstance(found, BlueStructure)
    cls = classify_all(g, packing, found, 4)
    assert isinstance(cls, CliqueClassification)
    for i in range(3):
        assert cls.delta_size(i) % 3 == 0
        t_i = len(cls.t_star[i]) + cls.delta_size(i)
        assert t_i == len(cls.t_star[i]) + 3 * len(cls.t_delta[i])
    assert len(cls.type_s) + sum(cls.d_size(i) for i in range(3)) == g.order


def test_planted_cross_red_edges_trigger_triple_rule():
    g = planted_colouring(4, 18, 0)
    res = find_connected_clique_matching(g, 4, 18)
    assert [e.rule for e in res.augmentations] == ["triple-red-edge"]
    assert verify_certificate(g, res.certificate, 4, 18) is None
