import pytest

from conftest import atlas, fixtures, naive_cycles, naive_packing, naive_pair
from planar_turan.constructions import c3c3_extremal, c3c4_extremal, double_wheel, named_graph
from planar_turan.graph import Graph, complete, complete_bipartite, cycle
from planar_turan.patterns import (
    THETA4,
    CycleWitness,
    contains_theta4,
    find_cycles,
    find_disjoint_union,
    find_linked_pair,
    find_pattern,
    is_free,
    linked,
    max_disjoint_cycles,
    parse_pattern,
    t_cycles,
    union,
    witness_as_dict,
)


def test_find_cycles_examples():
    assert len(find_cycles(complete(4), 3)) == 4
    assert find_cycles(cycle(5), 4) == []
    assert len(find_cycles(complete_bipartite(2, 3), 4)) == 3
    assert find_cycles(complete(4), 5) == []
    with pytest.raises(ValueError):
        find_cycles(complete(4), 2)


def test_find_cycles_matches_naive_count():
    for g in atlas()[::3]:
        for k in range(3, g.n + 1):
            found = find_cycles(g, k)
            assert all(c.is_valid(g, k) for c in found)
            # distinct cyclic sequences; vertex sets can repeat, so compare sets
            assert {frozenset(c.vertices) for c in found} == naive_cycles(g, k)
            assert len({_cyclic_key(c.vertices) for c in found}) == len(found)


def _cyclic_key(seq):
    k = len(seq)
    rots = [tuple(seq[i:] + seq[:i]) for i in range(k)]
    rots += [tuple(reversed(r)) for r in rots]
    return min(rots)


def test_linked_pair_examples():
    w = find_linked_pair(named_graph("prism"), 3, 3)
    assert w is not None and w.is_valid(named_graph("prism"), 3, 3)
    assert find_linked_pair(named_graph("bowtie"), 3, 3) is None
    assert find_linked_pair(complete(5), 3, 3) is None
    assert find_linked_pair(named_graph("two_triangles"), 3, 3) is None
    a, b = find_disjoint_union(named_graph("two_triangles"), 3, 3)
    assert not a.mask & b.mask
    assert find_disjoint_union(named_graph("prism"), 3, 3) is not None


def test_is_free_examples():
    assert is_free(named_graph("bowtie"), linked(3, 3))
    assert not is_free(named_graph("prism"), linked(3, 3))
    assert is_free(c3c3_extremal(11), linked(3, 3))
    assert is_free(c3c4_extremal(10), union(3, 4))


@pytest.mark.parametrize("k,l", [(3, 3), (3, 4), (4, 4), (3, 5)])
def test_pair_detectors_match_naive_oracle(k, l):
    for g in atlas():
        for bridge, pattern in ((True, linked(k, l)), (False, union(k, l))):
            expected = naive_pair(g, k, l, bridge)
            assert is_free(g, pattern) == (not expected), (g, pattern)
            w = find_pattern(g, pattern)
            assert (w is not None) == expected
            if w is not None and bridge:
                assert w.is_valid(g) and {w.cycle1.length, w.cycle2.length} == {k, l}
            elif w is not None:
                assert w[0].is_valid(g) and w[1].is_valid(g) and not w[0].mask & w[1].mask


def test_linked_is_symmetric():
    assert linked(4, 3) == linked(3, 4)
    for g in atlas()[-300:]:
        assert (find_linked_pair(g, 3, 4) is None) == (find_linked_pair(g, 4, 3) is None)


def test_union_free_implies_linked_free():
    for g in list(atlas()) + fixtures():
        for k, l in ((3, 3), (3, 4)):
            if is_free(g, union(k, l)):
                assert is_free(g, linked(k, l))


def test_max_disjoint_cycles_examples():
    assert max_disjoint_cycles(complete(4))[0] == 1
    assert max_disjoint_cycles(named_graph("two_triangles"))[0] == 2
    t, ws = max_disjoint_cycles(double_wheel(10))
    assert t == 2 and all(c.is_valid(double_wheel(10)) for c in ws)
    with pytest.raises(ValueError):
        max_disjoint_cycles(Graph.empty(13))


def test_max_disjoint_cycles_matches_naive():
    for g in atlas()[::5]:
        t, ws = max_disjoint_cycles(g)
        assert t == naive_packing(g)
        masks = [c.mask for c in ws]
        assert all(not a & b for i, a in enumerate(masks) for b in masks[i + 1 :])


def test_double_wheel_packing_range():
    for n in range(5, 13):
        assert max_disjoint_cycles(double_wheel(n))[0] <= 2
        assert is_free(double_wheel(n), t_cycles(3))


def test_theta4():
    assert contains_theta4(complete(4))
    assert not contains_theta4(cycle(4))
    assert not contains_theta4(complete_bipartite(2, 3))
    for g in atlas()[::4]:
        naive = any(
            len({a, b, c, d}) == 4 and all(g.has_edge(*e) for e in ((a, b), (b, c), (c, d), (d, a), (a, c)))
            for a in range(g.n)
            for b in range(g.n)
            for c in range(g.n)
            for d in range(g.n)
        )
        assert contains_theta4(g) == naive
        assert is_free(g, THETA4) == (not naive)


def test_parse_pattern():
    assert parse_pattern("c3c3") == linked(3, 3)
    assert parse_pattern("C3uC4") == union(3, 4)
    assert parse_pattern("2c3") == union(3, 3)
    assert parse_pattern("linked:4,3") == linked(3, 4)
    assert parse_pattern("tc:3") == t_cycles(3)
    assert parse_pattern("theta4") == THETA4
    assert linked(3, 4).name == "C3-C4" and union(3, 3).name == "2C3"
    with pytest.raises(ValueError):
        parse_pattern("c9")
    with pytest.raises(ValueError):
        linked(2, 3)


def test_witness_serialisation():
    w = find_linked_pair(named_graph("prism"), 3, 3)
    assert witness_as_dict(w) == {"cycle1": [0, 1, 2], "cycle2": [3, 4, 5], "bridge": [0, 3]}
    assert witness_as_dict(None) is None
    assert witness_as_dict(find_pattern(named_graph("two_triangles"), union(3, 3))) == {
        "cycles": [[0, 1, 2], [3, 4, 5]]
    }
    assert CycleWitness((0, 1, 2)).as_list() == [0, 1, 2]
