import pytest

from planar_turan.constructions import (
    C3_U_C4,
    C3C3,
    C3C4,
    TWO_C3,
    c3c3_extremal,
    c3c4_extremal,
    double_wheel,
    extremal_spec,
    named_graph,
    small_extremal,
    turan_candidates,
    turan_formula,
)
from planar_turan.embedding import is_planar, planarity_embed, trace_faces
from planar_turan.graph import are_isomorphic, complete
from planar_turan.patterns import is_free, max_disjoint_cycles, t_cycles


def test_formula_examples():
    assert turan_formula(7, C3C3) == 13
    assert turan_formula(8, C3C4) == 16
    assert turan_formula(6, TWO_C3) == 11
    assert [turan_formula(n, "c3c3") for n in range(3, 9)] == [3, 6, 9, 11, 13, 15]
    assert [turan_formula(n, "c3c4") for n in range(3, 9)] == [3, 6, 9, 12, 14, 16]
    assert turan_formula(10, t_cycles(3)) == 24
    with pytest.raises(ValueError):
        turan_formula(2, C3C3)
    with pytest.raises(ValueError):
        turan_formula(8, "theta4")


def test_union_candidates_disagree_from_eight():
    assert turan_candidates(7, C3_U_C4) == {"corollary": 14, "cited": 14}
    for n in range(8, 40):
        c = turan_candidates(n, C3_U_C4)
        assert c["cited"] - c["corollary"] == 1
    assert turan_candidates(8, C3C3) == {"theorem": 15}
    assert extremal_spec(10, C3C4).expected_edges == 21


def test_double_wheel():
    assert double_wheel(5).m == 9 and is_planar(double_wheel(5))
    g = double_wheel(10)
    assert g.m == 24 and max_disjoint_cycles(g)[0] == 2
    assert all(f.size == 3 for f in trace_faces(planarity_embed(double_wheel(7))))
    with pytest.raises(ValueError):
        double_wheel(4)


@pytest.mark.parametrize("n,edges", [(7, 13), (8, 15), (11, 23)])
def test_c3c3_examples(n, edges):
    g = c3c3_extremal(n)
    assert g.m == edges
    assert is_free(g, C3C3) and is_free(g, TWO_C3) and is_planar(g)


def test_c3c3_every_triangle_uses_apex():
    from planar_turan.patterns import find_cycles

    for n in range(7, 15):
        assert all(0 in c.vertices for c in find_cycles(c3c3_extremal(n), 3))


@pytest.mark.parametrize("n,edges", [(8, 16), (9, 18), (10, 21)])
def test_c3c4_examples(n, edges):
    g = c3c4_extremal(n)
    assert g.m == edges
    assert is_free(g, C3C4) and is_free(g, C3_U_C4) and is_planar(g)


def test_c3c4_even_edge_count_is_5t_plus_11():
    for t in range(1, 20):
        assert c3c4_extremal(2 * t + 6).m == 5 * t + 11


def test_c3c4_numbering():
    g = c3c4_extremal(10)
    assert g.neighbors(0) == [1, 2, 3, 4, 5, 6, 7, 8, 9]
    assert g.neighbors(3) == [0, 1, 2, 4, 5, 6, 7, 8, 9]
    assert g.has_edge(6, 7) and g.has_edge(8, 9) and not g.has_edge(7, 8)
    odd = c3c4_extremal(11)
    assert odd.neighbors(10) == [0, 3]
    # every cycle meets the hub or v3: what is left is a forest
    rest = odd.induced([v for v in range(11) if v not in (0, 3)])
    assert rest.m == rest.n - len(rest.components())


def test_constructions_reject_small_n():
    with pytest.raises(ValueError):
        c3c3_extremal(6)
    with pytest.raises(ValueError):
        c3c4_extremal(7)


def test_small_extremal():
    assert are_isomorphic(small_extremal(5, C3C3), complete(5).remove_edge(0, 1))
    assert are_isomorphic(small_extremal(6, C3C4), named_graph("octahedron"))
    for n, pattern in [(3, C3C3), (4, C3C3), (5, C3C3), (6, C3C3), (6, TWO_C3), (7, C3C4), (7, C3_U_C4), (5, C3C4)]:
        g = small_extremal(n, pattern)
        assert g.n == n and g.m == turan_formula(n, pattern)
        assert is_planar(g) and is_free(g, pattern)
    with pytest.raises(ValueError):
        small_extremal(7, C3C3)


def test_named_graphs():
    assert (named_graph("wheel4").n, named_graph("wheel4").m) == (5, 8)
    assert are_isomorphic(named_graph("theta4"), complete(4).remove_edge(0, 1))
    prism = named_graph("prism")
    assert (prism.n, prism.m) == (6, 9) and not is_free(prism, C3C3)
    assert named_graph("K2,3").m == 6 and named_graph("P4").m == 3 and named_graph("empty3").m == 0
    with pytest.raises(KeyError):
        named_graph("dodecahedron")
