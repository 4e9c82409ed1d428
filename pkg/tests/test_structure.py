import random

import pytest

from oracles import naive_bridges, naive_triangle_edges
from rainbowsat.errors import Disconnected, PaletteTooSmall, TooSmall
from rainbowsat.graph import Pattern
from rainbowsat.patterns import complete, cycle, hkl, parse_pattern, path, rotated_clique, star, union
from rainbowsat.structure import (EdgeKind, Growth, bridges, classify, find_special_edge, is_isomorphic,
                                  profile, triangle_edges)


def test_bridges_and_triangles_match_enumeration():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        P = Pattern.from_edges(n, edges)
        assert bridges(P) == set(naive_bridges(n, edges))
        assert triangle_edges(P) == set(naive_triangle_edges(n, edges))


def test_profile_fields():
    prof = profile(path(4))
    assert prof.non_pendant_bridges == {(1, 2)}
    assert prof.pendant_edges == {(0, 1), (2, 3)}
    assert not prof.is_star and not prof.conical_vertices
    assert profile(complete(4)).every_edge_in_triangle
    assert profile(rotated_clique(4)).rotated_clique_r == 4
    assert profile(hkl(4, 2)).hkl_params == (4, 2)


def test_profile_errors():
    with pytest.raises(TooSmall):
        profile(path(2))
    with pytest.raises(Disconnected):
        profile(union(path(3), path(3)))


# tree with an internal edge: spider with legs 2,1,1
SPIDER = Pattern.from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)], "spider")


@pytest.mark.parametrize("H,t,tag,clause", [
    (star(3), 3, Growth.QUADRATIC, "(i)"),
    (star(5), 9, Growth.QUADRATIC, "(i)"),
    (complete(3), 3, Growth.NLOGN, "(iii)"),
    (complete(4), 6, Growth.NLOGN, "(iii)"),
    (complete(5), 10, Growth.NLOGN, "(iii)"),
    (path(4), 3, Growth.LINEAR, "(iv)"),
    (cycle(4), 4, Growth.LINEAR, "(iv)"),
    (SPIDER, 4, Growth.LINEAR, "(iv)"),
    (rotated_clique(4), 6, Growth.LINEAR, "(v)"),
    (rotated_clique(5), 10, Growth.UNRESOLVED, "odd clique"),
])
def test_classifier_matrix(H, t, tag, clause):
    gc = classify(H, t)
    assert gc.tag is tag
    assert clause in gc.reason


def test_k4_reports_both_clauses():
    assert classify(complete(4), 6).clauses == ("ii", "iii")


def test_hkl_routing():
    assert classify(hkl(4, 2), 16).tag is Growth.LINEAR
    assert classify(hkl(4, 2), 12).tag is Growth.LINEAR
    # below k(k-1) and |H|^2 nothing resolves it
    assert classify(hkl(4, 2), 11).tag is Growth.UNRESOLVED


def test_palette_check():
    with pytest.raises(PaletteTooSmall):
        classify(complete(4), 5)


def test_special_edge():
    assert find_special_edge(cycle(5)) == ((0, 1), EdgeKind.CYCLE_NOT_TRIANGLE)
    assert find_special_edge(path(4)) == ((1, 2), EdgeKind.NON_PENDANT_BRIDGE)
    edge, kind = find_special_edge(complete(4))
    assert kind is EdgeKind.TRIANGLE_EDGE and edge == (0, 1)
    assert find_special_edge(star(3)) == (None, EdgeKind.NONE)


def test_isomorphism():
    assert is_isomorphic(rotated_clique(4), hkl(3, 2))
    assert is_isomorphic(path(4), path(4).relabel([3, 1, 0, 2]))
    assert not is_isomorphic(path(4), star(3))


def test_dsl():
    assert parse_pattern("K3+K2").n == 5
    assert parse_pattern("H_4_2").m == 6 + 2 + 1
    assert parse_pattern("rotated_K4").name == "rotated_K4"
