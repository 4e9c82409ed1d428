import random

import pytest

from oracles import naive_copy_through, naive_has_copy
from rainbowsat.embed import (anchor_edges, automorphisms, creates_rainbow, find_copy, find_copy_through,
                              find_rainbow_copy, saturating_colors)
from rainbowsat.errors import BadColor, DegeneratePattern, NotANonEdge
from rainbowsat.graph import ColoredGraph, Pattern
from rainbowsat.patterns import complete, cycle, path, star, union


def random_instance(rng):
    n = rng.randint(3, 7)
    t = rng.randint(2, 5)
    density = rng.random()
    edges = [(u, v, rng.randint(1, t)) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    G = ColoredGraph(n, t, edges)
    while True:
        p = rng.randint(2, min(5, n))
        pe = [(a, b) for a in range(p) for b in range(a + 1, p) if rng.random() < 0.5]
        if pe:
            return G, Pattern.from_edges(p, pe)


def as_dict(G):
    return {(u, v): c for u, v, c in G.edges()}


def test_agrees_with_enumeration_on_random_instances():
    rng = random.Random(2024)
    for _ in range(1000):
        G, H = random_instance(rng)
        colours = as_dict(G)
        edges = sorted(H.edges)
        for rainbow in (True, False):
            got = find_copy(G, H, rainbow)
            assert (got is not None) == naive_has_copy(G.n, colours, H.n, edges, rainbow)
            if got is not None:
                assert got.is_valid(G, H, rainbow)
        holes = G.non_edges()
        if holes:
            u, v = rng.choice(holes)
            c = rng.randint(1, G.t)
            got = find_copy_through(G, u, v, c, H)
            assert (got is not None) == naive_copy_through(G.n, colours, u, v, c, H.n, edges)
            good = saturating_colors(G, u, v, H, range(1, G.t + 1))
            expect = {k for k in range(1, G.t + 1) if naive_copy_through(G.n, colours, u, v, k, H.n, edges)}
            assert set(good) == expect


def test_small_examples():
    G = ColoredGraph(4, 3, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    assert find_rainbow_copy(G, star(3)) is not None
    assert find_rainbow_copy(G.remove_edge(0, 3).add_colored_edge(0, 3, 1), star(3)) is None
    P = ColoredGraph(3, 3, [(0, 1, 1), (1, 2, 2)])
    assert creates_rainbow(P, 0, 2, 3, complete(3))
    assert not creates_rainbow(P, 0, 2, 1, complete(3))


def test_copy_through_uses_new_edge():
    G = ColoredGraph(5, 3, [(0, 1, 1), (1, 2, 2), (2, 0, 3)])
    emb = find_copy_through(G, 3, 4, 1, path(2))
    assert emb is not None and set(emb.mapping) == {3, 4}


def test_errors():
    G = ColoredGraph(3, 2, [(0, 1, 1)])
    with pytest.raises(NotANonEdge):
        find_copy_through(G, 0, 1, 1, path(2))
    with pytest.raises(BadColor):
        find_copy_through(G, 0, 2, 3, path(2))
    with pytest.raises(DegeneratePattern):
        find_rainbow_copy(G, Pattern.from_edges(2, []))


@pytest.mark.parametrize("H,count", [(complete(3), 6), (cycle(4), 8), (path(4), 2), (star(3), 6)])
def test_automorphism_counts(H, count):
    assert len(automorphisms(H)) == count


def test_anchor_edges_cover_orbits():
    assert len(anchor_edges(complete(4))) == 1
    assert len(anchor_edges(path(4))) == 3  # leaf->mid, mid->leaf, mid->mid


def test_disconnected_pattern():
    G = ColoredGraph(6, 3, [(0, 1, 1), (2, 3, 2), (4, 5, 2)])
    assert find_rainbow_copy(G, union(path(2), path(2))) is not None
    assert find_rainbow_copy(G.remove_edge(0, 1).add_colored_edge(0, 1, 2), union(path(2), path(2))) is None


def test_cached_component_check_follows_edits():
    H = union(complete(3), path(2))
    G = ColoredGraph(7, 4, [(0, 1, 1), (1, 2, 2)])
    assert find_copy_through(G, 5, 6, 4, H) is None
    G._insert(0, 2, 3)  # closes a rainbow triangle
    assert find_copy_through(G, 5, 6, 4, H) is not None
