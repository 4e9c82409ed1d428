import random

import pytest

from oracles import naive_is_saturated, naive_sat
from rainbowsat.errors import NotRainbowFree, PaletteTooSmall, TooLarge
from rainbowsat.graph import ColoredGraph
from rainbowsat.patterns import complete, cycle, path, star
from rainbowsat.saturation import (exact_sat, is_saturated, saturation_closure, unsaturated_colors,
                                   verify_saturated)

GOLDEN = {(3, 3): 3, (4, 3): 6, (5, 3): 8, (3, 4): 3, (4, 4): 4, (5, 4): 7}


def test_monochromatic_triangle_is_saturated():
    cert = verify_saturated(ColoredGraph.complete(3, 3), complete(3))
    assert cert.saturated and cert.edge_count == 3


def test_path_not_saturated():
    G = ColoredGraph(3, 3, [(0, 1, 1), (1, 2, 2)])
    cert = verify_saturated(G, complete(3))
    assert cert.rainbow_free
    assert cert.unsaturated == [((0, 2), 1), ((0, 2), 2)]
    assert not is_saturated(G, complete(3))


def test_rainbow_copy_reported():
    G = ColoredGraph(3, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    cert = verify_saturated(G, complete(3))
    assert not cert.rainbow_free and cert.witness is not None


def test_palette_too_small():
    with pytest.raises(PaletteTooSmall):
        verify_saturated(ColoredGraph(4, 2), complete(3))


def test_unused_colors_share_verdict():
    G = ColoredGraph(4, 9, [(0, 1, 1), (1, 2, 2)])
    bad = unsaturated_colors(G, 0, 2, complete(3))
    assert bad == [1, 2]
    assert unsaturated_colors(G, 0, 3, complete(3)) == list(range(1, 10))


def test_closure_rejects_rainbow_input():
    with pytest.raises(NotRainbowFree):
        saturation_closure(ColoredGraph(3, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]), complete(3))


def random_rainbow_free(rng, H):
    n, t = rng.randint(3, 7), rng.randint(H.m, H.m + 2)
    G = ColoredGraph(n, t)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                trial = G.add_colored_edge(u, v, rng.randint(1, t))
                if is_saturated(trial, H) or not verify_saturated(trial, H).rainbow_free:
                    continue
                G = trial
    return G


@pytest.mark.parametrize("H", [complete(3), path(3), path(4), cycle(4), star(3)])
def test_closure_outputs_are_saturated(H):
    rng = random.Random(H.m)
    for _ in range(15):
        G = random_rainbow_free(rng, H)
        closed = saturation_closure(G, H)
        assert verify_saturated(closed, H).saturated
        assert all(closed.color(u, v) == c for u, v, c in G.edges())


def test_verdict_matches_enumeration():
    rng = random.Random(7)
    H = complete(3)
    for _ in range(150):
        n, t = rng.randint(3, 5), rng.randint(3, 4)
        edges = [(u, v, rng.randint(1, t)) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
        G = ColoredGraph(n, t, edges)
        colours = {(u, v): c for u, v, c in edges}
        assert is_saturated(G, H) == naive_is_saturated(n, t, colours, 3, sorted(H.edges))


@pytest.mark.parametrize("nt,value", sorted(GOLDEN.items()))
def test_exact_values(nt, value):
    n, t = nt
    res = exact_sat(n, t, complete(3))
    assert res.value == value
    assert res.witness.edge_count == value
    assert verify_saturated(res.witness, complete(3)).saturated


@pytest.mark.parametrize("n", [4, 5])
def test_exact_uncolored(n):
    assert exact_sat(n, 3, complete(3), rainbow=False).value == n - 1


def test_exact_gate():
    with pytest.raises(TooLarge):
        exact_sat(10, 3, complete(3))
    with pytest.raises(TooLarge):
        exact_sat(4, 5, complete(3))


@pytest.mark.parametrize("H", [path(3), path(4), cycle(4)])
def test_exact_matches_enumeration_other_patterns(H):
    for n in (3, 4):
        value, _ = naive_sat(n, H.m, H.n, sorted(H.edges))
        assert exact_sat(n, H.m, H).value == value
