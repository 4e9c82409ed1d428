"""Generators for rainbow-saturated colored graphs.

Every generator returns a :class:`ConstructionOutput`: the graph, the vertex
set whose internal non-edges the construction saturates by design, and the
edge bound the construction guarantees. Small ``n`` where the parts do not fit
falls back to a monochromatic K_n, which is trivially saturated.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence

from .designs import one_factorization, steiner_triple_system
from .errors import (BadInput, BadOrder, BadParameters, NoQualifyingEdge, NotAStarForest,
                     PaletteTooSmall, RetriesExhausted)
from .graph import ColoredGraph, Pattern, disjoint_union, pair
from .patterns import complete, hkl, rotated_clique, union
from .saturation import saturation_closure, unsaturated_colors
from .structure import EdgeKind, find_special_edge, is_isomorphic, profile

log = logging.getLogger(__name__)

MAX_RETRIES = 64


@dataclass
class ConstructionOutput:
    name: str
    graph: ColoredGraph
    pattern: Pattern
    protected: FrozenSet[int]
    declared_bound: int
    seed: Optional[int] = None
    retries: int = 0
    params: Dict[str, object] = field(default_factory=dict)
    pre_closure: Optional[ColoredGraph] = field(default=None, repr=False)
    fallback: bool = False

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def metadata(self) -> Dict[str, object]:
        meta: Dict[str, object] = {"construction": self.name, "pattern": str(self.pattern),
                                   "n": self.graph.n, "t": self.graph.t}
        meta.update(self.params)
        meta.update({
            "seed": self.seed if self.seed is not None else "",
            "retries": self.retries,
            "fallback": self.fallback,
            "declared_bound": self.declared_bound,
            "edges": self.edge_count,
        })
        return meta


def _fallback(name, n, t, H, bound, seed=None, **params) -> ConstructionOutput:
    G = ColoredGraph.complete(n, t)
    log.info("%s: n=%d too small for the parts, using monochromatic K_n", name, n)
    return ConstructionOutput(name, G, H, frozenset(range(n)), bound, seed, 0, params,
                              pre_closure=G, fallback=True)


def _palette(H: Pattern, t: Optional[int]) -> int:
    t = H.m if t is None else t
    if t < H.m:
        raise PaletteTooSmall(f"palette {t} smaller than e(H) = {H.m}")
    return t


def _split_pattern(H: Pattern, x: int, y: int):
    """Vertices other than x, y (in index order) and the edge numbering with e_m = xy."""
    rest = [v for v in range(H.n) if v not in (x, y)]
    others = [e for e in H.sorted_edges if e != pair(x, y)]
    index = {e: s for s, e in enumerate(others, start=1)}
    index[pair(x, y)] = H.m
    return rest, index


def construct_acyclic_edge(n: int, H: Pattern, t: Optional[int] = None) -> ConstructionOutput:
    """Linear-size construction around a non-pendant edge that lies in no triangle.

    K holds m disjoint copies of H - {x, y}; every vertex of the independent
    part L is joined to the copies of the neighbours of x and y. An edge that
    realises pattern edge e_s inside copy i gets color s, except color i is
    replaced by m in copy i.
    """
    t = _palette(H, t)
    (xy, kind) = find_special_edge(H)
    if kind not in (EdgeKind.CYCLE_NOT_TRIANGLE, EdgeKind.NON_PENDANT_BRIDGE):
        raise NoQualifyingEdge(f"{H} has no non-pendant edge outside every triangle")
    m, p = H.m, H.n
    bound = m * (p - 2) * n
    params = {"special_edge": f"{xy[0]}-{xy[1]}", "kind": kind.value}
    if n <= m * (p - 2):
        return _fallback("acyclic-edge", n, t, H, bound, **params)
    x, y = xy
    rest, index = _split_pattern(H, x, y)
    width = p - 2
    K = m * width
    G = ColoredGraph(n, t)

    def vid(i, j):
        return (i - 1) * width + j

    def shade(s, i):
        return s if s != i else m

    for i in range(1, m + 1):
        for a, b in combinations(range(width), 2):
            e = pair(rest[a], rest[b])
            if e in index:
                G._insert(vid(i, a), vid(i, b), shade(index[e], i))
    for u in range(K, n):
        for i in range(1, m + 1):
            for j, w in enumerate(rest):
                for z in (x, y):
                    e = pair(w, z)
                    if e in index:
                        G._insert(u, vid(i, j), shade(index[e], i))
    closed = saturation_closure(G, H)
    return ConstructionOutput("acyclic-edge", closed, H, frozenset(range(K, n)), bound,
                              None, 0, params, pre_closure=G)


def triangle_edge_h(n: int, m: int) -> int:
    """Smallest h with 2^h >= n^2 m + 1."""
    return (n * n * m).bit_length()


def construct_triangle_edge(n: int, H: Pattern, seed: int = 0,
                            t: Optional[int] = None) -> ConstructionOutput:
    """Randomised n log n construction around an edge xy lying in a triangle.

    K holds m*h copies H_{i,j} of H - {x, y}; each vertex u of L is joined to
    copy (i, j) as if it were x or y, by a fair coin. A pair of L vertices
    and a color i are served by any j where the two coins differ, so the draw
    is repeated until every such pair has one.
    """
    t = _palette(H, t)
    prof = profile(H)
    if not prof.triangle_edges:
        raise NoQualifyingEdge(f"{H} has no triangle")
    deg = [H.degree(v) for v in range(H.n)]
    x, y = sorted(min(prof.triangle_edges), key=lambda v: (-deg[v], v))
    m, p = H.m, H.n
    h = triangle_edge_h(n, m)
    width = p - 2
    K = m * h * width
    bound = n * K
    params = {"special_edge": f"{x}-{y}", "h": h, "K": K}
    if n <= K:
        return _fallback("triangle-edge", n, t, H, bound, seed, **params)
    rest, index = _split_pattern(H, x, y)
    L = list(range(K, n))

    def vid(i, j, a):
        return ((i - 1) * h + (j - 1)) * width + a

    def shade(s, i):
        return s if s != i else m

    for attempt in range(MAX_RETRIES + 1):
        rng = random.Random(seed + attempt)
        # coin[u][i-1] packs the h coins of (u, i, .) into an int; bit set means "y"
        coin = {u: [rng.getrandbits(h) for _ in range(m)] for u in L}
        if all(len({coin[u][i] for u in L}) == len(L) for i in range(m)):
            break
        log.info("triangle-edge: bad pair with seed %d, redrawing", seed + attempt)
    else:
        raise RetriesExhausted(f"no good draw within {MAX_RETRIES} retries")

    G = ColoredGraph(n, t)
    for i in range(1, m + 1):
        for j in range(1, h + 1):
            for a, b in combinations(range(width), 2):
                e = pair(rest[a], rest[b])
                if e in index:
                    G._insert(vid(i, j, a), vid(i, j, b), shade(index[e], i))
    for u in L:
        for i in range(1, m + 1):
            bits = coin[u][i - 1]
            for j in range(1, h + 1):
                z = y if bits >> (j - 1) & 1 else x
                for a, w in enumerate(rest):
                    e = pair(w, z)
                    if e in index:
                        G._insert(u, vid(i, j, a), shade(index[e], i))
    closed = saturation_closure(G, H)
    return ConstructionOutput("triangle-edge", closed, H, frozenset(L), bound, seed, attempt,
                              params, pre_closure=G)


def construct_hkl(n: int, k: int, l: int, t: int) -> ConstructionOutput:
    """Two rainbow k-cliques on disjoint color halves A, B, plus an independent set L.

    Every L vertex is joined to l+1 fixed vertices of each clique; edges to
    the A-colored clique use colors from B and vice versa.
    """
    if not 2 <= l <= k - 2:
        raise BadParameters(f"need 2 <= l <= k-2, got k={k}, l={l}")
    if t < k * (k - 1):
        raise BadParameters(f"need t >= k(k-1) = {k * (k - 1)}, got {t}")
    H = hkl(k, l)
    bound = 2 * k * n
    if n < 2 * k:
        return _fallback("hkl", n, t, H, bound, k=k, l=l)
    half = k * (k - 1) // 2
    A = list(range(1, half + 1))
    B = list(range(half + 1, 2 * half + 1))
    C1 = list(range(k))
    C2 = list(range(k, 2 * k))
    G = ColoredGraph(n, t)
    for clique, colors in ((C1, A), (C2, B)):
        for (u, v), c in zip(combinations(clique, 2), colors):
            G._insert(u, v, c)
    for u in range(2 * k, n):
        for j in range(l + 1):
            G._insert(u, C1[j], B[j])
            G._insert(u, C2[j], A[j])
    closed = saturation_closure(G, H)
    return ConstructionOutput("hkl", closed, H, frozenset(range(2 * k, n)), bound, None, 0,
                              {"k": k, "l": l}, pre_closure=G)


def gamma_graph(r: int) -> ColoredGraph:
    """Hamming-type graph on [r]^(r/2) colored by edges of K_r (palette C(r,2)).

    Vertices are the tuples in lexicographic order. An edge between tuples
    differing in component k, whose coordinate sums mod r are a and b, takes
    the one-factor color i of ab and is shifted k steps along that color class.
    """
    if r < 4 or r % 2:
        raise BadOrder(f"r must be even and at least 4, got {r}")
    half = r // 2
    F = one_factorization(r)
    palette = {e: i for i, e in enumerate(combinations(range(r), 2), start=1)}
    tuples = list(product(range(1, r + 1), repeat=half))
    vid = {x: i for i, x in enumerate(tuples)}

    def kr_vertex(x):
        s = sum(x) % r
        return (s if s else r) - 1

    G = ColoredGraph(len(tuples), len(palette))
    for x in tuples:
        for comp in range(half):
            for val in range(x[comp] + 1, r + 1):
                y = x[:comp] + (val,) + x[comp + 1:]
                e = pair(kr_vertex(x), kr_vertex(y))
                i = F.color_of[e]
                shifted = (comp + 1 + F.g_inv(e) - 1) % half + 1
                G._insert(vid[x], vid[y], palette[F.g(i, shifted)])
    return G


def construct_rotated_even(n: int, r: int, t: Optional[int] = None) -> ConstructionOutput:
    """Disjoint copies of the Gamma graph plus a monochromatic clique on the leftover vertices."""
    if r < 4 or r % 2:
        raise BadOrder(f"r must be even and at least 4, got {r}")
    H = rotated_clique(r)
    t = _palette(H, t)
    gamma = gamma_graph(r)
    size = gamma.n
    copies = n // size
    leftover = n - copies * size
    bound = (math.comb(r, 2) * size // 2) * copies + math.comb(size - 1, 2)
    parts = [gamma] * copies + [ColoredGraph.complete(leftover, gamma.t)]
    G, _ = disjoint_union(parts, t)
    return ConstructionOutput("rotated-even", G, H, frozenset(range(n)), bound, None, 0,
                              {"r": r, "copies": copies, "leftover": leftover}, pre_closure=G)


def clique_random_ell(n: int, t: int) -> int:
    if n < 2:
        return 1
    return max(math.ceil(10 * math.log2(n) / math.log2(t)), 1)


def construct_clique_random(n: int, r: int, t: int, seed: int = 0,
                            ell: Optional[int] = None) -> ConstructionOutput:
    """2*ell rainbow (r-2)-cliques joined completely to an independent set M.

    Half the cliques use colors from A, half from B. Each M vertex picks, per
    clique, a random (r-2)-set of its clique's half (minus the clique's own
    colors) for its edges into that clique. With t >= C(n, 2) the palette is
    effectively unbounded: ell = 1 and every edge gets its own color.
    """
    if r < 3:
        raise BadParameters(f"r must be at least 3, got {r}")
    if t < math.comb(r, 2):
        raise BadParameters(f"need t >= C(r,2) = {math.comb(r, 2)}, got {t}")
    H = complete(r)
    unrestricted = t >= math.comb(n, 2)
    if unrestricted:
        ell = 1
    elif ell is None:
        ell = clique_random_ell(n, t)
    w = r - 2
    N = 2 * ell * w
    bound = N * n
    params = {"r": r, "ell": ell, "unrestricted": unrestricted}
    if n < N:
        return _fallback("clique-random", n, t, H, bound, seed, **params)
    cliques = [list(range(q * w, (q + 1) * w)) for q in range(2 * ell)]
    M = list(range(N, n))

    if unrestricted:
        G = ColoredGraph(n, t)
        fresh = iter(range(1, t + 1))
        for cl in cliques:
            for u, v in combinations(cl, 2):
                G._insert(u, v, next(fresh))
        for x in M:
            for cl in cliques:
                for v in cl:
                    G._insert(x, v, next(fresh))
        attempt = 0
    else:
        top = (t + 1) // 2
        halves = (list(range(1, top + 1)), list(range(top + 1, t + 1)))
        inner = math.comb(w, 2)
        if min(len(hv) for hv in halves) - inner < w:
            raise BadParameters(f"t = {t} leaves fewer than {w} spare colors per half")
        own = []
        for q in range(2 * ell):
            half = halves[0] if q < ell else halves[1]
            own.append((half[:inner], half[inner:]))
        for attempt in range(MAX_RETRIES + 1):
            rng = random.Random(seed + attempt)
            G = ColoredGraph(n, t)
            for cl, (inside, _) in zip(cliques, own):
                for (u, v), c in zip(combinations(cl, 2), inside):
                    G._insert(u, v, c)
            for x in M:
                for cl, (_, spare) in zip(cliques, own):
                    for v, c in zip(cl, rng.sample(spare, w)):
                        G._insert(x, v, c)
            if all(not unsaturated_colors(G, a, b, H) for a, b in combinations(M, 2)):
                break
            log.info("clique-random: unsaturated M pair with seed %d, redrawing", seed + attempt)
        else:
            raise RetriesExhausted(f"no good draw within {MAX_RETRIES} retries")
    closed = saturation_closure(G, H)
    return ConstructionOutput("clique-random", closed, H, frozenset(M), bound, seed, attempt,
                              params, pre_closure=G)


def steiner_k(n: int, flags: int) -> int:
    """Least k >= 1 with flags^k + 3k >= n."""
    k = 1
    while flags ** k + 3 * k < n:
        k += 1
    return k


def steiner_bound(n: int, t: int) -> int:
    f = math.comb(t, 2)
    return math.floor(3 / math.log2(f) * n * math.log2(n) + 3 * n) if n > 1 else 3 * n


def construct_k3_steiner(n: int, t: int) -> ConstructionOutput:
    """Complete bipartite graph between k-tuples of flags and [k] x [3], colored through the Steiner system.

    The edge from tuple f to (i, j) gets color p * l^(j), where (l, p) is the
    i-th flag of f and * is the third-point operation.
    """
    S = steiner_triple_system(t)
    H = complete(3)
    flags = S.flags
    k = steiner_k(n, len(flags))
    K = 3 * k
    bound = steiner_bound(n, t)
    if n <= K:
        return _fallback("k3-steiner", n, t, H, bound, k=k)
    G = ColoredGraph(n, t)
    tuples = product(range(len(flags)), repeat=k)
    for u in range(K, n):
        f = next(tuples)
        for i in range(k):
            line, p = flags[f[i]]
            for j in range(3):
                G._insert(u, 3 * i + j, S.star(p, line[j]))
    closed = saturation_closure(G, H)
    return ConstructionOutput("k3-steiner", closed, H, frozenset(range(K, n)), bound, None, 0,
                              {"k": k}, pre_closure=G)


def _star_components(H: Pattern) -> List[Pattern]:
    if H.has_isolated_vertices:
        raise NotAStarForest("pattern has isolated vertices")
    comps = [H.induced(c) for c in H.components]
    for c in comps:
        if not (c.m == c.n - 1 and max(c.degree(v) for v in range(c.n)) == c.n - 1):
            raise NotAStarForest(f"component with {c.n} vertices is not a star")
    if len(comps) < 2:
        raise NotAStarForest("a single star is not a star forest with k >= 2")
    return sorted(comps, key=lambda c: c.n)


def _two_star_graph(n: int, a: int, b: int, t: int) -> ColoredGraph:
    size = a + b - 1
    G = ColoredGraph(n, t)
    for i, j in combinations(range(1, size + 1), 2):
        G._insert(i - 1, j - 1, a + b if i <= a <= j else j)
    for u in range(size, n):
        for i in range(1, size + 1):
            G._insert(u, i - 1, i)
    return G


def construct_star_forest(n: int, H: Pattern, t: Optional[int] = None) -> ConstructionOutput:
    """Linear construction for a disjoint union of at least two stars.

    Two stars K_{1,a}, K_{1,b} (a <= b): a clique x_1..x_{a+b-1} joined to an
    independent set, the edge to x_i colored i. More stars add k-2 disjoint
    rainbow e(H)-stars next to the two-star graph.
    """
    comps = _star_components(H)
    t = _palette(H, t)
    a, b = comps[0].n - 1, comps[1].n - 1
    size = a + b - 1
    k = len(comps)
    tstar = H.m
    extra = (k - 2) * (tstar + 1)
    bound = extra * n + size * n
    params = {"stars": k, "a": a, "b": b}
    n_main = n - extra
    if n_main < size + 3:
        return _fallback("star-forest", n, t, H, bound, **params)
    two = union(comps[0], comps[1])
    main = saturation_closure(_two_star_graph(n_main, a, b, t), two)
    parts = [main]
    for _ in range(k - 2):
        parts.append(ColoredGraph(tstar + 1, t, ((0, i, i) for i in range(1, tstar + 1))))
    G, _ = disjoint_union(parts, t)
    closed = saturation_closure(G, H)
    return ConstructionOutput("star-forest", closed, H, frozenset(range(size, n_main)), bound,
                              None, 0, params, pre_closure=G)


def construct_connected(n: int, H: Pattern, t: Optional[int] = None,
                        seed: int = 0) -> ConstructionOutput:
    """Pick the construction matching the structure of a connected non-star pattern."""
    prof = profile(H)
    if prof.is_star:
        raise BadInput(f"{H} is a star; no subquadratic construction exists")
    _, kind = find_special_edge(H)
    if kind in (EdgeKind.CYCLE_NOT_TRIANGLE, EdgeKind.NON_PENDANT_BRIDGE):
        return construct_acyclic_edge(n, H, t)
    r = prof.rotated_clique_r
    if r is not None and r % 2 == 0:
        return construct_rotated_even(n, r, t)
    return construct_triangle_edge(n, H, seed, t)


def glue_vertex(H: Pattern) -> int:
    return min(range(H.n), key=lambda v: (-H.degree(v), v))


def _rainbow_copy(H: Pattern, colors: Sequence[int], t: int) -> ColoredGraph:
    return ColoredGraph(H.n, t, ((u, v, c) for (u, v), c in zip(H.sorted_edges, colors)))


def _bouquet(H1: Pattern, palette: int, t: int) -> ColoredGraph:
    """Rainbow copies of H1 on every e(H1)-subset of [palette], all sharing one vertex."""
    g = glue_vertex(H1)
    others = [v for v in range(H1.n) if v != g]
    subsets = list(combinations(range(1, palette + 1), H1.m))
    G = ColoredGraph(1 + len(subsets) * len(others), t)
    for s, colors in enumerate(subsets):
        where = {g: 0}
        where.update({v: 1 + s * len(others) + i for i, v in enumerate(others)})
        for (u, v), c in zip(H1.sorted_edges, colors):
            G._insert(where[u], where[v], c)
    return G


def construct_disconnected(n: int, H: Pattern, t: Optional[int] = None,
                           seed: int = 0) -> ConstructionOutput:
    """Disconnected pattern: gadgets for the other components next to a saturated graph for a maximal one.

    H1 is a maximal non-star component (largest |V| + |E|), occurring l times.
    The gadgets are one rainbow copy of the remaining components H' on every
    e(H')-subset of [e(H)], and l-1 bouquets of rainbow H1 copies.
    """
    if H.is_connected:
        raise BadInput("pattern is connected")
    if H.has_isolated_vertices:
        raise BadInput("pattern has isolated vertices")
    comps = [H.induced(c) for c in H.components]
    if all(profile(c).is_star if c.n >= 3 else True for c in comps):
        return construct_star_forest(n, H, t)
    t = _palette(H, t)
    nonstar = [c for c in comps if c.n >= 3 and not profile(c).is_star]
    H1 = max(nonstar, key=lambda c: c.n + c.m)
    same = [c for c in comps if is_isomorphic(c, H1)]
    rest = [c for c in comps if not is_isomorphic(c, H1)]
    ell = len(same)
    tprime = H.m
    gadgets = []
    if rest:
        Hp = union(*rest)
        for colors in combinations(range(1, tprime + 1), Hp.m):
            gadgets.append(_rainbow_copy(Hp, colors, t))
    for _ in range(ell - 1):
        gadgets.append(_bouquet(H1, tprime, t))
    fixed = sum(g.n for g in gadgets)
    params = {"component": str(H1.n) + "v" + str(H1.m) + "e", "copies": ell, "gadget_vertices": fixed}
    if n - fixed < H1.n:
        return _fallback("disconnected", n, t, H, n * n, seed, **params)
    sub = construct_connected(n - fixed, H1, t, seed)
    G, offsets = disjoint_union(gadgets + [sub.graph], t)
    closed = saturation_closure(G, H)
    protected = frozenset(v + offsets[-1] for v in range(sub.graph.n))
    params["sub_construction"] = sub.name
    return ConstructionOutput("disconnected", closed, H, protected, fixed * n + sub.declared_bound,
                              seed, sub.retries, params, pre_closure=G)


CONSTRUCTIONS = {
    "acyclic-edge": construct_acyclic_edge,
    "triangle-edge": construct_triangle_edge,
    "hkl": construct_hkl,
    "rotated-even": construct_rotated_even,
    "clique-random": construct_clique_random,
    "k3-steiner": construct_k3_steiner,
    "star-forest": construct_star_forest,
    "disconnected": construct_disconnected,
}
