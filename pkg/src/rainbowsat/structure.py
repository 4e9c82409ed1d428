"""Structural profile of a pattern and its growth-class classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from .embed import find_copy
from .errors import Disconnected, PaletteTooSmall, TooSmall
from .graph import ColoredGraph, Pair, Pattern, pair
from .patterns import hkl


class Growth(str, Enum):
    QUADRATIC = "Quadratic"
    NLOGN = "NLogN"
    LINEAR = "Linear"
    UNRESOLVED = "UnresolvedClassB"


GROWTH_TEXT = {
    Growth.QUADRATIC: "Θ(n²)",
    Growth.NLOGN: "Θ(n log n)",
    Growth.LINEAR: "Θ(n)",
    Growth.UNRESOLVED: "unresolved (class B)",
}


class EdgeKind(str, Enum):
    CYCLE_NOT_TRIANGLE = "CycleNotTriangle"
    NON_PENDANT_BRIDGE = "NonPendantBridge"
    TRIANGLE_EDGE = "TriangleEdge"
    NONE = "NoSpecialEdge"


@dataclass(frozen=True)
class StructureProfile:
    is_star: bool
    conical_vertices: FrozenSet[int]
    every_edge_in_triangle: bool
    pendant_edges: FrozenSet[Pair]
    non_pendant_bridges: FrozenSet[Pair]
    edges_in_cycle_not_triangle: FrozenSet[Pair]
    triangle_edges: FrozenSet[Pair]
    rotated_clique_r: Optional[int]
    hkl_params: Optional[Tuple[int, int]]


@dataclass(frozen=True)
class GrowthClass:
    tag: Growth
    reason: str
    clauses: Tuple[str, ...] = field(default=())

    def __str__(self) -> str:
        return f"{GROWTH_TEXT[self.tag]} [{self.reason}]"


def triangle_edges(H: Pattern) -> set:
    adj = H.adjacency
    return {e for e in H.edges if adj[e[0]] & adj[e[1]]}


def bridges(H: Pattern) -> set:
    """Cut edges via low-link numbering (iterative DFS)."""
    adj = [sorted(a) for a in H.adjacency]
    disc = [-1] * H.n
    low = [0] * H.n
    out = set()
    clock = 0
    for root in range(H.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.add(pair(parent, v))
    return out


def is_isomorphic(A: Pattern, B: Pattern) -> bool:
    if A.n != B.n or A.m != B.m:
        return False
    if sorted(map(len, A.adjacency)) != sorted(map(len, B.adjacency)):
        return False
    # equal edge counts turn an injective edge-preserving map into an isomorphism
    host = ColoredGraph(B.n, 1, ((u, v, 1) for u, v in B.edges))
    return find_copy(host, A, rainbow=False) is not None


def _hkl_params(H: Pattern) -> Optional[Tuple[int, int]]:
    k = H.n - 2
    if k < 3:
        return None
    l = H.m - k * (k - 1) // 2 - 1
    if not 1 <= l <= k:
        return None
    return (k, l) if is_isomorphic(H, hkl(k, l)) else None


def profile(H: Pattern) -> StructureProfile:
    if H.n < 3:
        raise TooSmall(f"pattern needs at least 3 vertices, has {H.n}")
    if not H.is_connected or H.has_isolated_vertices:
        raise Disconnected("pattern must be connected without isolated vertices")
    deg = [H.degree(v) for v in range(H.n)]
    tri = triangle_edges(H)
    br = bridges(H)
    pendant = {e for e in H.edges if deg[e[0]] == 1 or deg[e[1]] == 1}
    params = _hkl_params(H)
    rotated = params[0] + 1 if params is not None and params[1] == params[0] - 1 else None
    return StructureProfile(
        is_star=H.m == H.n - 1 and max(deg) == H.n - 1,
        conical_vertices=frozenset(v for v in range(H.n) if deg[v] == H.n - 1),
        every_edge_in_triangle=len(tri) == H.m,
        pendant_edges=frozenset(pendant),
        non_pendant_bridges=frozenset(br - pendant),
        edges_in_cycle_not_triangle=frozenset(H.edges - br - tri),
        triangle_edges=frozenset(tri),
        rotated_clique_r=rotated,
        hkl_params=params,
    )


# clause label -> (tag, short description)
CLAUSES = {
    "i": (Growth.QUADRATIC, "star"),
    "ii": (Growth.NLOGN, "conical vertex, not a star"),
    "iii": (Growth.NLOGN, "every edge lies in a triangle"),
    "iv": (Growth.LINEAR, "non-pendant edge outside every triangle"),
    "v": (Growth.LINEAR, "even clique with a rotated edge"),
}
# (iii) is cited ahead of (ii) when both hold; both give the same tag
_CLAUSE_PRIORITY = ("i", "iii", "ii", "iv", "v")


def satisfied_clauses(prof: StructureProfile) -> List[str]:
    hits = []
    if prof.is_star:
        hits.append("i")
    if prof.conical_vertices and not prof.is_star:
        hits.append("ii")
    if prof.every_edge_in_triangle:
        hits.append("iii")
    if prof.edges_in_cycle_not_triangle or prof.non_pendant_bridges:
        hits.append("iv")
    r = prof.rotated_clique_r
    if r is not None and r >= 4 and r % 2 == 0:
        hits.append("v")
    return hits


def classify(H: Pattern, t: int) -> GrowthClass:
    if t < H.m:
        raise PaletteTooSmall(f"palette {t} smaller than e(H) = {H.m}")
    prof = profile(H)
    hits = satisfied_clauses(prof)
    for label in _CLAUSE_PRIORITY:
        if label in hits:
            tag, text = CLAUSES[label]
            return GrowthClass(tag, f"clause ({label}): {text}", tuple(hits))
    # no clause fires: H has no conical vertex and has a pendant edge
    r = prof.rotated_clique_r
    if r is not None and r % 2 == 1:
        return GrowthClass(Growth.UNRESOLVED, f"odd clique K{r} with a rotated edge", ())
    if prof.hkl_params is not None:
        k, l = prof.hkl_params
        if 2 <= l <= k - 2 and t >= k * (k - 1):
            return GrowthClass(
                Growth.LINEAR, f"H_{{{k},{l}}} with t >= k(k-1) = {k * (k - 1)}", ()
            )
    if t >= H.n ** 2:
        return GrowthClass(Growth.LINEAR, f"pendant edge, no conical vertex, t >= |H|^2 = {H.n ** 2}", ())
    return GrowthClass(Growth.UNRESOLVED, f"class B with t < |H|^2 = {H.n ** 2}", ())


def find_special_edge(H: Pattern) -> Tuple[Optional[Pair], EdgeKind]:
    """Edge driving the constructions, oriented as ``(x, y)`` with ``x`` the heavier end.

    Priority: an edge on a cycle but in no triangle; else the non-pendant
    bridge whose heavier endpoint has the largest degree; else a triangle edge.
    """
    prof = profile(H)
    deg = [H.degree(v) for v in range(H.n)]

    def orient(e):
        a, b = sorted(e, key=lambda v: (-deg[v], v))
        return (a, b)

    if prof.edges_in_cycle_not_triangle:
        return orient(min(prof.edges_in_cycle_not_triangle)), EdgeKind.CYCLE_NOT_TRIANGLE
    if prof.non_pendant_bridges:
        best = min((orient(e) for e in prof.non_pendant_bridges),
                   key=lambda xy: (-deg[xy[0]], xy))
        return best, EdgeKind.NON_PENDANT_BRIDGE
    if prof.triangle_edges:
        return orient(min(prof.triangle_edges)), EdgeKind.TRIANGLE_EDGE
    return None, EdgeKind.NONE
