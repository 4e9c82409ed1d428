"""Rainbow subgraph search.

Backtracking over pattern vertices, most-constrained first, carrying the set
of colors already used as an int bitmask so a repeated color prunes the branch
immediately. Anchored searches pin one pattern edge onto a candidate new host
edge, which restricts the search to copies that use that edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Set, Tuple

from .errors import BadColor, BadVertex, DegeneratePattern, NotANonEdge
from .graph import ColoredGraph, Pattern, pair


@dataclass(frozen=True)
class Embedding:
    """``mapping[i]`` is the host vertex playing pattern vertex ``i``."""

    mapping: Tuple[int, ...]

    def edge_colors(self, G: ColoredGraph, H: Pattern, extra=None) -> List[Optional[int]]:
        out = []
        for a, b in H.sorted_edges:
            u, v = self.mapping[a], self.mapping[b]
            if extra is not None and pair(u, v) == pair(extra[0], extra[1]):
                out.append(extra[2])
            else:
                out.append(G.color(u, v))
        return out

    def is_valid(self, G: ColoredGraph, H: Pattern, rainbow: bool = True, extra=None) -> bool:
        """Independent check of the type invariants (injective, edges present, rainbow)."""
        if len(self.mapping) != H.n or len(set(self.mapping)) != H.n:
            return False
        if any(not 0 <= v < G.n for v in self.mapping):
            return False
        colors = self.edge_colors(G, H, extra)
        if any(c is None for c in colors):
            return False
        return not rainbow or len(set(colors)) == len(colors)


class _Plan:
    """Vertex order plus, for each position, the earlier positions adjacent to it."""

    __slots__ = ("order", "back", "degree", "part")

    def __init__(self, H: Pattern, anchor: Optional[Tuple[int, int]]):
        adj = H.adjacency
        order: List[int] = list(anchor) if anchor else []
        placed = set(order)
        while len(order) < H.n:
            best = max(
                (w for w in range(H.n) if w not in placed),
                key=lambda w: (len(adj[w] & placed), len(adj[w]), -w),
            )
            order.append(best)
            placed.add(best)
        pos = {w: i for i, w in enumerate(order)}
        self.order = order
        self.back = [sorted(pos[x] for x in adj[w] if pos[x] < i) for i, w in enumerate(order)]
        self.degree = [len(adj[w]) for w in order]
        # later component roots: the component they start, for a cached existence check
        self.part: List[Optional[Pattern]] = [None] * len(order)
        for i in range(1, len(order)):
            if not self.back[i]:
                comp = next(c for c in H.components if order[i] in c)
                if len(comp) > 1:
                    self.part[i] = H.induced(comp)


@lru_cache(maxsize=512)
def _plan(H: Pattern, anchor: Optional[Tuple[int, int]] = None) -> _Plan:
    return _Plan(H, anchor)


@lru_cache(maxsize=256)
def automorphisms(H: Pattern) -> Tuple[Tuple[int, ...], ...]:
    """All automorphisms of ``H`` as tuples ``perm[v]``."""
    plan = _plan(H)
    adj = H.adjacency
    n = H.n
    img = [-1] * n
    used = [False] * n
    found = []

    def extend(i):
        if i == n:
            perm = [0] * n
            for p, w in enumerate(plan.order):
                perm[w] = img[p]
            found.append(tuple(perm))
            return
        w = plan.order[i]
        for x in range(n):
            if used[x] or len(adj[x]) != len(adj[w]):
                continue
            if all(img[b] in adj[x] for b in plan.back[i]):
                # non-edges must map to non-edges as well
                if any(
                    img[p] in adj[x]
                    for p in range(i)
                    if plan.order[p] not in adj[w]
                ):
                    continue
                img[i] = x
                used[x] = True
                extend(i + 1)
                used[x] = False
        img[i] = -1

    extend(0)
    return tuple(found)


@lru_cache(maxsize=256)
def anchor_edges(H: Pattern) -> Tuple[Tuple[int, int], ...]:
    """One oriented pattern edge per orbit under the automorphism group.

    An anchored search needs each oriented edge only up to symmetry; falls back
    to every orientation when the pattern is too large to enumerate its group
    cheaply.
    """
    oriented = [(a, b) for a, b in H.sorted_edges] + [(b, a) for a, b in H.sorted_edges]
    if H.n > 9:
        return tuple(oriented)
    auts = automorphisms(H)
    reps = []
    seen = set()
    for a, b in oriented:
        if (a, b) in seen:
            continue
        reps.append((a, b))
        for p in auts:
            seen.add((p[a], p[b]))
    return tuple(reps)


def _occurs(G: ColoredGraph, H: Pattern, rainbow: bool) -> bool:
    """Cached on the graph until its next edit."""
    key = ("occurs", H, rainbow)
    hit = G._memo.get(key)
    if hit is None:
        hit = G._memo[key] = find_copy(G, H, rainbow) is not None
    return hit


def _search(G: ColoredGraph, plan: _Plan, img: List[int], used: Set[int], mask: int,
            start: int, rainbow: bool) -> Optional[int]:
    """Extend ``img[:start]`` to a full embedding. Returns the final color mask or None."""
    adj = G._adj
    order = plan.order
    back = plan.back
    degree = plan.degree
    p = len(order)
    n = len(adj)

    def extend(i, mask):
        if i == p:
            return mask
        need = degree[i]
        bk = back[i]
        if not bk:
            # a component with no copy in G at all cannot be placed under more constraints
            if plan.part[i] is not None and not _occurs(G, plan.part[i], rainbow):
                return None
            for x in range(n):
                if x in used or len(adj[x]) < need:
                    continue
                img[i] = x
                used.add(x)
                res = extend(i + 1, mask)
                if res is not None:
                    return res
                used.discard(x)
            return None
        first = img[bk[0]]
        rest = bk[1:]
        for x, c0 in adj[first].items():
            if x in used or len(adj[x]) < need:
                continue
            bit = 1 << c0
            if rainbow and mask & bit:
                continue
            newmask = mask | bit
            ok = True
            ax = adj[x]
            for b in rest:
                c = ax.get(img[b])
                if c is None:
                    ok = False
                    break
                bit = 1 << c
                if rainbow and newmask & bit:
                    ok = False
                    break
                newmask |= bit
            if not ok:
                continue
            img[i] = x
            used.add(x)
            res = extend(i + 1, newmask)
            if res is not None:
                return res
            used.discard(x)
        return None

    return extend(start, mask)


def _to_embedding(plan: _Plan, img: List[int]) -> Embedding:
    mapping = [0] * len(plan.order)
    for pos, w in enumerate(plan.order):
        mapping[w] = img[pos]
    return Embedding(tuple(mapping))


def _check_pattern(H: Pattern) -> None:
    if H.m == 0:
        raise DegeneratePattern("pattern must have at least one edge")


def find_copy(G: ColoredGraph, H: Pattern, rainbow: bool = True) -> Optional[Embedding]:
    """Return a (rainbow) copy of ``H`` in ``G``, or None."""
    _check_pattern(H)
    if H.n > G.n or H.m > G.edge_count:
        return None
    plan = _plan(H)
    img = [-1] * H.n
    res = _search(G, plan, img, set(), 0, 0, rainbow)
    if res is None:
        return None
    return _to_embedding(plan, img)


def find_rainbow_copy(G: ColoredGraph, H: Pattern) -> Optional[Embedding]:
    return find_copy(G, H, rainbow=True)


def _anchored(G: ColoredGraph, u: int, v: int, c: int, H: Pattern, forbidden: int,
              rainbow: bool) -> Optional[Tuple[Embedding, int]]:
    adj = G._adj
    du, dv = len(adj[u]) + 1, len(adj[v]) + 1
    for a, b in anchor_edges(H):
        if H.degree(a) > du or H.degree(b) > dv:
            continue
        plan = _plan(H, (a, b))
        img = [-1] * H.n
        img[0], img[1] = u, v
        mask = forbidden | (1 << c)
        res = _search(G, plan, img, {u, v}, mask, 2, rainbow)
        if res is not None:
            return _to_embedding(plan, img), res
    return None


def _check_non_edge(G: ColoredGraph, u: int, v: int) -> None:
    if not (0 <= u < G.n and 0 <= v < G.n) or u == v:
        raise BadVertex(f"({u}, {v}) is not a pair of distinct vertices")
    if G.has_edge(u, v):
        raise NotANonEdge(f"({u}, {v}) is already an edge")


def find_copy_through(G: ColoredGraph, u: int, v: int, c: int, H: Pattern,
                      rainbow: bool = True) -> Optional[Embedding]:
    """A (rainbow) copy of ``H`` in ``G + uv:c`` that uses the edge uv, or None."""
    _check_pattern(H)
    _check_non_edge(G, u, v)
    if not 1 <= c <= G.t:
        raise BadColor(f"color {c} outside 1..{G.t}")
    if H.n > G.n:
        return None
    hit = _anchored(G, u, v, c, H, 0, rainbow)
    return None if hit is None else hit[0]


def creates_rainbow(G: ColoredGraph, u: int, v: int, c: int, H: Pattern) -> bool:
    return find_copy_through(G, u, v, c, H) is not None


def saturating_colors(G: ColoredGraph, u: int, v: int, H: Pattern,
                      colors: Iterable[int]) -> Set[int]:
    """The subset of ``colors`` for which adding uv creates a rainbow copy through uv.

    Equivalent to calling :func:`creates_rainbow` per color, but one witness
    covers every color it does not itself use, so most colors are settled in
    bulk.
    """
    _check_pattern(H)
    _check_non_edge(G, u, v)
    pending = sorted(set(colors))
    if H.n > G.n:
        return set()
    good: Set[int] = set()
    todo = set(pending)
    for c in pending:
        if c not in todo:
            continue
        hit = _anchored(G, u, v, c, H, 0, True)
        if hit is None:
            todo.discard(c)
            continue
        witness_mask = hit[1] & ~(1 << c)
        covered = {d for d in todo if not (witness_mask >> d) & 1}
        good |= covered
        todo -= covered
    return good
