"""Saturation verification, greedy closure, and the exact small-instance oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from .embed import Embedding, find_copy, find_copy_through, find_rainbow_copy, saturating_colors
from .errors import NotRainbowFree, PaletteTooSmall, TooLarge
from .graph import ColoredGraph, Pair, Pattern

EXACT_MAX_N = 6
EXACT_MAX_T = 4
EXACT_MAX_PATTERN = 5


@dataclass
class SaturationCertificate:
    rainbow_free: bool
    unsaturated: List[Tuple[Pair, int]]
    edge_count: int
    bound: Optional[int] = None
    witness: Optional[Embedding] = field(default=None, repr=False)

    @property
    def saturated(self) -> bool:
        return self.rainbow_free and not self.unsaturated

    @property
    def within_bound(self) -> Optional[bool]:
        if self.bound is None:
            return None
        return self.edge_count <= self.bound

    def summary(self) -> dict:
        return {
            "saturated": self.saturated,
            "rainbow_free": self.rainbow_free,
            "unsaturated_pairs": len(self.unsaturated),
            "edges": self.edge_count,
            "bound": self.bound,
        }


def _check_palette(G: ColoredGraph, H: Pattern) -> None:
    if G.t < H.m:
        raise PaletteTooSmall(f"palette {G.t} smaller than e(H) = {H.m}")


def _color_classes(G: ColoredGraph) -> Tuple[List[int], Optional[int]]:
    """Split the palette into the used colors and one unused representative.

    Colors absent from G are interchangeable for every query about G + uv:c,
    so one representative stands in for all of them.
    """
    seen = G.colors_used()
    rep = next((c for c in range(1, G.t + 1) if c not in seen), None)
    return sorted(seen), rep


def unsaturated_colors(G: ColoredGraph, u: int, v: int, H: Pattern) -> List[int]:
    used, rep = _color_classes(G)
    probe = used + ([rep] if rep is not None else [])
    good = saturating_colors(G, u, v, H, probe)
    bad = [c for c in used if c not in good]
    if rep is not None and rep not in good:
        seen = set(used)
        bad += [c for c in range(rep, G.t + 1) if c not in seen]
    return sorted(bad)


def verify_saturated(G: ColoredGraph, H: Pattern, bound: Optional[int] = None) -> SaturationCertificate:
    _check_palette(G, H)
    witness = find_rainbow_copy(G, H)
    unsaturated = []
    for u, v in G.non_edges():
        for c in unsaturated_colors(G, u, v, H):
            unsaturated.append(((u, v), c))
    return SaturationCertificate(witness is None, unsaturated, G.edge_count, bound, witness)


def is_saturated(G: ColoredGraph, H: Pattern) -> bool:
    """Early-exit verdict; agrees with ``verify_saturated(G, H).saturated``."""
    _check_palette(G, H)
    if find_rainbow_copy(G, H) is not None:
        return False
    for u, v in G.non_edges():
        if unsaturated_colors(G, u, v, H):
            return False
    return True


def saturation_closure(G: ColoredGraph, H: Pattern) -> ColoredGraph:
    """Add non-edges in their smallest safe color until the graph is saturated.

    Non-edges are scanned lexicographically. A pair found saturated stays
    saturated when edges are added later, so a single pass reaches the fixed
    point.
    """
    _check_palette(G, H)
    if find_rainbow_copy(G, H) is not None:
        raise NotRainbowFree("closure needs a rainbow-free starting graph")
    out = G.copy()
    for u, v in G.non_edges():
        bad = unsaturated_colors(out, u, v, H)
        if bad:
            out._insert(u, v, bad[0])
    return out


# exact oracle


class ExactSat(NamedTuple):
    value: int
    witness: ColoredGraph


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> Tuple[Tuple[Pair, ...], Tuple[Tuple[int, ...], ...]]:
    """Edge list and, per edge count, the canonical edge-subset masks on n vertices.

    A mask is canonical when it is the smallest among all its relabellings.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    E = len(pairs)
    masks = np.arange(1 << E, dtype=np.int64)
    bits = [(masks >> e) & 1 for e in range(E)]
    canon = masks.copy()
    for perm in permutations(range(n)):
        mapped = np.zeros_like(masks)
        for e, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            target = index[(x, y) if x < y else (y, x)]
            mapped |= bits[e] << target
        np.minimum(canon, mapped, out=canon)
    reps = masks[canon == masks]
    sizes = np.array([bin(int(m)).count("1") for m in reps])
    by_size = tuple(tuple(int(m) for m in reps[sizes == k]) for k in range(E + 1))
    return tuple(pairs), by_size


def _growth_strings(length: int, t: int):
    """Colorings of ``length`` edges up to permutation of colors (first-occurrence order)."""
    word = [0] * length

    def rec(i, top):
        if i == length:
            yield tuple(word)
            return
        for c in range(1, min(top + 1, t) + 1):
            word[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)


def exact_sat(n: int, t: int, H: Pattern, force: bool = False, rainbow: bool = True) -> ExactSat:
    """Exact saturation number on n labelled vertices by exhaustive search.

    With ``rainbow=False`` the question is the uncolored one (any copy of H,
    single color), which reproduces the classical saturation numbers.
    """
    if not force and (n > EXACT_MAX_N or t > EXACT_MAX_T or H.n > EXACT_MAX_PATTERN):
        raise TooLarge(
            f"exact search limited to n <= {EXACT_MAX_N}, t <= {EXACT_MAX_T}, |H| <= "
            f"{EXACT_MAX_PATTERN}; got n={n}, t={t}, |H|={H.n} (use force)"
        )
    if rainbow and t < H.m:
        raise PaletteTooSmall(f"palette {t} smaller than e(H) = {H.m}")
    palette = t if rainbow else 1
    pairs, by_size = _canonical_masks(n)
    for size, reps in enumerate(by_size):
        for mask in reps:
            present = [p for i, p in enumerate(pairs) if mask >> i & 1]
            holes = [p for i, p in enumerate(pairs) if not mask >> i & 1]
            skeleton = ColoredGraph(n, palette, ((u, v, 1) for u, v in present))
            # necessary: every non-edge closes some uncolored copy
            if any(find_copy_through(skeleton, u, v, 1, H, rainbow=False) is None for u, v in holes):
                continue
            if not rainbow:
                if find_copy(skeleton, H, rainbow=False) is None:
                    return ExactSat(size, skeleton)
                continue
            for word in _growth_strings(size, palette):
                G = ColoredGraph(n, palette, ((u, v, c) for (u, v), c in zip(present, word)))
                if _saturated_small(G, H, holes):
                    return ExactSat(size, G)
    raise AssertionError("the complete graph is always saturated")


def _saturated_small(G: ColoredGraph, H: Pattern, holes) -> bool:
    if find_rainbow_copy(G, H) is not None:
        return False
    palette = range(1, G.t + 1)
    for u, v in holes:
        for c in palette:
            if find_copy_through(G, u, v, c, H) is None:
                return False
    return True
