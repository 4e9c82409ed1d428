"""Steiner triple systems and one-factorizations of K_r."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Tuple

from .errors import NoSuchSystem, OddOrder

Line = Tuple[int, int, int]


@dataclass(frozen=True)
class SteinerTripleSystem:
    """Points ``1..order``; each line stored as an ascending triple, which is also its point ordering."""

    order: int
    lines: Tuple[Line, ...]

    @cached_property
    def _third(self) -> Dict[Tuple[int, int], int]:
        table = {}
        for line in self.lines:
            for a, b in combinations(line, 2):
                c = next(p for p in line if p != a and p != b)
                table[(a, b)] = c
                table[(b, a)] = c
        return table

    def star(self, a: int, b: int) -> int:
        """``a`` if ``a == b``, else the third point on the line through ``a`` and ``b``."""
        if a == b:
            return a
        return self._third[(a, b)]

    def line_through(self, a: int, b: int) -> Line:
        c = self.star(a, b)
        return tuple(sorted((a, b, c)))

    @cached_property
    def flags(self) -> List[Tuple[Line, int]]:
        """All ``(line, point on line)`` pairs, ordered by line then point."""
        return [(line, p) for line in self.lines for p in line]


def star_op(S: SteinerTripleSystem, a: int, b: int) -> int:
    return S.star(a, b)


def _bose(t: int) -> List[Line]:
    # t = 3v with v odd; idempotent commutative quasigroup x.y = (x+y)(v+1)/2 mod v
    v = t // 3
    half = (v + 1) // 2

    def point(x, i):
        return i * v + x + 1

    lines = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(v)]
    for x, y in combinations(range(v), 2):
        z = (x + y) * half % v
        for i in range(3):
            lines.append((point(x, i), point(y, i), point(z, (i + 1) % 3)))
    return lines


def _skolem(t: int) -> List[Line]:
    # t = 6s+1 = 3*(2s) + 1; half-idempotent commutative quasigroup on Z_2s
    s = (t - 1) // 6
    v = 2 * s
    inf = t

    def rename(a):
        return a // 2 if a % 2 == 0 else s + (a - 1) // 2

    def op(x, y):
        return rename((x + y) % v)

    def point(x, i):
        return i * v + x + 1

    lines = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(s)]
    for x in range(s):
        for i in range(3):
            lines.append((inf, point(x + s, i), point(x, (i + 1) % 3)))
    for x, y in combinations(range(v), 2):
        z = op(x, y)
        for i in range(3):
            lines.append((point(x, i), point(y, i), point(z, (i + 1) % 3)))
    return lines


def steiner_triple_system(t: int) -> SteinerTripleSystem:
    """Bose construction for t = 3 (mod 6), Skolem construction for t = 1 (mod 6)."""
    if t < 3 or t % 6 not in (1, 3):
        raise NoSuchSystem(f"no Steiner triple system of order {t}")
    raw = _bose(t) if t % 6 == 3 else _skolem(t)
    lines = tuple(sorted(tuple(sorted(line)) for line in raw))
    return SteinerTripleSystem(t, lines)


@dataclass(frozen=True)
class OneFactorization:
    """Proper (r-1)-edge-coloring of K_r on vertices ``0..r-1``."""

    order: int
    color_of: Dict[Tuple[int, int], int]

    @cached_property
    def matchings(self) -> Dict[int, List[Tuple[int, int]]]:
        """Color -> its edges sorted; position j-1 is the bijection value at j."""
        out: Dict[int, List[Tuple[int, int]]] = {}
        for e, c in self.color_of.items():
            out.setdefault(c, []).append(e)
        return {c: sorted(es) for c, es in sorted(out.items())}

    @cached_property
    def _index(self) -> Dict[Tuple[int, int], int]:
        return {e: j + 1 for es in self.matchings.values() for j, e in enumerate(es)}

    def g(self, color: int, j: int) -> Tuple[int, int]:
        return self.matchings[color][j - 1]

    def g_inv(self, e: Tuple[int, int]) -> int:
        return self._index[e]


def one_factorization(r: int) -> OneFactorization:
    """Circle method: vertex r-1 is the hub, round i pairs it with i."""
    if r < 2 or r % 2:
        raise OddOrder(f"K_{r} has no one-factorization")
    hub = r - 1
    mod = r - 1
    color_of = {}
    for i in range(mod):
        color_of[(i, hub)] = i + 1
        for j in range(1, r // 2):
            a, b = (i + j) % mod, (i - j) % mod
            color_of[(min(a, b), max(a, b))] = i + 1
    return OneFactorization(r, color_of)
