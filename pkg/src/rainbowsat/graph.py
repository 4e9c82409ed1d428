"""Edge-colored host graphs and uncolored pattern graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .errors import BadColor, BadVertex, DuplicateEdge, MissingEdge

Pair = Tuple[int, int]


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple undirected graph on vertices ``0..n-1`` whose edges carry colors ``1..t``.

    Treat instances as immutable: the public editing operations
    (:meth:`add_colored_edge`, :meth:`remove_edge`) return new graphs.
    """

    __slots__ = ("n", "t", "_color", "_adj", "_memo")

    def __init__(self, n: int, t: int, edges: Iterable[Tuple[int, int, int]] = ()):
        if n < 0:
            raise BadVertex(f"vertex count must be non-negative, got {n}")
        if t < 1:
            raise BadColor(f"palette size must be positive, got {t}")
        self.n = n
        self.t = t
        self._color: Dict[Pair, int] = {}
        self._adj: List[Dict[int, int]] = [{} for _ in range(n)]
        # search results that depend on the whole graph; dropped on every edit
        self._memo: Dict[object, object] = {}
        for u, v, c in edges:
            self._insert(u, v, c)

    @classmethod
    def complete(cls, n: int, t: int, color: int = 1) -> "ColoredGraph":
        """Monochromatic K_n."""
        return cls(n, t, ((u, v, color) for u, v in combinations(range(n), 2)))

    # internal mutation, only used while a graph is being built

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise BadVertex(f"vertex {v} outside 0..{self.n - 1}")

    def _insert(self, u: int, v: int, c: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise BadVertex(f"self-loop at {u}")
        if not 1 <= c <= self.t:
            raise BadColor(f"color {c} outside 1..{self.t}")
        key = pair(u, v)
        if key in self._color:
            raise DuplicateEdge(f"edge {key} already present")
        self._memo.clear()
        self._color[key] = c
        self._adj[u][v] = c
        self._adj[v][u] = c

    def _delete(self, u: int, v: int) -> int:
        key = pair(u, v)
        if key not in self._color:
            raise MissingEdge(f"edge {key} not present")
        self._memo.clear()
        c = self._color.pop(key)
        del self._adj[u][v]
        del self._adj[v][u]
        return c

    # queries

    def color(self, u: int, v: int) -> Optional[int]:
        return self._color.get(pair(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return pair(u, v) in self._color

    def neighbors(self, v: int) -> Dict[int, int]:
        """Read-only view intent: ``{neighbor: color}``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def edge_count(self) -> int:
        return len(self._color)

    def edges(self) -> List[Tuple[int, int, int]]:
        """All edges as ``(u, v, color)`` with ``u < v``, sorted on ``(u, v)``."""
        return [(u, v, c) for (u, v), c in sorted(self._color.items())]

    def edge_items(self) -> Iterator[Tuple[Pair, int]]:
        return iter(self._color.items())

    def non_edges(self) -> List[Pair]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if v not in self._adj[u]]

    def sees_color(self, v: int, c: int) -> bool:
        self._check_vertex(v)
        if not 1 <= c <= self.t:
            raise BadColor(f"color {c} outside 1..{self.t}")
        return c in self._adj[v].values()

    def colors_used(self) -> set:
        return set(self._color.values())

    # value semantics

    def copy(self, t: Optional[int] = None) -> "ColoredGraph":
        g = ColoredGraph(self.n, self.t if t is None else t)
        for (u, v), c in self._color.items():
            g._insert(u, v, c)
        return g

    def add_colored_edge(self, u: int, v: int, c: int) -> "ColoredGraph":
        g = self.copy()
        g._insert(u, v, c)
        return g

    def remove_edge(self, u: int, v: int) -> "ColoredGraph":
        g = self.copy()
        g._delete(u, v)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.t == other.t and self._color == other._color

    def __hash__(self) -> int:
        return hash((self.n, self.t, frozenset(self._color.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, t={self.t}, edges={self.edge_count})"


def add_colored_edge(G: ColoredGraph, u: int, v: int, c: int) -> ColoredGraph:
    return G.add_colored_edge(u, v, c)


def non_edges(G: ColoredGraph) -> List[Pair]:
    return G.non_edges()


def sees_color(G: ColoredGraph, v: int, c: int) -> bool:
    return G.sees_color(v, c)


def disjoint_union(parts: Iterable[ColoredGraph], t: int) -> Tuple[ColoredGraph, List[int]]:
    """Place graphs side by side; returns the union and each part's vertex offset."""
    parts = list(parts)
    offsets = []
    total = 0
    for g in parts:
        offsets.append(total)
        total += g.n
    union = ColoredGraph(total, t)
    for g, off in zip(parts, offsets):
        for (u, v), c in g.edge_items():
            union._insert(u + off, v + off, c)
    return union, offsets


@dataclass(frozen=True)
class Pattern:
    """Uncolored target graph H on vertices ``0..n-1``."""

    n: int
    edges: frozenset
    name: str = field(default="", compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Pair], name: str = "") -> "Pattern":
        canon = set()
        for u, v in edges:
            if u == v:
                raise BadVertex(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertex(f"edge {(u, v)} outside 0..{n - 1}")
            canon.add(pair(u, v))
        return cls(n, frozenset(canon), name)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> List[Pair]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> List[frozenset]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return [frozenset(a) for a in adj]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def components(self) -> List[List[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                a = stack.pop()
                comp.append(a)
                for b in self.adjacency[a]:
                    if not seen[b]:
                        seen[b] = True
                        stack.append(b)
            comps.append(sorted(comp))
        return comps

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def has_isolated_vertices(self) -> bool:
        return any(not a for a in self.adjacency)

    def induced(self, vertices: Iterable[int], name: str = "") -> "Pattern":
        """Subgraph induced on ``vertices``, relabelled in ascending order."""
        keep = sorted(vertices)
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Pattern.from_edges(len(keep), es, name)

    def relabel(self, perm: List[int]) -> "Pattern":
        """Pattern with vertex ``v`` renamed to ``perm[v]``."""
        return Pattern.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), self.name)

    def __str__(self) -> str:
        return self.name or f"Pattern(n={self.n}, m={self.m})"
