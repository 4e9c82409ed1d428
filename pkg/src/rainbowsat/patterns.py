"""Named pattern families and the small pattern DSL used on the command line.

DSL terms: ``K4`` (clique), ``P4`` (path on 4 vertices), ``C5`` (cycle),
``S3`` (the star K_{1,3}), ``H_4_2`` (K_4 plus a middle vertex joined to 2
clique vertices plus a pendant leaf), ``rotated_K4`` (K_4 with a rotated edge).
Terms joined with ``+`` form a disjoint union, e.g. ``K3+K2``.
"""

import re
from itertools import combinations
from pathlib import Path

from .errors import BadParameters, ParseError
from .graph import Pattern


def complete(r):
    if r < 2:
        raise BadParameters("K_r needs r >= 2")
    return Pattern.from_edges(r, combinations(range(r), 2), f"K{r}")


def path(k):
    if k < 2:
        raise BadParameters("P_k needs k >= 2")
    return Pattern.from_edges(k, ((i, i + 1) for i in range(k - 1)), f"P{k}")


def cycle(k):
    if k < 3:
        raise BadParameters("C_k needs k >= 3")
    return Pattern.from_edges(k, ((i, (i + 1) % k) for i in range(k)), f"C{k}")


def star(k):
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 1:
        raise BadParameters("S_k needs k >= 1")
    return Pattern.from_edges(k + 1, ((0, i) for i in range(1, k + 1)), f"S{k}")


def hkl(k, l):
    """K_k on 0..k-1, middle vertex k joined to 0..l-1, leaf k+1 hanging off k."""
    if k < 3 or not 1 <= l <= k:
        raise BadParameters(f"H_{{k,l}} needs k >= 3 and 1 <= l <= k, got k={k}, l={l}")
    edges = list(combinations(range(k), 2))
    edges += [(i, k) for i in range(l)]
    edges.append((k, k + 1))
    return Pattern.from_edges(k + 2, edges, f"H_{k}_{l}")


def rotated_clique(r):
    """K_r with one edge rotated onto a new vertex; the same graph as H_{r-1, r-2}."""
    if r < 4:
        raise BadParameters("rotated K_r needs r >= 4")
    p = hkl(r - 1, r - 2)
    return Pattern(p.n, p.edges, f"rotated_K{r}")


def union(*parts):
    edges = []
    offset = 0
    for p in parts:
        edges += [(u + offset, v + offset) for u, v in p.edges]
        offset += p.n
    return Pattern.from_edges(offset, edges, "+".join(p.name or "?" for p in parts))


_TERMS = [
    (re.compile(r"^rotated_K(\d+)$", re.I), lambda g: rotated_clique(int(g[0]))),
    (re.compile(r"^H_(\d+)_(\d+)$", re.I), lambda g: hkl(int(g[0]), int(g[1]))),
    (re.compile(r"^K(\d+)$"), lambda g: complete(int(g[0]))),
    (re.compile(r"^P(\d+)$"), lambda g: path(int(g[0]))),
    (re.compile(r"^C(\d+)$"), lambda g: cycle(int(g[0]))),
    (re.compile(r"^S(\d+)$"), lambda g: star(int(g[0]))),
]


def _parse_term(term):
    term = term.strip()
    for rx, make in _TERMS:
        hit = rx.match(term)
        if hit:
            return make(hit.groups())
    raise ParseError(f"unknown pattern term {term!r}")


def parse_pattern(expr):
    """Resolve a DSL expression, or read a pattern from a graph file if ``expr`` is a path."""
    if Path(expr).is_file():
        from .io import read_pattern

        return read_pattern(expr)
    parts = [_parse_term(t) for t in expr.split("+")]
    if len(parts) == 1:
        return parts[0]
    return union(*parts)
