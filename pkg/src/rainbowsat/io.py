"""Text graph format, DOT export, and key=value metadata sidecars.

Graph files: first line ``n t``, then one ``u v c`` line per edge, sorted on
``(u, v)``, 0-based vertices, 1-based colors, LF endings. Lines starting with
``#`` are comments. Pattern files use the same layout; the color column and
``t`` are optional there and ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .errors import ParseError, RainbowSatError
from .graph import ColoredGraph, Pattern

PathLike = Union[str, Path]


def _records(text: str) -> Iterable[Tuple[int, List[int]]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None


def parse_graph(text: str) -> ColoredGraph:
    records = iter(_records(text))
    try:
        lineno, head = next(records)
    except StopIteration:
        raise ParseError("empty graph file") from None
    if len(head) != 2:
        raise ParseError("header must be 'n t'", lineno)
    n, t = head
    if n < 0 or t < 1:
        raise ParseError(f"bad header n={n} t={t}", lineno)
    G = ColoredGraph(n, t)
    for lineno, rec in records:
        if len(rec) != 3:
            raise ParseError("edge line must be 'u v c'", lineno)
        u, v, c = rec
        try:
            G._insert(u, v, c)
        except RainbowSatError as exc:
            raise ParseError(str(exc), lineno) from None
    return G


def parse_pattern_text(text: str, name: str = "") -> Pattern:
    records = iter(_records(text))
    try:
        lineno, head = next(records)
    except StopIteration:
        raise ParseError("empty pattern file") from None
    if len(head) not in (1, 2) or head[0] < 1:
        raise ParseError("header must be 'n' or 'n t'", lineno)
    n = head[0]
    edges = set()
    for lineno, rec in records:
        if len(rec) not in (2, 3):
            raise ParseError("edge line must be 'u v' or 'u v c'", lineno)
        u, v = rec[:2]
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad edge {u} {v}", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        edges.add(e)
    return Pattern.from_edges(n, edges, name)


def format_graph(G: ColoredGraph) -> str:
    lines = [f"{G.n} {G.t}"] + [f"{u} {v} {c}" for u, v, c in G.edges()]
    return "\n".join(lines) + "\n"


def format_dot(G: ColoredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f'  {u} -- {v} [label="{c}"];' for u, v, c in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> ColoredGraph:
    return parse_graph(Path(path).read_text())


def read_pattern(path: PathLike) -> Pattern:
    p = Path(path)
    return parse_pattern_text(p.read_text(), p.stem)


def write_graph(G: ColoredGraph, path: PathLike, fmt: str = "txt") -> None:
    text = format_dot(G) if fmt == "dot" else format_graph(G)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def format_metadata(meta: Mapping[str, object]) -> str:
    return "".join(f"{k}={_render(v)}\n" for k, v in meta.items())


def _render(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def parse_metadata(text: str) -> Dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError("expected key=value", lineno)
        out[key.strip()] = value.strip()
    return out


def sidecar_path(path: PathLike) -> Path:
    p = Path(path)
    return p.with_name(p.name + ".meta")


def write_metadata(meta: Mapping[str, object], path: PathLike) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_metadata(meta))
