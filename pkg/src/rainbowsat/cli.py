"""Command-line entry point: construct, verify, classify, exact-sat, report.

Data goes to stdout or files; logs and wall times go to stderr so that stdout
is byte-identical across reruns with the same flags.
"""

from __future__ import annotations

import argparse
import csv
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import constructions as C
from .errors import RainbowSatError
from .io import read_graph, sidecar_path, write_graph, write_metadata
from .patterns import parse_pattern
from .saturation import exact_sat, verify_saturated
from .structure import find_special_edge, classify, profile

log = logging.getLogger("rainbowsat")

EXIT_OK = 0
EXIT_UNSATURATED = 1
EXIT_USAGE = 2


@dataclass
class RunReport:
    command: str
    fields: Dict[str, object] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)

    def render(self) -> str:
        out = [f"command={self.command}"]
        out += [f"{k}={_fmt(v)}" for k, v in self.fields.items()]
        out += self.lines
        return "\n".join(out) + "\n"


def _fmt(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise RainbowSatError(f"{args.construction} needs {', '.join(missing)}")


def _build(args) -> C.ConstructionOutput:
    name = args.construction
    if name == "rotated-even":
        _need(args, "n", "r")
        return C.construct_rotated_even(args.n, args.r, args.t)
    if name == "k3-steiner":
        _need(args, "n", "t")
        return C.construct_k3_steiner(args.n, args.t)
    if name == "hkl":
        _need(args, "n", "k", "l", "t")
        return C.construct_hkl(args.n, args.k, args.l, args.t)
    if name == "clique-random":
        _need(args, "n", "r")
        t = args.t if args.t is not None else math.comb(args.n, 2)
        return C.construct_clique_random(args.n, args.r, t, args.seed, args.ell)
    _need(args, "n", "pattern")
    H = parse_pattern(args.pattern)
    if name == "acyclic-edge":
        return C.construct_acyclic_edge(args.n, H, args.t)
    if name == "triangle-edge":
        return C.construct_triangle_edge(args.n, H, args.seed, args.t)
    if name == "star-forest":
        return C.construct_star_forest(args.n, H, args.t)
    if name == "disconnected":
        return C.construct_disconnected(args.n, H, args.t, args.seed)
    if name == "auto":
        if H.is_connected:
            return C.construct_connected(args.n, H, args.t, args.seed)
        return C.construct_disconnected(args.n, H, args.t, args.seed)
    raise RainbowSatError(f"unknown construction {name!r}")


def cmd_construct(args) -> int:
    out = _build(args)
    report = RunReport("construct", dict(out.metadata()))
    if not args.no_verify:
        cert = verify_saturated(out.graph, out.pattern, out.declared_bound)
        report.fields.update({f"certificate.{k}": v for k, v in cert.summary().items()})
    if args.out:
        write_graph(out.graph, args.out, args.format)
        write_metadata(out.metadata(), sidecar_path(args.out))
        log.info("wrote %s and %s", args.out, sidecar_path(args.out))
    sys.stdout.write(report.render())
    ok = report.fields.get("certificate.saturated", True)
    return EXIT_OK if ok else EXIT_UNSATURATED


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    H = parse_pattern(args.pattern)
    cert = verify_saturated(G, H, args.bound)
    report = RunReport("verify", {"graph": args.graph, "pattern": str(H), "n": G.n, "t": G.t})
    report.fields.update(cert.summary())
    if cert.witness is not None:
        report.lines.append("rainbow_copy=" + " ".join(map(str, cert.witness.mapping)))
    for (u, v), c in cert.unsaturated[: args.max_report]:
        report.lines.append(f"unsaturated={u} {v} {c}")
    sys.stdout.write(report.render())
    return EXIT_OK if cert.saturated else EXIT_UNSATURATED


def cmd_classify(args) -> int:
    H = parse_pattern(args.pattern)
    t = args.t if args.t is not None else H.m
    gc = classify(H, t)
    report = RunReport("classify", {"pattern": str(H), "t": t, "class": gc.tag.value})
    report.lines.append(str(gc))
    if gc.clauses:
        report.fields["satisfied_clauses"] = ",".join(gc.clauses)
    edge, kind = find_special_edge(H)
    if edge is not None and not profile(H).is_star:
        report.fields["special_edge"] = f"{edge[0]}-{edge[1]}"
        report.fields["special_edge_kind"] = kind.value
    sys.stdout.write(report.render())
    return EXIT_OK


def cmd_exact_sat(args) -> int:
    H = parse_pattern(args.pattern)
    res = exact_sat(args.n, args.t, H, force=args.force, rainbow=not args.uncolored)
    report = RunReport("exact-sat", {"n": args.n, "t": args.t, "pattern": str(H),
                                     "uncolored": args.uncolored, "value": res.value})
    if args.out:
        write_graph(res.witness, args.out, args.format)
    else:
        report.lines += [f"witness_edge={u} {v} {c}" for u, v, c in res.witness.edges()]
    sys.stdout.write(report.render())
    return EXIT_OK


# (construction, keyword arguments) rows of the default bound-comparison table
REPORT_ROWS = [
    ("acyclic-edge", {"pattern": "P4"}),
    ("acyclic-edge", {"pattern": "C4"}),
    ("acyclic-edge", {"pattern": "C5"}),
    ("triangle-edge", {"pattern": "K3"}),
    ("rotated-even", {"r": 4}),
    ("k3-steiner", {"t": 3}),
    ("k3-steiner", {"t": 7}),
    ("hkl", {"k": 4, "l": 2, "t": 12}),
    ("clique-random", {"r": 3}),
    ("star-forest", {"pattern": "S2+S3"}),
]


def cmd_report(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["construction", "params", "n", "t", "seed", "retries", "fallback",
                     "edges", "declared_bound", "ratio", "saturated"])
    status = EXIT_OK
    for n in args.n:
        for name, extra in REPORT_ROWS:
            ns = argparse.Namespace(construction=name, n=n, t=None, r=None, k=None, l=None,
                                    pattern=None, seed=args.seed, ell=None)
            vars(ns).update(extra)
            out = _build(ns)
            sat = verify_saturated(out.graph, out.pattern).saturated if args.verify else ""
            if sat is False:
                status = EXIT_UNSATURATED
            params = ";".join(f"{k}={_fmt(v)}" for k, v in sorted(extra.items()))
            writer.writerow([name, params, n, out.graph.t, args.seed, out.retries,
                             _fmt(out.fallback), out.edge_count, out.declared_bound,
                             f"{out.edge_count / out.declared_bound:.4f}", _fmt(sat)])
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-o", "--out")
    common.add_argument("--format", choices=("txt", "dot"), default="txt")
    common.add_argument("--force", action="store_true", help="lift the exact-search size gate")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rainbowsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a saturated colored graph")
    p.add_argument("construction", choices=sorted(C.CONSTRUCTIONS) + ["auto"])
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--pattern")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check rainbow saturation of a graph file")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--max-report", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="growth class of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("exact-sat", parents=[common], help="exact saturation number by search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--uncolored", action="store_true")
    p.set_defaults(func=cmd_exact_sat)

    p = sub.add_parser("report", parents=[common], help="CSV table of edge counts against bounds")
    p.add_argument("--n", type=int, nargs="+", default=[30, 60])
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (RainbowSatError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wall_time={time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
