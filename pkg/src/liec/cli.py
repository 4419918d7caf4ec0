"""Command-line interface: ``liec <command> [options]``.

Every command prints one JSON document on stdout (``gen`` prints graph6).
Exit codes: 0 answer computed (including "no coloring exists"), 2 invalid
input, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import decompose, enumeration, families, ring, xi
from .graph import (Graph, GraphError, components, emit_edge_list, emit_graph6,
                    parse_edge_list, parse_graph6)
from .solver import (ColoringError, EdgeColoring, SearchBudgetExceeded, chi_irr,
                     exists_k_liec, verify_liec)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    """Bad flag combination or unreadable input."""


# -- graph sources -----------------------------------------------------------

def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph6", metavar="STR", help="graph6 string")
    src.add_argument("--file", metavar="PATH",
                     help="graph file: graph6 (first line) or edge list with an 'n m' header")
    src.add_argument("--builtin", metavar="NAME",
                     help="named graph: " + ", ".join(families.builtin_names()))
    src.add_argument("--gp", nargs=2, type=int, metavar=("N", "K"),
                     help="generalized Petersen graph P(N,K)")
    src.add_argument("--cycle", type=int, metavar="N", help="cycle C_N")
    src.add_argument("--path", type=int, metavar="E", help="path with E edges")
    src.add_argument("--xi", type=int, metavar="N", help="XI_N")
    src.add_argument("--theta", nargs=2, type=int, metavar=("K", "T"),
                     help="K paths of length 4T+1 between two adjacent vertices")
    src.add_argument("--double-diamond", action="store_true",
                     help="cubic graph containing two diamonds joined by an edge")


def _read_file(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise UsageError(f"{path} is empty")
    first = lines[0].split()
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return parse_edge_list(text)
    return parse_graph6(lines[0].strip())


def load_graph(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.file is not None:
        return _read_file(args.file)
    if args.builtin is not None:
        return families.builtin_named(args.builtin)
    if args.gp is not None:
        return families.gen_generalized_petersen(families.GPSpec(*args.gp))
    if args.cycle is not None:
        return families.gen_cycle(args.cycle)
    if args.path is not None:
        return families.gen_path(args.path)
    if args.xi is not None:
        return families.gen_xi(args.xi)
    if args.theta is not None:
        return families.gen_theta_family(*args.theta)
    if args.double_diamond:
        return families.gen_double_diamond_cubic()
    raise UsageError("no graph given")


# -- commands ----------------------------------------------------------------

def cmd_chi_irr(args: argparse.Namespace) -> dict:
    g = load_graph(args)
    if not decompose.is_decomposable(g):
        return {"chi_irr": None, "reason": "non-decomposable"}
    k = chi_irr(g, args.k_max, args.budget)
    if k is None:
        return {"chi_irr": None, "reason": "exceeds-k-max"}
    out: dict = {"chi_irr": k}
    if args.witness:
        out["coloring"] = exists_k_liec(g, k, args.budget).to_json()
    return out


def cmd_verify(args: argparse.Namespace) -> dict:
    g = load_graph(args)
    try:
        with open(args.coloring, encoding="utf-8") as fh:
            col = EdgeColoring.from_json(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {args.coloring}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.coloring} is not JSON: {exc}") from None
    bad = verify_liec(g, col)
    return {"valid": not bad, "violations": [v.to_json() for v in bad]}


def cmd_classify(args: argparse.Namespace) -> dict:
    g = load_graph(args)
    comps = [c for c in components(g) if len(c) > 1]
    if len(comps) == 1 and len(comps[0]) == g.n:
        return decompose.classify(g).to_json()
    parts = [decompose.classify(g.edge_subgraph_vertices(c)) for c in comps]
    verdict = next((p.tag for p in parts if not p.decomposable), decompose.DECOMPOSABLE)
    return {"verdict": verdict, "components": [p.to_json() for p in parts]}


def _ring_spec(args: argparse.Namespace) -> families.RingPermutationSpec:
    if args.gp is not None:
        return families.RingPermutationSpec.from_gp(families.GPSpec(*args.gp))
    if args.xi is not None:
        return families.RingPermutationSpec.from_xi(args.xi)
    if args.cycles is None:
        raise UsageError("color-ring needs --gp, --xi, or --cycles")
    lengths = _int_list(args.cycles, "--cycles")
    phi = _int_list(args.phi, "--phi") if args.phi else ()
    return families.RingPermutationSpec(sum(lengths), tuple(lengths), tuple(phi))


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers") from None


def cmd_color_ring(args: argparse.Namespace) -> dict:
    spec = _ring_spec(args)
    res = ring.color_ring_permutation_detailed(spec)
    g = families.gen_ring_permutation(spec)
    out = res.to_json()
    out["valid"] = not verify_liec(g, res.coloring)
    out["graph6"] = emit_graph6(g) if g.n <= 62 else None
    return out


def cmd_xi(args: argparse.Namespace):
    if args.digraph == "dot":
        return xi.build_code_digraph().to_dot()
    if args.digraph == "json":
        return xi.build_code_digraph().to_json()
    if args.n is None:
        raise UsageError("xi needs --n or --digraph")
    exists = xi.xi_two_liec_exists(args.n)
    return {"n": args.n, "two_liec_exists": exists, "chi_irr": 2 if exists else 3}


def cmd_table1(args: argparse.Namespace):
    reports = []
    for n in args.n:
        rep = enumeration.table1_row_parallel(n, args.girth, args.jobs, args.budget)
        reports.append(rep)
    if args.pretty:
        return enumeration.format_table(reports) + "\n"
    rows = []
    for rep in reports:
        row = rep.to_json()
        row["count"] = rep.non_two_liec_count
        rows.append(row)
    return rows[0] if len(rows) == 1 else rows


def cmd_scan_gp(args: argparse.Namespace) -> dict:
    found = enumeration.scan_gp(args.n_max, args.girth, args.budget)
    return {"n_max": args.n_max, "girth_min": args.girth,
            "scanned": len(enumeration.gp_specs(args.n_max, args.girth)),
            "no_two_liec": [[s.n, s.k] for s in found]}


def cmd_gen(args: argparse.Namespace) -> str:
    if args.cubic is not None:
        if args.cubic == 0:
            raise UsageError("--cubic needs a positive vertex count")
        gs = enumeration.enumerate_cubic(args.cubic, args.girth)
        return "".join(emit_graph6(g) + "\n" for g in gs)
    if args.subcubic is not None:
        gs = enumeration.enumerate_subcubic_connected(args.subcubic, args.subcubic,
                                                      claw_free=args.claw_free)
        return "".join(emit_graph6(g) + "\n" for g in gs)
    g = load_graph(args)
    if args.format == "edgelist":
        return emit_edge_list(g)
    return emit_graph6(g) + "\n"


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liec", description="Locally irregular edge-colorings.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi-irr", help="least number of colors of a LIEC")
    _add_graph_source(p)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--budget", type=int, default=None, help="search-node cap per value of k")
    p.add_argument("--witness", action="store_true", help="include an optimal coloring")
    p.set_defaults(func=cmd_chi_irr)

    p = sub.add_parser("verify", help="check a coloring")
    _add_graph_source(p)
    p.add_argument("--coloring", required=True, metavar="PATH",
                   help='JSON {"k": k, "edges": [{"u":..,"v":..,"c":..}, ...]}')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="decomposability verdict")
    _add_graph_source(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("color-ring", help="constructive 3-LIEC of a ring permutation graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gp", nargs=2, type=int, metavar=("N", "K"))
    src.add_argument("--xi", type=int, metavar="N")
    src.add_argument("--cycles", metavar="L1,L2,...", help="cycle lengths of R")
    p.add_argument("--phi", metavar="P0,P1,...", help="R-vertex matched to each outer vertex")
    p.set_defaults(func=cmd_color_ring)

    p = sub.add_parser("xi", help="2-LIEC existence for XI_n via the code digraph")
    p.add_argument("--n", type=int)
    p.add_argument("--digraph", choices=["json", "dot"], help="dump the code digraph instead")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("table1", help="count cubic graphs without a 2-LIEC")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--girth", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--pretty", action="store_true", help="text table instead of JSON")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("scan-gp", help="generalized Petersen graphs without a 2-LIEC")
    p.add_argument("--n-max", type=int, default=13)
    p.add_argument("--girth", type=int, default=5)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_scan_gp)

    p = sub.add_parser("gen", help="emit graphs as graph6")
    _add_graph_source(p, required=False)
    p.add_argument("--cubic", type=int, metavar="N", help="all connected cubic graphs on N vertices")
    p.add_argument("--subcubic", type=int, metavar="N",
                   help="all connected graphs with max degree 3 on N vertices")
    p.add_argument("--girth", type=int, default=3)
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_gen)
    return ap


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        payload = args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"liec: {exc}", file=sys.stderr)
        _emit({"status": "unknown", "reason": "budget-exceeded", "budget": exc.nodes})
        return EXIT_BUDGET
    except (GraphError, ColoringError, UsageError, ValueError) as exc:
        print(f"liec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(payload)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
