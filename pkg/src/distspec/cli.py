"""Command line interface: ``distspec <subcommand> ...``.

Exit codes: 0 success, 1 infeasible or degenerate input (disconnected
graph, impossible parameters), 2 graph6 parse error, 3 capability exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterable, TextIO

from . import graph as gr
from .graph6 import Graph6Error, decode_graph6
from .paley import NotPaleyError, paley
from .search import CapabilityError, OptimismReport, StreamStats, classify, exhaustive_check, filter_stream
from .srg import (
    InfeasibleParametersError,
    SpectrumTable,
    SrgParams,
    Surd,
    adjacency_spectrum,
    conference_distance_spectrum,
    conference_params,
    detect_srg,
    distance_spectrum_from_params,
    family_m2_spectrum,
    is_conference,
)

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_CAPABILITY = 0, 1, 2, 3


class DomainError(Exception):
    pass


def _surd_json(s: Surd) -> dict:
    return {"symbolic": list(s.as_integers()), "text": str(s), "decimal": float(f"{float(s):.12g}")}


def _table_json(t: SpectrumTable) -> list[dict]:
    return [dict(_surd_json(v), mult=m) for v, m in t]


def _table_text(t: SpectrumTable) -> str:
    width = max(len(str(v)) for v, _ in t)
    return "\n".join(f"  {str(v):>{width}}  = {float(v):>18.12g}   x{m}" for v, m in t)


def _emit(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _report_text(r: OptimismReport) -> str:
    i = r.inertia
    lines = [
        f"graph6      {r.graph6}",
        f"order       {r.order}",
        f"diameter    {r.diameter}",
        f"inertia     n+={i.n_plus} n0={i.n_zero} n-={i.n_minus}",
        f"optimistic  {'yes' if r.optimistic else 'no'}",
        f"srg         {r.srg.as_tuple() if r.srg else 'none'}",
    ]
    if r.float_spectrum is not None:
        lines.append("spectrum    " + " ".join(f"{x:.12g}" for x in r.float_spectrum))
    return "\n".join(lines)


def _print_report(r: OptimismReport, args, out: TextIO) -> None:
    if args.json:
        _emit(r.to_json(), out)
    else:
        out.write(_report_text(r) + "\n\n")


def _spectrum_result(params: SrgParams | None, adj: SpectrumTable | None, dist: SpectrumTable) -> dict:
    inertia = dist.inertia()
    return {
        "params": list(params.as_tuple()) if params else None,
        "adjacency": _table_json(adj) if adj is not None else None,
        "distance": _table_json(dist),
        "n_plus": inertia.n_plus,
        "n_zero": inertia.n_zero,
        "n_minus": inertia.n_minus,
        "gap": inertia.gap,
        "optimistic": inertia.gap > 0,
    }


def _print_spectrum(res: dict, params: SrgParams | None, adj: SpectrumTable | None,
                    dist: SpectrumTable, args, out: TextIO) -> None:
    if args.json:
        _emit(res, out)
        return
    if params is not None:
        out.write(f"parameters (v,k,lambda,mu) = {params.as_tuple()}\n")
    if adj is not None:
        out.write("adjacency spectrum:\n" + _table_text(adj) + "\n")
    out.write("distance spectrum:\n" + _table_text(dist) + "\n")
    out.write(f"inertia n+={res['n_plus']} n0={res['n_zero']} n-={res['n_minus']}  "
              f"gap n+ - n- = {res['gap']}  optimistic: {'yes' if res['optimistic'] else 'no'}\n")


def _read_inputs(args, stdin: TextIO) -> Iterable[str]:
    if args.graph6:
        return list(args.graph6)
    return [line for line in stdin if line.strip()]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    for text in _read_inputs(args, stdin):
        text = text.strip()
        try:
            g = decode_graph6(text)
            r = classify(g, graph6=text.removeprefix(">>graph6<<"), float_spectrum=args.float_spectrum)
        except Graph6Error as exc:
            err.write(f"error: {text!r}: {exc}\n")
            if not args.continue_on_error:
                return EXIT_PARSE
            continue
        except gr.DisconnectedGraphError as exc:
            err.write(f"error: {text!r}: {exc}\n")
            if not args.continue_on_error:
                return EXIT_DOMAIN
            continue
        _print_report(r, args, out)
    return EXIT_OK


def cmd_paley(args, stdin, out, err) -> int:
    g = paley(args.q)
    r = classify(g, float_spectrum=args.float_spectrum)
    if args.json:
        _emit(r.to_json(), out)
    else:
        out.write(f"Paley graph P({args.q})\n" + _report_text(r) + "\n")
    return EXIT_OK


def cmd_srg(args, stdin, out, err) -> int:
    try:
        v, k, lam, mu = (int(x) for x in args.params.split(","))
    except ValueError:
        raise DomainError(f"--params needs four comma-separated integers, got {args.params!r}") from None
    p = SrgParams(v, k, lam, mu)
    adj = adjacency_spectrum(p)
    dist = distance_spectrum_from_params(p)
    res = _spectrum_result(p, adj, dist)
    res["conference"] = is_conference(p)
    _print_spectrum(res, p, adj, dist, args, out)
    return EXIT_OK


def cmd_conference(args, stdin, out, err) -> int:
    p = conference_params(args.v)
    dist = conference_distance_spectrum(args.v)
    res = _spectrum_result(p, adjacency_spectrum(p), dist)
    _print_spectrum(res, p, adjacency_spectrum(p), dist, args, out)
    return EXIT_OK


def cmd_family_m2(args, stdin, out, err) -> int:
    fam = family_m2_spectrum(args.m)
    res = _spectrum_result(fam.params, adjacency_spectrum(fam.params), fam.spectrum)
    res["m"] = args.m
    _print_spectrum(res, fam.params, adjacency_spectrum(fam.params), fam.spectrum, args, out)
    return EXIT_OK


def cmd_filter(args, stdin, out, err) -> int:
    source = open(args.input) if args.input != "-" else stdin
    stats = StreamStats()
    try:
        for r in filter_stream(source, emit_all=args.all, exact_only=args.exact_only,
                               float_spectrum=args.float_spectrum,
                               continue_on_error=args.continue_on_error,
                               workers=args.workers, stats=stats):
            _emit(r.to_json(), out)
            out.flush()
    except Graph6Error as exc:
        err.write(f"error: {exc}\n")
        err.write(json.dumps({"summary": stats.summary()}) + "\n")
        return EXIT_PARSE
    finally:
        if source is not stdin:
            source.close()
    err.write(json.dumps({"summary": stats.summary()}) + "\n")
    return EXIT_OK


def cmd_search(args, stdin, out, err) -> int:
    def progress(done, total):
        if args.progress:
            err.write(f"\r{done}/{total} masks")
            err.flush()

    summary = exhaustive_check(args.n, engine=args.engine, progress=progress)
    if args.progress:
        err.write("\n")
    if args.json:
        _emit(summary.to_json(), out)
    else:
        out.write(f"n = {summary.n}: scanned {summary.connected} connected labelled graphs "
                  f"({summary.masks} masks), optimistic found: {summary.optimistic} "
                  f"[{summary.seconds:.2f} s]\n")
        for s in summary.examples:
            out.write(f"  {s}\n")
    return EXIT_OK


def cmd_props(args, stdin, out, err) -> int:
    status = EXIT_OK
    for text in _read_inputs(args, stdin):
        text = text.strip()
        try:
            g = decode_graph6(text)
        except Graph6Error as exc:
            err.write(f"error: {text!r}: {exc}\n")
            return EXIT_PARSE
        connected = gr.is_connected(g)
        p = detect_srg(g)
        res = {
            "graph6": text,
            "n": g.n,
            "edges": g.num_edges,
            "connected": connected,
            "diameter": gr.diameter(g) if connected else None,
            "regular": len({g.degree(v) for v in range(g.n)}) == 1,
            "self_complementary": gr.is_self_complementary(g),
            "vertex_transitive": gr.is_vertex_transitive(g),
            "srg": list(p.as_tuple()) if p else None,
        }
        if args.json:
            _emit(res, out)
        else:
            out.write("\n".join(f"{k:<20}{v}" for k, v in res.items()) + "\n\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distspec",
        description="Exact distance-matrix spectra and optimistic-graph search (n+ > n-).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "graph6 streams from nauty's geng can be piped straight in:\n"
            "  geng -c 10 | distspec filter > optimistic.jsonl\n"
            "exit codes: 0 ok, 1 infeasible/degenerate input, 2 parse error, 3 capability exceeded"
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON lines instead of tables")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress and warnings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="exact inertia and optimism verdict for graph6 input")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: read lines from stdin)")
    p.add_argument("--float-spectrum", action="store_true", help="attach floating eigenvalues")
    p.add_argument("--continue-on-error", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("paley", parents=[common], help="Paley graph P(q) as graph6 plus its report")
    p.add_argument("--q", type=int, required=True, help="field order, a prime power = 1 mod 4")
    p.add_argument("--float-spectrum", action="store_true")
    p.set_defaults(func=cmd_paley)

    p = sub.add_parser("srg", parents=[common], help="closed-form spectra of an SRG(v,k,lambda,mu)")
    p.add_argument("--params", required=True, metavar="v,k,l,m")
    p.set_defaults(func=cmd_srg)

    p = sub.add_parser("conference", parents=[common], help="distance spectrum of a conference graph of order v")
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=cmd_conference)

    p = sub.add_parser("family-m2", parents=[common], help="distance spectrum of SRG(m^2, 3(m-1), m, 6)")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_family_m2)

    p = sub.add_parser("filter", parents=[common], help="filter a graph6 stream, emitting JSON lines (summary on stderr)")
    p.add_argument("--input", default="-", help="file of graph6 lines (default: stdin)")
    p.add_argument("--all", action="store_true", help="emit every connected graph, not only optimistic ones")
    p.add_argument("--exact-only", action="store_true", help="skip the float screen")
    p.add_argument("--float-spectrum", action="store_true")
    p.add_argument("--continue-on-error", action="store_true", help="skip malformed lines instead of aborting")
    p.add_argument("--workers", type=int, default=1, help="worker processes (output order is preserved)")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("search", parents=[common], help="exhaustive scan of all labelled graphs of order n <= 8")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("kernel", "python"), default="kernel")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("props", parents=[common], help="diameter, self-complementarity, vertex-transitivity, SRG parameters")
    p.add_argument("graph6", nargs="*")
    p.set_defaults(func=cmd_props)
    return parser


def main(argv: list[str] | None = None, *, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) < 1:
        err.write("error: --workers must be >= 1\n")
        return EXIT_DOMAIN
    try:
        return args.func(args, stdin, out, err)
    except Graph6Error as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except CapabilityError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAPABILITY
    except (InfeasibleParametersError, NotPaleyError, gr.DisconnectedGraphError, DomainError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
