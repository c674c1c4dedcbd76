"""Command-line entry point.

Exit codes: 0 success, 1 internal invariant violation, 2 parse error,
3 embedding error, 4 search cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import choosability, configuration, cycles, discharging, families, gadgets, report
from .document import ParseError, dump_document, read_document
from .plane_graph import EmbeddingError, UnknownId

EXIT_OK, EXIT_INVARIANT, EXIT_PARSE, EXIT_EMBEDDING, EXIT_CAP = 0, 1, 2, 3, 4

FAMILIES = ("cycle", "wheel", "prism", "stacked_triangulation", "octahedron")


def _emit(obj, fmt: str, out) -> None:
    out.write(report.dumps(obj) if fmt == "json" else report.render_text(obj))


def analyze_report(G, name=None, hypotheses=cycles.HYPOTHESIS_LENGTHS, max_cycle_len=6, with_gadgets=False, jobs=1) -> dict:
    index = cycles.CycleIndex(G, max_cycle_len)
    tax = configuration.classify(G)
    res = discharging.discharge(G, tax)
    counts = {str(n): len(index.of_length(n)) for n in range(cycles.MIN_LEN, max_cycle_len + 1)}
    out = {
        "schema": "analysis",
        "version": report.SCHEMA_VERSION,
        "graph": report.graph_summary(G, name),
        "cycles": {"max_length": max_cycle_len, "by_length": counts},
        "hypotheses": [report.hypothesis_out(G, cycles.hypothesis_holds(G, i, index)) for i in hypotheses],
        "forbidden_configurations": report.prop2_out(G, cycles.prop2_violations(G, index)),
        "taxonomy": report.taxonomy_out(G, tax),
        "discharge": report.discharge_summary(G, res),
    }
    if with_gadgets:
        out["gadgets"] = report.gadgets_out(gadgets.verify_gadget_lemmas(jobs))
    return out


def cmd_analyze(args, out) -> int:
    doc = read_document(args.file)
    hyps = tuple(sorted(set(args.hypothesis))) if args.hypothesis else cycles.HYPOTHESIS_LENGTHS
    rep = analyze_report(doc.graph, doc.name, hyps, args.max_cycle_len, args.gadgets, args.jobs)
    _emit(rep, args.format, out)
    return EXIT_OK


def generate_graph(family: str, n: int | None, seed: int = 0):
    if family == "octahedron":
        return families.octahedron()
    if n is None:
        raise families.BadParams(f"{family} needs a size n")
    if family == "stacked_triangulation":
        return families.stacked_triangulation(n, seed)
    return getattr(families, family)(n)


def cmd_generate(args, out) -> int:
    G = generate_graph(args.family, args.n, args.seed)
    name = args.family if args.family == "octahedron" else f"{args.family}_{args.n}"
    if args.family == "stacked_triangulation":
        name += f"_seed{args.seed}"
    out.write(dump_document(G, name=name, source="generate"))
    return EXIT_OK


def cmd_gadgets(args, out) -> int:
    rep = report.gadgets_out(gadgets.verify_gadget_lemmas(args.jobs))
    _emit(rep, args.format, out)
    return EXIT_OK


def cmd_choosable(args, out) -> int:
    doc = read_document(args.file)
    G = doc.graph
    res = choosability.k_choosable(G, args.k, budget=args.budget or None)
    smoke = None
    if res.choosable and args.samples:
        passed = choosability.smoke_check(G, args.k, args.samples, args.seed)
        smoke = {"samples": args.samples, "seed": args.seed, "passed": passed}
        if not passed:
            raise discharging.InvariantViolation("a random assignment was not colourable on a choosable graph")
    given = None
    if doc.lists is not None:
        ids = {G.label(v): v for v in G.vertices}
        missing = [lab for lab in ids if lab not in doc.lists]
        if missing:
            raise ParseError(f"lists do not cover vertices {missing}", field="lists")
        col = choosability.l_colorable(G, {ids[lab]: cs for lab, cs in doc.lists.items()})
        given = {
            "colorable": col is not None,
            "coloring": None if col is None else {G.label(v): col[v] for v in G.vertices},
        }
    _emit(report.choosable_out(G, args.k, res, doc.name, smoke, given), args.format, out)
    return EXIT_OK


def cmd_discharge(args, out) -> int:
    doc = read_document(args.file)
    res = discharging.discharge(doc.graph)
    _emit(report.ledger_out(doc.graph, res, doc.name), args.format, out)
    return EXIT_OK


def _max_len(s: str) -> int:
    v = int(s)
    if not 6 <= v <= cycles.MAX_LEN:
        raise argparse.ArgumentTypeError(f"must be between 6 and {cycles.MAX_LEN}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="choosecheck", description="Plane-graph cycle, discharging and list-colouring checks.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1, help="worker processes for gadget checks")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[fmt, jobs], help="full report for one graph file")
    a.add_argument("file")
    a.add_argument("--hypothesis", type=int, action="append", choices=cycles.HYPOTHESIS_LENGTHS,
                   help="check only this cycle length (repeatable)")
    a.add_argument("--max-cycle-len", type=_max_len, default=6)
    a.add_argument("--gadgets", action="store_true", help="append the gadget list-colouring checks")
    a.add_argument("--seed", type=int, default=0, help="unused by analyze; accepted for uniformity")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="write a graph file for a standard family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("n", type=int, nargs="?")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("gadgets", parents=[fmt, jobs], help="exhaustive residual list-colouring checks")
    d.set_defaults(func=cmd_gadgets)

    c = sub.add_parser("choosable", parents=[fmt], help="exact k-choosability of a small graph")
    c.add_argument("file")
    c.add_argument("k", type=int)
    c.add_argument("--seed", type=int, default=0, help="seed for the random smoke check")
    c.add_argument("--samples", type=int, default=1000, help="random assignments tried when choosable (0 to skip)")
    c.add_argument("--budget", type=int, default=choosability.SEARCH_BUDGET,
                   help="list-expansion steps before giving up with exit code 4 (0 for no limit)")
    c.set_defaults(func=cmd_choosable)

    x = sub.add_parser("discharge", parents=[fmt], help="dump every charge transfer")
    x.add_argument("file")
    x.set_defaults(func=cmd_discharge)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, UnknownId) as e:
        print(f"parse error: {e}", file=err)
        return EXIT_PARSE
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        print(f"parse error: cannot read {e.filename}: {e.strerror}", file=err)
        return EXIT_PARSE
    except EmbeddingError as e:
        print(f"embedding error: {e}", file=err)
        return EXIT_EMBEDDING
    except families.BadParams as e:
        print(f"bad parameters: {e}", file=err)
        return EXIT_PARSE
    except choosability.TooLarge as e:
        print(f"cap exceeded: {e}", file=err)
        return EXIT_CAP
    except (discharging.InvariantViolation, discharging.ConflictingClassification, AssertionError) as e:
        print(f"invariant violation: {e}", file=err)
        return EXIT_INVARIANT


def run() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    run()
