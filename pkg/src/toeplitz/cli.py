"""``toeplitz`` command line: analyze, realize, verify and export.

Exit codes are 0 on success, 1 when a verification sweep finds a mismatch
or a sequence is not realizable, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import cliques, degrees, oracle, structure, sweep
from .core import (
    CapExceeded,
    ToeplitzError,
    ToeplitzSpec,
    components,
    format_spec,
    is_arithmetic,
    new_spec,
    parse_spec,
    to_dense,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dense(spec: ToeplitzSpec):
    # exports are not oracle searches, so no vertex cap applies
    return to_dense(spec, cap=spec.n)


def spec_to_json(spec: ToeplitzSpec) -> dict:
    g = _dense(spec)
    return {"n": spec.n, "offsets": list(spec.offsets), "edges": [list(e) for e in g.edges()]}


def spec_from_json(data: Any) -> ToeplitzSpec:
    """Inverse of :func:`spec_to_json`; an ``edges`` list, if given, must match the offsets."""
    if not isinstance(data, dict) or "n" not in data or "offsets" not in data:
        raise ToeplitzError("JSON spec needs 'n' and 'offsets'")
    n, offsets = data["n"], data["offsets"]
    if not isinstance(n, int) or not isinstance(offsets, list) or not all(isinstance(t, int) for t in offsets):
        raise ToeplitzError("'n' must be an integer and 'offsets' a list of integers")
    spec = new_spec(n, offsets, allow_edgeless=True)
    if "edges" in data:
        given = sorted(tuple(sorted(e)) for e in data["edges"])
        if given != _dense(spec).edges():
            raise ToeplitzError("edge list does not match the offsets")
    return spec


def read_spec(text: str) -> ToeplitzSpec:
    """Spec from the text grammar ``n: t1,...`` or from a JSON object."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ToeplitzError(f"bad JSON spec: {exc}") from None
        return spec_from_json(data)
    return parse_spec(text)


def export_matrix(spec: ToeplitzSpec) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in _dense(spec).matrix())


def export_dot(spec: ToeplitzSpec) -> str:
    lines = [f'graph "{format_spec(spec)}" {{']
    lines += [f"  {v};" for v in range(1, spec.n + 1)]
    lines += [f"  {a} -- {b};" for a, b in _dense(spec).edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(spec: ToeplitzSpec) -> str:
    return json.dumps(spec_to_json(spec)) + "\n"


EXPORTERS: dict[str, Callable[[ToeplitzSpec], str]] = {
    "matrix": export_matrix,
    "dot": export_dot,
    "json": export_json,
}


def _capped(fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except CapExceeded:
        return "capped"


def _verdict(fn: Callable[[], structure.Verdict]) -> Any:
    result = _capped(fn)
    return result if result == "capped" else result.to_dict()


def _perfectness(spec: ToeplitzSpec, budget: oracle.OracleBudget) -> Any:
    if spec.k == 2:
        return _verdict(lambda: structure.perfectness_verdict_k2(spec, budget))
    if spec.k == spec.n - 3 and spec.k >= 1:
        v = structure.perfectness_verdict_complement_form(spec)
        if v.verdict != "not-applicable":
            return v.to_dict()
    if spec.k <= 1 or is_arithmetic(spec) is not None:
        # chordal graphs are perfect
        return structure.Verdict("perfect").to_dict()

    def berge() -> structure.Verdict:
        g = to_dense(spec, budget.max_vertices)
        return structure.Verdict("perfect" if oracle.is_berge(g, budget) else "not-perfect", "oracle")

    return _verdict(berge)


def analyze(spec: ToeplitzSpec, budget: Optional[oracle.OracleBudget] = None) -> dict:
    """Everything the library can say about one graph, as a JSON-ready dict."""
    budget = budget if budget is not None else oracle.OracleBudget()
    profile = degrees.degree_profile(spec)
    step = is_arithmetic(spec)
    report: dict[str, Any] = {
        "spec": format_spec(spec),
        "n": spec.n,
        "offsets": list(spec.offsets),
        "k": spec.k,
        "arithmetic_step": step,
        "degrees": list(profile),
        "degree_sequence": sorted(profile, reverse=True),
        "regular": degrees.is_regular(spec),
        "circulant": degrees.is_circulant(spec),
        "clique_number": {"value": cliques.clique_number(spec), "source": "closed-form"},
        "maximum_clique": list(cliques.maximum_clique(spec)),
        "triangle_free": cliques.is_triangle_free(spec),
        "components": components(spec).as_lists(),
        "chordal": _verdict(lambda: structure.chordality_verdict(spec, budget)),
        "interval": _verdict(lambda: structure.is_interval(spec, budget)),
        "perfect": _perfectness(spec, budget),
        "realization": degrees.realization_report(profile).to_dict(),
    }
    if spec.k == 2:
        t1, t2 = spec.offsets
        report["odd_hole_free"] = _verdict(lambda: structure.odd_hole_free_verdict_k2(spec, budget))
        report["weakly_perfect"] = _verdict(lambda: structure.weakly_perfect_verdict_k2(spec, budget))
        if spec.n >= t1 + t2 and t2 != 2 * t1:
            report["hole"] = structure.construct_hole_k2(spec).to_json()
    if step is not None:
        report["edge_clique_cover"] = {
            "number": cliques.edge_clique_cover_number_arith(spec),
            "cover": cliques.edge_clique_cover_arith(spec).to_dict(),
        }
        vcover = cliques.vertex_clique_cover_arith(spec)
        number = None if vcover.bound_only else cliques.vertex_clique_cover_number_arith(spec)
        report["vertex_clique_cover"] = {"number": number, "cover": vcover.to_dict()}
        report["interval_model"] = structure.interval_model(spec).to_dict()
    return report


# ------------------------------------------------------------------ commands

def cmd_analyze(args: argparse.Namespace) -> int:
    spec = read_spec(args.spec)
    print(json.dumps(analyze(spec, _budget(args)), indent=2))
    return EXIT_OK


def _parse_sequence(text: str) -> list[int]:
    try:
        seq = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"sequence must be a JSON array: {exc}") from None
    if not isinstance(seq, list) or not seq or not all(isinstance(d, int) and not isinstance(d, bool) for d in seq):
        raise UsageError("sequence must be a non-empty JSON array of integers")
    return seq


def cmd_realize(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.sequence)
    outcome = degrees.search_arrangement(seq)
    if outcome.realizable:
        print(format_spec(outcome.spec))
        if args.verbose:
            print(f"arrangement: {json.dumps(list(outcome.arrangement))}")
        return EXIT_OK
    pruned = ", ".join(f"({c}) x{outcome.pruned[c]}" for c in sorted(outcome.pruned)) or "none"
    print(f"not realizable: exhausted all arrangements; pruned by conditions {pruned}")
    return EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    config = sweep.SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        k_min=args.k_min,
        k_max=args.k_max,
        family=args.family,
        budget=_budget(args),
        jobs=args.jobs,
        theorems=args.theorem,
        random_sequences=args.random_sequences,
        seed=args.seed,
    )
    if args.out == "-":
        writer = sweep.RecordWriter(sys.stdout, args.format, timing=not args.no_timing)
        summary = sweep.run_sweep(config, writer)
        print(summary.table(), file=sys.stderr)
    elif args.out:
        with open(args.out, "w", newline="") as fh:
            summary = sweep.run_sweep(config, sweep.RecordWriter(fh, args.format, timing=not args.no_timing))
        print(summary.table())
    else:
        summary = sweep.run_sweep(config)
        print(summary.table())
    return EXIT_FAIL if summary.mismatches else EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    text = EXPORTERS[args.format](read_spec(args.spec))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_theorems(args: argparse.Namespace) -> int:
    for t in sweep.THEOREMS:
        print(f"{t.theorem_id:<26} {t.module:<10} {t.description}")
    print(f"{sweep.SEQUENCE_THEOREM_ID:<26} {'degrees':<10} sequence search agrees with enumeration")
    return EXIT_OK


def _budget(args: argparse.Namespace) -> oracle.OracleBudget:
    if args.cap is None:
        return oracle.OracleBudget()
    return oracle.OracleBudget(max_vertices=args.cap)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toeplitz", description="Analyze and verify finite Toeplitz graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_cap(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cap", type=_positive, default=None,
                       help="oracle vertex cap (default: $TOEPLITZ_ORACLE_CAP or 14)")

    p = sub.add_parser("analyze", help="JSON report for one graph")
    p.add_argument("spec", help='"n: t1,t2,..." or a JSON object from export')
    with_cap(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("realize", help="Toeplitz graph with a given degree sequence")
    p.add_argument("sequence", help="non-increasing JSON integer array")
    p.add_argument("-v", "--verbose", action="store_true", help="also print the arrangement")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="closed forms versus brute force over all graphs in range")
    p.add_argument("--n-min", type=_positive, default=2)
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--k-min", type=_positive, default=1)
    p.add_argument("--k-max", type=_positive, default=None)
    p.add_argument("--family", choices=sweep.FAMILIES, default="all")
    p.add_argument("--theorem", action="append", default=None, metavar="ID",
                   help="restrict to these theorem ids (repeatable; see 'theorems')")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", default=None, help="record file, or - for stdout")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times so output is byte-reproducible")
    p.add_argument("--random-sequences", type=int, default=100,
                   help="random non-realizable sequences per n")
    p.add_argument("--seed", type=int, default=0)
    with_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a graph as dot, matrix or json")
    p.add_argument("spec")
    p.add_argument("format", choices=sorted(EXPORTERS))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("theorems", help="list verification theorem ids")
    p.set_defaults(func=cmd_theorems)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"toeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ToeplitzError as exc:
        print(f"toeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"toeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
