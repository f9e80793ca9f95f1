"""Command line entry point: ``grinham {mcb,grinberg,oracle,solve,corpus}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cyclespace import horton_mcb, render_basis
from .graph import GraphError, ParseError, parse_graph, validate
from .grinberg import counts_to_json, enumerate_count_solutions, grinberg_rhs
from .harness import CorpusSpecError, generate_corpus, run_corpus
from .oracle import brute_force_hamiltonian
from .pipeline import SolverConfig, parse_config, solve

EXIT_OK = 0
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return parse_graph(text)
    except (OSError, ParseError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_config(path: str | None) -> SolverConfig:
    if path is None:
        return SolverConfig()
    try:
        return parse_config(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_mcb(args) -> int:
    g = _read_graph(args.graph)
    report = validate(g)
    if not report.ok:
        raise InputError("; ".join(report.warnings))
    basis = horton_mcb(g)
    sys.stdout.write(render_basis(basis, comment=f"minimum cycle basis, weight {basis.weight}"))
    return EXIT_OK


def cmd_grinberg(args) -> int:
    g = _read_graph(args.graph)
    report = validate(g)
    if not report.ok:
        raise InputError("; ".join(report.warnings))
    basis = horton_mcb(g)
    sols = enumerate_count_solutions(basis.order_histogram, grinberg_rhs(g), cap=args.cap)
    print("histogram " + counts_to_json(basis.order_histogram))
    print(f"rhs {grinberg_rhs(g)}")
    print(f"solutions {len(sols)}" + (" (truncated)" if sols.truncated else ""))
    for vec in sols:
        print(counts_to_json(vec))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    res = brute_force_hamiltonian(g, args.budget)
    out = {"status": res.status, "cycle": list(res.cycle) if res.cycle else None, "expansions": res.expansions}
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    verdict, trace = solve(g, _read_config(args.config))
    if args.trace:
        Path(args.trace).write_text(trace.to_jsonl())
    if args.json:
        print(verdict.to_json())
    else:
        line = verdict.outcome
        if verdict.reason:
            line += f" ({verdict.reason})"
        if verdict.cycle:
            line += ": " + "-".join(map(str, verdict.cycle))
        if verdict.detail:
            line += f" [{verdict.detail}]"
        print(line)
    return EXIT_OK


def cmd_corpus(args) -> int:
    config = _read_config(args.config)
    try:
        spec = json.loads(Path(args.spec).read_text(encoding="utf-8"))
        corpus = generate_corpus(spec, seed=config.seed)
    except (OSError, ValueError, CorpusSpecError) as exc:
        raise InputError(f"{args.spec}: {exc}") from None
    report = run_corpus(corpus, config, args.traces)
    Path(args.out).write_text(report.to_json())
    m = report.matrix
    print(f"graphs {len(report.rows)}  oracle-inconclusive {report.oracle_inconclusive}  errors {report.errors}")
    for method in ("Ham", "NonHam", "Incomplete"):
        print(f"method {method:<10} oracle Ham {m[method]['Ham']:>6}  oracle NonHam {m[method]['NonHam']:>6}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grinham", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mcb", help="print the minimum cycle basis")
    s.add_argument("graph")
    s.set_defaults(func=cmd_mcb)

    s = sub.add_parser("grinberg", help="histogram, right-hand side and count-vector solutions")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=10_000)
    s.set_defaults(func=cmd_grinberg)

    s = sub.add_parser("oracle", help="brute-force Hamiltonicity")
    s.add_argument("graph")
    s.add_argument("--budget", type=int, default=2_000_000)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("solve", help="run the cycle-deletion method")
    s.add_argument("graph")
    s.add_argument("--config")
    s.add_argument("--trace", help="write the JSON-lines solver trace here")
    s.add_argument("--json", action="store_true", help="print the verdict as JSON")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("corpus", help="method-versus-oracle agreement over a corpus")
    s.add_argument("spec", help="JSON corpus spec")
    s.add_argument("--out", required=True)
    s.add_argument("--traces", help="directory for disagreement traces")
    s.add_argument("--config")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
