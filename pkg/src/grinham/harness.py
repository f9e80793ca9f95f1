"""Corpus generation and method-versus-oracle agreement reports."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .graph import Graph, generate_named, random_gnp
from .oracle import BUDGET, brute_force_hamiltonian
from .pipeline import HAMILTONIAN, METHOD_INCOMPLETE, NOT_HAMILTONIAN, SolverConfig, solve

NAMED_SET = (
    ("C5", "cycle", (5,)), ("C6", "cycle", (6,)), ("C7", "cycle", (7,)), ("C8", "cycle", (8,)),
    ("K4", "complete", (4,)), ("K5", "complete", (5,)),
    ("petersen", "petersen", ()), ("herschel", "herschel", ()),
    ("grid3x4", "grid", (3, 4)),
)
MAX_EXHAUSTIVE_N = 7


class CorpusSpecError(ValueError):
    pass


@dataclass
class Corpus:
    graphs: list[tuple[str, Graph]] = field(default_factory=list)
    filtered: int = 0

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _accept(g: Graph) -> bool:
    # bridged graphs stay in: the solver rejects them itself
    return g.is_connected() and min(g.degree(v) for v in g.vertices) >= 2


def named_corpus() -> Corpus:
    return Corpus([(gid, generate_named(name, params)) for gid, name, params in NAMED_SET])


def random_corpus(n_min: int, n_max: int, p: float, count: int, seed: int) -> Corpus:
    """``count`` connected G(n, p) graphs with minimum degree >= 2, ``n`` uniform in range.

    Draws rejected for minimum degree are counted in ``filtered``.
    """
    if not (2 <= n_min <= n_max) or not (0 < p <= 1) or count < 0:
        raise CorpusSpecError("random corpus needs 2 <= n_min <= n_max, 0 < p <= 1, count >= 0")
    rng = random.Random(seed)
    out = Corpus()
    while len(out.graphs) < count:
        g = random_gnp(rng.randint(n_min, n_max), p, rng)
        if _accept(g):
            out.graphs.append((f"random:{len(out.graphs):04d}", g))
        else:
            out.filtered += 1
    return out


def exhaustive_corpus(n_max: int, n_min: int = 3) -> Corpus:
    """Every labeled connected simple graph on ``n_min..n_max`` vertices with minimum degree >= 2.

    Graph ids carry the edge-subset mask over the lexicographic pair list.
    """
    if n_max > MAX_EXHAUSTIVE_N:
        raise CorpusSpecError(f"exhaustive generation is capped at n = {MAX_EXHAUSTIVE_N}")
    out = Corpus()
    for n in range(max(n_min, 1), n_max + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            if mask.bit_count() < n:
                out.filtered += 1
                continue
            g = Graph(n, tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1))
            if _accept(g):
                out.graphs.append((f"exhaustive:n{n}:{mask}", g))
            else:
                out.filtered += 1
    return out


def generate_corpus(spec: dict, seed: int = 0) -> Corpus:
    """Build a corpus from a spec document.

    ``spec`` is ``{"parts": [...]}`` (or a single part) where each part is one of
    ``{"kind": "named"}``, ``{"kind": "random", "n_min", "n_max", "p", "count"}``
    or ``{"kind": "exhaustive_labeled", "n_max"[, "n_min"]}``. A top-level ``seed``
    key overrides the argument.
    """
    seed = spec.get("seed", seed)
    parts = spec.get("parts", [spec])
    out = Corpus()
    for part in parts:
        kind = part.get("kind")
        if kind == "named":
            sub = named_corpus()
        elif kind == "random":
            try:
                sub = random_corpus(int(part["n_min"]), int(part["n_max"]), float(part["p"]),
                                    int(part["count"]), int(part.get("seed", seed)))
            except KeyError as exc:
                raise CorpusSpecError(f"random part is missing {exc}") from None
        elif kind == "exhaustive_labeled":
            if "n_max" not in part:
                raise CorpusSpecError("exhaustive_labeled part needs n_max")
            sub = exhaustive_corpus(int(part["n_max"]), int(part.get("n_min", 3)))
        else:
            raise CorpusSpecError(f"unknown corpus part kind {kind!r}")
        out.graphs.extend(sub.graphs)
        out.filtered += sub.filtered
    ids = [gid for gid, _ in out.graphs]
    if len(set(ids)) != len(ids):
        raise CorpusSpecError("corpus parts produced duplicate graph ids")
    return out


def _method_class(outcome: str) -> str:
    return {HAMILTONIAN: "Ham", NOT_HAMILTONIAN: "NonHam"}.get(outcome, "Incomplete")


def _trace_name(gid: str) -> str:
    return gid.replace(":", "_") + ".jsonl"


def _run_one(item):
    gid, g, config = item
    try:
        verdict, trace = solve(g, config)
    except Exception as exc:  # a crash is a row, never an abort
        return {"id": gid, "error": f"{type(exc).__name__}: {exc}"}, None
    oracle = brute_force_hamiltonian(g, config.oracle_budget)
    deletions = [s for s in trace.steps if s.get("decision") == "deleted"]
    violations = sum(1 for s in deletions
                     if s["vertices_after"] != s["vertices_before"] or s["edges_after"] != s["edges_before"] - 1)
    row = {
        "id": gid,
        "n": g.vertex_count,
        "m": g.edge_count,
        "method": verdict.outcome,
        "reason": verdict.reason,
        "method_cycle": list(verdict.cycle) if verdict.cycle else None,
        "oracle": oracle.status,
        "oracle_cycle": list(oracle.cycle) if oracle.cycle else None,
        "work": [len(trace.steps), oracle.expansions],
        "deletions": len(deletions),
        "conservation_violations": violations,
    }
    return row, trace.to_jsonl()


@dataclass
class AgreementReport:
    rows: list[dict] = field(default_factory=list)
    matrix: dict = field(default_factory=dict)
    oracle_inconclusive: int = 0
    errors: int = 0
    filtered: int = 0

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "matrix": self.matrix,
            "oracle_inconclusive": self.oracle_inconclusive,
            "errors": self.errors,
            "filtered": self.filtered,
            "corpus_size": len(self.rows),
            "deletions": sum(r.get("deletions", 0) for r in self.rows),
            "conservation_violations": sum(r.get("conservation_violations", 0) for r in self.rows),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    def cell(self, method: str, oracle: str) -> int:
        return self.matrix[method][oracle]


def _empty_matrix() -> dict:
    return {m: {"Ham": 0, "NonHam": 0} for m in ("Ham", "NonHam", "Incomplete")}


def run_corpus(corpus, config: SolverConfig | None = None, trace_dir=None) -> AgreementReport:
    """Run the method and the oracle on every graph and tabulate agreement.

    Rows that disagree, or where the method is incomplete, get their solver
    trace written to ``trace_dir`` and referenced from the row. Rows come back
    in corpus order regardless of ``config.workers``.
    """
    config = config or SolverConfig()
    graphs = list(corpus)
    items = [(gid, g, config) for gid, g in graphs]
    if config.workers > 1 and len(items) > 1:
        from multiprocessing import Pool

        with Pool(config.workers) as pool:
            results = pool.map(_run_one, items, chunksize=max(1, len(items) // (config.workers * 8)))
    else:
        results = [_run_one(item) for item in items]

    report = AgreementReport(matrix=_empty_matrix(), filtered=getattr(corpus, "filtered", 0))
    trace_dir = Path(trace_dir) if trace_dir is not None else None
    for row, trace_text in results:
        if "error" in row:
            report.errors += 1
            report.rows.append(row)
            continue
        method = _method_class(row["method"])
        if row["oracle"] == BUDGET:
            row["agree"] = None
            report.oracle_inconclusive += 1
        else:
            oracle = "Ham" if row["oracle"] == "hamiltonian" else "NonHam"
            row["agree"] = method == oracle
            report.matrix[method][oracle] += 1
        if (row["agree"] is False or row["method"] == METHOD_INCOMPLETE) and trace_dir is not None:
            trace_dir.mkdir(parents=True, exist_ok=True)
            name = _trace_name(row["id"])
            (trace_dir / name).write_text(trace_text)
            row["trace"] = name
        report.rows.append(row)
    return report
