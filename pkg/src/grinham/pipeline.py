"""The cycle-deletion Hamiltonicity method, end to end.

Steps S1-S9: minimum cycle basis, order histogram, |P| screen, Grinberg count
vectors, then for each count vector a serial deletion run over candidate
cycles with one boundary edge. A Hamiltonian verdict is only returned with a
cycle that has been checked against the graph.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, fields

from .cyclespace import BasisError, CycleBasis, gf2_sum, horton_mcb, render_basis
from .graph import Graph, GraphError, norm_edge, parse_graph, render_graph, validate
from .grinberg import DEFAULT_SOLUTION_CAP, enumerate_count_solutions, grinberg_rhs
from .removability import (
    RemovalError,
    boundary_edges,
    build_c_set,
    check_dismantlable,
    check_removable_candidate,
    classify_vertices,
    compute_r_map,
    is_ck_candidate,
    k_vertices,
    p_violations,
    remove_cycle,
)

HAMILTONIAN = "Hamiltonian"
NOT_HAMILTONIAN = "NotHamiltonian"
METHOD_INCOMPLETE = "MethodIncomplete"

REASONS = ("NoSolution", "PConstraint", "CKConstraint", "SetMismatch", "DegreeOrConnectivity")
_UNFINISHED_REASON = {"p-constraint": "PConstraint", "ck-constraint": "CKConstraint", "no-candidate": "SetMismatch"}


@dataclass
class SolverConfig:
    attempt_cap: int = 64
    solution_cap: int = DEFAULT_SOLUTION_CAP
    undo_limit: int = 0
    oracle_budget: int = 2_000_000
    workers: int = 1
    seed: int = 0

    @classmethod
    def from_mapping(cls, values: dict) -> "SolverConfig":
        known = {f.name: f.type for f in fields(cls)}
        unknown = set(values) - set(known)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**{k: int(v) for k, v in values.items()})


def parse_config(text: str) -> SolverConfig:
    """Flat ``key = value`` lines (``key: value`` also accepted); '#' starts a comment."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for sep in ("=", ":"):
            if sep in line:
                key, value = line.split(sep, 1)
                break
        else:
            raise ValueError(f"config line {lineno}: expected key = value")
        values[key.strip()] = value.strip()
    return SolverConfig.from_mapping(values)


@dataclass
class Verdict:
    outcome: str
    reason: str | None = None
    cycle: tuple[int, ...] | None = None
    detail: str | None = None
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "reason": self.reason,
            "cycle": list(self.cycle) if self.cycle else None,
            "detail": self.detail,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @property
    def is_hamiltonian(self) -> bool:
        return self.outcome == HAMILTONIAN


@dataclass
class SolverTrace:
    graph: Graph
    config: SolverConfig
    steps: list[dict] = field(default_factory=list)
    deletions: list[list[int]] = field(default_factory=list)
    truncation: dict = field(default_factory=lambda: {"solutions": False, "attempts": False})
    verdict: Verdict | None = None

    def step(self, step: str, decision: str, rule: str | None = None, state=None, **extra):
        rec = {"step": step, "decision": decision}
        if rule is not None:
            rec["rule"] = rule
        if state is not None:
            rec["digest"] = state_digest(*state)
        rec.update(extra)
        self.steps.append(rec)

    def to_jsonl(self) -> str:
        dump = lambda obj: json.dumps(obj, sort_keys=True, separators=(",", ":"))  # noqa: E731
        lines = [dump({"type": "header", "graph": render_graph(self.graph), "config": asdict(self.config)})]
        lines.extend(dump({"type": "step", **s}) for s in self.steps)
        lines.append(dump({"type": "deletions", "cycles": self.deletions, "truncation": self.truncation}))
        if self.verdict is not None:
            lines.append(dump({"type": "verdict", **self.verdict.to_dict()}))
        return "\n".join(lines) + "\n"


def state_digest(basis, g: Graph) -> str:
    h = hashlib.sha256()
    h.update(repr(g.edges).encode())
    h.update(repr(sorted(c.sort_key for c in basis)).encode())
    return h.hexdigest()[:16]


def validate_hamiltonian(g: Graph, cycle) -> bool:
    seq = list(cycle or ())
    if len(seq) != g.vertex_count or sorted(seq) != list(g.vertices):
        return False
    if g.vertex_count < 3:
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def extract_hamiltonian(remaining) -> tuple[int, ...] | None:
    _, seq = gf2_sum(remaining)
    return seq


@dataclass
class OpsResult:
    finished: bool
    reason: str
    basis: CycleBasis
    graph: Graph
    deletions: list = field(default_factory=list)


class _Budget:
    def __init__(self, undo: int):
        self.undo = undo


def operations_under_solutions(basis: CycleBasis, target: dict[int, int], g: Graph,
                               trace: SolverTrace | None = None, undo_limit: int = 0) -> OpsResult:
    """Delete co-solution cycles one at a time until ``target`` cycles per order remain.

    Candidates are cycles with exactly one boundary edge, tried smallest order
    first and then by sorted vertex list. A rejected candidate stays rejected
    until the next deletion changes the state. With ``undo_limit == 0`` a
    deletion is never undone.
    """
    hist = basis.order_histogram
    quota = {order: hist[order] - target.get(order, 0) for order in hist}
    if any(q < 0 for q in quota.values()):
        raise ValueError("target exceeds the basis histogram")
    if trace is None:
        trace = SolverTrace(g, SolverConfig())
    return _ops(basis, g, quota, frozenset(), trace, _Budget(undo_limit), [])


def _ops(basis, g, quota, pinned, trace, budget, deleted) -> OpsResult:
    rmap = compute_r_map(basis, g)
    vclass = classify_vertices(g, rmap)
    state = (basis, g)
    if deleted:
        bad = p_violations(g, rmap)
        if bad:
            trace.step("S3", "unfinished", f"p>=3@{bad[0]}", state)
            return OpsResult(False, "p-constraint", basis, g, deleted)

    # S5/S6: anchored C_K candidates
    pinned = set(pinned)
    for k in k_vertices(g, vclass):
        for c in sorted(basis.cycles):
            if c in pinned or k not in c.vertices or not is_ck_candidate(c, rmap, vclass):
                continue
            verdict = check_dismantlable(build_c_set(c, basis, vclass, g))
            if verdict:
                trace.step("S6", "dismantlable", verdict.rule, cycle=list(c.sequence), anchor=k)
            else:
                pinned.add(c)
                trace.step("S6", "pinned-to-solution", verdict.rule, cycle=list(c.sequence), anchor=k)

    if sum(quota.values()) == 0:
        trace.step("S9", "finished", state=state)
        return OpsResult(True, "finished", basis, g, deleted)

    # S7/S8
    candidates = sorted(
        (c for c in basis.cycles
         if c not in pinned and quota[c.order] > 0 and len(boundary_edges(c, rmap)) == 1),
        key=lambda c: (c.order, tuple(sorted(c.vertices))),
    )
    ck_blocked = bool(pinned)
    failure = None
    for c in candidates:
        verdict = check_removable_candidate(c, basis, rmap, g)
        trace.step("S8", "removable" if verdict else "irremovable", verdict.rule, cycle=list(c.sequence))
        if not verdict:
            ck_blocked |= verdict.rule.startswith("s1")
            continue
        b2, g2 = remove_cycle(basis, c, g, check=False)
        trace.step("S8", "deleted", state=(b2, g2), cycle=list(c.sequence),
                   vertices_before=g.vertex_count, vertices_after=g2.vertex_count,
                   edges_before=g.edge_count, edges_after=g2.edge_count)
        q2 = dict(quota)
        q2[c.order] -= 1
        result = _ops(b2, g2, q2, frozenset(pinned), trace, budget, deleted + [c])
        if result.finished:
            return result
        if budget.undo <= 0:
            return result
        budget.undo -= 1
        failure = failure or result
        trace.step("S8", "undo", cycle=list(c.sequence))
    if failure is not None:
        return failure
    reason = "ck-constraint" if ck_blocked else "no-candidate"
    trace.step("S7", "unfinished", reason, state)
    return OpsResult(False, reason, basis, g, deleted)


def solve(g: Graph, config: SolverConfig | None = None) -> tuple[Verdict, SolverTrace]:
    config = config or SolverConfig()
    trace = SolverTrace(g, config)
    verdict = _solve(g, config, trace)
    if verdict.outcome == HAMILTONIAN and not validate_hamiltonian(g, verdict.cycle):
        verdict = Verdict(METHOD_INCOMPLETE, detail="certificate failed validation", stats=verdict.stats)
    trace.verdict = verdict
    return verdict, trace


def _solve(g: Graph, config: SolverConfig, trace: SolverTrace) -> Verdict:
    report = validate(g)
    if not report.ok:
        trace.step("S0", "rejected", "; ".join(report.warnings))
        return Verdict(NOT_HAMILTONIAN, "DegreeOrConnectivity", detail="; ".join(report.warnings))
    stats: dict = {}
    try:
        basis = horton_mcb(g)
        trace.step("S1", "basis", state=(basis, g), cycles=[list(c.sequence) for c in basis])
        hist = basis.order_histogram
        stats.update(basis_size=len(basis), histogram={str(k): v for k, v in hist.items()},
                     rhs=grinberg_rhs(g))
        trace.step("S2", "histogram", histogram=stats["histogram"])

        rmap = compute_r_map(basis, g)
        bad = p_violations(g, rmap)
        if bad:
            trace.step("S3", "not-hamiltonian", f"p>=3@{bad[0]}")
            return Verdict(NOT_HAMILTONIAN, "PConstraint", detail=f"|P|>=3 at vertex {bad[0]}", stats=stats)
        trace.step("S3", "pass")

        sols = enumerate_count_solutions(hist, grinberg_rhs(g), cap=config.solution_cap)
        trace.truncation["solutions"] = sols.truncated
        stats.update(solutions=len(sols), solutions_truncated=sols.truncated)
        if not len(sols):
            trace.step("S4", "not-hamiltonian", "no-solution")
            return Verdict(NOT_HAMILTONIAN, "NoSolution", stats=stats)
        trace.step("S4", "solutions", count=len(sols))

        first_reason = None
        uncertified = 0
        attempts = 0
        for target in sols:
            if attempts >= config.attempt_cap:
                trace.truncation["attempts"] = True
                break
            attempts += 1
            trace.step("S4", "attempt", target={str(k): v for k, v in target.items()})
            result = operations_under_solutions(basis, target, g, trace, config.undo_limit)
            if not result.finished:
                first_reason = first_reason or result.reason
                continue
            left = result.basis.order_histogram
            if any(left.get(k, 0) != v for k, v in target.items()):
                raise AssertionError("finished run left a histogram different from the target")
            seq = extract_hamiltonian(result.basis.cycles)
            if seq is not None and validate_hamiltonian(g, seq):
                trace.deletions = [list(c.sequence) for c in result.deletions]
                stats.update(attempts=attempts, deletions=len(result.deletions))
                trace.step("S9", "hamiltonian", cycle=list(seq))
                return Verdict(HAMILTONIAN, cycle=seq, stats=stats)
            uncertified += 1
            trace.step("S9", "uncertified", "remaining cycles do not sum to a Hamiltonian cycle")
        stats.update(attempts=attempts)
        if uncertified:
            return Verdict(METHOD_INCOMPLETE, detail="operations finished without a Hamiltonian certificate",
                           stats=stats)
        if trace.truncation["attempts"] or sols.truncated:
            return Verdict(METHOD_INCOMPLETE, detail="search truncated by attempt or solution cap",
                           stats=stats)
        return Verdict(NOT_HAMILTONIAN, _UNFINISHED_REASON[first_reason], stats=stats)
    except (AssertionError, RemovalError, BasisError, GraphError, ValueError) as exc:
        trace.step("error", "method-incomplete", type(exc).__name__)
        return Verdict(METHOD_INCOMPLETE, detail=f"{type(exc).__name__}: {exc}", stats=stats)


def replay_trace(text: str) -> bool:
    """Re-run the solve recorded in a JSON-lines trace and compare it byte for byte."""
    header = json.loads(text.splitlines()[0])
    g = parse_graph(header["graph"])
    config = SolverConfig.from_mapping(header["config"])
    _, trace = solve(g, config)
    return trace.to_jsonl() == text


__all__ = [
    "SolverConfig", "Verdict", "SolverTrace", "solve", "operations_under_solutions",
    "extract_hamiltonian", "validate_hamiltonian", "parse_config", "replay_trace",
    "norm_edge",
]
