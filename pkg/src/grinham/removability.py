"""Edge multiplicities, boundary structure and removability of basis cycles.

``r(e)`` counts the basis cycles through edge ``e``. Edges with ``r == 1`` are
boundary edges. Deleting a cycle with exactly one boundary edge drops that one
edge from the graph and keeps every vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .cyclespace import Cycle, CycleBasis, verify_basis
from .graph import Graph, norm_edge
from .grinberg import count_realizations, enumerate_count_solutions, realizations

BOUNDARY = "boundary"
NON_BOUNDARY = "non_boundary"
INNER = "inner"


class RemovalError(ValueError):
    """A cycle was offered for deletion without meeting the deletion contract."""


def compute_r_map(basis, g: Graph) -> dict:
    r = Counter()
    for c in basis:
        for e in c.edges:
            if e not in g.edge_index:
                raise ValueError(f"basis edge {e} is not an edge of the graph")
            r[e] += 1
    missing = [e for e in g.edges if e not in r]
    if missing:
        raise ValueError(f"basis does not cover edges {missing[:5]}")
    return {e: r[e] for e in g.edges}


def _incident(g: Graph, v: int):
    return [norm_edge(v, w) for w in g.adjacency[v]]


def classify_vertices(g: Graph, rmap: dict) -> dict[int, str]:
    """Boundary: exactly two incident edges with r == 1. Inner: every incident edge has r == 2."""
    out = {}
    for v in g.vertices:
        rs = [rmap[e] for e in _incident(g, v)]
        if rs.count(1) == 2:
            out[v] = BOUNDARY
        elif rs and all(x == 2 for x in rs):
            out[v] = INNER
        else:
            out[v] = NON_BOUNDARY
    return out


class CycleClass(str, Enum):
    REMOVABLE = "removable"
    IRREMOVABLE = "irremovable"
    UNCERTAIN = "uncertain"


@dataclass(frozen=True)
class CycleClassification:
    kind: CycleClass
    case: int | None
    boundary_edge_count: int

    @property
    def label(self) -> str:
        return self.kind.value if self.case is None else f"{self.kind.value}:case{self.case}"


def boundary_edges(c: Cycle, rmap: dict) -> list:
    return sorted(e for e in c.edges if rmap[e] == 1)


def classify_cycle(c: Cycle, rmap: dict, vclass: dict[int, str], basis) -> CycleClassification:
    if c not in set(basis):
        raise ValueError(f"{c!r} is not in the basis")
    bedges = boundary_edges(c, rmap)
    b = len(bedges)
    if b >= 2:
        adjacent = any(set(e) & set(f) for i, e in enumerate(bedges) for f in bedges[i + 1:])
        return CycleClassification(CycleClass.IRREMOVABLE, 1 if adjacent else 2, b)
    if b == 1:
        non_inner = sum(1 for v in c.vertices if vclass[v] != INNER)
        if non_inner >= 3:
            return CycleClassification(CycleClass.IRREMOVABLE, 3, b)
        return CycleClassification(CycleClass.REMOVABLE, None, b)
    on_boundary = [v for v in c.vertices if vclass[v] == BOUNDARY]
    if not on_boundary:
        return CycleClassification(CycleClass.UNCERTAIN, 4, 0)
    if len(on_boundary) == len(c.vertices):
        return CycleClassification(CycleClass.IRREMOVABLE, 5, 0)
    return CycleClassification(CycleClass.UNCERTAIN, 5, 0)


def forced_edge_count(v: int, g: Graph, rmap: dict) -> int:
    """|P| at ``v``: incident edges with r == 1 or with an endpoint of degree 2."""
    n = 0
    for w in g.adjacency[v]:
        if rmap[norm_edge(v, w)] == 1 or g.degree(v) == 2 or g.degree(w) == 2:
            n += 1
    return n


def p_violations(g: Graph, rmap: dict, vertices=None) -> list[int]:
    """Vertices of degree >= 3 with |P| >= 3."""
    vs = g.vertices if vertices is None else sorted(vertices)
    return [v for v in vs if g.degree(v) >= 3 and forced_edge_count(v, g, rmap) >= 3]


class PScreen(str, Enum):
    NOT_HAMILTONIAN_BY_P = "NotHamiltonianByP"
    PASS = "Pass"


def screen_p(g: Graph, rmap: dict) -> PScreen:
    return PScreen.NOT_HAMILTONIAN_BY_P if p_violations(g, rmap) else PScreen.PASS


def k_vertices(g: Graph, vclass: dict[int, str]) -> list[int]:
    """Anchor vertices K: boundary vertices of degree >= 4."""
    return [v for v in g.vertices if vclass[v] == BOUNDARY and g.degree(v) >= 4]


def is_ck_candidate(c: Cycle, rmap: dict, vclass: dict[int, str]) -> bool:
    """Boundary vertices but no boundary edges."""
    return not boundary_edges(c, rmap) and any(vclass[v] == BOUNDARY for v in c.vertices)


@dataclass(frozen=True)
class CSet:
    center: Cycle
    members: frozenset
    anchor_vertex: int | None = None


def build_c_set(center: Cycle, basis, vclass: dict[int, str] | None = None, g: Graph | None = None) -> CSet:
    cycles = list(basis)
    if center not in cycles:
        raise ValueError(f"{center!r} is not in the basis")
    members = frozenset(c for c in cycles if c.vertices & center.vertices)
    anchor = None
    if vclass is not None:
        g = g if g is not None else getattr(basis, "graph", None)
        ks = [v for v in sorted(center.vertices)
              if vclass.get(v) == BOUNDARY and (g is None or g.degree(v) >= 4)]
        anchor = ks[0] if ks else None
    return CSet(center, members, anchor)


@dataclass(frozen=True)
class Dismantling:
    dismantlable: bool
    rule: str

    def __bool__(self) -> bool:
        return self.dismantlable


def _local_r(cycles) -> Counter:
    r = Counter()
    for c in cycles:
        r.update(c.edges)
    return r


def check_dismantlable(cs: CSet) -> Dismantling:
    """Decide whether the C set's center can be dismantled.

    The C set is treated as a basis of its own union subgraph. Without a unique
    realized Grinberg solution, or when the center sits in that solution, the
    center is dismantlable. Otherwise removable members (one local boundary
    edge) are deleted until none remain, and the center is dismantlable iff the
    number of local boundary edges left equals the member count.
    """
    members = sorted(cs.members)
    n_local = len({v for c in members for v in c.vertices})
    hist = Counter(c.order for c in members)
    sols = enumerate_count_solutions(dict(hist), n_local - 2)
    total = sum(count_realizations(hist, s) for s in sols)
    if total != 1 or sols.truncated:
        return Dismantling(True, f"no-unique-solution:{total}")
    (solution,) = realizations(members, sols[0])
    if cs.center in solution:
        return Dismantling(True, "center-in-solution")
    remaining = list(members)
    changed = True
    while changed:
        changed = False
        r = _local_r(remaining)
        for c in remaining:
            if c != cs.center and sum(1 for e in c.edges if r[e] == 1) == 1:
                remaining.remove(c)
                changed = True
                break
    r = _local_r(remaining)
    ones = sum(1 for e, k in r.items() if k == 1)
    if ones == len(members):
        return Dismantling(True, f"boundary-count-match:{ones}")
    return Dismantling(False, f"boundary-count-mismatch:{ones}!={len(members)}")


def is_ck(c: Cycle, basis, rmap: dict, vclass: dict[int, str]) -> bool:
    if boundary_edges(c, rmap):
        return False
    return not check_dismantlable(build_c_set(c, basis, vclass))


@dataclass(frozen=True)
class Removability:
    removable: bool
    rule: str

    def __bool__(self) -> bool:
        return self.removable


def common_vertices(c: Cycle, rmap: dict) -> list[int]:
    """Vertices of ``c`` off its single boundary edge: where ``c`` is glued to its neighbours."""
    (e,) = boundary_edges(c, rmap)
    return sorted(c.vertices - set(e))


def check_removable_candidate(c: Cycle, basis, rmap: dict, g: Graph) -> Removability:
    """Removability checks for a cycle with exactly one boundary edge.

    S1 rejects when an anchor vertex of ``c`` carries a C_K candidate that is not
    dismantlable. S2 and S3 inspect the common vertices before deletion: two or
    more boundary edges (S2), any boundary edge or any edge with r >= 3 (S3).
    S4 rejects when the deletion would leave a vertex of ``c`` with |P| >= 3.
    """
    bedges = boundary_edges(c, rmap)
    if len(bedges) != 1:
        raise RemovalError(f"{c!r} has {len(bedges)} boundary edges; candidates need exactly one")
    cycles = list(basis)
    vclass = classify_vertices(g, rmap)
    for k in sorted(set(k_vertices(g, vclass)) & c.vertices):
        for other in sorted(cycles):
            if other == c or k not in other.vertices or not is_ck_candidate(other, rmap, vclass):
                continue
            verdict = check_dismantlable(build_c_set(other, cycles, vclass, g))
            if not verdict:
                return Removability(False, f"s1:ck@{k}")
    for v in common_vertices(c, rmap):
        rs = [rmap[e] for e in _incident(g, v)]
        if rs.count(1) >= 2:
            return Removability(False, f"s2@{v}")
        if 1 in rs or any(x >= 3 for x in rs):
            return Removability(False, f"s3@{v}")
    g2 = g.without_edges(bedges)
    r2 = dict(rmap)
    for e in c.edges:
        r2[e] -= 1
    del r2[bedges[0]]
    bad = p_violations(g2, r2, c.vertices)
    if bad:
        return Removability(False, f"s4@{bad[0]}")
    return Removability(True, "removable")


def remove_cycle(basis: CycleBasis, c: Cycle, g: Graph, check: bool = True) -> tuple[CycleBasis, Graph]:
    """Delete ``c`` from the basis and its single boundary edge from the graph."""
    if c not in basis.cycles:
        raise RemovalError(f"{c!r} is not in the basis")
    rmap = compute_r_map(basis, g)
    bedges = boundary_edges(c, rmap)
    if len(bedges) != 1:
        raise RemovalError(f"{c!r} has {len(bedges)} boundary edges; deletion needs exactly one")
    if check:
        verdict = check_removable_candidate(c, basis, rmap, g)
        if not verdict:
            raise RemovalError(f"{c!r} is not removable ({verdict.rule})")
    g2 = g.without_edges(bedges)
    b2 = CycleBasis(g2, tuple(x for x in basis.cycles if x != c))
    if g2.vertex_count != g.vertex_count or g2.edge_count != g.edge_count - 1:
        raise AssertionError("deletion must keep V and drop exactly one edge")
    if not verify_basis(g2, b2):
        raise AssertionError("remaining cycles are no longer a basis of the reduced graph")
    return b2, g2
