"""Independent Hamiltonicity oracles: pruned backtracking and subset DP."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

FOUND = "hamiltonian"
ABSENT = "absent"
BUDGET = "budget"


@dataclass(frozen=True)
class OracleResult:
    status: str
    cycle: tuple[int, ...] | None
    expansions: int

    @property
    def hamiltonian(self) -> bool | None:
        return {FOUND: True, ABSENT: False}.get(self.status)


class _OutOfBudget(Exception):
    pass


def _masks(g: Graph) -> list[int]:
    adj = [0] * g.vertex_count
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_hamiltonian(g: Graph, budget: int = 2_000_000) -> OracleResult:
    """Backtracking search for a Hamiltonian cycle.

    Starts at a minimum-degree vertex and extends the path through unvisited
    neighbours of lowest degree first. A branch is cut when some unvisited
    vertex has fewer than two usable neighbours, and a move is forced when an
    unvisited vertex can only be reached from the current end. ``budget``
    caps node expansions; running out is reported as ``BUDGET``, never as absence.
    """
    n = g.vertex_count
    if n < 3 or g.edge_count < n:
        return OracleResult(ABSENT, None, 0)
    adj = _masks(g)
    deg = [m.bit_count() for m in adj]
    if min(deg) < 2:
        return OracleResult(ABSENT, None, 0)
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (deg[v], v))
    path = [start]
    expansions = 0

    def rec(cur: int, visited: int) -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise _OutOfBudget
        if visited == full:
            return bool(adj[cur] >> start & 1)
        unvisited = full & ~visited
        ends = (1 << cur) | (1 << start)
        usable = unvisited | ends
        forced = -1
        for v in _bits(unvisited):
            k = (adj[v] & usable).bit_count()
            if k < 2:
                return False
            if k == 2 and cur != start and adj[v] >> cur & 1:
                if forced >= 0:
                    return False
                forced = v
        if cur != start and not adj[start] & (unvisited | (1 << cur)):
            return False
        if forced >= 0:
            nexts = [forced]
        else:
            nexts = sorted(_bits(adj[cur] & unvisited), key=lambda v: (deg[v], v))
        for w in nexts:
            path.append(w)
            if rec(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    try:
        found = rec(start, 1 << start)
    except _OutOfBudget:
        return OracleResult(BUDGET, None, expansions)
    if not found:
        return OracleResult(ABSENT, None, expansions)
    return OracleResult(FOUND, _canonical(tuple(v + 1 for v in path)), expansions)


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def dp_hamiltonian(g: Graph, max_vertices: int = 16) -> OracleResult:
    """Held-Karp style reachability over vertex subsets.

    ``ends[mask]`` is the bitset of vertices where a path from vertex 1 covering
    exactly ``mask`` can end.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise ValueError(f"subset DP limited to {max_vertices} vertices")
    if n < 3:
        return OracleResult(ABSENT, None, 0)
    adj = _masks(g)
    size = 1 << n
    ends = [0] * size
    ends[1] = 1
    work = 0
    for mask in range(1, size, 2):
        e = ends[mask]
        if not e:
            continue
        for v in _bits(e):
            work += 1
            for w in _bits(adj[v] & ~mask):
                ends[mask | (1 << w)] |= 1 << w
    full = size - 1
    closing = ends[full] & adj[0]
    if not closing:
        return OracleResult(ABSENT, None, work)
    # walk back from the smallest closing end
    v = (closing & -closing).bit_length() - 1
    mask = full
    rev = [v]
    while mask != 1:
        prev_mask = mask & ~(1 << v)
        u = next(u for u in _bits(ends[prev_mask] & adj[v]))
        rev.append(u)
        mask, v = prev_mask, u
    return OracleResult(FOUND, _canonical(tuple(x + 1 for x in reversed(rev))), work)
