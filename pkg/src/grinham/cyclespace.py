"""GF(2) cycle space of a graph and Horton's minimum cycle basis.

Edge sets are Python ``frozenset`` of normalized ``(min, max)`` pairs. For
elimination they are packed into ``int`` bit vectors, bit ``k`` standing for
``graph.edges[k]`` (lexicographic edge order).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, reduce

from .graph import Edge, Graph, GraphError, norm_edge

EdgeSet = frozenset


class BasisError(ValueError):
    pass


def symmetric_difference(a, b) -> frozenset:
    return frozenset(a) ^ frozenset(b)


def decode_cycle(edges) -> tuple[int, ...] | None:
    """Vertex sequence of ``edges`` if they form one simple cycle, else None.

    The sequence starts at the smallest vertex and leaves towards its smaller
    neighbour, so each cycle has exactly one decoding.
    """
    edges = list(edges)
    if len(edges) < 3:
        return None
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(ns) != 2 for ns in nbrs.values()):
        return None
    start = min(nbrs)
    prev, cur = start, min(nbrs[start])
    seq = [start]
    while cur != start:
        seq.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != len(nbrs):
        return None
    return tuple(seq)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, identified by its edge set."""

    edges: frozenset

    def __post_init__(self):
        edges = frozenset(norm_edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if decode_cycle(edges) is None:
            raise BasisError(f"edge set is not a simple cycle: {sorted(edges)}")

    @classmethod
    def from_vertices(cls, seq) -> "Cycle":
        seq = list(seq)
        return cls(frozenset(norm_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))))

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)

    @property
    def order(self) -> int:
        return len(self.edges)

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        return decode_cycle(self.edges)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.order, tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def __lt__(self, other: "Cycle") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return "Cycle(" + "-".join(map(str, self.sequence)) + ")"


def to_bits(g: Graph, edges) -> int:
    idx = g.edge_index
    bits = 0
    for e in edges:
        bits |= 1 << idx[norm_edge(*e)]
    return bits


def from_bits(g: Graph, bits: int) -> frozenset:
    out = []
    k = 0
    while bits:
        if bits & 1:
            out.append(g.edges[k])
        bits >>= 1
        k += 1
    return frozenset(out)


def gf2_rank(vectors) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        if _reduce(v, pivots):
            rank += 1
    return rank


def _reduce(v: int, pivots: dict[int, int]) -> bool:
    """Reduce ``v`` against ``pivots`` (leading bit -> row); insert if independent."""
    while v:
        top = v.bit_length() - 1
        row = pivots.get(top)
        if row is None:
            pivots[top] = v
            return True
        v ^= row
    return False


def _incidence_key(g: Graph, edges) -> tuple[int, ...]:
    return tuple(sorted(g.edge_index[e] for e in edges))


@dataclass(frozen=True)
class CycleBasis:
    graph: Graph
    cycles: tuple[Cycle, ...]

    @cached_property
    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(c.order for c in self.cycles).items()))

    @property
    def weight(self) -> int:
        return sum(c.order for c in self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def cycle_space_dimension(g: Graph) -> int:
    if not g.is_connected():
        raise GraphError("cycle space dimension formula needs a connected graph")
    return g.edge_count - g.vertex_count + 1


def _bfs_tree(g: Graph, root: int) -> dict[int, int | None]:
    """Shortest-path predecessors; among equidistant parents the smallest label wins."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    pred: dict[int, int | None] = {root: None}
    for v, d in dist.items():
        if d:
            pred[v] = min(u for u in g.adjacency[v] if dist.get(u) == d - 1)
    return pred


def _tree_path(pred, v) -> list[int]:
    path = [v]
    while pred[path[-1]] is not None:
        path.append(pred[path[-1]])
    return path


def horton_candidates(g: Graph) -> list[Cycle]:
    """Horton's candidate set, deduplicated, sorted by weight then incidence vector.

    For every root ``v`` and edge ``(x, y)`` the closed walk
    ``P(v, x) + (x, y) + P(y, v)`` is kept when the two tree paths meet only at ``v``.
    """
    seen: dict[frozenset, Cycle] = {}
    for root in g.vertices:
        pred = _bfs_tree(g, root)
        for x, y in g.edges:
            if x not in pred or y not in pred:
                continue
            if pred[x] == y or pred[y] == x:
                continue
            px, py = _tree_path(pred, x), _tree_path(pred, y)
            if set(px) & set(py) != {root}:
                continue
            walk = px[::-1] + py
            edges = frozenset(norm_edge(walk[i], walk[i + 1]) for i in range(len(walk) - 1))
            edges |= {norm_edge(x, y)}
            if edges in seen or decode_cycle(edges) is None:
                continue
            seen[edges] = Cycle(edges)
    return sorted(seen.values(), key=lambda c: (c.order, _incidence_key(g, c.edges)))


def horton_mcb(g: Graph) -> CycleBasis:
    """Minimum cycle basis by greedy GF(2)-independent selection over Horton candidates."""
    if not g.is_connected():
        raise GraphError("minimum cycle basis needs a connected graph")
    if min(g.degree(v) for v in g.vertices) < 2:
        raise GraphError("minimum cycle basis needs minimum degree >= 2")
    dim = cycle_space_dimension(g)
    pivots: dict[int, int] = {}
    chosen: list[Cycle] = []
    for c in horton_candidates(g):
        if len(chosen) == dim:
            break
        if _reduce(to_bits(g, c.edges), pivots):
            chosen.append(c)
    if len(chosen) != dim:
        raise BasisError(f"Horton candidates span rank {len(chosen)} < {dim}")
    return CycleBasis(g, tuple(chosen))


def verify_basis(g: Graph, basis) -> bool:
    """True iff ``basis`` is a set of |E|-|V|+1 independent simple cycles of ``g`` covering E."""
    edge_sets = [c.edges if isinstance(c, Cycle) else frozenset(norm_edge(*e) for e in c) for c in basis]
    if not g.is_connected() or len(edge_sets) != g.edge_count - g.vertex_count + 1:
        return False
    covered = set()
    for edges in edge_sets:
        if decode_cycle(edges) is None or any(e not in g.edge_index for e in edges):
            return False
        covered |= edges
    if covered != set(g.edges):
        return False
    return gf2_rank(to_bits(g, edges) for edges in edge_sets) == len(edge_sets)


def gf2_sum(cycles) -> tuple[frozenset, tuple[int, ...] | None]:
    """Fold of symmetric differences and its decoding as a single cycle (or None)."""
    total = reduce(symmetric_difference, (c.edges if isinstance(c, Cycle) else c for c in cycles), frozenset())
    return total, decode_cycle(total)


def render_basis(cycles, comment: str | None = None) -> str:
    """One cycle per line as its sorted vertex list; '#' header with the histogram."""
    cycles = list(cycles)
    hist = dict(sorted(Counter(c.order for c in cycles).items()))
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("# histogram " + " ".join(f"{k}:{v}" for k, v in hist.items()))
    lines.extend(" ".join(map(str, c.sequence)) for c in cycles)
    return "\n".join(lines) + "\n"


def parse_basis(text: str) -> list[Cycle]:
    """Inverse of :func:`render_basis`.

    Each line lists the cycle's vertices in cyclic order; consecutive labels
    (and last-to-first) are the cycle's edges.
    """
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(Cycle.from_vertices(int(t) for t in line.split()))
    return out


def express_in_basis(g: Graph, cycles, edges) -> list | None:
    """Cycles of ``cycles`` whose GF(2) sum is ``edges``, or None if outside their span."""
    cycles = list(cycles)
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (vector, combination mask)
    for k, c in enumerate(cycles):
        v, combo = to_bits(g, c.edges), 1 << k
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v, combo = v ^ pv, combo ^ pc
    target, combo = to_bits(g, edges), 0
    while target:
        top = target.bit_length() - 1
        if top not in pivots:
            return None
        pv, pc = pivots[top]
        target, combo = target ^ pv, combo ^ pc
    return [c for k, c in enumerate(cycles) if combo >> k & 1]
