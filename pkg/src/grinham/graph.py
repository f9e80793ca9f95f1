"""Simple undirected graphs: parsing, rendering, validation and generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or generator parameters."""


class ParseError(ValueError):
    """Malformed edge-list document. ``lineno`` is 1-based."""

    def __init__(self, lineno: int, kind: str, message: str):
        super().__init__(f"line {lineno}: {kind}: {message}")
        self.lineno = lineno
        self.kind = kind


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``1..vertex_count``.

    ``edges`` is stored as a sorted tuple of ``(min, max)`` pairs, which is also
    the canonical edge ordering used for GF(2) incidence vectors.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphError("vertex_count must be positive")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range")
            e = norm_edge(u, v)
            if e in normed:
                raise GraphError(f"duplicate edge {e}")
            normed.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normed)))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, tuple(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_index

    def without_edges(self, drop) -> "Graph":
        drop = {norm_edge(*e) for e in drop}
        return Graph(self.vertex_count, tuple(e for e in self.edges if e not in drop))

    def is_connected(self, skip: Edge | None = None) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen and norm_edge(v, w) != skip:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def bridges(self) -> list[Edge]:
        """Edges whose removal disconnects a connected graph."""
        if not self.is_connected():
            raise GraphError("bridges are only defined here for connected graphs")
        return [e for e in self.edges if not self.is_connected(skip=e)]


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    The first non-comment line is ``n m``; then exactly ``m`` lines ``u v``.
    Lines starting with ``#`` and blank lines are ignored. CRLF is accepted.
    """
    header = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, "malformed", f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "malformed", f"non-integer token in {line!r}") from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError(lineno, "malformed", "header needs n >= 1 and m >= 0")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(lineno, "malformed", f"more than {m} edge lines")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(lineno, "vertex-out-of-range", f"vertex outside [1, {n}]")
        if a == b:
            raise ParseError(lineno, "self-loop", f"self-loop at vertex {a}")
        e = norm_edge(a, b)
        if e in seen:
            raise ParseError(lineno, "duplicate-edge", f"edge {e} repeats line {seen[e]}")
        seen[e] = lineno
        edges.append(e)
    if header is None:
        raise ParseError(0, "malformed", "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(0, "malformed", f"expected {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def render_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.vertex_count} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    min_degree: int
    simple: bool
    warnings: tuple[str, ...] = ()
    bridges: tuple[Edge, ...] = ()

    @property
    def ok(self) -> bool:
        """Connected, min degree >= 2 and bridgeless: the method's input domain."""
        return self.connected and self.simple and self.min_degree >= 2 and not self.bridges


def validate(g: Graph) -> ValidationReport:
    warnings = []
    connected = g.is_connected()
    min_degree = min(g.degree(v) for v in g.vertices)
    bridges: tuple[Edge, ...] = ()
    if not connected:
        warnings.append("graph is disconnected")
    else:
        bridges = tuple(g.bridges())
        if bridges:
            # a bridge lies on no cycle, so no cycle basis covers E
            warnings.append(f"bridge {bridges[0]}: trivially non-Hamiltonian")
    if min_degree < 2:
        warnings.append(f"minimum degree {min_degree} < 2: trivially non-Hamiltonian")
    # Graph construction already rejects loops and parallel edges.
    return ValidationReport(connected, min_degree, True, tuple(warnings), bridges)


# 0-indexed in the usual drawing; shifted to 1-indexed below.
_HERSCHEL_EDGES = [
    (0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6), (2, 3), (2, 7), (3, 8),
    (3, 9), (4, 5), (4, 9), (5, 10), (6, 7), (6, 10), (7, 8), (8, 10), (9, 10),
]
_PETERSEN_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
]

GENERATORS = ("cycle", "complete", "petersen", "herschel", "grid", "random_gnp")
MAX_GNP_RETRIES = 1000


def _need(params, k, name):
    if len(params) != k:
        raise GraphError(f"{name} takes {k} integer parameter(s), got {len(params)}")


def generate_named(name: str, params=(), seed: int = 0) -> Graph:
    """Build a named graph.

    ``params`` per generator: ``cycle [n]``, ``complete [n]``, ``grid [rows, cols]``,
    ``random_gnp [n, p_percent]``; ``petersen`` and ``herschel`` take none.
    ``random_gnp`` redraws from ``random.Random(seed)`` until connected.
    """
    params = list(params)
    if name == "cycle":
        _need(params, 1, name)
        n = params[0]
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph(n, tuple(norm_edge(i, i % n + 1) for i in range(1, n + 1)))
    if name == "complete":
        _need(params, 1, name)
        n = params[0]
        if n < 1:
            raise GraphError("complete needs n >= 1")
        return Graph(n, tuple(combinations(range(1, n + 1), 2)))
    if name == "petersen":
        _need(params, 0, name)
        return Graph(10, tuple(_PETERSEN_EDGES))
    if name == "herschel":
        _need(params, 0, name)
        return Graph(11, tuple((u + 1, v + 1) for u, v in _HERSCHEL_EDGES))
    if name == "grid":
        _need(params, 2, name)
        rows, cols = params
        if rows < 1 or cols < 1 or rows * cols < 2:
            raise GraphError("grid needs rows, cols >= 1 and at least two vertices")
        label = lambda r, c: r * cols + c + 1  # noqa: E731
        edges = []
        for r in range(rows):
            for c in range(cols):
                if c + 1 < cols:
                    edges.append((label(r, c), label(r, c + 1)))
                if r + 1 < rows:
                    edges.append((label(r, c), label(r + 1, c)))
        return Graph(rows * cols, tuple(edges))
    if name == "random_gnp":
        _need(params, 2, name)
        n, pct = params
        if n < 2 or not (0 < pct <= 100):
            raise GraphError("random_gnp needs n >= 2 and 0 < p_percent <= 100")
        return random_gnp(n, pct / 100.0, random.Random(seed))
    raise GraphError(f"unknown generator {name!r}; expected one of {GENERATORS}")


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Connected G(n, p) sample, redrawn from ``rng`` until connected."""
    pairs = list(combinations(range(1, n + 1), 2))
    for _ in range(MAX_GNP_RETRIES):
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if g.is_connected():
            return g
    raise GraphError(f"no connected G({n}, {p}) sample in {MAX_GNP_RETRIES} draws")
