"""Regenerate the planar face-basis fixtures under src/grinham/data/faces/.

Needs networkx (dev only). Each fixture is a pair ``<name>.graph`` (edge list)
and ``<name>.faces`` (every face of a planar embedding except the largest one,
which plays the outer face).
"""

import random
from itertools import combinations
from pathlib import Path

import networkx as nx

from grinham.cyclespace import Cycle, render_basis
from grinham.graph import Graph, generate_named, render_graph

OUT = Path(__file__).resolve().parents[1] / "src" / "grinham" / "data" / "faces"


def from_nx(h: nx.Graph) -> Graph:
    label = {v: i + 1 for i, v in enumerate(sorted(h.nodes, key=repr))}
    return Graph(h.number_of_nodes(), tuple((label[u], label[v]) for u, v in h.edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def faces(g: Graph) -> list[Cycle]:
    ok, emb = nx.check_planarity(to_nx(g))
    assert ok
    seen, out = set(), []
    for u, v in emb.edges:
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        out.append(Cycle.from_vertices(face))
    outer = max(out, key=lambda c: (c.order, [-x for x in sorted(c.vertices)]))
    out.remove(outer)
    return sorted(out)


def noncrossing(n, rng, k):
    """Up to ``k`` pairwise noncrossing chords of the polygon 1..n."""
    chords = []
    pool = [(a, b) for a, b in combinations(range(1, n + 1), 2) if 1 < b - a < n - 1]
    rng.shuffle(pool)
    for a, b in pool:
        if len(chords) == k:
            break
        if all(not (a < c < b < d or c < a < d < b) for c, d in chords):
            chords.append((a, b))
    return chords


def chorded_cycle(n, seed, inside, outside):
    rng = random.Random(seed)
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    ins = noncrossing(n, rng, inside)
    outs = [c for c in noncrossing(n, rng, outside) if c not in ins]
    return Graph(n, tuple(rim + ins + outs))


def fixtures():
    yield "C5", generate_named("cycle", [5])
    yield "C6", generate_named("cycle", [6])
    yield "K4", generate_named("complete", [4])
    for n in (5, 6, 7):
        yield f"wheel{n}", from_nx(nx.wheel_graph(n + 1))
    for n in (3, 4, 5, 6):
        yield f"prism{n}", from_nx(nx.circular_ladder_graph(n))
    yield "octahedron", from_nx(nx.octahedral_graph())
    yield "icosahedron", from_nx(nx.icosahedral_graph())
    yield "dodecahedron", from_nx(nx.dodecahedral_graph())
    for r, c in ((2, 3), (2, 5), (3, 4), (4, 4)):
        yield f"grid{r}x{c}", generate_named("grid", [r, c])
    for seed, (n, i, o) in enumerate([(8, 3, 2), (9, 4, 3), (10, 5, 4), (11, 3, 3), (12, 6, 5), (10, 7, 0)]):
        yield f"chorded{n}_{seed}", chorded_cycle(n, seed, i, o)
    yield "herschel", generate_named("herschel")
    yield "grid3x3", generate_named("grid", [3, 3])


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, g in fixtures():
        (OUT / f"{name}.graph").write_text(render_graph(g, comment=name))
        (OUT / f"{name}.faces").write_text(render_basis(faces(g), comment=f"{name}: bounded faces"))
        print(name, g.vertex_count, g.edge_count)


if __name__ == "__main__":
    main()
