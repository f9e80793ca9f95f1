"""Edge multiplicities, vertex classes and single-cycle deletion."""

from grinham import Graph, generate_named, horton_mcb
from grinham.cyclespace import Cycle
from grinham.removability import (
    check_removable_candidate,
    classify_cycle,
    classify_vertices,
    compute_r_map,
    p_violations,
    remove_cycle,
)

# %% r(e) counts how many basis cycles use e
k4 = generate_named("complete", [4])
basis = horton_mcb(k4)
rmap = compute_r_map(basis, k4)
print(rmap)
vclass = classify_vertices(k4, rmap)
print(vclass)

# %% each basis cycle gets a removability class
for c in basis.cycles:
    print(c, classify_cycle(c, rmap, vclass, basis).label)

# %% deleting the triangle 1-2-3 drops exactly one edge and keeps every vertex
t = Cycle.from_vertices([1, 2, 3])
print(check_removable_candidate(t, basis, rmap, k4))
b2, g2 = remove_cycle(basis, t, k4)
print(k4.edge_count, "->", g2.edge_count, "edges;", g2.vertex_count, "vertices")
print(b2.cycles)

# %% a vertex with three forced edges blocks every Hamiltonian cycle
k23 = Graph(5, ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)))
b = horton_mcb(k23)
print("violations at", p_violations(k23, compute_r_map(b, k23)))
