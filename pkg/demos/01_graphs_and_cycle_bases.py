"""Graphs, the GF(2) cycle space, and a minimum cycle basis."""

from grinham import Cycle, generate_named, horton_mcb, parse_graph, validate, verify_basis
from grinham.cyclespace import gf2_sum, render_basis

# %% a graph from an edge list
text = """# the 3-prism
6 9
1 2
2 3
1 3
4 5
5 6
4 6
1 4
2 5
3 6
"""
prism = parse_graph(text)
print(prism.vertex_count, "vertices,", prism.edge_count, "edges")
print(validate(prism))

# %% the cycle space has dimension |E| - |V| + 1
basis = horton_mcb(prism)
print(len(basis.cycles), "basis cycles, weight", basis.weight)
print(basis.order_histogram)
print(render_basis(basis))
assert verify_basis(prism, basis)

# adding two triangles that share no edge gives no cycle at all
edges, seq = gf2_sum([Cycle.from_vertices([1, 2, 3]), Cycle.from_vertices([4, 5, 6])])
print(len(edges), "edges, single cycle:", seq)

# %% adding two adjacent squares cancels the shared edge
edges, seq = gf2_sum([Cycle.from_vertices([1, 2, 5, 4]), Cycle.from_vertices([2, 3, 6, 5])])
print("sum is the cycle", seq)

# %% the Petersen graph has girth 5 and six pentagons in its minimum basis
pet = generate_named("petersen")
print("petersen:", horton_mcb(pet).order_histogram)
