"""Counting how many basis cycles of each order can sit inside a Hamiltonian cycle."""

from grinham import generate_named, grinberg_rhs, horton_mcb
from grinham.fixtures import face_fixture_names, load_face_fixture
from grinham.grinberg import enumerate_count_solutions, screen_no_solution
from grinham.oracle import brute_force_hamiltonian
from grinham.cyclespace import express_in_basis

# %% on a planar Hamiltonian graph, the faces inside the cycle obey
#    sum (order - 2) = |V| - 2
g, faces = load_face_fixture("prism5")
ham = brute_force_hamiltonian(g).cycle
edges = frozenset(tuple(sorted(p)) for p in zip(ham, ham[1:] + ham[:1]))
inside = express_in_basis(g, faces, edges)
print("cycle", ham)
print("inside faces", inside)
print(sum(c.order - 2 for c in inside), "==", grinberg_rhs(g))

# %% the same identity across every bundled face fixture
for name in face_fixture_names():
    g, faces = load_face_fixture(name)
    res = brute_force_hamiltonian(g)
    print(f"{name:14s} n={g.vertex_count:2d} hamiltonian={res.hamiltonian}")

# %% the count-vector equation on a basis histogram
print(enumerate_count_solutions({3: 2, 4: 2}, 4))
print(enumerate_count_solutions({5: 6}, 8))  # 3 * f5 = 8 has no integer solution

# %% so Petersen is screened out without any search
pet = generate_named("petersen")
print(screen_no_solution(pet, horton_mcb(pet)).value)
herschel, faces = load_face_fixture("herschel")
print(screen_no_solution(herschel, faces).value)
