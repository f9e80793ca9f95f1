import pytest

from grinham.cyclespace import Cycle, CycleBasis, horton_mcb, verify_basis
from grinham.graph import Graph, generate_named, validate
from grinham.harness import exhaustive_corpus, random_corpus
from grinham.removability import (
    BOUNDARY,
    INNER,
    NON_BOUNDARY,
    CycleClass,
    PScreen,
    RemovalError,
    boundary_edges,
    build_c_set,
    check_dismantlable,
    check_removable_candidate,
    classify_cycle,
    classify_vertices,
    compute_r_map,
    forced_edge_count,
    is_ck,
    remove_cycle,
    screen_p,
)

T123 = Cycle.from_vertices([1, 2, 3])
T124 = Cycle.from_vertices([1, 2, 4])
T134 = Cycle.from_vertices([1, 3, 4])
T234 = Cycle.from_vertices([2, 3, 4])
HEX = Cycle.from_vertices(range(1, 7))

# Witnesses found by scripts/find_witnesses.py over labeled graphs (n <= 6) and
# seeded random graphs on 7-8 vertices.
K23 = Graph(5, ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)))
CK_GRAPH = Graph(8, ((1, 3), (1, 4), (2, 4), (2, 6), (2, 7), (3, 6), (3, 7), (4, 5), (5, 8), (6, 7), (7, 8)))
CK_CENTER = Cycle.from_vertices([2, 6, 7])
S2_GRAPH = Graph(5, ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)))
S3_GRAPH = Graph(5, ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)))
S4_GRAPH = Graph(6, ((1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6)))


def state(g, cycles=None):
    basis = CycleBasis(g, tuple(cycles)) if cycles is not None else horton_mcb(g)
    rmap = compute_r_map(basis, g)
    return basis, rmap, classify_vertices(g, rmap)


def test_r_map_examples(k4, c6):
    _, r, _ = state(c6, [HEX])
    assert set(r.values()) == {1}
    _, r, _ = state(k4, [T123, T124, T134])
    assert r == {(1, 2): 2, (1, 3): 2, (1, 4): 2, (2, 3): 1, (2, 4): 1, (3, 4): 1}
    _, r, _ = state(k4, [T123, T124, T234])
    assert r == {(1, 2): 2, (1, 3): 1, (1, 4): 1, (2, 3): 2, (2, 4): 2, (3, 4): 1}
    assert sum(r.values()) == 9


def test_r_map_mismatch(k4):
    with pytest.raises(ValueError):
        compute_r_map([T123, T124], k4)
    with pytest.raises(ValueError):
        compute_r_map([Cycle.from_vertices([1, 2, 5])], Graph(5, ((1, 2),)))


def test_vertex_classes(k4, c6):
    _, _, vc = state(c6, [HEX])
    assert set(vc.values()) == {BOUNDARY}
    _, _, vc = state(k4, [T123, T124, T134])
    assert vc[1] == INNER and vc[2] == BOUNDARY


def test_classify_cycle_examples(k4, c6):
    basis, r, vc = state(k4, [T123, T124, T134])
    cls = classify_cycle(T123, r, vc, basis)
    assert cls.kind is CycleClass.REMOVABLE and cls.boundary_edge_count == 1
    basis, r, vc = state(c6, [HEX])
    cls = classify_cycle(HEX, r, vc, basis)
    assert (cls.kind, cls.case, cls.label) == (CycleClass.IRREMOVABLE, 1, "irremovable:case1")
    with pytest.raises(ValueError):
        classify_cycle(T234, r, vc, basis)


def test_classify_cycle_case4():
    # every edge shared, every vertex inner
    basis, r, vc = state(generate_named("complete", [4]), [T123, T124, T134])
    fake = {k: 2 for k in r}
    vc2 = {v: INNER for v in vc}
    cls = classify_cycle(T123, fake, vc2, basis)
    assert (cls.kind, cls.case) == (CycleClass.UNCERTAIN, 4)


def test_classify_cycle_cases_2_and_5():
    # non-adjacent boundary edges: square 1-2-3-4 with other cycles on 12 and 34
    sq = Cycle.from_vertices([1, 2, 3, 4])
    fake = {(1, 2): 1, (2, 3): 2, (3, 4): 1, (1, 4): 2}
    assert classify_cycle(sq, fake, {v: NON_BOUNDARY for v in range(1, 5)}, [sq]).case == 2
    fake = {e: 2 for e in sq.edges}
    assert classify_cycle(sq, fake, {v: BOUNDARY for v in range(1, 5)}, [sq]).label == "irremovable:case5"
    mixed = {1: BOUNDARY, 2: NON_BOUNDARY, 3: BOUNDARY, 4: INNER}
    assert classify_cycle(sq, fake, mixed, [sq]).label == "uncertain:case5"


def test_forced_edge_count(k4, c6):
    _, r, _ = state(k4, [T123, T124, T134])
    assert forced_edge_count(2, k4, r) == 2
    assert forced_edge_count(1, k4, r) == 0
    _, r, _ = state(c6, [HEX])
    assert all(forced_edge_count(v, c6, r) == 2 for v in c6.vertices)


def test_screen_p_examples(k4, c6):
    _, r, _ = state(k4, [T123, T124, T134])
    assert screen_p(k4, r) is PScreen.PASS
    _, r, _ = state(c6, [HEX])
    assert screen_p(c6, r) is PScreen.PASS
    _, r, _ = state(K23)
    assert forced_edge_count(1, K23, r) == 3
    assert screen_p(K23, r) is PScreen.NOT_HAMILTONIAN_BY_P


def test_build_c_set(k4, c6):
    basis, _, vc = state(k4, [T123, T124, T134])
    assert build_c_set(T123, basis, vc).members == {T123, T124, T134}
    basis, _, vc = state(c6, [HEX])
    assert build_c_set(HEX, basis, vc).members == {HEX}
    far = Cycle.from_vertices([5, 6, 7])
    assert build_c_set(T123, [T123, far]).members == {T123}
    with pytest.raises(ValueError):
        build_c_set(T234, [T123])


def test_dismantlable_examples(k4, c6):
    basis, _, vc = state(k4, [T123, T124, T134])
    d = check_dismantlable(build_c_set(T123, basis, vc))
    assert d and d.rule == "no-unique-solution:3"
    basis, _, vc = state(c6, [HEX])
    assert check_dismantlable(build_c_set(HEX, basis, vc))


def test_not_dismantlable_fixture():
    basis, r, vc = state(CK_GRAPH)
    assert CK_CENTER in basis.cycles
    assert not boundary_edges(CK_CENTER, r)
    d = check_dismantlable(build_c_set(CK_CENTER, basis, vc))
    assert not d
    assert d.rule == "boundary-count-mismatch:7!=4"
    assert is_ck(CK_CENTER, basis, r, vc)


def test_is_ck_false_cases(k4):
    basis, r, vc = state(k4, [T123, T124, T134])
    assert not any(is_ck(c, basis, r, vc) for c in basis)


def test_candidate_examples(k4):
    basis, r, _ = state(k4, [T123, T124, T134])
    assert check_removable_candidate(T123, basis, r, k4).rule == "removable"
    with pytest.raises(RemovalError):
        check_removable_candidate(HEX, [HEX], {e: 1 for e in HEX.edges}, generate_named("cycle", [6]))


@pytest.mark.parametrize("g, cycle, rule", [
    (CK_GRAPH, [3, 6, 7], "s1:ck@7"),
    (S2_GRAPH, [1, 2, 3], "s2@1"),
    (S3_GRAPH, [1, 2, 3], "s3@1"),
    (generate_named("complete", [5]), [1, 2, 3], "s3@1"),
    (S4_GRAPH, [1, 3, 5], "s4@1"),
])
def test_candidate_rejections(g, cycle, rule):
    basis, r, _ = state(g)
    c = Cycle.from_vertices(cycle)
    assert c in basis.cycles
    verdict = check_removable_candidate(c, basis, r, g)
    assert not verdict and verdict.rule == rule


def test_k5_has_r3_edges():
    k5 = generate_named("complete", [5])
    _, r, _ = state(k5)
    assert max(r.values()) == 3


def test_remove_cycle_examples(k4):
    basis, _, _ = state(k4, [T123, T124, T134])
    b2, g2 = remove_cycle(basis, T123, k4)
    assert g2.vertex_count == 4 and g2.edge_count == 5
    assert not g2.has_edge(2, 3)
    assert b2.cycles == (T124, T134)
    r2 = compute_r_map(b2, g2)
    assert r2 == {(1, 2): 1, (1, 3): 1, (1, 4): 2, (2, 4): 1, (3, 4): 1}
    # now every cycle has two boundary edges, so a second deletion is refused
    with pytest.raises(RemovalError):
        remove_cycle(b2, T124, g2)
    assert b2.cycles == (T124, T134) and g2.edge_count == 5


def test_remove_cycle_refuses_irremovable():
    k5 = generate_named("complete", [5])
    basis, _, _ = state(k5)
    with pytest.raises(RemovalError, match="s3"):
        remove_cycle(basis, Cycle.from_vertices([1, 2, 3]), k5)
    with pytest.raises(RemovalError):
        remove_cycle(basis, T234, k5)


def _corpus():
    graphs = [g for _, g in exhaustive_corpus(5)]
    graphs += [g for _, g in random_corpus(6, 10, 0.4, 60, seed=21)]
    return [g for g in graphs if validate(g).ok]


def test_structural_invariants():
    for g in _corpus():
        basis, r, vc = state(g)
        assert sum(r.values()) == sum(c.order for c in basis)
        assert min(r.values()) >= 1
        assert all(vc[v] in (BOUNDARY, NON_BOUNDARY, INNER) for v in g.vertices)
        for c in basis:
            cls = classify_cycle(c, r, vc, basis)
            if boundary_edges(c, r):
                assert not is_ck(c, basis, r, vc)
            if cls.kind is CycleClass.REMOVABLE:
                b2, g2 = remove_cycle(basis, c, g, check=False)
                assert g2.vertex_count == g.vertex_count
                assert g2.edge_count == g.edge_count - 1
                assert verify_basis(g2, b2)
