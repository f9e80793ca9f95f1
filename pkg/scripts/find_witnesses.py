"""Search small labeled graphs for the pinned removability witnesses used in tests.

Prints the first hit (in enumeration order) for each witness kind.
"""

from grinham.cyclespace import horton_mcb
from grinham.graph import validate
from grinham.harness import exhaustive_corpus, random_corpus
from grinham.pipeline import SolverConfig, solve
from grinham.removability import (
    boundary_edges,
    build_c_set,
    check_dismantlable,
    check_removable_candidate,
    classify_vertices,
    compute_r_map,
    is_ck,
    screen_p,
    PScreen,
)


def graphs():
    for n in range(4, 7):
        yield from exhaustive_corpus(n, n)
    yield from random_corpus(7, 8, 0.45, 3000, seed=11)


def main():
    found = {}
    for gid, g in graphs():
        if not validate(g).ok:
            continue
        basis = horton_mcb(g)
        rmap = compute_r_map(basis, g)
        vclass = classify_vertices(g, rmap)
        if "p" not in found and screen_p(g, rmap) is PScreen.NOT_HAMILTONIAN_BY_P:
            found["p"] = (gid, g.edges)
        for c in basis:
            if "ck" not in found and is_ck(c, basis, rmap, vclass):
                found["ck"] = (gid, g.edges, c.sequence, check_dismantlable(build_c_set(c, basis, vclass)).rule)
            if len(boundary_edges(c, rmap)) == 1:
                rule = check_removable_candidate(c, basis, rmap, g).rule
                key = rule.split("@")[0]
                if key not in found:
                    found[key] = (gid, g.edges, c.sequence, rule)
        if "no-candidate" not in found and screen_p(g, rmap) is PScreen.PASS:
            v, t = solve(g, SolverConfig())
            if v.reason == "SetMismatch" and any(s.get("rule") == "no-candidate" for s in t.steps):
                found["no-candidate"] = (gid, g.edges, v.to_json())
        if len(found) >= 8:
            break
    for k, v in sorted(found.items()):
        print(k, v)


if __name__ == "__main__":
    main()
