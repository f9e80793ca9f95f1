"""Grinberg equation over a cycle basis.

A count vector picks ``f_i`` cycles of each order ``i`` from the basis so that
``sum((i - 2) * f_i) == |V| - 2``. The selected cycles are the solution set; the
rest of the basis is the co-solution set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import comb

from .cyclespace import Cycle, CycleBasis
from .graph import Graph

DEFAULT_SOLUTION_CAP = 10_000


class Screen(str, Enum):
    NOT_HAMILTONIAN_BY_NO_SOLUTION = "NotHamiltonianByNoSolution"
    INCONCLUSIVE = "Inconclusive"


def grinberg_rhs(g: Graph) -> int:
    return g.vertex_count - 2


def grinberg_lhs(counts: dict[int, int]) -> int:
    return sum((order - 2) * k for order, k in counts.items())


@dataclass
class CountSolutions:
    """Result of :func:`enumerate_count_solutions`; behaves like the list of vectors."""

    vectors: list[dict[int, int]] = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def __eq__(self, other):
        if isinstance(other, CountSolutions):
            return self.vectors == other.vectors and self.truncated == other.truncated
        return self.vectors == list(other)


def enumerate_count_solutions(histogram: dict[int, int], rhs: int, cap: int | None = DEFAULT_SOLUTION_CAP) -> CountSolutions:
    """All ``0 <= f_i <= histogram[i]`` with ``sum((i-2) f_i) == rhs``.

    Vectors are ordered lexicographically on the counts read from the largest
    order down. Stops after ``cap`` vectors and flags ``truncated``.
    """
    if rhs < 0:
        raise ValueError("rhs must be nonnegative")
    if any(order < 3 for order in histogram):
        raise ValueError("cycle orders must be >= 3")
    orders = sorted(histogram, reverse=True)
    # tail_max[k]: the most orders[k:] can still contribute
    tail_max = [0] * (len(orders) + 1)
    for k in range(len(orders) - 1, -1, -1):
        tail_max[k] = tail_max[k + 1] + (orders[k] - 2) * histogram[orders[k]]
    out = CountSolutions()
    counts = [0] * len(orders)

    def rec(k: int, remaining: int) -> bool:
        if k == len(orders):
            if remaining == 0:
                if cap is not None and len(out.vectors) >= cap:
                    out.truncated = True
                    return False
                out.vectors.append(dict(sorted(zip(orders, counts))))
            return True
        if remaining > tail_max[k]:
            return True
        w = orders[k] - 2
        for f in range(min(histogram[orders[k]], remaining // w) + 1):
            counts[k] = f
            if not rec(k + 1, remaining - w * f):
                return False
        counts[k] = 0
        return True

    rec(0, rhs)
    return out


def count_realizations(histogram: dict[int, int], counts: dict[int, int]) -> int:
    out = 1
    for order, have in histogram.items():
        out *= comb(have, counts.get(order, 0))
    return out


def realizations(cycles, counts: dict[int, int]):
    """Yield every selection of cycles matching ``counts`` as a tuple of solution cycles."""
    by_order: dict[int, list[Cycle]] = {}
    for c in sorted(cycles):
        by_order.setdefault(c.order, []).append(c)
    choices = [combinations(by_order.get(order, []), k) for order, k in sorted(counts.items())]
    for pick in product(*choices):
        yield tuple(c for group in pick for c in group)


@dataclass(frozen=True)
class GrinbergPartition:
    solution_cycles: frozenset
    co_solution_cycles: frozenset

    @property
    def count_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.solution_cycles:
            out[c.order] = out.get(c.order, 0) + 1
        return dict(sorted(out.items()))

    @classmethod
    def from_solution(cls, basis, solution) -> "GrinbergPartition":
        solution = frozenset(solution)
        cycles = frozenset(basis)
        if not solution <= cycles:
            raise ValueError("solution cycles must come from the basis")
        return cls(solution, cycles - solution)


def check_necessary_condition(partition: GrinbergPartition, g: Graph) -> bool:
    return sum(c.order - 2 for c in partition.solution_cycles) == grinberg_rhs(g)


def screen_no_solution(g: Graph, basis) -> Screen:
    hist = basis.order_histogram if isinstance(basis, CycleBasis) else _histogram(basis)
    if len(enumerate_count_solutions(hist, grinberg_rhs(g), cap=1)) == 0:
        return Screen.NOT_HAMILTONIAN_BY_NO_SOLUTION
    return Screen.INCONCLUSIVE


def _histogram(cycles) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in cycles:
        out[c.order] = out.get(c.order, 0) + 1
    return dict(sorted(out.items()))


def counts_to_json(counts: dict[int, int]) -> str:
    return json.dumps({str(k): v for k, v in sorted(counts.items())}, separators=(",", ":"))


def counts_from_json(text: str) -> dict[int, int]:
    return {int(k): int(v) for k, v in json.loads(text).items()}
