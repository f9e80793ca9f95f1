"""Cycle-basis and Grinberg-equation Hamiltonicity method, with brute-force oracles."""

from .cyclespace import (
    Cycle,
    CycleBasis,
    cycle_space_dimension,
    gf2_sum,
    horton_mcb,
    symmetric_difference,
    verify_basis,
)
from .graph import Graph, ParseError, generate_named, parse_graph, render_graph, validate
from .grinberg import (
    GrinbergPartition,
    check_necessary_condition,
    enumerate_count_solutions,
    grinberg_rhs,
    screen_no_solution,
)
from .harness import AgreementReport, generate_corpus, run_corpus
from .oracle import brute_force_hamiltonian, dp_hamiltonian
from .pipeline import SolverConfig, Verdict, solve, validate_hamiltonian

__version__ = "0.1.0"
