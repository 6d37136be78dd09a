"""Decide whether an omega-regular set is Delta^0_2 and build limit guessers for it."""

from .derivative import (
    KERNEL,
    DerivativeAnalysis,
    analyze,
    derivative_step,
    is_delta02,
    kernel_branch_contains,
    node_in_level,
    node_rank,
)
from .guesser import (
    AdversaryWitness,
    CapExceeded,
    GuesserConfig,
    GuesserMachine,
    Outcome,
    adversary_build,
    limit_guess,
    naive_guesser,
    step,
    synthesize_carved_guesser,
    synthesize_guesser,
)
from .model import (
    AutomatonSemanticError,
    AutomatonSyntaxError,
    ParityAutomaton,
    PreconditionError,
    UpWord,
    WordError,
    membership,
    parse_automaton,
    prefix,
    run,
)
from .oracle import NodeRankTable, cross_check, node_level_derivative
from .runs import (
    enumerate_simple_lassos,
    exists_accepting_run_within,
    exists_rejecting_run_within,
    exists_run_within,
)

__version__ = "0.1.0"
