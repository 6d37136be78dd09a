"""The derivative chain on state sets, ranks, and the Delta^0_2 verdict.

A node (finite word) belongs to level ``b`` exactly when its whole run stays
inside the state set ``levels[b]``. Each step keeps the states from which the
current level still admits both an accepted and a rejected branch. The chain
strictly shrinks until it stabilizes, so it has at most ``n + 1`` members and
ranks are plain integers; nodes that never leave are given ``KERNEL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import AbstractSet, Sequence

from .model import ParityAutomaton, PreconditionError, UpWord, lasso_run, run
from .runs import exists_accepting_run_within, exists_rejecting_run_within, reachable_within

KERNEL = math.inf
"""Rank of states and nodes that survive every step."""

StateSet = frozenset


def format_rank(r: float) -> str:
    return "kernel" if r == KERNEL else str(int(r))


def rank_to_json(r: float) -> int | str:
    return "kernel" if r == KERNEL else int(r)


def rank_from_json(x: int | str) -> float:
    return KERNEL if x == "kernel" else int(x)


def derivative_step(aut: ParityAutomaton, level: AbstractSet[int]) -> StateSet:
    return frozenset(
        q
        for q in level
        if exists_accepting_run_within(aut, q, level) and exists_rejecting_run_within(aut, q, level)
    )


@dataclass(frozen=True)
class DerivativeAnalysis:
    levels: tuple[StateSet, ...]
    initial: int
    state_rank: tuple[float, ...] = field(repr=False)

    @property
    def fixpoint_index(self) -> int:
        return len(self.levels) - 1

    @property
    def kernel(self) -> StateSet:
        return self.levels[-1]

    def level(self, b: int) -> StateSet:
        # levels past the fixpoint repeat the kernel
        return self.levels[min(b, self.fixpoint_index)]


def analyze(aut: ParityAutomaton) -> DerivativeAnalysis:
    levels = [frozenset(range(aut.states))]
    while True:
        nxt = derivative_step(aut, levels[-1])
        if nxt == levels[-1]:
            break
        levels.append(nxt)
    ranks = []
    for q in range(aut.states):
        ranks.append(next((b for b, lv in enumerate(levels) if q not in lv), KERNEL))
    return DerivativeAnalysis(levels=tuple(levels), initial=aut.initial, state_rank=tuple(ranks))


def reachable_fixpoint_index(aut: ParityAutomaton, analysis: DerivativeAnalysis) -> int:
    """Number of steps after which the chain stops changing on reachable states.

    This is the fixpoint index as seen by nodes of the tree; states no word
    reaches can keep shrinking the state chain after the node chain is stable.
    """
    reach = reachable_within(aut, aut.initial, frozenset(range(aut.states)))
    restricted = [lv & reach for lv in analysis.levels]
    return next(b for b in range(len(restricted)) if restricted[b] == restricted[-1])


def node_in_level(aut: ParityAutomaton, analysis: DerivativeAnalysis, w: Sequence[int], b: int) -> bool:
    if not 0 <= b <= analysis.fixpoint_index:
        raise PreconditionError(f"level {b} outside 0..{analysis.fixpoint_index}")
    lv = analysis.levels[b]
    return all(q in lv for q in run(aut, w))


def node_rank(aut: ParityAutomaton, analysis: DerivativeAnalysis, w: Sequence[int]) -> float:
    return min(analysis.state_rank[q] for q in run(aut, w))


def is_delta02(analysis: DerivativeAnalysis) -> bool:
    """True iff the kernel holds no node, i.e. the initial state is not a kernel state.

    Every kernel state continues inside the kernel forever, so a single kernel
    node (the empty word) exists exactly when the initial state is in it.
    """
    return analysis.initial not in analysis.kernel


def kernel_branch_contains(aut: ParityAutomaton, analysis: DerivativeAnalysis, w: UpWord) -> bool:
    stem, cycle = lasso_run(aut, w)
    return all(q in analysis.kernel for q in stem + cycle)
