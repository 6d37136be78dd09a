"""Existence of infinite runs confined to a set of states.

A set ``P`` of states stands for the branches whose every prefix reaches a
state of ``P``. The questions asked here are whether such a branch exists
below a state ``q``, and whether one exists that is accepted (resp. rejected).
All three reduce to reachable cycles in the subgraph induced by ``P``.
"""

from __future__ import annotations

from collections import deque
from typing import AbstractSet, Iterator

import networkx as nx

from .model import ParityAutomaton, PreconditionError

Lasso = tuple[tuple[int, ...], tuple[int, ...]]


def _require(q: int, P: AbstractSet[int]) -> None:
    if q not in P:
        raise PreconditionError(f"state {q} is not in the confining set {sorted(P)}")


def reachable_within(aut: ParityAutomaton, q: int, P: AbstractSet[int]) -> set[int]:
    """States reachable from ``q`` along paths that never leave ``P``."""
    seen = {q}
    todo = deque([q])
    while todo:
        x = todo.popleft()
        for y in aut.transitions[x]:
            if y in P and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _has_cycle(aut: ParityAutomaton, region: AbstractSet[int], top: int | None = None) -> bool:
    """Does the subgraph on ``region`` contain a cycle (through a state of priority ``top``)?"""
    g = nx.DiGraph()
    g.add_nodes_from(region)
    g.add_edges_from((x, y) for x in region for y in aut.transitions[x] if y in region)
    for comp in nx.strongly_connected_components(g):
        if len(comp) == 1:
            (x,) = comp
            if not g.has_edge(x, x):
                continue
        if top is None or any(aut.priority[x] == top for x in comp):
            return True
    return False


def _has_cycle_of_parity(aut: ParityAutomaton, region: set[int], parity: int) -> bool:
    # a cycle with maximum priority p lives in the states of priority <= p
    for p in sorted({aut.priority[x] for x in region if aut.priority[x] % 2 == parity}):
        if _has_cycle(aut, {x for x in region if aut.priority[x] <= p}, top=p):
            return True
    return False


def exists_run_within(aut: ParityAutomaton, q: int, P: AbstractSet[int]) -> bool:
    _require(q, P)
    return _has_cycle(aut, reachable_within(aut, q, P))


def exists_accepting_run_within(aut: ParityAutomaton, q: int, P: AbstractSet[int]) -> bool:
    _require(q, P)
    return _has_cycle_of_parity(aut, reachable_within(aut, q, P), 0)


def exists_rejecting_run_within(aut: ParityAutomaton, q: int, P: AbstractSet[int]) -> bool:
    _require(q, P)
    return _has_cycle_of_parity(aut, reachable_within(aut, q, P), 1)


def enumerate_simple_lassos(
    aut: ParityAutomaton, q: int, P: AbstractSet[int], max_len: int
) -> list[Lasso]:
    """All lassos from ``q`` inside ``P`` with a simple stem and a simple cycle.

    A lasso is ``(stem, cycle)``: ``stem`` is a simple path of states starting
    at ``q`` and ending at the cycle's entry state ``cycle[0]``; ``cycle`` lists
    the states of a simple cycle, closing back to ``cycle[0]``. Stem states
    before the entry are disjoint from the cycle, and
    ``len(stem) - 1 + len(cycle) <= max_len``. With ``max_len >= n`` the
    enumeration is exhaustive. Brute force by design.
    """
    _require(q, P)
    out: list[Lasso] = []
    for stem in simple_paths(aut, q, P, max_len):
        entry = stem[-1]
        budget = max_len - (len(stem) - 1)
        forbidden = set(stem[:-1])
        for cycle in _simple_cycles_at(aut, entry, P, forbidden, budget):
            out.append((tuple(stem), tuple(cycle)))
    return out


def simple_paths(aut: ParityAutomaton, q: int, P: AbstractSet[int], max_len: int) -> Iterator[list[int]]:
    """Simple paths from ``q`` inside ``P`` with at most ``max_len`` states."""
    stack = [[q]]
    while stack:
        path = stack.pop()
        yield path
        if len(path) >= max_len:
            continue
        for y in sorted(set(aut.transitions[path[-1]]), reverse=True):
            if y in P and y not in path:
                stack.append(path + [y])


def _simple_cycles_at(
    aut: ParityAutomaton, entry: int, P: AbstractSet[int], forbidden: set[int], budget: int
) -> Iterator[list[int]]:
    stack = [[entry]]
    while stack:
        path = stack.pop()
        succ = set(aut.transitions[path[-1]])
        if entry in succ:
            yield path
        if len(path) >= budget:
            continue
        for y in sorted(succ, reverse=True):
            if y in P and y not in path and y not in forbidden:
                stack.append(path + [y])


def lasso_is_accepting(aut: ParityAutomaton, lasso: Lasso) -> bool:
    return max(aut.priority[x] for x in lasso[1]) % 2 == 0


def lasso_symbols(aut: ParityAutomaton, lasso: Lasso) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Symbol labels ``(stem_word, cycle_word)`` realizing ``lasso``; least symbol per edge."""
    stem, cycle = lasso

    def label(x: int, y: int) -> int:
        return min(s for s, t in enumerate(aut.transitions[x]) if t == y)

    stem_word = tuple(label(x, y) for x, y in zip(stem, stem[1:]))
    closed = cycle + cycle[:1]
    cycle_word = tuple(label(x, y) for x, y in zip(closed, closed[1:]))
    return stem_word, cycle_word
