"""Definition-literal derivative on the truncated tree of words up to depth d.

Works on nodes, not states: the levels are sets of words, and a node keeps its
place in the next level when, from the state it reaches, exhaustive lasso
enumeration inside the states realized by surviving nodes finds both an
accepted and a rejected branch. Shares nothing with the derivative engine but
the brute-force lasso enumerator. Slow on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .derivative import KERNEL, DerivativeAnalysis, node_rank
from .model import ParityAutomaton, Word, all_words, run
from .runs import enumerate_simple_lassos, lasso_is_accepting


@dataclass(frozen=True)
class NodeRankTable:
    depth: int
    ranks: dict[Word, float] = field(repr=False)
    fixpoint_index: int = 0

    def __getitem__(self, w: Word) -> float:
        return self.ranks[tuple(w)]

    def nodes(self) -> list[Word]:
        return list(self.ranks)


def node_level_derivative(aut: ParityAutomaton, depth: int) -> NodeRankTable:
    nodes = all_words(aut.alphabet, depth)
    runs = {w: run(aut, w) for w in nodes}
    level = set(nodes)
    exit_level: dict[Word, float] = {}
    b = 0
    while True:
        realized = frozenset(q for w in level for q in runs[w])
        survivors = set()
        for w in level:
            lassos = enumerate_simple_lassos(aut, runs[w][-1], realized, aut.states)
            kinds = {lasso_is_accepting(aut, la) for la in lassos}
            if kinds == {True, False}:
                survivors.add(w)
        if survivors == level:
            break
        for w in level - survivors:
            exit_level[w] = b + 1
        level = survivors
        b += 1
    ranks = {w: exit_level.get(w, KERNEL) for w in nodes}
    return NodeRankTable(depth=depth, ranks=ranks, fixpoint_index=b)


@dataclass(frozen=True)
class CrossCheckReport:
    depth: int
    checked: int
    disagreements: list[tuple[Word, float, float]]  # (node, oracle rank, engine rank)

    @property
    def passed(self) -> bool:
        return not self.disagreements


def cross_check(aut: ParityAutomaton, analysis: DerivativeAnalysis, table: NodeRankTable) -> CrossCheckReport:
    bad = []
    for w in table.nodes():
        engine = node_rank(aut, analysis, w)
        if engine != table[w]:
            bad.append((w, table[w], engine))
    return CrossCheckReport(depth=table.depth, checked=len(table.ranks), disagreements=bad)
