"""Finite-state guessers and the diagonal adversary against wrong guessers.

A guesser reads a stream of symbols and emits one bit per symbol; it guesses
a set when its bits eventually settle on the membership of the stream. The
machines built here keep the current automaton state together with the
running minimum of the state ranks seen so far, which is the rank of the node
read so far.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .derivative import KERNEL, DerivativeAnalysis, is_delta02
from .model import ParityAutomaton, PreconditionError, UpWord, WordError, membership, run
from .runs import (
    enumerate_simple_lassos,
    exists_rejecting_run_within,
    exists_run_within,
    lasso_is_accepting,
    lasso_symbols,
    simple_paths,
)

GuessFn = Callable[[tuple[int, ...]], int]


class Outcome(enum.Enum):
    CONVERGES_TO_ONE = "ConvergesToOne"
    CONVERGES_TO_ZERO = "ConvergesToZero"
    DIVERGES = "Diverges"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GuesserConfig:
    state: int
    min_rank: float


@dataclass(frozen=True)
class GuesserMachine:
    automaton: ParityAutomaton
    analysis: DerivativeAnalysis
    mode: str  # "plain" or "carved"
    table: dict = field(repr=False)

    def initial_config(self) -> GuesserConfig:
        q = self.automaton.initial
        return GuesserConfig(q, self.analysis.state_rank[q])

    def output(self, cfg: GuesserConfig) -> int:
        return self.table[(cfg.state, cfg.min_rank)]

    def guess(self, w: Sequence[int]) -> int:
        """Bit emitted after reading the whole of ``w`` (the empty word included)."""
        cfg = self.initial_config()
        for s in w:
            cfg, _ = step(self, cfg, s)
        return self.output(cfg)


def _settled_bit(aut: ParityAutomaton, q: int, level: frozenset) -> int:
    # 1 iff some branch from q stays in `level` and none of them is rejected
    if not exists_run_within(aut, q, level):
        return 0
    return 0 if exists_rejecting_run_within(aut, q, level) else 1


def _build_table(aut: ParityAutomaton, analysis: DerivativeAnalysis, carved: bool) -> dict:
    table = {}
    for q in range(aut.states):
        rq = analysis.state_rank[q]
        if rq == KERNEL:
            if carved:
                table[(q, KERNEL)] = 0
            finite = range(1, analysis.fixpoint_index + 1)
        else:
            finite = range(1, int(rq) + 1)
        for m in finite:
            table[(q, m)] = _settled_bit(aut, q, analysis.level(m - 1))
    return table


def synthesize_guesser(aut: ParityAutomaton, analysis: DerivativeAnalysis) -> GuesserMachine:
    if not is_delta02(analysis):
        raise PreconditionError(
            "kernel is nonempty (initial state is a kernel state): the set is not guessable"
        )
    return GuesserMachine(aut, analysis, "plain", _build_table(aut, analysis, carved=False))


def synthesize_carved_guesser(aut: ParityAutomaton, analysis: DerivativeAnalysis) -> GuesserMachine:
    """Guesser for the set minus the branches of its kernel."""
    return GuesserMachine(aut, analysis, "carved", _build_table(aut, analysis, carved=True))


def step(machine: GuesserMachine, cfg: GuesserConfig, s: int) -> tuple[GuesserConfig, int]:
    aut = machine.automaton
    if not isinstance(s, int) or not 0 <= s < aut.alphabet:
        raise WordError(f"symbol {s!r} out of range for alphabet of size {aut.alphabet}")
    q = aut.transitions[cfg.state][s]
    nxt = GuesserConfig(q, min(cfg.min_rank, machine.analysis.state_rank[q]))
    return nxt, machine.output(nxt)


def stream_bits(machine: GuesserMachine, w: UpWord, count: int) -> list[int]:
    """Bits emitted on the first ``count`` symbols of ``w``."""
    cfg = machine.initial_config()
    bits = []
    for i in range(count):
        cfg, b = step(machine, cfg, w.symbol_at(i))
        bits.append(b)
    return bits


def limit_guess(machine: GuesserMachine, w: UpWord) -> Outcome:
    machine.automaton.check_word(w.prefix)
    machine.automaton.check_word(w.period)
    cfg = machine.initial_config()
    for s in w.prefix:
        cfg, _ = step(machine, cfg, s)
    # configurations at phase 0 of the period; a repeat closes the cycle
    seen: dict[GuesserConfig, int] = {}
    rounds: list[list[int]] = []
    while cfg not in seen:
        seen[cfg] = len(rounds)
        bits = []
        for s in w.period:
            cfg, b = step(machine, cfg, s)
            bits.append(b)
        rounds.append(bits)
    cycle_bits = {b for bits in rounds[seen[cfg]:] for b in bits}
    if cycle_bits == {1}:
        return Outcome.CONVERGES_TO_ONE
    if cycle_bits == {0}:
        return Outcome.CONVERGES_TO_ZERO
    return Outcome.DIVERGES


def naive_guesser(aut: ParityAutomaton) -> GuessFn:
    """Guess membership of the word padded with zeros forever."""
    zeros = [int(membership(aut, UpWord((), (0,)), start=q)) for q in range(aut.states)]
    last: list = [((), aut.initial)]

    def guess(w: Sequence[int]) -> int:
        w = tuple(w)
        prev, q = last[0]
        if len(w) == len(prev) + 1 and w[:-1] == prev:
            q = aut.transitions[q][aut.check_word(w[-1:])[0]]
        else:
            q = run(aut, w)[-1]
        last[0] = (w, q)
        return zeros[q]

    return guess


@dataclass(frozen=True)
class AdversaryWitness:
    """Word along which the candidate's outputs changed at least the requested number of times."""

    word: tuple[int, ...]
    outputs: tuple[int, ...]  # candidate output on every prefix, empty word first

    @property
    def alternation_positions(self) -> list[int]:
        """Prefix lengths at which the output differs from the previous prefix's output."""
        return [i for i in range(1, len(self.outputs)) if self.outputs[i] != self.outputs[i - 1]]


@dataclass(frozen=True)
class CapExceeded:
    """The candidate never reached the target bit along ``branch`` within the cap.

    ``branch`` is an infinite word through the kernel whose membership differs
    from the bit the candidate kept emitting on ``prefix + tail``.
    """

    prefix: tuple[int, ...]
    tail: tuple[int, ...]
    branch: UpWord
    target: int
    outputs: tuple[int, ...]

    @property
    def word(self) -> tuple[int, ...]:
        return self.prefix + self.tail


def _branches(aut: ParityAutomaton, q: int, kernel: frozenset, accepting: bool) -> list[UpWord]:
    """Branches from ``q`` through the kernel whose acceptance is ``accepting``.

    Each is a simple path to some kernel state followed by a simple lasso from
    there; duplicates removed, shortest first, then lexicographic.
    """
    found = set()
    for stem in simple_paths(aut, q, kernel, aut.states):
        walk, _ = lasso_symbols(aut, (stem, ()))
        for lasso in enumerate_simple_lassos(aut, stem[-1], kernel, aut.states):
            if lasso_is_accepting(aut, lasso) == accepting:
                u, v = lasso_symbols(aut, lasso)
                found.add((walk + u, v))
    ordered = sorted(found, key=lambda uv: (len(uv[0]) + len(uv[1]), uv))
    return [UpWord(u, v) for u, v in ordered]


def adversary_build(
    aut: ParityAutomaton,
    analysis: DerivativeAnalysis,
    candidate: GuessFn,
    alternations: int,
    step_cap: int,
) -> AdversaryWitness | CapExceeded:
    """Drive ``candidate`` through kernel nodes until its output has flipped ``alternations`` times.

    At stage ``k`` a branch through the kernel is chosen that belongs to the
    set iff ``k`` is even; a correct guesser must eventually answer
    ``(k + 1) % 2`` on it, and the word is extended up to that point. Branches
    of the right kind are tried in a fixed order; if the candidate misses the
    target on all of them within ``step_cap`` symbols each, the first one is
    returned as a ``CapExceeded`` witness of a wrong limit.
    """
    kernel = analysis.kernel
    if aut.initial not in kernel:
        raise PreconditionError("kernel is empty: no adversary exists for a guessable set")
    word: tuple[int, ...] = ()
    outputs = [candidate(word)]
    q = aut.initial
    k = 0

    def flips() -> int:
        return sum(1 for a, b in zip(outputs, outputs[1:]) if a != b)

    while flips() < alternations:
        target = (k + 1) % 2
        failed = None
        for branch in _branches(aut, q, kernel, accepting=(k % 2 == 0)):
            tail: list[int] = []
            trial: list[int] = []
            for i in range(step_cap):
                tail.append(branch.symbol_at(i))
                trial.append(candidate(word + tuple(tail)))
                if trial[-1] == target:
                    break
            if trial and trial[-1] == target:
                break
            if failed is None:
                failed = CapExceeded(
                    word, tuple(tail), UpWord(word + branch.prefix, branch.period), target,
                    tuple(outputs + trial),
                )
        else:
            return failed
        outputs.extend(trial)
        for s in tail:
            q = aut.transitions[q][s]
        word = word + tuple(tail)
        k += 1
    return AdversaryWitness(word, tuple(outputs))
