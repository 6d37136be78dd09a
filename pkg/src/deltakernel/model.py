"""Words, ultimately periodic words and deterministic parity automata."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

Word = tuple[int, ...]


class AutomatonError(ValueError):
    """Base class for problems with an automaton document."""


class AutomatonSyntaxError(AutomatonError):
    """The document is not well formed (bad JSON, missing field, wrong type)."""


class AutomatonSemanticError(AutomatonError):
    """The document is well formed but does not describe a valid automaton."""


class WordError(ValueError):
    """A word contains a symbol outside the alphabet, or is malformed."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


@dataclass(frozen=True)
class UpWord:
    """The infinite word ``prefix + period + period + ...``."""

    prefix: Word
    period: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise WordError("period of an ultimately periodic word must be nonempty")

    def symbol_at(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def __str__(self) -> str:
        return format_word(self.prefix) + ";" + format_word(self.period)


def prefix(w: UpWord, n: int) -> Word:
    """First ``n`` symbols of ``w``; ``prefix(w, 0)`` is the empty word."""
    return tuple(w.symbol_at(i) for i in range(n))


@dataclass(frozen=True)
class ParityAutomaton:
    """Deterministic, total, state-based max-parity automaton.

    ``transitions[q][s]`` is the successor of state ``q`` on symbol ``s``.
    A run is accepting iff the largest priority seen infinitely often is even.
    """

    alphabet: int
    states: int
    initial: int
    priority: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "priority", tuple(self.priority))
        object.__setattr__(
            self, "transitions", tuple(tuple(row) for row in self.transitions)
        )
        _validate(self)

    def delta(self, q: int, s: int) -> int:
        return self.transitions[q][s]

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        for s in w:
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < self.alphabet:
                raise WordError(f"symbol {s!r} out of range for alphabet of size {self.alphabet}")
        return w

    def successors(self, q: int) -> set[int]:
        return set(self.transitions[q])

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "states": self.states,
            "initial": self.initial,
            "priority": list(self.priority),
            "transitions": [list(row) for row in self.transitions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def relabel(self, perm: Sequence[int]) -> ParityAutomaton:
        """Copy with state ``q`` renamed to ``perm[q]``."""
        inv = {perm[q]: q for q in range(self.states)}
        return ParityAutomaton(
            alphabet=self.alphabet,
            states=self.states,
            initial=perm[self.initial],
            priority=tuple(self.priority[inv[q]] for q in range(self.states)),
            transitions=tuple(
                tuple(perm[t] for t in self.transitions[inv[q]]) for q in range(self.states)
            ),
        )


def _validate(aut: ParityAutomaton) -> None:
    if aut.alphabet < 1:
        raise AutomatonSemanticError("alphabet size must be at least 1")
    if aut.states < 1:
        raise AutomatonSemanticError("automaton needs at least one state")
    if not 0 <= aut.initial < aut.states:
        raise AutomatonSemanticError("initial state out of range")
    if len(aut.priority) != aut.states:
        raise AutomatonSemanticError("missing priority: expected one per state")
    if any(p < 0 for p in aut.priority):
        raise AutomatonSemanticError("priorities must be natural numbers")
    if len(aut.transitions) != aut.states:
        raise AutomatonSemanticError("transition not total: expected one row per state")
    for q, row in enumerate(aut.transitions):
        if len(row) != aut.alphabet:
            raise AutomatonSemanticError(f"transition not total: state {q} has {len(row)} successors")
        for s, t in enumerate(row):
            if not 0 <= t < aut.states:
                raise AutomatonSemanticError(f"transition ({q},{s}) targets out-of-range state {t}")


_FIELDS = ("alphabet", "states", "initial", "priority", "transitions")


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_automaton(text: str) -> ParityAutomaton:
    """Parse a JSON automaton document.

    Raises AutomatonSyntaxError for malformed documents and
    AutomatonSemanticError for well-formed documents that violate the
    automaton invariants.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonSyntaxError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise AutomatonSyntaxError("document must be a JSON object")
    missing = [f for f in _FIELDS if f not in doc]
    if missing:
        raise AutomatonSyntaxError(f"missing field(s): {', '.join(missing)}")
    for f in ("alphabet", "states", "initial"):
        if not _is_int(doc[f]):
            raise AutomatonSyntaxError(f"field {f!r} must be an integer")
    pr = doc["priority"]
    if not isinstance(pr, list) or not all(_is_int(p) for p in pr):
        raise AutomatonSyntaxError("field 'priority' must be an array of integers")
    tr = doc["transitions"]
    if not isinstance(tr, list) or not all(
        isinstance(row, list) and all(_is_int(t) for t in row) for row in tr
    ):
        raise AutomatonSyntaxError("field 'transitions' must be an array of integer arrays")
    return ParityAutomaton(
        alphabet=doc["alphabet"],
        states=doc["states"],
        initial=doc["initial"],
        priority=tuple(pr),
        transitions=tuple(tuple(row) for row in tr),
    )


def run(aut: ParityAutomaton, w: Sequence[int]) -> list[int]:
    """State sequence of length ``len(w) + 1`` starting at the initial state."""
    w = aut.check_word(w)
    states = [aut.initial]
    for s in w:
        states.append(aut.transitions[states[-1]][s])
    return states


def lasso_run(aut: ParityAutomaton, w: UpWord, start: int | None = None):
    """Decompose the run on ``w`` into a stem and a configuration cycle.

    Returns ``(stem, cycle)`` as lists of states: the run is ``stem`` followed
    by ``cycle`` repeated forever, where the repeat is detected on
    ``(phase in period, state)`` configurations.
    """
    aut.check_word(w.prefix)
    aut.check_word(w.period)
    q = aut.initial if start is None else start
    stem = [q]
    for s in w.prefix:
        q = aut.transitions[q][s]
        stem.append(q)
    # stem[-1] is the state at phase 0; walk (phase, state) until repeat
    seen: dict[tuple[int, int], int] = {}
    trace: list[int] = []
    phase = 0
    while (phase, q) not in seen:
        seen[(phase, q)] = len(trace)
        trace.append(q)
        q = aut.transitions[q][w.period[phase]]
        phase = (phase + 1) % len(w.period)
    start_idx = seen[(phase, q)]
    stem = stem[:-1] + trace[:start_idx]
    return stem, trace[start_idx:]


def membership(aut: ParityAutomaton, w: UpWord, start: int | None = None) -> bool:
    _, cycle = lasso_run(aut, w, start)
    return max(aut.priority[q] for q in cycle) % 2 == 0


def parse_word(text: str) -> Word:
    """Parse ``"1,0,1"`` (or the empty string) into a word."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise WordError(f"malformed word {text!r}") from exc


def parse_upword(text: str) -> UpWord:
    """Parse ``"u;v"`` with comma-separated symbol lists and nonempty ``v``."""
    if text.count(";") != 1:
        raise WordError(f"up-word {text!r} must have the form 'u;v'")
    u, v = text.split(";")
    return UpWord(parse_word(u), parse_word(v))


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(s) for s in w)


def all_words(alphabet: int, depth: int) -> list[Word]:
    """Every word of length at most ``depth``, shortest first."""
    out: list[Word] = []
    for n in range(depth + 1):
        out.extend(itertools.product(range(alphabet), repeat=n))
    return out
