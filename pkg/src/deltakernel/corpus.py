"""Named automata and the seeded random corpus used for validation."""

from __future__ import annotations

import random

from .model import ParityAutomaton, UpWord, all_words

DEFAULT_SEED = 20120101
DEFAULT_SIZE = 500


def all_ones() -> ParityAutomaton:
    """Words with no 0. States: a=0 (priority 0, initial), b=1 (rejecting sink)."""
    return ParityAutomaton(2, 2, 0, (0, 1), ((1, 0), (1, 1)))


def infinitely_many_ones() -> ParityAutomaton:
    """Words with infinitely many 1s. States: p=0 (last read 0, priority 1), r=1 (last read 1, priority 2)."""
    return ParityAutomaton(2, 2, 0, (1, 2), ((0, 1), (0, 1)))


def mixed() -> ParityAutomaton:
    """1 leads into all_ones, 0 into infinitely_many_ones.

    States: c=0 (initial), a=1, b=2, p=3, r=4.
    """
    return ParityAutomaton(
        2,
        5,
        0,
        (0, 0, 1, 1, 2),
        ((3, 1), (2, 1), (2, 2), (3, 4), (3, 4)),
    )


def empty_set() -> ParityAutomaton:
    return ParityAutomaton(2, 1, 0, (1,), ((0, 0),))


def full_set() -> ParityAutomaton:
    return ParityAutomaton(2, 1, 0, (0,), ((0, 0),))


NAMED = {
    "all_ones": all_ones,
    "infinitely_many_ones": infinitely_many_ones,
    "mixed": mixed,
    "empty": empty_set,
    "full": full_set,
}


def random_automaton(rng: random.Random, max_states: int = 5, alphabet: int = 2, max_priority: int = 3) -> ParityAutomaton:
    n = rng.randint(1, max_states)
    return ParityAutomaton(
        alphabet=alphabet,
        states=n,
        initial=rng.randrange(n),
        priority=tuple(rng.randint(0, max_priority) for _ in range(n)),
        transitions=tuple(tuple(rng.randrange(n) for _ in range(alphabet)) for _ in range(n)),
    )


def random_corpus(size: int = DEFAULT_SIZE, seed: int = DEFAULT_SEED, **kwargs) -> list[ParityAutomaton]:
    rng = random.Random(seed)
    return [random_automaton(rng, **kwargs) for _ in range(size)]


def upword_grid(alphabet: int = 2, max_prefix: int = 4, max_period: int = 4) -> list[UpWord]:
    """All up-words with ``len(prefix) <= max_prefix`` and ``1 <= len(period) <= max_period``."""
    prefixes = all_words(alphabet, max_prefix)
    periods = [v for v in all_words(alphabet, max_period) if v]
    return [UpWord(u, v) for u in prefixes for v in periods]
