"""Command-line interface.

Exit codes: 0 ok, 2 parse error, 3 semantic error, 4 bad word or symbol,
5 precondition on the kernel, 6 validation failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .corpus import DEFAULT_SEED, DEFAULT_SIZE, random_corpus, upword_grid
from .derivative import (
    analyze,
    format_rank,
    is_delta02,
    kernel_branch_contains,
    node_rank,
    rank_to_json,
    reachable_fixpoint_index,
)
from .guesser import (
    AdversaryWitness,
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
    PreconditionError,
    WordError,
    format_word,
    membership,
    parse_automaton,
    parse_upword,
    parse_word,
    run,
)
from .oracle import cross_check, node_level_derivative
from .report import Report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_WORD = 4
EXIT_PRECONDITION = 5
EXIT_VALIDATION = 6


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str):
    try:
        return parse_automaton(Path(path).read_text())
    except AutomatonSyntaxError as exc:
        _fail(EXIT_PARSE, str(exc))
    except AutomatonSemanticError as exc:
        _fail(EXIT_SEMANTIC, str(exc))


def _emit(ctx: click.Context, report: Report) -> None:
    click.echo(report.to_json() if ctx.obj["json"] else report.to_text())


def _set(states) -> list[int]:
    return sorted(states)


def _machine(aut, analysis, carved: bool):
    if carved:
        return synthesize_carved_guesser(aut, analysis)
    try:
        return synthesize_guesser(aut, analysis)
    except PreconditionError:
        _fail(
            EXIT_PRECONDITION,
            f"kernel nonempty (states {_set(analysis.kernel)}): plain guesser needs a Delta^0_2 set; try --carved",
        )


@click.group()
@click.version_option(version=__version__)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.pass_context
def main(ctx: click.Context, as_json: bool) -> None:
    """Decide Delta^0_2 for deterministic parity automata and build limit guessers."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


@main.command("analyze")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def analyze_cmd(ctx: click.Context, file: str) -> None:
    """Print the derivative chain, kernel, state ranks and the Delta^0_2 verdict."""
    aut = _load(file)
    an = analyze(aut)
    _emit(
        ctx,
        Report(
            "analyze",
            {
                "levels": [_set(lv) for lv in an.levels],
                "fixpoint_index": an.fixpoint_index,
                "kernel": _set(an.kernel),
                "state_rank": [rank_to_json(r) for r in an.state_rank],
                "delta02": is_delta02(an),
            },
        ),
    )


@main.command("rank")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("word")
@click.pass_context
def rank_cmd(ctx: click.Context, file: str, word: str) -> None:
    """Print the rank of the node WORD and its run."""
    aut = _load(file)
    try:
        w = aut.check_word(parse_word(word))
    except WordError as exc:
        _fail(EXIT_WORD, str(exc))
    an = analyze(aut)
    r = node_rank(aut, an, w)
    _emit(ctx, Report("rank", {"word": format_word(w), "run": run(aut, w), "rank": rank_to_json(r)}))


@main.command("guess")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("upword")
@click.option("--carved", is_flag=True, help="Guess the set minus the branches of its kernel.")
@click.pass_context
def guess_cmd(ctx: click.Context, file: str, upword: str, carved: bool) -> None:
    """Evaluate the limit of the guesser on the up-word UPWORD (syntax u;v)."""
    aut = _load(file)
    try:
        w = parse_upword(upword)
        aut.check_word(w.prefix)
        aut.check_word(w.period)
    except WordError as exc:
        _fail(EXIT_WORD, str(exc))
    an = analyze(aut)
    machine = _machine(aut, an, carved)
    outcome = limit_guess(machine, w)
    member = membership(aut, w)
    in_kernel = kernel_branch_contains(aut, an, w)
    expected = member and not in_kernel if carved else member
    agree = outcome is (Outcome.CONVERGES_TO_ONE if expected else Outcome.CONVERGES_TO_ZERO)
    _emit(
        ctx,
        Report(
            "guess",
            {
                "upword": str(w),
                "mode": "carved" if carved else "plain",
                "outcome": outcome.value,
                "member": member,
                "kernel_branch": in_kernel,
                "agree": "yes" if agree else "no",
            },
        ),
    )


@main.command("stream")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--carved", is_flag=True, help="Guess the set minus the branches of its kernel.")
@click.pass_context
def stream_cmd(ctx: click.Context, file: str, carved: bool) -> None:
    """Read one symbol per line from stdin and print one guess per symbol."""
    aut = _load(file)
    an = analyze(aut)
    machine = _machine(aut, an, carved)
    cfg = machine.initial_config()
    for line in sys.stdin:
        text = line.strip()
        if not text:
            continue
        try:
            s = int(text)
            cfg, bit = step(machine, cfg, s)
        except (ValueError, WordError):
            _fail(EXIT_WORD, f"invalid symbol line {text!r}")
        if ctx.obj["json"]:
            out = json.dumps({"bit": bit, "state": cfg.state, "minrank": rank_to_json(cfg.min_rank)})
        else:
            out = f"{bit} state={cfg.state} minrank={format_rank(cfg.min_rank)}"
        click.echo(out)
        sys.stdout.flush()


@main.command("check")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--depth", default=6, show_default=True, type=click.IntRange(min=0))
@click.pass_context
def check_cmd(ctx: click.Context, file: str, depth: int) -> None:
    """Cross-check engine node ranks against the node-level oracle up to DEPTH."""
    aut = _load(file)
    an = analyze(aut)
    table = node_level_derivative(aut, depth)
    res = cross_check(aut, an, table)
    _emit(
        ctx,
        Report(
            "check",
            {
                "depth": depth,
                "nodes": res.checked,
                "oracle_fixpoint_index": table.fixpoint_index,
                "engine_fixpoint_index": reachable_fixpoint_index(aut, an),
                "passed": res.passed,
                "disagreements": [
                    {"word": format_word(w), "oracle": rank_to_json(o), "engine": rank_to_json(e)}
                    for w, o, e in res.disagreements
                ],
            },
        ),
    )
    if not res.passed:
        sys.exit(EXIT_VALIDATION)


@main.command("adversary")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--alt", "alternations", default=10, show_default=True, type=click.IntRange(min=0))
@click.option("--cap", default=None, type=click.IntRange(min=1), help="Symbols per branch [default: 10*(alt+1)*n*(n+2)].")
@click.pass_context
def adversary_cmd(ctx: click.Context, file: str, alternations: int, cap: int | None) -> None:
    """Build a kernel word on which the naive guesser keeps changing its mind."""
    aut = _load(file)
    an = analyze(aut)
    n = aut.states
    if cap is None:
        cap = 10 * (alternations + 1) * n * (n + 2)
    try:
        res = adversary_build(aut, an, naive_guesser(aut), alternations, cap)
    except PreconditionError as exc:
        _fail(EXIT_PRECONDITION, f"{exc} (kernel states {_set(an.kernel)})")
    if isinstance(res, AdversaryWitness):
        data = {
            "result": "witness",
            "alternations": alternations,
            "cap": cap,
            "word": format_word(res.word),
            "alternation_positions": res.alternation_positions,
        }
    else:
        data = {
            "result": "cap_exceeded",
            "alternations": alternations,
            "cap": cap,
            "word": format_word(res.word),
            "branch": str(res.branch),
            "branch_member": membership(aut, res.branch),
            "stuck_output": res.outputs[-1],
        }
    _emit(ctx, Report("adversary", data))


@main.command("corpus")
@click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int)
@click.option("--count", default=DEFAULT_SIZE, show_default=True, type=click.IntRange(min=1))
@click.option("--depth", default=6, show_default=True, type=click.IntRange(min=0))
@click.option("--save", type=click.Path(file_okay=False), help="Write each automaton as JSON into this directory.")
@click.pass_context
def corpus_cmd(ctx: click.Context, seed: int, count: int, depth: int, save: str | None) -> None:
    """Validate engine, oracle and guessers over a seeded random corpus."""
    grid = upword_grid()
    failures = []
    delta02 = 0
    for i, aut in enumerate(random_corpus(count, seed)):
        if save:
            Path(save).mkdir(parents=True, exist_ok=True)
            (Path(save) / f"aut{i:04d}.json").write_text(aut.to_json())
        an = analyze(aut)
        if not cross_check(aut, an, node_level_derivative(aut, depth)).passed:
            failures.append({"index": i, "check": "oracle"})
        carved = synthesize_carved_guesser(aut, an)
        plain = synthesize_guesser(aut, an) if is_delta02(an) else None
        delta02 += plain is not None
        for w in grid:
            member = membership(aut, w)
            want = member and not kernel_branch_contains(aut, an, w)
            if limit_guess(carved, w) is not (Outcome.CONVERGES_TO_ONE if want else Outcome.CONVERGES_TO_ZERO):
                failures.append({"index": i, "check": "carved", "upword": str(w)})
                break
            if plain and limit_guess(plain, w) is not (
                Outcome.CONVERGES_TO_ONE if member else Outcome.CONVERGES_TO_ZERO
            ):
                failures.append({"index": i, "check": "plain", "upword": str(w)})
                break
    _emit(
        ctx,
        Report(
            "corpus",
            {
                "seed": seed,
                "count": count,
                "depth": depth,
                "delta02": delta02,
                "passed": not failures,
                "failures": failures,
            },
        ),
    )
    if failures:
        sys.exit(EXIT_VALIDATION)


if __name__ == "__main__":
    main()
