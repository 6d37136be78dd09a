"""Exit criteria, each checked over the seeded corpus at its stated tolerance."""

import json
import time
from itertools import combinations

import networkx as nx
from click.testing import CliRunner

from deltakernel import (
    KERNEL,
    AdversaryWitness,
    Outcome,
    adversary_build,
    analyze,
    enumerate_simple_lassos,
    exists_accepting_run_within,
    exists_rejecting_run_within,
    is_delta02,
    kernel_branch_contains,
    limit_guess,
    membership,
    naive_guesser,
    node_in_level,
    node_rank,
    prefix,
    synthesize_carved_guesser,
    synthesize_guesser,
)
from deltakernel.cli import main
from deltakernel.corpus import all_ones
from deltakernel.model import UpWord, lasso_run, run
from deltakernel.runs import lasso_is_accepting, reachable_within

from brute import words

FIVE_MINUTES = 300.0


def max_naive_alternations(aut, an):
    """Most output changes the naive guesser can show along any word of kernel nodes.

    The naive guess at a node depends only on the state reached, so this is the
    longest alternation count over paths in the reachable kernel graph
    (infinite when one strongly connected piece holds both guesses).
    """
    reach = reachable_within(aut, aut.initial, an.kernel)
    bit = {q: membership(aut, UpWord((), (0,)), start=q) for q in reach}
    g = nx.DiGraph()
    g.add_nodes_from(reach)
    g.add_edges_from((x, y) for x in reach for y in aut.transitions[x] if y in reach)
    dag = nx.condensation(g)
    for c in dag.nodes:
        if len({bit[q] for q in dag.nodes[c]["members"]}) > 1:
            return float("inf")
    best = {}
    for c in reversed(list(nx.topological_sort(dag))):
        b = bit[next(iter(dag.nodes[c]["members"]))]
        best[c] = max(
            (best[d] + (b != bit[next(iter(dag.nodes[d]["members"]))]) for d in dag.successors(c)),
            default=0,
        )
    return best[dag.graph["mapping"][aut.initial]]


def test_corpus_shape(corpus):
    assert len(corpus) >= 500
    assert all(a.states <= 5 and a.alphabet == 2 and max(a.priority) <= 3 for a in corpus)


def test_c1_paper_example(tmp_path, verdict):
    start = time.perf_counter()
    path = tmp_path / "all_ones.json"
    path.write_text(all_ones().to_json())
    res = CliRunner().invoke(main, ["--json", "analyze", str(path)])
    doc = json.loads(res.output)
    an = analyze(all_ones())
    elapsed = time.perf_counter() - start
    ok = (
        res.exit_code == 0
        and doc["levels"] == [[0, 1], [0], []]
        and an.levels[1] == {0}
        and an.levels[2] == frozenset()
        and doc["delta02"] is True
        and is_delta02(an)
        and elapsed < 1.0
    )
    verdict("C1 paper example", ok, f"levels={doc['levels']} delta02={doc['delta02']} in {elapsed:.3f}s")


def test_c2_plain_guesser_agreement(analyzed, grid, verdict):
    start = time.perf_counter()
    checked = bad = diverged = 0
    for aut, an in analyzed:
        if not is_delta02(an):
            continue
        g = synthesize_guesser(aut, an)
        for w in grid:
            out = limit_guess(g, w)
            diverged += out is Outcome.DIVERGES
            bad += out is not (Outcome.CONVERGES_TO_ONE if membership(aut, w) else Outcome.CONVERGES_TO_ZERO)
            checked += 1
    elapsed = time.perf_counter() - start
    verdict(
        "C2a plain guesser = membership",
        bad == 0 and diverged == 0 and elapsed < FIVE_MINUTES,
        f"{checked} (automaton, up-word) pairs, {bad} mismatches, {diverged} diverging, {elapsed:.1f}s",
    )


def test_c2_adversary_against_naive(analyzed, verdict):
    start = time.perf_counter()
    alternations = 10
    total = wins = impossible = 0
    for aut, an in analyzed:
        if is_delta02(an):
            continue
        total += 1
        n = aut.states
        cap = 10 * (alternations + 1) * n * (n + 2)
        res = adversary_build(aut, an, naive_guesser(aut), alternations, cap)
        if isinstance(res, AdversaryWitness) and len(res.alternation_positions) >= alternations:
            wins += 1
            continue
        impossible += max_naive_alternations(aut, an) < alternations
    elapsed = time.perf_counter() - start
    verdict(
        "C2b adversary vs naive guesser",
        wins == total and elapsed < FIVE_MINUTES,
        f"{wins}/{total} non-Delta02 automata gave a >=10-alternation witness; "
        f"for {impossible} of the other {total - wins} no kernel word makes the naive guesser "
        f"change its output {alternations} times; {elapsed:.1f}s",
    )


def test_c3_oracle_equivalence(corpus, tmp_path, verdict):
    start = time.perf_counter()
    runner = CliRunner()
    failed = []
    for i, aut in enumerate(corpus):
        path = tmp_path / f"aut{i:04d}.json"
        path.write_text(aut.to_json())
        res = runner.invoke(main, ["--json", "check", str(path), "--depth", "6"])
        doc = json.loads(res.output)
        if res.exit_code != 0 or not doc["passed"] or doc["oracle_fixpoint_index"] != doc["engine_fixpoint_index"]:
            failed.append(i)
    elapsed = time.perf_counter() - start
    verdict(
        "C3 oracle equivalence (check --depth 6)",
        not failed and elapsed < FIVE_MINUTES,
        f"{len(corpus) - len(failed)}/{len(corpus)} pass, {elapsed:.1f}s",
    )


def test_c4_carved_guesser(analyzed, grid, verdict):
    bad = diverged = checked = 0
    for aut, an in analyzed:
        g = synthesize_carved_guesser(aut, an)
        for w in grid:
            out = limit_guess(g, w)
            want = membership(aut, w) and not kernel_branch_contains(aut, an, w)
            diverged += out is Outcome.DIVERGES
            bad += out is not (Outcome.CONVERGES_TO_ONE if want else Outcome.CONVERGES_TO_ZERO)
            checked += 1
    verdict(
        "C4 carved guesser",
        bad == 0 and diverged == 0,
        f"{checked} pairs over {len(analyzed)} automata, {bad} mismatches, {diverged} diverging",
    )


def test_c5_lemma_suite(analyzed, grid, verdict):
    monotone_bad = stab_bad = resid_bad = 0
    for aut, an in analyzed:
        ranks = {w: node_rank(aut, an, w) for w in words(2, 8)}
        for tau, r in ranks.items():
            if any(r > ranks[tau[:i]] for i in range(len(tau))):
                monotone_bad += 1
        for w in grid:
            if kernel_branch_contains(aut, an, w):
                continue
            stem, cycle = lasso_run(aut, w)
            # the horizon covers one full configuration cycle, so every state
            # seen infinitely often has been read by then
            horizon = max(len(w.prefix) + len(w.period) * (aut.states + 1), len(stem) + len(cycle))
            states = run(aut, prefix(w, horizon))
            seq, m = [], KERNEL
            for q in states:
                m = min(m, an.state_rank[q])
                seq.append(m)
            final = seq[-1]
            i = seq.index(final)
            limit = min(an.state_rank[q] for q in stem + cycle)
            if final == KERNEL or final != limit or any(x != final for x in seq[i:]):
                stab_bad += 1
                continue
            if not all(node_in_level(aut, an, prefix(w, k), int(final) - 1) for k in range(horizon + 1)):
                resid_bad += 1
    verdict(
        "C5 lemma suite",
        monotone_bad == stab_bad == resid_bad == 0,
        f"monotonicity violations={monotone_bad} (depth 8), stabilization={stab_bad}, residence={resid_bad}",
    )


def test_c6_primitive_independence(analyzed, verdict):
    triples = bad = 0
    for aut, _ in analyzed:
        n = aut.states
        for q in range(n):
            others = [x for x in range(n) if x != q]
            for k in range(n):
                for extra in combinations(others, k):
                    P = frozenset((q, *extra))
                    kinds = {lasso_is_accepting(aut, la) for la in enumerate_simple_lassos(aut, q, P, n)}
                    triples += 1
                    if exists_accepting_run_within(aut, q, P) != (True in kinds):
                        bad += 1
                    elif exists_rejecting_run_within(aut, q, P) != (False in kinds):
                        bad += 1
    verdict("C6 analysis-primitive independence", bad == 0, f"{triples} (automaton, q, P) triples, {bad} disagreements")
