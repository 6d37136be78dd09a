from deltakernel import KERNEL, analyze, cross_check, node_level_derivative
from deltakernel.corpus import random_corpus
from deltakernel.derivative import reachable_fixpoint_index

from brute import words


def test_all_ones_depth_3(aones):
    table = node_level_derivative(aones, 3)
    for w in words(2, 3):
        assert table[w] == (1 if 0 in w else 2)


def test_infinitely_many_ones_depth_2(imo):
    table = node_level_derivative(imo, 2)
    assert len(table.nodes()) == 7
    assert all(table[w] == KERNEL for w in table.nodes())


def test_mixed_depth_2(mixed_aut):
    table = node_level_derivative(mixed_aut, 2)
    assert table[()] == KERNEL and table[(0,)] == KERNEL
    assert table[(1,)] == 2 and table[(1, 1)] == 2 and table[(1, 0)] == 1
    assert table[(0, 0)] == KERNEL and table[(0, 1)] == KERNEL


def test_cross_check_named(aones, imo, mixed_aut, empty_aut, full_aut):
    for aut in (aones, imo, mixed_aut, empty_aut, full_aut):
        report = cross_check(aut, analyze(aut), node_level_derivative(aut, 6))
        assert report.passed and report.checked == 127


def test_cross_check_reports_disagreement(aones, imo):
    # table for one automaton checked against another must disagree
    report = cross_check(aones, analyze(aones), node_level_derivative(imo, 2))
    assert not report.passed
    assert ((), KERNEL, 2) in report.disagreements


def test_oracle_table_is_monotone():
    for aut in random_corpus(100, seed=13):
        table = node_level_derivative(aut, 5)
        for w in table.nodes():
            if w:
                assert table[w] <= table[w[:-1]]


def test_oracle_fixpoint_matches_engine():
    for aut in random_corpus(150, seed=17):
        an = analyze(aut)
        table = node_level_derivative(aut, 6)
        assert table.fixpoint_index == reachable_fixpoint_index(aut, an)
        assert cross_check(aut, an, table).passed
