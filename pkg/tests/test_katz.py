# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from rigidconv.core.errors import (KatzError, NotIrreducible, NotRigid,
                                   ReplayMismatch, Resonant, Stuck)
from rigidconv.core.models.reports import KatzStep, KatzTrace
from rigidconv.core.models.system import FuchsianSystem, RankOneTwist
from rigidconv.lib.convolution import mc
from rigidconv.lib.exact.matrix import MatQ
from rigidconv.lib.fuchsian import (direct_sum, is_isomorphic, kummer,
                                    rigidity_index)
from rigidconv.lib.katz import (katz_chain, katz_reduce, katz_step, replay,
                                select_lambda, select_twist)

F = Fraction


def diagonal(*values):
    n = len(values)
    return MatQ([[values[i] if i == j else 0 for j in range(n)]
                 for i in range(n)])


@pytest.fixture()
def rank_three():
    source = FuchsianSystem(1, [0, 1, -1],
                            [[[F(1, 2)]], [[F(1, 3)]], [[F(1, 5)]]])
    return mc(source, F(1, 7))


class TestSelection:
    def test_twist_by_multiplicity(self):
        system = FuchsianSystem(2, [0, 1], [diagonal(F(2, 3), F(1, 3)),
                                            diagonal(F(1, 4), F(1, 4))])
        assert select_twist(system) == RankOneTwist([F(-1, 3), F(-1, 4)])

    def test_twist_ties(self):
        system = FuchsianSystem(2, [0], [diagonal(F(1, 2), F(-1, 2))])
        assert select_twist(system) == RankOneTwist([F(1, 2)])

    def test_twist_of_corpus(self, worked_rank_two, hypergeometric_system):
        assert select_twist(worked_rank_two) == RankOneTwist([0, 0])
        assert select_twist(hypergeometric_system) == RankOneTwist([0, 0])

    def test_lambda(self, worked_rank_two, hypergeometric_system, rank_three):
        assert select_lambda(worked_rank_two) == F(-1, 6)
        assert select_lambda(hypergeometric_system) == F(-1, 7)
        assert select_lambda(rank_three) == F(-1, 7)

    def test_stuck(self, nilpotent_residues):
        with pytest.raises(Stuck):
            select_lambda(nilpotent_residues)


class TestStep:
    def test_worked_rank_two(self, worked_rank_two, worked_rank_one):
        step, reduced = katz_step(worked_rank_two)
        assert step.alphas == (0, 0)
        assert step.lam == F(-1, 6)
        assert (step.rank_before, step.rank_after) == (2, 1)
        assert step.pruned_points == ()
        assert reduced == worked_rank_one

    def test_rank_one(self, worked_rank_one):
        with pytest.raises(KatzError) as info:
            katz_step(worked_rank_one)
        assert info.value.path == 'rank'

    def test_preconditions(self, non_rigid, nilpotent_residues):
        with pytest.raises(NotRigid):
            katz_step(non_rigid)
        with pytest.raises(Resonant):
            katz_step(nilpotent_residues)
        with pytest.raises(NotIrreducible):
            katz_step(direct_sum(kummer(0, F(1, 2)), kummer(1, F(1, 3))))


class TestReduction:
    def test_hypergeometric(self, hypergeometric_system):
        trace = katz_reduce(hypergeometric_system)
        assert len(trace) == 1
        assert trace.steps[0].lam == F(-1, 7)
        assert trace.terminal == FuchsianSystem(1, [0, 1],
                                                [[[F(1, 3)]], [[F(1, 5)]]])
        assert trace.source is hypergeometric_system

    def test_rank_three(self, rank_three):
        assert rank_three.rank == 3
        assert rigidity_index(rank_three) == 2
        trace, chain = katz_chain(rank_three)
        assert [s.lam for s in trace.steps] == [F(-1, 7)]
        assert [s.rank for s in chain] == [3, 1]
        assert trace.terminal.residues == (MatQ([[F(1, 2)]]),
                                           MatQ([[F(1, 3)]]),
                                           MatQ([[F(1, 5)]]))

    def test_rank_one_input(self, worked_rank_one):
        trace = katz_reduce(worked_rank_one)
        assert trace.steps == []
        assert trace.terminal == worked_rank_one
        assert replay(trace) == worked_rank_one

    def test_failure_carries_trace(self, non_rigid):
        with pytest.raises(NotRigid) as info:
            katz_reduce(non_rigid)
        assert info.value.trace.steps == []
        assert info.value.trace.terminal == non_rigid


class TestReplay:
    def test_worked_rank_two(self, worked_rank_two):
        trace = katz_reduce(worked_rank_two)
        assert replay(trace) == worked_rank_two

    def test_hypergeometric(self, hypergeometric_system):
        rebuilt = replay(katz_reduce(hypergeometric_system))
        assert is_isomorphic(rebuilt, hypergeometric_system)

    def test_rank_three(self, rank_three):
        assert is_isomorphic(replay(katz_reduce(rank_three)), rank_three)

    def test_tampered_lambda(self, worked_rank_two):
        trace = katz_reduce(worked_rank_two)
        step = trace.steps[0]
        tampered = KatzTrace(trace.source,
                             [KatzStep(step.alphas, -step.lam, 2, 1)],
                             trace.terminal)
        with pytest.raises(ReplayMismatch):
            replay(tampered)

    def test_pruned_points_restored(self):
        # mc_1/6 leaves a zero residue at 0, which the trace must restore
        source = FuchsianSystem(1, [0, 1], [[[0]], [[F(1, 3)]]])
        convolved = mc(source, F(1, 6))
        step = KatzStep([0, 0], F(1, 6), 1, 1, [0])
        trace = KatzTrace(source, [step], kummer(1, F(1, 2)))
        assert convolved.residues[0].is_zero()
        assert replay(trace) == source
