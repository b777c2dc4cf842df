# -*- coding: utf-8 -*-
import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from rigidconv.core.errors import (BadPrime, IntegerParameter, ZeroInput)
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.core.types.enumerations import PCurvatureStatus
from rigidconv.lib import corpus
from rigidconv.lib.arithmetic import (build_tower, gauss_norm, good_primes,
                                      h_bound, inequality_report,
                                      nilpotency_sweep, pcurvature,
                                      pcurvature_pair, pcurvature_report,
                                      rank_one_verdict, rho_truncated)
from rigidconv.lib.arithmetic.radius import candidate_primes, default_window
from rigidconv.lib.convolution import mc
from rigidconv.lib.etc import primes_between
from rigidconv.lib.exact import PolyFp, PolyQ
from rigidconv.lib.fuchsian import kummer, tensor_product, trivial_system

F = Fraction
t = sympy.Symbol('t')


def falling(a, s):
    value = F(1)
    for k in range(s):
        value *= a - k
    return value


def sympy_residue_sum(system: FuchsianSystem) -> sympy.Matrix:
    n = system.rank
    total = sympy.zeros(n, n)
    for q, residue in zip(system.points, system.residues):
        matrix = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                                for v in row] for row in residue.tolist()])
        total += matrix / (t - sympy.Rational(q.numerator, q.denominator))
    return total


def sympy_denominator(system: FuchsianSystem):
    return sympy.prod([t - sympy.Rational(q.numerator, q.denominator)
                       for q in system.points])


def as_polyq(expr) -> PolyQ:
    coefficients = sympy.Poly(sympy.cancel(expr), t).all_coeffs()
    return PolyQ([F(int(c.p), int(c.q)) for c in reversed(coefficients)])


def as_polyfp(expr, p) -> PolyFp:
    coefficients = sympy.Poly(sympy.cancel(expr), t).all_coeffs()
    return PolyFp([int(c.p) * pow(int(c.q), -1, p) % p
                   for c in reversed(coefficients)], p)


class TestTower:
    def test_kummer_falling_factorial(self):
        a = F(1, 2)
        tower = build_tower(kummer(0, a), 6)
        assert tower.depth == 6
        assert tower.level(0) == [[PolyQ.constant(1)]]
        for s in range(1, 7):
            assert tower.level(s) == [[PolyQ.constant(falling(a, s))]]

    def test_nilpotent_residue(self, system_factory):
        tower = build_tower(system_factory(2, [0], [[[0, 1], [0, 0]]]), 6)
        for s in range(1, 7):
            value = (-1) ** (s - 1) * math.factorial(s - 1)
            assert tower.level(s) == [[PolyQ(), PolyQ.constant(value)],
                                      [PolyQ(), PolyQ()]]

    def test_trivial(self):
        tower = build_tower(trivial_system(2, [0, 1]), 4)
        for s in range(1, 5):
            assert all(e.is_zero() for row in tower.level(s) for e in row)

    def test_depth(self, worked_rank_two):
        with pytest.raises(ValueError):
            build_tower(worked_rank_two, 0)
        tower = build_tower(worked_rank_two, 2).extend(5)
        assert len(tower) == 6

    @pytest.mark.parametrize('name', ['worked-rank-two', 'hypergeometric',
                                      'non-rigid-four-point'])
    def test_against_rational_functions(self, name):
        system = corpus.get(name)
        tower = build_tower(system, 5)
        a = sympy_residue_sum(system)
        d = sympy_denominator(system)
        current = sympy.eye(system.rank)
        for s in range(1, 6):
            current = (current.diff(t) + a * current).applyfunc(sympy.cancel)
            expected = [[as_polyq(current[i, j] * d ** s)
                         for j in range(system.rank)]
                        for i in range(system.rank)]
            assert tower.level(s) == expected


def random_poly(rng, degree=4):
    coefficients = [F(int(rng.integers(-40, 41)), int(rng.integers(1, 50)))
                    for _ in range(int(rng.integers(0, degree + 1)))]
    leading = int(rng.integers(1, 40)) * int(rng.choice([-1, 1]))
    return PolyQ(coefficients + [F(leading, int(rng.integers(1, 50)))])


class TestGaussNorm:
    def test_example(self):
        assert gauss_norm(PolyQ([F(3, 2), 6, 3]), 2) == 1
        assert gauss_norm(PolyQ([F(3, 2), 6, 3]), 3) == -1
        assert gauss_norm(PolyQ([5, 7]), 11) == 0

    def test_multiplicative(self):
        f = PolyQ([F(3, 2), 6, 3])
        g = PolyQ([F(1, 4), 1])
        assert gauss_norm(f * g, 2) == gauss_norm(f, 2) + gauss_norm(g, 2) == 3
        assert gauss_norm(PolyQ([1, 2]) * PolyQ([2, 1]), 2) == 0

    @pytest.mark.parametrize('p', primes_between(2, 20))
    def test_multiplicative_random(self, p):
        rng = np.random.default_rng(300 + p)
        for _ in range(10):
            f, g = random_poly(rng), random_poly(rng)
            assert gauss_norm(f * g, p) == gauss_norm(f, p) + gauss_norm(g, p)

    def test_ratio(self):
        assert gauss_norm((PolyQ([F(3, 2), 6, 3]), PolyQ([F(1, 4), 1])), 2) == -1

    def test_zero(self):
        with pytest.raises(ZeroInput):
            gauss_norm(PolyQ(), 5)


class TestRadius:
    def test_kummer_half(self, kummer_half):
        rho = rho_truncated(kummer_half, 64)
        assert rho.window == (32, 64)
        assert rho.primes == [2]
        assert rho.total == pytest.approx(127 / 64 * math.log(2))
        assert rho.total == pytest.approx(1.3755, abs=1e-4)

    def test_kummer_third(self):
        rho = rho_truncated(corpus.get('kummer-third'), 54)
        assert rho.primes == [3]
        assert rho.total == pytest.approx(40 / 27 * math.log(3))
        assert rho.total == pytest.approx(1.6276, abs=1e-4)

    def test_below_h_bound(self, kummer_half):
        assert rho_truncated(kummer_half, 64).total <= h_bound(F(1, 2)).value

    def test_trivial(self):
        rho = rho_truncated(trivial_system(2, [0, 1]), 8)
        assert rho.contributions == []
        assert rho.total == 0

    def test_stable_under_extra_primes(self, worked_rank_one):
        rho = rho_truncated(worked_rank_one, 16)
        wider = rho_truncated(worked_rank_one, 16, extra_prime_bound=64)
        assert rho.contributions == wider.contributions
        assert rho.primes == [2, 3]

    def test_doubled_bound_random(self):
        rng = np.random.default_rng(64)
        for _ in range(6):
            system = random_system(rng, 2, [0, F(1, 3), -2])
            rho = rho_truncated(system, 12)
            doubled = rho_truncated(system, 12, extra_prime_bound=24)
            assert rho.contributions == doubled.contributions
            assert rho.total == doubled.total

    def test_kummer_tensor_subadditive(self):
        rng = np.random.default_rng(11)
        denominators = [2, 3, 4, 6, 8, 9, 12, 25, 27]

        def exponent():
            return F(int(rng.integers(-30, 31)), int(rng.choice(denominators)))

        for _ in range(15):
            a, b = exponent(), exponent()
            product = tensor_product(kummer(0, a), kummer(0, b))
            assert product == kummer(0, a + b)
            total = rho_truncated(product, 16).total
            bound = (rho_truncated(kummer(0, a), 16).total
                     + rho_truncated(kummer(0, b), 16).total)
            assert total <= bound + 1e-12

    def test_candidates(self, system_factory):
        system = system_factory(1, [0, F(1, 13)], [[[F(1, 17)]], [[1]]])
        assert candidate_primes(system, 5) == [2, 3, 5, 13, 17]
        assert candidate_primes(system, 5, 12) == [2, 3, 5, 7, 11, 13, 17]

    def test_window(self, kummer_half):
        assert default_window(7) == (4, 7)
        rho = rho_truncated(kummer_half, 8, window=(8, 8))
        # |binom(1/2, 8)|_2 = 2**(16 - 1)
        assert rho.total == pytest.approx(15 / 8 * math.log(2))
        with pytest.raises(ValueError):
            rho_truncated(kummer_half, 8, window=(0, 8))
        with pytest.raises(ValueError):
            rho_truncated(kummer_half, 3)


class TestHBound:
    @pytest.mark.parametrize('lam,expected', [
        (F(1, 2), 2 * math.log(2)),
        (F(1, 6), 2 * math.log(2) + 1.5 * math.log(3)),
        (F(5, 3), 1.5 * math.log(3)),
        (F(7, 4), 3 * math.log(2)),
    ])
    def test_values(self, lam, expected):
        assert h_bound(lam).value == pytest.approx(expected)

    def test_terms(self):
        assert h_bound(F(1, 6)).terms == [(2, F(2)), (3, F(3, 2))]

    @pytest.mark.parametrize('lam', [0, 3, F(-4, 2)])
    def test_integer(self, lam):
        with pytest.raises(IntegerParameter):
            h_bound(lam)


def test_inequality_report(worked_rank_one):
    report = inequality_report(worked_rank_one, F(1, 6), S=16)
    assert report.mc_rank == 2
    assert report.h_value == pytest.approx(h_bound(F(1, 6)).value)
    assert report.bound == pytest.approx(2 * (report.rho_system
                                              + report.h_value))
    assert 0 < report.kummer_rho
    assert report.kummer_holds


class TestGoodPrimes:
    def test_denominators(self, worked_rank_one):
        assert good_primes(worked_rank_one, (2, 13)) == [5, 7, 11, 13]
        assert good_primes(worked_rank_one, (2, 13), lam=F(1, 5)) == [7, 11, 13]

    def test_point_differences(self, system_factory):
        system = system_factory(1, [0, 3], [[[1]], [[2]]])
        assert good_primes(system, (2, 7)) == [2, 5, 7]

    def test_bad_prime(self, worked_rank_one):
        with pytest.raises(BadPrime):
            pcurvature(worked_rank_one, 3)
        assert pcurvature_report(worked_rank_one, 3).status is \
            PCurvatureStatus.BAD_PRIME
        assert pcurvature_report(kummer(0, F(1, 2)), 5, lam=F(2, 5)).status \
            is PCurvatureStatus.BAD_PRIME


def sympy_pcurvature_matrix(system: FuchsianSystem, p: int) -> sympy.Matrix:
    """Numerator of C_{p,0} over D**p from the operator recurrence over
    Q(t), before reduction mod p"""
    n = system.rank
    a = sympy_residue_sum(system)
    coefficients = [sympy.eye(n)]
    for s in range(p):
        following = []
        for j in range(s + 2):
            m = sympy.zeros(n, n)
            if j >= 1:
                m += coefficients[j - 1]
            if j <= s:
                m += coefficients[j].diff(t) - a * coefficients[j]
            following.append(m.applyfunc(sympy.cancel))
        coefficients = following
    d = sympy_denominator(system)
    return (coefficients[0] * d ** p).applyfunc(sympy.cancel)


def sympy_pcurvature(system: FuchsianSystem, p: int):
    m = sympy_pcurvature_matrix(system, p)
    return [[as_polyfp(m[i, j], p) for j in range(system.rank)]
            for i in range(system.rank)]


def random_system(rng, rank, points):
    def rational():
        return F(int(rng.integers(-6, 7)), int(rng.choice([1, 2, 4])))
    residues = [[[rational() for _ in range(rank)] for _ in range(rank)]
                for _ in points]
    return FuchsianSystem(rank, points, residues)


class TestPCurvature:
    def test_kummer_is_zero(self, kummer_half):
        for p in [3, 5, 7, 11]:
            assert pcurvature(kummer_half, p).is_zero()

    def test_nilpotent_residue(self, system_factory):
        psi = pcurvature(system_factory(2, [0], [[[0, 1], [0, 0]]]), 3)
        one, zero = PolyFp.one(3), PolyFp.zero(3)
        assert psi.numerator == [[zero, one], [zero, zero]]
        assert psi.denominator == PolyFp([0, 1], 3)
        assert psi.power(2) == [[zero, zero], [zero, zero]]
        assert pcurvature_report(system_factory(2, [0], [[[0, 1], [0, 0]]]),
                                 3).status is PCurvatureStatus.NILPOTENT

    @pytest.mark.parametrize('p', [3, 5, 7])
    def test_random_systems(self, p):
        # pcurvature raises SymbolResidue if a middle coefficient survives
        rng = np.random.default_rng(p)
        for _ in range(20):
            psi = pcurvature(random_system(rng, 2, [0, 1]), p)
            assert len(psi.numerator) == 2
            assert psi.denominator == PolyFp([0, p - 1, 1], p)

    def test_pair_recorded_for_worked_rank_two(self, worked_rank_two):
        # observed on this entry; the pair is only recorded for rank >= 2
        for p in [5, 7, 11]:
            psi, a_p = pcurvature_pair(worked_rank_two, p)
            assert psi.numerator == [[-e for e in row] for row in a_p]

    @pytest.mark.parametrize('p', [2, 3, 5])
    @pytest.mark.parametrize('system', [
        kummer(0, F(1, 7)),
        kummer(1, F(-3, 11)),
        kummer(0, F(4, 13)),
        FuchsianSystem(1, [0, 1], [[[F(2, 7)]], [[F(-1, 11)]]]),
    ])
    def test_rank_one_identity(self, system, p):
        psi, a_p = pcurvature_pair(system, p)
        expected = a_p if p % 2 == 0 else [[-e for e in row] for row in a_p]
        assert psi.numerator == expected
        assert psi.numerator == sympy_pcurvature(system, p)
        assert psi.is_zero()

    @pytest.mark.parametrize('p,nilpotent', [
        (3, True),
        (13, True),
        pytest.param(17, False, marks=pytest.mark.slow),
        pytest.param(19, False, marks=pytest.mark.slow),
    ])
    def test_against_operator_recurrence(self, non_rigid, p, nilpotent):
        expected = sympy_pcurvature_matrix(non_rigid, p)
        assert pcurvature(non_rigid, p).numerator == \
            [[as_polyfp(expected[i, j], p) for j in range(2)] for i in range(2)]
        # T**2 - trace T + det is T**2 exactly when both vanish mod p
        trace = as_polyfp(expected.trace(), p)
        det = as_polyfp(sympy.expand(expected.det()), p)
        assert (trace.is_zero() and det.is_zero()) == nilpotent
        status = pcurvature_report(non_rigid, p).status
        assert (status is PCurvatureStatus.NON_NILPOTENT) is not nilpotent

    def test_non_rigid_has_non_nilpotent_prime(self, non_rigid):
        summary = nilpotency_sweep(non_rigid, (3, 50), threads=1)
        offending = summary.by_status(PCurvatureStatus.NON_NILPOTENT)
        assert offending
        assert not summary.all_nilpotent
        report = [r for r in summary.reports if r.p == offending[0]][0]
        assert report.witness['index'] in (1, 2)
        assert any(report.witness['coefficients'])
        assert summary.by_status(PCurvatureStatus.BAD_PRIME) == [5, 7, 11]


class TestSweeps:
    def test_kummer_half(self, kummer_half):
        summary = nilpotency_sweep(kummer_half, (3, 97))
        assert summary.by_status(PCurvatureStatus.ZERO) == primes_between(3, 97)
        assert summary.density == 1.0
        assert summary.fractions['zero'] == 1.0

    def test_nilpotent_residues(self, nilpotent_residues):
        summary = nilpotency_sweep(nilpotent_residues, (3, 50))
        assert summary.all_nilpotent
        assert summary.by_status(PCurvatureStatus.BAD_PRIME) == []
        assert summary.by_status(PCurvatureStatus.NILPOTENT)

    def test_bad_primes_reported(self, worked_rank_one):
        summary = nilpotency_sweep(worked_rank_one, (2, 11))
        assert summary.by_status(PCurvatureStatus.BAD_PRIME) == [2, 3]
        assert [r.p for r in summary.good_reports] == [5, 7, 11]

    @pytest.mark.parametrize('name', ['worked-rank-two', 'hypergeometric'])
    def test_nilpotence_survives_convolution(self, name):
        system = corpus.get(name)
        lam = F(1, 5)
        before = nilpotency_sweep(system, (7, 40), lam=lam)
        after = nilpotency_sweep(mc(system, lam), (7, 40), lam=lam)
        assert before.all_nilpotent
        assert after.all_nilpotent
        assert after.good_reports
        for report in after.good_reports:
            assert report.status in (PCurvatureStatus.ZERO,
                                     PCurvatureStatus.NILPOTENT)

    def test_rank_one_verdict(self, worked_rank_one, worked_rank_two):
        verdict = rank_one_verdict(worked_rank_one, (3, 50))
        assert verdict.zero
        assert verdict.verdict == 'globally convergent'
        assert verdict.primes == primes_between(5, 50)
        with pytest.raises(ValueError):
            rank_one_verdict(worked_rank_two, (3, 50))

    def test_thread_count_does_not_change_output(self, non_rigid,
                                                 hypergeometric_system):
        single = nilpotency_sweep(non_rigid, (3, 40), threads=1)
        pooled = nilpotency_sweep(non_rigid, (3, 40), threads=4)
        assert [(r.p, r.status, r.witness) for r in single.reports] == \
            [(r.p, r.status, r.witness) for r in pooled.reports]
        assert rho_truncated(hypergeometric_system, 16, threads=1).contributions \
            == rho_truncated(hypergeometric_system, 16, threads=4).contributions

    def test_environment_thread_count(self, monkeypatch, kummer_half):
        monkeypatch.setenv('RIGIDCONV_THREADS', '3')
        pooled = nilpotency_sweep(kummer_half, (3, 30))
        monkeypatch.setenv('RIGIDCONV_THREADS', '1')
        single = nilpotency_sweep(kummer_half, (3, 30))
        assert [r.p for r in pooled.reports] == [r.p for r in single.reports]
