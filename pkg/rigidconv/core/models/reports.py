# -*- coding: utf-8 -*-

"""
Result records produced by the arithmetic probes and the Katz reduction.

The records are plain __slots__ classes; they are serialized by
:class:`rigidconv.core.models.document.SystemEncoder`, which maps each slot
(leading underscore stripped) to a JSON key in declaration order.
"""
import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from rigidconv.core.types.enumerations import PCurvatureStatus
from .system import FuchsianSystem, RankOneTwist

__all__ = ['PrimeRadiusEstimate', 'RhoEstimate', 'HBound',
           'InequalityReport', 'PCurvatureReport', 'SweepSummary',
           'RankOneVerdict', 'KatzStep', 'KatzTrace', 'ChainProbe',
           'HarnessReport', 'report_entities']


class PrimeRadiusEstimate:
    """Gauss norms of A_[s]/s! at one prime, as exponents: the norm at
    level s is p**per_s[s]"""
    __slots__ = ('_p', '_per_s', '_windowed_log')

    def __init__(self, p: int, per_s: Dict[int, int], windowed_log: float):
        self._p = p
        self._per_s = per_s
        self._windowed_log = windowed_log

    @property
    def p(self) -> int:
        return self._p

    @property
    def per_s(self) -> Dict[int, int]:
        return self._per_s

    @property
    def windowed_log(self) -> float:
        return self._windowed_log


class RhoEstimate:
    __slots__ = ('_S', '_window', '_contributions', '_total')

    def __init__(self, S: int, window: Tuple[int, int],
                 contributions: List[Tuple[int, float]], total: float):
        self._S = S
        self._window = window
        self._contributions = contributions
        self._total = total

    @property
    def S(self) -> int:
        return self._S

    @property
    def window(self) -> Tuple[int, int]:
        return self._window

    @property
    def contributions(self) -> List[Tuple[int, float]]:
        return self._contributions

    @property
    def total(self) -> float:
        return self._total

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self._contributions]


class HBound:
    __slots__ = ('_terms', '_value')

    def __init__(self, terms: List[Tuple[int, Fraction]], value: float):
        self._terms = terms
        self._value = value

    @property
    def terms(self) -> List[Tuple[int, Fraction]]:
        return self._terms

    @property
    def value(self) -> float:
        return self._value


class InequalityReport:
    __slots__ = ('_lam', '_S', '_rank', '_mc_rank', '_rho_system',
                 '_rho_convolution', '_h_value', '_bound', '_holds',
                 '_kummer_rho', '_kummer_holds')

    def __init__(self, lam: Fraction, S: int, rank: int, mc_rank: int,
                 rho_system: float, rho_convolution: float, h_value: float,
                 kummer_rho: float):
        self._lam = lam
        self._S = S
        self._rank = rank
        self._mc_rank = mc_rank
        self._rho_system = rho_system
        self._rho_convolution = rho_convolution
        self._h_value = h_value
        self._bound = (rank * rank + 1) * (rho_system + h_value)
        self._holds = rho_convolution <= self._bound
        self._kummer_rho = kummer_rho
        self._kummer_holds = kummer_rho <= h_value

    @property
    def rho_system(self) -> float:
        return self._rho_system

    @property
    def rho_convolution(self) -> float:
        return self._rho_convolution

    @property
    def h_value(self) -> float:
        return self._h_value

    @property
    def bound(self) -> float:
        return self._bound

    @property
    def holds(self) -> bool:
        return self._holds

    @property
    def mc_rank(self) -> int:
        return self._mc_rank

    @property
    def kummer_rho(self) -> float:
        return self._kummer_rho

    @property
    def kummer_holds(self) -> bool:
        return self._kummer_holds


class PCurvatureReport:
    """Verdict on psi_p.  ``witness`` is set for non nilpotent verdicts: the
    first nonzero coefficient below the top of the characteristic polynomial
    of the numerator matrix of psi_p, as {"index": k, "coefficients": [...]}"""
    __slots__ = ('_p', '_status', '_witness')

    def __init__(self, p: int, status: PCurvatureStatus,
                 witness: Optional[dict] = None):
        self._p = p
        self._status = status
        self._witness = witness

    @property
    def p(self) -> int:
        return self._p

    @property
    def status(self) -> PCurvatureStatus:
        return self._status

    @property
    def witness(self) -> Optional[dict]:
        return self._witness

    def __repr__(self):
        return f'PCurvatureReport(p={self._p}, status={self._status.value})'


class SweepSummary:
    """Reports for a range of primes, sorted by p.

    ``density`` is the fraction of good primes with zero or nilpotent
    p-curvature; it is evidence only, hence ``heuristic``.
    """
    __slots__ = ('_reports', '_fractions', '_density', '_heuristic')

    def __init__(self, reports: List[PCurvatureReport]):
        self._reports = sorted(reports, key=lambda r: r.p)
        total = len(self._reports)
        self._fractions = {
            status.value: (sum(1 for r in self._reports if r.status is status)
                           / total if total else 0.0)
            for status in PCurvatureStatus}
        good = [r for r in self._reports
                if r.status is not PCurvatureStatus.BAD_PRIME]
        self._density = (sum(1 for r in good if r.status.is_nilpotent)
                         / len(good) if good else 0.0)
        self._heuristic = True

    @property
    def reports(self) -> List[PCurvatureReport]:
        return self._reports

    @property
    def fractions(self) -> Dict[str, float]:
        return self._fractions

    @property
    def density(self) -> float:
        return self._density

    def by_status(self, status: PCurvatureStatus) -> List[int]:
        return [r.p for r in self._reports if r.status is status]

    @property
    def good_reports(self) -> List[PCurvatureReport]:
        return [r for r in self._reports
                if r.status is not PCurvatureStatus.BAD_PRIME]

    @property
    def all_nilpotent(self) -> bool:
        return all(r.status.is_nilpotent for r in self.good_reports)


class RankOneVerdict:
    __slots__ = ('_verdict', '_zero', '_primes')

    GLOBALLY_CONVERGENT = 'globally convergent'
    NOT_GLOBALLY_CONVERGENT = 'not globally convergent'

    def __init__(self, zero: bool, primes: List[int]):
        self._zero = zero
        self._primes = primes
        self._verdict = (self.GLOBALLY_CONVERGENT if zero
                         else self.NOT_GLOBALLY_CONVERGENT)

    @property
    def verdict(self) -> str:
        return self._verdict

    @property
    def zero(self) -> bool:
        return self._zero

    @property
    def primes(self) -> List[int]:
        return self._primes


class KatzStep:
    """One reduction step: twist by ``alphas``, convolve with ``lambda``,
    then drop the points listed in ``pruned_points``"""
    __slots__ = ('_alphas', '_lambda', '_rank_before', '_rank_after',
                 '_pruned_points')

    def __init__(self, alphas, lam: Fraction, rank_before: int,
                 rank_after: int, pruned_points=()):
        self._alphas = tuple(Fraction(a) for a in alphas)
        self._lambda = Fraction(lam)
        self._rank_before = rank_before
        self._rank_after = rank_after
        self._pruned_points = tuple(Fraction(q) for q in pruned_points)

    @property
    def twist(self) -> RankOneTwist:
        return RankOneTwist(self._alphas)

    @property
    def alphas(self) -> Tuple[Fraction, ...]:
        return self._alphas

    @property
    def lam(self) -> Fraction:
        return self._lambda

    @property
    def rank_before(self) -> int:
        return self._rank_before

    @property
    def rank_after(self) -> int:
        return self._rank_after

    @property
    def pruned_points(self) -> Tuple[Fraction, ...]:
        return self._pruned_points

    def __repr__(self):
        return (f'KatzStep(lambda={self._lambda}, '
                f'{self._rank_before} -> {self._rank_after})')


class KatzTrace:
    __slots__ = ('_source', '_steps', '_terminal')

    def __init__(self, source: FuchsianSystem, steps: List[KatzStep],
                 terminal: FuchsianSystem):
        self._source = source
        self._steps = list(steps)
        self._terminal = terminal

    @property
    def source(self) -> FuchsianSystem:
        return self._source

    @property
    def steps(self) -> List[KatzStep]:
        return self._steps

    @property
    def terminal(self) -> FuchsianSystem:
        return self._terminal

    def __len__(self):
        return len(self._steps)


class ChainProbe:
    """Evidence gathered on one system of a Katz chain"""
    __slots__ = ('_rank', '_points', '_nilpotent_density', '_all_nilpotent',
                 '_non_nilpotent_primes', '_rho_total', '_rho_doubled',
                 '_rho_stable')

    def __init__(self, system: FuchsianSystem, sweep: SweepSummary,
                 rho: RhoEstimate, rho_doubled: RhoEstimate):
        self._rank = system.rank
        self._points = system.points
        self._nilpotent_density = sweep.density
        self._all_nilpotent = sweep.all_nilpotent
        self._non_nilpotent_primes = sweep.by_status(
            PCurvatureStatus.NON_NILPOTENT)
        self._rho_total = rho.total
        self._rho_doubled = rho_doubled.total
        self._rho_stable = rho.contributions == rho_doubled.contributions

    @property
    def all_nilpotent(self) -> bool:
        return self._all_nilpotent

    @property
    def rho_stable(self) -> bool:
        return self._rho_stable

    @property
    def rho_total(self) -> float:
        return self._rho_total


class HarnessReport:
    __slots__ = ('_steps', '_chain', '_terminal', '_nilpotent', '_type_g',
                 '_terminal_zero', '_agree')

    def __init__(self, trace: KatzTrace, chain: List[ChainProbe],
                 terminal: RankOneVerdict):
        self._steps = trace.steps
        self._chain = chain
        self._terminal = terminal
        self._nilpotent = all(probe.all_nilpotent for probe in chain)
        self._type_g = all(probe.rho_stable and math.isfinite(probe.rho_total)
                           for probe in chain)
        self._terminal_zero = terminal.zero
        self._agree = self._nilpotent and self._type_g and self._terminal_zero

    @property
    def steps(self) -> List[KatzStep]:
        return self._steps

    @property
    def chain(self) -> List[ChainProbe]:
        return self._chain

    @property
    def terminal(self) -> RankOneVerdict:
        return self._terminal

    @property
    def nilpotent(self) -> bool:
        return self._nilpotent

    @property
    def type_g(self) -> bool:
        return self._type_g

    @property
    def agree(self) -> bool:
        return self._agree


report_entities = (PrimeRadiusEstimate, RhoEstimate, HBound, InequalityReport,
                   PCurvatureReport, SweepSummary, RankOneVerdict, KatzStep,
                   KatzTrace, ChainProbe, HarnessReport)
