# -*- coding: utf-8 -*-
"""
p-curvature of Fuchsian systems.

Reducing A = N/D modulo a good prime p, the operator (d/dt - A)**p is
expanded in powers of d/dt with matrix coefficients C_{s,j} over F_p(t):

    C_{0,0} = I,   C_{s+1,j} = C_{s,j-1} + C_{s,j}' - A C_{s,j}

The p-curvature is psi_p = C_{p,0}, and the coefficients C_{p,j} for
1 <= j <= p-1 vanish identically, which is checked on every run.  All
coefficients are kept as numerators Q_{s,j} over D**s:

    Q_{s+1,j} = Q_{s,j-1} D + Q_{s,j}' D - s D' Q_{s,j} - N Q_{s,j}
"""
import logging
from fractions import Fraction
from functools import partial
from typing import List, Sequence, Tuple

from rigidconv.core.errors import BadPrime, SymbolResidue
from rigidconv.core.models.reports import (PCurvatureReport, RankOneVerdict,
                                           SweepSummary)
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.core.types.enumerations import PCurvatureStatus
from rigidconv.lib.etc import parallel_map, primes_between
from rigidconv.lib.exact.polynomial import PolyFp, berkowitz
from rigidconv.lib.exact.rational import p_adic_valuation
from .tower import (build_tower, numerator_data, poly_identity, poly_matmul,
                    reduce_matrix)

__all__ = ['PCurvature', 'bad_primes', 'is_good_prime', 'good_primes',
           'pcurvature', 'pcurvature_pair', 'pcurvature_report',
           'nilpotency_sweep', 'rank_one_verdict']

_log = logging.getLogger(__name__)

FpMatrix = List[List[PolyFp]]


class PCurvature:
    """psi_p = numerator / denominator**p with entries over F_p[t]"""
    __slots__ = ('_p', '_numerator', '_denominator')

    def __init__(self, p: int, numerator: FpMatrix, denominator: PolyFp):
        self._p = p
        self._numerator = numerator
        self._denominator = denominator

    @property
    def p(self) -> int:
        return self._p

    @property
    def numerator(self) -> FpMatrix:
        return self._numerator

    @property
    def denominator(self) -> PolyFp:
        """D mod p; the full denominator is its p-th power"""
        return self._denominator

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self._numerator for entry in row)

    def char_poly(self) -> List[PolyFp]:
        """Characteristic polynomial of the numerator matrix, coefficients
        highest degree first"""
        return berkowitz(self._numerator, PolyFp.zero(self._p),
                         PolyFp.one(self._p))

    def power(self, k: int) -> FpMatrix:
        n = len(self._numerator)
        zero = PolyFp.zero(self._p)
        result = poly_identity(n, PolyFp.one(self._p), zero)
        for _ in range(k):
            result = poly_matmul(result, self._numerator, zero)
        return result


def _unit_differences(points: Sequence[Fraction]):
    for i, a in enumerate(points):
        for b in points[i + 1:]:
            yield a - b


def bad_primes(system: FuchsianSystem, primes: Sequence[int],
               lam=None) -> List[int]:
    """Primes of the list at which the system does not reduce faithfully"""
    bad = []
    denominators = [q.denominator for q in system.points]
    denominators += [v.denominator for r in system.residues for v in r.flatten()]
    differences = list(_unit_differences(system.points))
    for p in primes:
        if any(d % p == 0 for d in denominators):
            bad.append(p)
        elif any(p_adic_valuation(p, d) != 0 for d in differences):
            bad.append(p)
        elif lam is not None and Fraction(lam) != 0 \
                and p_adic_valuation(p, lam) < 0:
            bad.append(p)
    return bad


def is_good_prime(system: FuchsianSystem, p: int, lam=None) -> bool:
    return not bad_primes(system, [p], lam)


def good_primes(system: FuchsianSystem, prime_range: Tuple[int, int],
                lam=None) -> List[int]:
    """
    Primes p in the inclusive range at which the system reduces faithfully:
    p divides no denominator of a point or residue entry, every difference
    of points is a p-adic unit, and ord_p(lam) >= 0 when lam is given.
    """
    primes = primes_between(*prime_range)
    bad = set(bad_primes(system, primes, lam))
    return [p for p in primes if p not in bad]


def _symbol_tower(system: FuchsianSystem, p: int) -> Tuple[FpMatrix, PolyFp]:
    denominator, numerator = numerator_data(system)
    d = denominator.reduce(p)
    d_prime = d.derivative()
    n_matrix = reduce_matrix(numerator, p)
    n = system.rank
    zero = PolyFp.zero(p)

    # levels[j] holds Q_{s,j} for the current s
    levels = [poly_identity(n, PolyFp.one(p), zero)]
    for s in range(p):
        following = []
        for j in range(s + 2):
            current = levels[j] if j <= s else None
            previous = levels[j - 1] if j >= 1 else None
            product = poly_matmul(n_matrix, current, zero) if current else None
            entry_rows = []
            for a in range(n):
                row = []
                for b in range(n):
                    value = zero
                    if previous is not None:
                        value = value + previous[a][b] * d
                    if current is not None:
                        q = current[a][b]
                        value = (value + q.derivative() * d
                                 - (d_prime * q).scale(s) - product[a][b])
                    row.append(value)
                entry_rows.append(row)
            following.append(entry_rows)
        levels = following

    for j in range(1, p):
        if any(not entry.is_zero() for row in levels[j] for entry in row):
            raise SymbolResidue(f'coefficient of d^{j} in (d - A)^{p} does '
                                f'not vanish')
    leading = d ** p
    if any(levels[p][a][b] != (leading if a == b else zero)
           for a in range(n) for b in range(n)):
        raise SymbolResidue(f'leading coefficient of (d - A)^{p} is not I')
    return levels[0], d


def pcurvature(system: FuchsianSystem, p: int) -> PCurvature:
    """
    The p-curvature psi_p as a numerator matrix over D**p.

    Raises
    ------
    BadPrime
    SymbolResidue
        A middle coefficient of (d - A)**p failed to vanish
    """
    if not is_good_prime(system, p):
        raise BadPrime(f'{p} is a bad prime for the system')
    numerator, d = _symbol_tower(system, p)
    return PCurvature(p, numerator, d)


def pcurvature_pair(system: FuchsianSystem,
                    p: int) -> Tuple[PCurvature, FpMatrix]:
    """psi_p together with the numerator of A_[p] mod p over the same
    denominator D**p"""
    psi = pcurvature(system, p)
    tower = build_tower(system, p)
    return psi, reduce_matrix(tower.level(p), p)


def _classify(psi: PCurvature) -> PCurvatureReport:
    if psi.is_zero():
        return PCurvatureReport(psi.p, PCurvatureStatus.ZERO)
    coefficients = psi.char_poly()
    for k, c in enumerate(coefficients[1:], start=1):
        if not c.is_zero():
            witness = {'index': k, 'coefficients': c.coefficients}
            return PCurvatureReport(psi.p, PCurvatureStatus.NON_NILPOTENT,
                                    witness)
    return PCurvatureReport(psi.p, PCurvatureStatus.NILPOTENT)


def pcurvature_report(system: FuchsianSystem, p: int,
                      lam=None) -> PCurvatureReport:
    if not is_good_prime(system, p, lam):
        return PCurvatureReport(p, PCurvatureStatus.BAD_PRIME)
    report = _classify(pcurvature(system, p))
    _log.debug("p=%d: %s", p, report.status.value)
    return report


def nilpotency_sweep(system: FuchsianSystem, prime_range: Tuple[int, int],
                     threads: int = None, lam=None) -> SweepSummary:
    """Classify psi_p at every prime of the inclusive range; bad primes are
    reported as such.  Reports are sorted by p whatever the worker count."""
    primes = primes_between(*prime_range)
    reports = parallel_map(partial(pcurvature_report, system, lam=lam),
                           primes, threads)
    return SweepSummary(reports)


def rank_one_verdict(system: FuchsianSystem, prime_range: Tuple[int, int],
                     threads: int = None) -> RankOneVerdict:
    """
    Decide global convergence of a rank one system.

    A rank one system with rational residues is globally convergent exactly
    when its p-curvature vanishes at every good prime; the sweep over the
    range provides that evidence.
    """
    if system.rank != 1:
        raise ValueError(f'rank one verdict for a rank {system.rank} system')
    summary = nilpotency_sweep(system, prime_range, threads)
    good = summary.good_reports
    zero = all(r.status is PCurvatureStatus.ZERO for r in good)
    return RankOneVerdict(zero, [r.p for r in good])
