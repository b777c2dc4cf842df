# -*- coding: utf-8 -*-
"""
p-adic radii of Fuchsian systems.

The radius of convergence of the solutions at a prime p is governed by the
growth of the Gauss norms |A_[s]/s!|_p.  The global inverse radius is the
sum over primes of the limsup of (1/s) log max(1, |A_[s]/s!|_p); it is
approximated here by the maximum over a tail window of levels s of a
derivative tower of finite depth S.

All norms are exact powers of p and are handled as integer exponents; only
the final logarithms are floating point.
"""
import logging
import math
from fractions import Fraction
from functools import partial
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from rigidconv.core.errors import IntegerParameter, VanishingConvolution, ZeroInput
from rigidconv.core.models.reports import (HBound, InequalityReport,
                                           PrimeRadiusEstimate, RhoEstimate)
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.core.settings import SettingsKey, get_int, get_value
from rigidconv.lib.convolution import mc
from rigidconv.lib.fuchsian import kummer_sum
from rigidconv.lib.etc import parallel_map, primes_between, parse_range
from rigidconv.lib.exact.polynomial import PolyQ
from rigidconv.lib.exact.rational import factorial_valuation, p_adic_valuation
from .tower import DerivativeTower, build_tower

__all__ = ['gauss_norm', 'matrix_gauss_norm', 'candidate_primes',
           'prime_radius', 'default_window', 'rho_truncated', 'h_bound',
           'inequality_report']

_log = logging.getLogger(__name__)

PolyOrRatio = Union[PolyQ, Tuple[PolyQ, PolyQ]]


def gauss_norm(f: PolyOrRatio, p: int) -> int:
    """
    Gauss norm of a polynomial (or ratio of polynomials) at p.

    The norm is max_i |a_i|_p with |p|_p = 1/p; it is always a power of p,
    and the exponent e with norm = p**e is returned.  For a ratio the norm
    is the quotient of the norms.

    Raises
    ------
    ZeroInput
    """
    if isinstance(f, tuple):
        numerator, denominator = f
        return gauss_norm(numerator, p) - gauss_norm(denominator, p)
    if f.is_zero():
        raise ZeroInput('Gauss norm of the zero polynomial')
    return -min(p_adic_valuation(p, c) for c in f.coefficients if c != 0)


def matrix_gauss_norm(matrix: Sequence[Sequence[PolyQ]], p: int) -> Optional[int]:
    """Largest Gauss norm exponent over the entries; None for a zero matrix"""
    exponents = [gauss_norm(entry, p) for row in matrix for entry in row
                 if not entry.is_zero()]
    return max(exponents) if exponents else None


def _denominators(system: FuchsianSystem) -> Iterable[int]:
    for q in system.points:
        yield q.denominator
    for residue in system.residues:
        for value in residue.flatten():
            yield value.denominator


def candidate_primes(system: FuchsianSystem, S: int,
                     extra_prime_bound: int = 0) -> List[int]:
    """Primes up to max(S, extra_prime_bound) together with the primes
    dividing a denominator of the input.

    Any other prime has v_p(s!) = 0 for s <= S and sees only p-integral
    numerators, so it contributes nothing at depth S.
    """
    primes = set(primes_between(2, max(S, extra_prime_bound)))
    for denominator in set(_denominators(system)):
        primes.update(int(p) for p in factorint(denominator))
    return sorted(primes)


def default_window(S: int) -> Tuple[int, int]:
    return (S + 1) // 2, S


def prime_radius(tower: DerivativeTower, p: int,
                 window: Tuple[int, int]) -> PrimeRadiusEstimate:
    denominator_exponent = gauss_norm(tower.denominator, p)
    per_s = {}
    for s in range(1, tower.depth + 1):
        exponent = matrix_gauss_norm(tower.level(s), p)
        if exponent is None:
            continue
        per_s[s] = (factorial_valuation(p, s) + exponent
                    - s * denominator_exponent)
    lo, hi = window
    logs = [max(0, per_s[s]) * math.log(p) / s for s in range(lo, hi + 1)
            if s in per_s]
    return PrimeRadiusEstimate(p, per_s, max(logs, default=0.0))


def _settings_window(S: int) -> Tuple[int, int]:
    text = get_value(SettingsKey.Window).strip()
    return parse_range(text) if text else default_window(S)


def rho_truncated(system: FuchsianSystem, S: int = None,
                  window: Tuple[int, int] = None,
                  extra_prime_bound: int = None,
                  threads: int = None) -> RhoEstimate:
    """
    Truncated global inverse radius.

    Parameters
    ----------
    system : FuchsianSystem
    S : int
        Tower depth, at least 4; defaults to the ``radius/smax`` setting
    window : (int, int)
        Levels over which the maximum is taken; defaults to [ceil(S/2), S]
    extra_prime_bound : int
        Candidate primes include every prime up to this bound
    threads : int
        Worker count for the per-prime loop

    Returns
    -------
    RhoEstimate
        Positive contributions sorted by p, and their sum
    """
    S = get_int(SettingsKey.SMax) if S is None else S
    if S < 4:
        raise ValueError(f'tower depth must be at least 4, got {S}')
    window = _settings_window(S) if window is None else tuple(window)
    lo, hi = window
    if not 1 <= lo <= hi <= S:
        raise ValueError(f'window {lo}..{hi} not inside 1..{S}')
    if extra_prime_bound is None:
        extra_prime_bound = get_int(SettingsKey.ExtraPrimeBound)

    tower = build_tower(system, S)
    primes = candidate_primes(system, S, extra_prime_bound)
    estimates = parallel_map(partial(prime_radius, tower, window=window),
                             primes, threads)
    contributions = [(e.p, e.windowed_log) for e in estimates
                     if e.windowed_log > 0]
    _log.debug("rho at depth %d over %d primes: %s", S, len(primes),
               contributions)
    return RhoEstimate(S, window, contributions,
                       math.fsum(w for _, w in contributions))


def h_bound(lam) -> HBound:
    """
    H(lam) = sum over primes p with ord_p(lam) < 0 of
    (1/(p-1) - ord_p(lam)) log p.

    Raises
    ------
    IntegerParameter
    """
    lam = Fraction(lam)
    if lam.denominator == 1:
        raise IntegerParameter(f'H is defined for non integral lambda, got '
                               f'{lam}', path='lambda')
    terms = []
    for p in sorted(int(q) for q in factorint(lam.denominator)):
        terms.append((p, Fraction(1, p - 1) - p_adic_valuation(p, lam)))
    value = math.fsum(float(c) * math.log(p) for p, c in terms)
    return HBound(terms, value)


def inequality_report(system: FuchsianSystem, lam, S: int = None,
                      threads: int = None) -> InequalityReport:
    """
    Compare truncated radii across a middle convolution.

    Reports rho(F), rho(mc_lam F), H(lam) and whether
    rho(mc_lam F) <= (n**2 + 1) (rho(F) + H(lam)) at depth S, together with
    the radius of the sum of Kummer systems K_q^lam over the points of F
    against H(lam).  Truncations are not limits, so nothing here raises on
    a failed comparison.
    """
    lam = Fraction(lam)
    bound = h_bound(lam)
    rho_system = rho_truncated(system, S, threads=threads)
    try:
        convolved = mc(system, lam)
    except VanishingConvolution:
        rank_after, rho_convolution = 0, 0.0
    else:
        rank_after = convolved.rank
        rho_convolution = rho_truncated(convolved, S, threads=threads).total
    kummer_points = list(system.points) or [Fraction(0)]
    kummer_rho = rho_truncated(kummer_sum(kummer_points, lam), S,
                               threads=threads).total
    return InequalityReport(lam, rho_system.S, system.rank, rank_after,
                            rho_system.total, rho_convolution, bound.value,
                            kummer_rho)
