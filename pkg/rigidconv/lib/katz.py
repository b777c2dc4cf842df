# -*- coding: utf-8 -*-
"""
Katz's algorithm: reduction of rigid irreducible Fuchsian systems to rank
one by alternating rank one twists and middle convolutions.

Each step twists the system so that a maximal multiplicity eigenvalue of
every finite residue becomes 0, convolves with an eigenvalue lambda of the
residue at infinity, and drops the points whose residue vanished.  The
steps are recorded in a :class:`KatzTrace` which can be replayed backwards
from the rank one terminal system.
"""
import logging
from fractions import Fraction
from typing import List, Tuple

from rigidconv.core.errors import (InvarianceViolation, KatzError,
                                   NotIrreducible, NotRigid, ReplayMismatch,
                                   Resonant, Stuck)
from rigidconv.core.models.reports import KatzStep, KatzTrace
from rigidconv.core.models.system import FuchsianSystem, RankOneTwist
from rigidconv.lib.convolution import mc, mc_rank, prune_apparent
from rigidconv.lib.exact.matrix import MatQ, rank, rational_eigenvalues
from rigidconv.lib.fuchsian import (validate, infinity_residue, twist,
                                    is_absolutely_irreducible,
                                    is_isomorphic, is_non_resonant,
                                    rigidity_index)

__all__ = ['select_twist', 'select_lambda', 'katz_step', 'katz_chain',
           'katz_reduce', 'replay']

_log = logging.getLogger(__name__)


def select_twist(system: FuchsianSystem) -> RankOneTwist:
    """
    alpha_i = -(eigenvalue of A_i of maximal multiplicity), ties broken by
    height then value.  Twisting by the result puts the chosen eigenvalue at
    0, maximizing dim ker A_i.

    Raises
    ------
    NonRationalSpectrum
    """
    alphas = [-rational_eigenvalues(residue)[0][0]
              for residue in system.residues]
    return RankOneTwist(alphas)


def select_lambda(system: FuchsianSystem) -> Fraction:
    """
    The convolution parameter for a twisted system: the first non integral
    eigenvalue of the residue at infinity, in (multiplicity desc, height,
    value) order, whose middle convolution has smaller rank.

    Raises
    ------
    Stuck
        No eigenvalue at infinity lowers the rank
    """
    candidates = rational_eigenvalues(infinity_residue(system))
    for value, multiplicity in candidates:
        if value.denominator == 1:
            _log.debug("lambda candidate %s rejected: integral", value)
            continue
        after = mc_rank(system, value)
        if after < system.rank:
            _log.debug("lambda=%s (multiplicity %d) gives rank %d", value,
                       multiplicity, after)
            return value
        _log.debug("lambda candidate %s rejected: rank %d", value, after)
    raise Stuck(f'no eigenvalue at infinity among '
                f'{[str(v) for v, _ in candidates]} lowers the rank')


def _check_preconditions(system: FuchsianSystem):
    if not is_absolutely_irreducible(system):
        raise NotIrreducible('system is not absolutely irreducible')
    if not is_non_resonant(system):
        raise Resonant('system is resonant')
    index = rigidity_index(system)
    if index != 2:
        raise NotRigid(f'rigidity index is {index}, not 2')


def katz_step(system: FuchsianSystem) -> Tuple[KatzStep, FuchsianSystem]:
    """
    One reduction step: twist, middle convolution, pruning.

    Raises
    ------
    KatzError
        Rank one input
    NotIrreducible
    Resonant
    NotRigid
    Stuck
    InvarianceViolation
        The step failed to lower the rank or lost rigidity
    """
    validate(system)
    n = system.rank
    if n < 2:
        raise KatzError('a reduction step needs rank at least 2', path='rank')
    _check_preconditions(system)

    alphas = select_twist(system)
    twisted = twist(system, alphas)
    lam = select_lambda(twisted)

    multiplicity = dict(rational_eigenvalues(infinity_residue(twisted)))[lam]
    shifted = MatQ.zeros(n, n)
    for residue in twisted.residues:
        shifted = shifted + residue
    kernel_dim = n - rank(shifted + MatQ.scalar(n, lam))
    if kernel_dim != multiplicity:
        raise InvarianceViolation(f'eigenvalue {lam} at infinity has '
                                  f'multiplicity {multiplicity} but a '
                                  f'{kernel_dim} dimensional eigenspace')

    convolved = mc(twisted, lam)
    reduced = prune_apparent(convolved)
    pruned = [q for q in convolved.points if q not in reduced.points]
    if reduced.rank >= n:
        raise InvarianceViolation(f'rank {n} did not drop (got '
                                  f'{reduced.rank})')
    if not is_absolutely_irreducible(reduced):
        raise InvarianceViolation('convolution lost irreducibility')
    index = rigidity_index(reduced)
    if index != 2:
        raise InvarianceViolation(f'convolution changed the rigidity index '
                                  f'to {index}')

    step = KatzStep(alphas.alphas, lam, n, reduced.rank, pruned)
    _log.info("katz step: alphas=%s lambda=%s rank %d -> %d, pruned %s",
              [str(a) for a in alphas.alphas], lam, n, reduced.rank,
              [str(q) for q in pruned])
    return step, reduced


def katz_chain(system: FuchsianSystem) -> Tuple[KatzTrace,
                                                List[FuchsianSystem]]:
    """Reduce to rank one, returning the trace together with every system
    passed through: the input, each intermediate and the terminal system"""
    validate(system)
    steps: List[KatzStep] = []
    chain = [system]
    current = system
    try:
        while current.rank > 1:
            step, current = katz_step(current)
            steps.append(step)
            chain.append(current)
    except KatzError as e:
        e.trace = KatzTrace(system, steps, current)
        raise
    return KatzTrace(system, steps, current), chain


def katz_reduce(system: FuchsianSystem) -> KatzTrace:
    """
    Reduce a rigid irreducible system to rank one.

    Terminates in fewer than rank(F) steps since every step lowers the rank.
    A rank one input gives an empty trace.  Errors raised by a step carry
    the trace of the steps completed so far in their ``trace`` attribute.
    """
    return katz_chain(system)[0]


def _restore_points(system: FuchsianSystem, pruned, order) -> FuchsianSystem:
    if not pruned:
        return system
    points = [q for q in order if q in system.points or q in pruned]
    zero = MatQ.zeros(system.rank, system.rank)
    residues = [system.residue_at(q) if q in system.points else zero
                for q in points]
    return FuchsianSystem(system.rank, points, residues)


def replay(trace: KatzTrace) -> FuchsianSystem:
    """
    Undo the steps of a trace, starting from its terminal system.

    Each step is inverted by restoring the pruned points with zero residue,
    convolving with -lambda and twisting by -alphas.

    Raises
    ------
    ReplayMismatch
        The rebuilt system is not isomorphic to the traced input
    """
    current = trace.terminal
    for step in reversed(trace.steps):
        current = _restore_points(current, step.pruned_points,
                                  trace.source.points)
        current = mc(current, -step.lam)
        current = twist(current, -step.twist)
        _log.debug("replayed step lambda=%s: rank %d", step.lam, current.rank)
    if not is_isomorphic(current, trace.source):
        raise ReplayMismatch('replayed system is not isomorphic to the '
                             'reduced input')
    return current
