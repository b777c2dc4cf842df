# -*- coding: utf-8 -*-
"""
Middle convolution of Fuchsian systems as explicit linear algebra.

For residues A_1..A_r of rank n and a parameter lam, the convolution has
rank r*n with residues B_k, zero outside block row k, whose block row k is
(A_1, ..., A_k + lam*I, ..., A_r).  The middle convolution is the action of
the B_k on the quotient of Q^(rn) by the invariant subspace K + L, where

    K = sum_k (k-th block embedding of ker A_k)
    L = {(v, ..., v) : v in ker(A_1 + ... + A_r + lam*I)}
"""
import logging
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from rigidconv.core.errors import (IntegerParameter, InvarianceViolation,
                                   PreconditionSkipped, ShapeMismatch,
                                   SingularMatrix, VanishingConvolution)
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.lib.exact.matrix import (MatQ, Vector, inverse, kernel_basis,
                                        rank, rref)
from rigidconv.lib.fuchsian import (validate, is_absolutely_irreducible,
                                    is_isomorphic)

__all__ = ['ConvolutionWorkspace', 'naive_convolution', 'subspace_K',
           'subspace_L', 'middle_convolution', 'mc', 'mc_rank',
           'prune_apparent', 'round_trip_check']

_log = logging.getLogger(__name__)


class ConvolutionWorkspace:
    """The intermediate data of one middle convolution: the blocks B_k,
    bases of K and L, and the basis change used for the quotient"""
    __slots__ = ('_lam', '_blocks', '_k_basis', '_l_basis', '_basis_change')

    def __init__(self, lam: Fraction, blocks: Tuple[MatQ, ...],
                 k_basis: List[Vector], l_basis: List[Vector],
                 basis_change: MatQ):
        self._lam = lam
        self._blocks = blocks
        self._k_basis = k_basis
        self._l_basis = l_basis
        self._basis_change = basis_change

    @property
    def lam(self) -> Fraction:
        return self._lam

    @property
    def blocks(self) -> Tuple[MatQ, ...]:
        return self._blocks

    @property
    def k_basis(self) -> List[Vector]:
        return self._k_basis

    @property
    def l_basis(self) -> List[Vector]:
        return self._l_basis

    @property
    def basis_change(self) -> MatQ:
        """S = [K | L | complement columns]"""
        return self._basis_change

    @property
    def quotient_basis(self) -> List[Vector]:
        start = len(self._k_basis) + len(self._l_basis)
        return [self._basis_change.column(j)
                for j in range(start, self._basis_change.cols)]


def _check_parameter(lam) -> Fraction:
    lam = Fraction(lam)
    if lam.denominator == 1:
        raise IntegerParameter(f'convolution parameter {lam} is an integer',
                               path='lambda')
    return lam


def _residue_sum(system: FuchsianSystem) -> MatQ:
    total = MatQ.zeros(system.rank, system.rank)
    for residue in system.residues:
        total = total + residue
    return total


def _blocks(system: FuchsianSystem, lam: Fraction) -> Tuple[MatQ, ...]:
    n, r = system.rank, len(system.points)
    if r == 0:
        raise ShapeMismatch('convolution needs at least one finite point',
                            path='points')
    shifted = MatQ.scalar(n, lam)
    blocks = []
    for k in range(r):
        row = [residue.entries for residue in system.residues]
        row[k] = (system.residues[k] + shifted).entries
        block = np.full((r * n, r * n), Fraction(0), dtype=object)
        block[k * n:(k + 1) * n, :] = np.hstack(row)
        blocks.append(MatQ(block))
    return tuple(blocks)


def naive_convolution(system: FuchsianSystem, lam) -> FuchsianSystem:
    """The rank r*n convolution with residues B_k, before the quotient"""
    lam = _check_parameter(lam)
    validate(system)
    return FuchsianSystem(system.rank * len(system.points), system.points,
                          _blocks(system, lam))


def subspace_K(system: FuchsianSystem) -> List[Vector]:
    n, r = system.rank, len(system.points)
    basis = []
    for k, residue in enumerate(system.residues):
        for v in kernel_basis(residue):
            embedded = [Fraction(0)] * (r * n)
            embedded[k * n:(k + 1) * n] = v
            basis.append(tuple(embedded))
    return basis


def subspace_L(system: FuchsianSystem, lam) -> List[Vector]:
    lam = Fraction(lam)
    shifted = _residue_sum(system) + MatQ.scalar(system.rank, lam)
    r = len(system.points)
    return [tuple(v) * r for v in kernel_basis(shifted)]


def mc_rank(system: FuchsianSystem, lam) -> int:
    """r*n - sum_k dim ker A_k - dim ker(sum A + lam*I), without building
    the quotient"""
    lam = _check_parameter(lam)
    n, r = system.rank, len(system.points)
    kernels = sum(n - rank(residue) for residue in system.residues)
    shifted = _residue_sum(system) + MatQ.scalar(n, lam)
    return r * n - kernels - (n - rank(shifted))


def _check_invariance(blocks, subspace: MatQ):
    d = subspace.cols
    if not d:
        return
    for k, block in enumerate(blocks):
        image = block @ subspace
        stacked = MatQ(np.hstack((subspace.entries, image.entries)))
        if rank(stacked) != d:
            raise InvarianceViolation(f'K + L is not invariant under B_{k + 1}')


def middle_convolution(system: FuchsianSystem,
                       lam) -> Tuple[FuchsianSystem, ConvolutionWorkspace]:
    """
    Middle convolution mc_lam of a system.

    The complement of K + L is spanned by the unit vectors e_j at the non
    pivot columns of the echelonized [K; L] matrix, in index order; the
    output residues are the lower right blocks of S^-1 B_k S with
    S = [K | L | complement].  The output keeps every point of the input,
    zero residues included; see :func:`prune_apparent`.

    Raises
    ------
    IntegerParameter
    InvarianceViolation
        K + L not invariant, or the quotient failing the rank formula or the
        trace identity tr(out_k) = tr(A_k) + lam * (n - dim ker A_k)
    VanishingConvolution
        The quotient is zero
    """
    lam = _check_parameter(lam)
    validate(system)
    n, r = system.rank, len(system.points)
    size = r * n
    blocks = _blocks(system, lam)
    k_basis = subspace_K(system)
    l_basis = subspace_L(system, lam)
    spanning = k_basis + l_basis
    _log.debug("mc lambda=%s: dim K=%d dim L=%d", lam, len(k_basis),
               len(l_basis))

    subspace = MatQ.from_columns(spanning, size)
    _check_invariance(blocks, subspace)

    d = len(spanning)
    if d:
        _, pivots = rref(MatQ(np.array(spanning, dtype=object)))
        if len(pivots) != d:
            raise InvarianceViolation('K and L are not independent')
    else:
        pivots = []
    complement = [j for j in range(size) if j not in pivots]
    units = [tuple(Fraction(int(i == j)) for i in range(size))
             for j in complement]
    basis_change = MatQ.from_columns(spanning + units, size)
    try:
        inverse_change = inverse(basis_change)
    except SingularMatrix:
        raise InvarianceViolation('complement does not span the quotient')

    out_rank = size - d
    expected = mc_rank(system, lam)
    if out_rank != expected:
        raise InvarianceViolation(f'quotient of rank {out_rank}, rank formula '
                                  f'gives {expected}')
    if out_rank == 0:
        raise VanishingConvolution(f'middle convolution with lambda={lam} '
                                   f'is zero')

    residues = []
    for k, block in enumerate(blocks):
        conjugated = inverse_change @ block @ basis_change
        quotient = MatQ(conjugated.entries[d:, d:])
        source = system.residues[k]
        kernel_dim = n - rank(source)
        expected_trace = source.trace() + lam * (n - kernel_dim)
        if quotient.trace() != expected_trace:
            raise InvarianceViolation(f'trace identity fails at point '
                                      f'{system.points[k]}')
        residues.append(quotient)

    workspace = ConvolutionWorkspace(lam, blocks, k_basis, l_basis,
                                     basis_change)
    return FuchsianSystem(out_rank, system.points, residues), workspace


def mc(system: FuchsianSystem, lam) -> FuchsianSystem:
    return middle_convolution(system, lam)[0]


def prune_apparent(system: FuchsianSystem) -> FuchsianSystem:
    """Drop points whose residue is zero"""
    kept = [(q, a) for q, a in zip(system.points, system.residues)
            if not a.is_zero()]
    return FuchsianSystem(system.rank, [q for q, _ in kept],
                          [a for _, a in kept])


def round_trip_check(system: FuchsianSystem, lam) -> bool:
    """
    Whether mc_-lam(mc_lam(F)) is isomorphic to F.

    Only attempted for absolutely irreducible F with at least two points,
    every residue invertible and sum A + lam*I invertible; other inputs
    raise PreconditionSkipped.
    """
    lam = _check_parameter(lam)
    validate(system)
    n = system.rank
    if len(system.points) < 2:
        raise PreconditionSkipped('round trip needs at least two points')
    for k, residue in enumerate(system.residues):
        if rank(residue) != n:
            raise PreconditionSkipped(f'residue at {system.points[k]} is '
                                      f'singular', path=f'residues[{k}]')
    if rank(_residue_sum(system) + MatQ.scalar(n, lam)) != n:
        raise PreconditionSkipped(f'sum of residues + {lam} is singular')
    if not is_absolutely_irreducible(system):
        raise PreconditionSkipped('system is not absolutely irreducible')

    forward = mc(system, lam)
    back = mc(forward, -lam)
    _log.debug("round trip lambda=%s: ranks %d -> %d -> %d", lam, n,
               forward.rank, back.rank)
    return is_isomorphic(back, system)
