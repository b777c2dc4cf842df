# -*- coding: utf-8 -*-
"""
The derivative tower of a Fuchsian system.

Write A = N / D with D = prod_i (t - q_i) and N = sum_k A_k prod_{j != k}
(t - q_j).  The matrices A_[s] defined by A_[0] = I and
A_[s+1] = A_[s]' + A A_[s] (so that y^(s) = A_[s] y) are stored as
polynomial numerators P_s over the common denominator D**s:

    P_0 = I,    P_{s+1} = P_s' D - s P_s D' + N P_s
"""
import logging
from fractions import Fraction
from typing import List, Sequence

from rigidconv.core.models.system import FuchsianSystem
from rigidconv.lib.exact.polynomial import PolyQ, PolyFp

__all__ = ['PolyMatrix', 'DerivativeTower', 'build_tower', 'numerator_data',
           'poly_matmul', 'poly_identity', 'reduce_matrix']

_log = logging.getLogger(__name__)

PolyMatrix = List[List[PolyQ]]


def poly_identity(n: int, one, zero) -> list:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def poly_matmul(left: Sequence[Sequence], right: Sequence[Sequence], zero) -> list:
    inner = len(right)
    cols = len(right[0]) if inner else 0
    out = []
    for row in left:
        out_row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                if row[k] and right[k][j]:
                    acc = acc + row[k] * right[k][j]
            out_row.append(acc)
        out.append(out_row)
    return out


def reduce_matrix(matrix: Sequence[Sequence[PolyQ]], p: int) -> List[List[PolyFp]]:
    return [[entry.reduce(p) for entry in row] for row in matrix]


def numerator_data(system: FuchsianSystem):
    """Return (D, N) with A = N / D"""
    n = system.rank
    denominator = PolyQ.from_roots(system.points)
    numerator = [[PolyQ() for _ in range(n)] for _ in range(n)]
    for k, residue in enumerate(system.residues):
        cofactor = PolyQ.from_roots(q for j, q in enumerate(system.points)
                                    if j != k)
        for i in range(n):
            for j in range(n):
                if residue.entries[i, j] != 0:
                    numerator[i][j] = numerator[i][j] + cofactor * residue.entries[i, j]
    return denominator, numerator


class DerivativeTower:
    """Numerators P_0..P_S of A_[s] = P_s / D**s"""
    __slots__ = ('_denominator', '_numerator', '_levels')

    def __init__(self, denominator: PolyQ, numerator: PolyMatrix,
                 levels: List[PolyMatrix]):
        self._denominator = denominator
        self._numerator = numerator
        self._levels = levels

    @property
    def denominator(self) -> PolyQ:
        return self._denominator

    @property
    def numerator(self) -> PolyMatrix:
        return self._numerator

    @property
    def depth(self) -> int:
        return len(self._levels) - 1

    @property
    def rank(self) -> int:
        return len(self._numerator)

    def level(self, s: int) -> PolyMatrix:
        return self._levels[s]

    def __len__(self):
        return len(self._levels)

    def __iter__(self):
        return iter(self._levels)

    def extend(self, depth: int) -> 'DerivativeTower':
        """Grow the tower in place until it reaches depth"""
        d = self._denominator
        d_prime = d.derivative()
        zero = PolyQ()
        while self.depth < depth:
            s = self.depth
            current = self._levels[-1]
            product = poly_matmul(self._numerator, current, zero)
            following = [[entry.derivative() * d - entry * d_prime * s + product[i][j]
                          for j, entry in enumerate(row)]
                         for i, row in enumerate(current)]
            self._levels.append(following)
        _log.debug("derivative tower at depth %d", self.depth)
        return self


def build_tower(system: FuchsianSystem, depth: int) -> DerivativeTower:
    if depth < 1:
        raise ValueError(f'tower depth must be at least 1, got {depth}')
    denominator, numerator = numerator_data(system)
    start = poly_identity(system.rank, PolyQ.constant(1), PolyQ())
    return DerivativeTower(denominator, numerator, [start]).extend(depth)
