# -*- coding: utf-8 -*-
"""
Exact dense linear algebra over Q.

:class:`MatQ` wraps a two dimensional numpy array of ``object`` dtype holding
:class:`fractions.Fraction` entries.  numpy supplies slicing, stacking and
products; every elimination below is exact.  Vectors are tuples of Fractions.
"""
import itertools
import logging
import math
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors

from rigidconv.core.errors import (NotSquare, NonRationalSpectrum,
                                   ShapeMismatch, SingularMatrix,
                                   IndeterminateConjugacy)
from .polynomial import PolyQ, berkowitz
from .rational import eigen_sort_key

__all__ = ['Vector', 'MatQ', 'rref', 'rank', 'kernel_basis', 'determinant',
           'inverse', 'char_poly', 'rational_roots', 'rational_eigenvalues',
           'centralizer_dimension', 'simultaneous_conjugacy', 'EchelonSpan',
           'block_diagonal']

_log = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

_to_fraction = np.frompyfunc(Fraction, 1, 1)

# Largest number of basis vectors combined when scanning a solution space
# for an invertible element
CONJUGACY_SCAN_DEPTH = 3


class MatQ:
    """Immutable rational matrix"""
    __slots__ = ('_entries',)

    def __init__(self, entries, shape: Tuple[int, int] = None):
        try:
            array = np.array(entries, dtype=object)
        except ValueError as e:
            raise ShapeMismatch(f'ragged matrix: {e}')
        if shape is not None:
            array = array.reshape(shape)
        if array.ndim != 2:
            raise ShapeMismatch(f'expected a 2 dimensional matrix, got '
                                f'shape {array.shape}')
        if array.size:
            array = _to_fraction(array).astype(object)
        array.flags.writeable = False
        self._entries = array

    @classmethod
    def identity(cls, n: int) -> 'MatQ':
        return cls([[Fraction(int(i == j)) for j in range(n)]
                    for i in range(n)], shape=(n, n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'MatQ':
        return cls(np.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def scalar(cls, n: int, value) -> 'MatQ':
        return cls.identity(n) * Fraction(value)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int) -> 'MatQ':
        if not columns:
            return cls.zeros(rows, 0)
        return cls(np.array(columns, dtype=object).T)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def shape(self) -> Tuple[int, int]:
        return self._entries.shape

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._entries.flat)

    def __getitem__(self, item):
        value = self._entries[item]
        if isinstance(value, np.ndarray):
            return MatQ(value) if value.ndim == 2 else tuple(value)
        return value

    def tolist(self) -> List[List[Fraction]]:
        return self._entries.tolist()

    def column(self, j: int) -> Vector:
        return tuple(self._entries[:, j])

    def flatten(self) -> Vector:
        return tuple(self._entries.flat)

    def trace(self) -> Fraction:
        return sum(self._entries.diagonal(), Fraction(0))

    @property
    def T(self) -> 'MatQ':
        return MatQ(self._entries.T)

    def _same_shape(self, other: 'MatQ'):
        if self.shape != other.shape:
            raise ShapeMismatch(f'shapes {self.shape} and {other.shape} differ')

    def __add__(self, other: 'MatQ') -> 'MatQ':
        self._same_shape(other)
        return MatQ(self._entries + other._entries)

    def __sub__(self, other: 'MatQ') -> 'MatQ':
        self._same_shape(other)
        return MatQ(self._entries - other._entries)

    def __neg__(self) -> 'MatQ':
        return MatQ(-self._entries)

    def __mul__(self, scalar) -> 'MatQ':
        if isinstance(scalar, MatQ):
            return NotImplemented
        return MatQ(self._entries * Fraction(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: 'MatQ') -> 'MatQ':
        if self.cols != other.rows:
            raise ShapeMismatch(f'cannot multiply {self.shape} by {other.shape}')
        if not self.cols:
            return MatQ.zeros(self.rows, other.cols)
        return MatQ(self._entries.dot(other._entries))

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times column vector"""
        if len(vector) != self.cols:
            raise ShapeMismatch(f'vector of length {len(vector)} for {self.shape}')
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0))
                     for row in self._entries)

    def kron(self, other: 'MatQ') -> 'MatQ':
        return MatQ(np.kron(self._entries, other._entries))

    def __eq__(self, other):
        if not isinstance(other, MatQ):
            return NotImplemented
        return (self.shape == other.shape
                and all(a == b for a, b in zip(self._entries.flat,
                                               other._entries.flat)))

    def __hash__(self):
        return hash((self.shape, self.flatten()))

    def __repr__(self):
        rows = [[str(x) for x in row] for row in self.tolist()]
        return f'MatQ({rows})'


def block_diagonal(blocks: Sequence[MatQ]) -> MatQ:
    size = sum(b.rows for b in blocks)
    out = np.full((size, size), Fraction(0), dtype=object)
    offset = 0
    for block in blocks:
        out[offset:offset + block.rows, offset:offset + block.cols] = block.entries
        offset += block.rows
    return MatQ(out)


def rref(matrix: MatQ) -> Tuple[MatQ, List[int]]:
    """
    Reduced row echelon form.

    Pivots are searched column by column, taking the first row holding a
    nonzero entry, which fixes the output for a given input.

    Returns
    -------
    (MatQ, list of int)
        The reduced matrix and its pivot columns
    """
    work = matrix.entries.copy()
    rows, cols = work.shape
    pivots = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        for i in range(pivot_row, rows):
            if work[i, col] != 0:
                break
        else:
            continue
        if i != pivot_row:
            work[[pivot_row, i]] = work[[i, pivot_row]]
        work[pivot_row] = work[pivot_row] / work[pivot_row, col]
        for j in range(rows):
            if j != pivot_row and work[j, col] != 0:
                work[j] = work[j] - work[j, col] * work[pivot_row]
        pivots.append(col)
        pivot_row += 1
    return MatQ(work), pivots


def rank(matrix: MatQ) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: MatQ) -> List[Vector]:
    """Basis of the right null space, one vector per free column of the
    reduced echelon form, in column order"""
    reduced, pivots = rref(matrix)
    free = [c for c in range(matrix.cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [Fraction(0)] * matrix.cols
        vector[f] = Fraction(1)
        for row, c in enumerate(pivots):
            vector[c] = -reduced.entries[row, f]
        basis.append(tuple(vector))
    return basis


def _check_square(matrix: MatQ):
    if not matrix.is_square():
        raise NotSquare(f'matrix of shape {matrix.shape} is not square')


def determinant(matrix: MatQ) -> Fraction:
    _check_square(matrix)
    work = matrix.entries.copy()
    n = matrix.rows
    det = Fraction(1)
    for col in range(n):
        for i in range(col, n):
            if work[i, col] != 0:
                break
        else:
            return Fraction(0)
        if i != col:
            work[[col, i]] = work[[i, col]]
            det = -det
        pivot = work[col, col]
        det *= pivot
        for j in range(col + 1, n):
            if work[j, col] != 0:
                work[j] = work[j] - (work[j, col] / pivot) * work[col]
    return det


def inverse(matrix: MatQ) -> MatQ:
    _check_square(matrix)
    n = matrix.rows
    augmented = MatQ(np.hstack((matrix.entries, MatQ.identity(n).entries)))
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix('matrix is singular')
    return MatQ(reduced.entries[:, n:])


def char_poly(matrix: MatQ) -> PolyQ:
    """det(xI - M), computed division free"""
    _check_square(matrix)
    coeffs = berkowitz(matrix.tolist(), Fraction(0), Fraction(1))
    return PolyQ(reversed(coeffs))


def rational_roots(poly: PolyQ) -> List[Tuple[Fraction, int]]:
    """
    All roots of poly with multiplicity, when every root is rational.

    Roots are found with the rational root theorem on the primitive integer
    form, and their multiplicities by repeated synthetic division.  The
    result is ordered by multiplicity (descending), height, then value.

    Raises
    ------
    NonRationalSpectrum
        When some irreducible factor of degree > 1 remains
    """
    if poly.is_zero():
        raise ValueError('roots of the zero polynomial')
    roots = {}
    coeffs = list(poly.coefficients)
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        roots[Fraction(0)] = zeros
    remaining = PolyQ(coeffs[zeros:])

    if remaining.degree > 0:
        denominator = 1
        for c in remaining.coefficients:
            denominator = denominator * c.denominator // math.gcd(denominator, c.denominator)
        integral = [int(c * denominator) for c in remaining.coefficients]
        for num in divisors(abs(integral[0])):
            for den in divisors(abs(integral[-1])):
                for candidate in (Fraction(num, den), Fraction(-num, den)):
                    if candidate in roots:
                        continue
                    while remaining.degree > 0 and remaining(candidate) == 0:
                        roots[candidate] = roots.get(candidate, 0) + 1
                        remaining = remaining.deflate(candidate)
                if remaining.degree <= 0:
                    break
            if remaining.degree <= 0:
                break

    if remaining.degree > 0:
        raise NonRationalSpectrum(f'{poly!r} has a factor of degree '
                                  f'{remaining.degree} without rational roots')
    return sorted(roots.items(), key=eigen_sort_key)


def rational_eigenvalues(matrix: MatQ) -> List[Tuple[Fraction, int]]:
    return rational_roots(char_poly(matrix))


def _operator_matrix(n: int, image) -> MatQ:
    """Matrix of a linear map on n x n matrices, given the image of each
    matrix unit as a flat vector; unknowns are in row major order"""
    columns = []
    for i, j in itertools.product(range(n), repeat=2):
        unit = np.full((n, n), Fraction(0), dtype=object)
        unit[i, j] = Fraction(1)
        columns.append(image(MatQ(unit)))
    return MatQ.from_columns(columns, len(columns[0]))


def centralizer_dimension(matrix: MatQ) -> int:
    """Dimension of the solution space of XA = AX"""
    _check_square(matrix)
    n = matrix.rows
    if n == 0:
        return 0
    commutator = _operator_matrix(
        n, lambda x: (x @ matrix - matrix @ x).flatten())
    return n * n - rank(commutator)


def _scan_candidates(basis: Sequence[Vector]) -> Iterator[Vector]:
    """Deterministic sequence of elements of span(basis): the basis vectors,
    +-1 combinations of up to CONJUGACY_SCAN_DEPTH of them (first
    coefficient +1), then the weighted sum of all of them"""
    size = len(basis[0])
    yield from basis
    for depth in range(2, min(CONJUGACY_SCAN_DEPTH, len(basis)) + 1):
        for subset in itertools.combinations(basis, depth):
            for signs in itertools.product((1, -1), repeat=depth - 1):
                coefficients = (1,) + signs
                yield tuple(sum((c * v[k] for c, v in zip(coefficients, subset)),
                                Fraction(0)) for k in range(size))
    if len(basis) > CONJUGACY_SCAN_DEPTH:
        yield tuple(sum(((i + 1) * v[k] for i, v in enumerate(basis)),
                        Fraction(0)) for k in range(size))


def simultaneous_conjugacy(a: Sequence[MatQ],
                           b: Sequence[MatQ]) -> Optional[MatQ]:
    """
    Find an invertible S with S A_k = B_k S for every k.

    The solutions S form the null space of a linear system in the n**2
    entries of S.  For absolutely irreducible tuples that space has dimension
    at most one, so its basis vector decides the question; otherwise a
    bounded deterministic scan of the space is made.

    Returns
    -------
    MatQ or None
        A verified conjugating matrix, or None when none exists

    Raises
    ------
    ShapeMismatch
        Tuples of different length or with non matching square sizes
    IndeterminateConjugacy
        The solution space has dimension >= 2 and the scan found no
        invertible element
    """
    if len(a) != len(b):
        raise ShapeMismatch(f'tuples of length {len(a)} and {len(b)}')
    if not a:
        raise ShapeMismatch('empty matrix tuples')
    n = a[0].rows
    for m in itertools.chain(a, b):
        if m.shape != (n, n):
            raise ShapeMismatch(f'expected {n}x{n} matrices, got {m.shape}')

    if any(char_poly(x) != char_poly(y) for x, y in zip(a, b)):
        return None
    if all(x == y for x, y in zip(a, b)):
        return MatQ.identity(n)

    system = _operator_matrix(
        n, lambda s: tuple(itertools.chain.from_iterable(
            (s @ x - y @ s).flatten() for x, y in zip(a, b))))
    basis = kernel_basis(system)
    _log.debug("conjugacy solution space has dimension %d", len(basis))
    if not basis:
        return None

    for candidate in _scan_candidates(basis):
        s = MatQ(list(candidate), shape=(n, n))
        if determinant(s) == 0:
            continue
        if all(s @ x == y @ s for x, y in zip(a, b)):
            return s
        raise IndeterminateConjugacy('solution failed re-substitution')

    if len(basis) == 1:
        return None
    raise IndeterminateConjugacy(
        f'no invertible element found in a solution space of dimension '
        f'{len(basis)}')


class EchelonSpan:
    """Incrementally grown subspace of Q^n kept in semi echelon form.

    Each stored row is normalized at its pivot and reduced against all
    earlier rows, so membership is decided by one sweep over the rows.
    """
    def __init__(self, size: int):
        self.size = size
        self._rows: List[Tuple[int, list]] = []

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Fraction]) -> list:
        work = list(vector)
        for pivot, row in self._rows:
            factor = work[pivot]
            if factor != 0:
                work = [w - factor * r for w, r in zip(work, row)]
        return work

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Add vector to the span; returns False if it was already a member"""
        work = self.reduce(vector)
        for pivot, value in enumerate(work):
            if value != 0:
                self._rows.append((pivot, [w / value for w in work]))
                return True
        return False
