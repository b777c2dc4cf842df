# -*- coding: utf-8 -*-
"""
Univariate polynomials over Q and over prime fields.

Coefficients are stored lowest degree first with trailing zeros stripped.
:class:`PolyQ` keeps a tuple of Fractions; :class:`PolyFp` keeps a numpy int64
array of residues so that products reduce to a single ``np.convolve``.
"""
import math
from fractions import Fraction
from typing import Iterable, List, Sequence, TypeVar, Union

import numpy as np

from .rational import reduce_mod

__all__ = ['PolyQ', 'PolyFp', 'berkowitz']

R = TypeVar('R')

# Bound on p keeping every convolution sum inside int64
_MAX_MODULUS = 1 << 20


class PolyQ:
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, value) -> 'PolyQ':
        return cls((value,))

    @classmethod
    def x(cls) -> 'PolyQ':
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> 'PolyQ':
        """Monic polynomial prod(x - root)"""
        result = cls.constant(1)
        for root in roots:
            result = result * cls((-Fraction(root), 1))
        return result

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        """Degree, with -math.inf for the zero polynomial"""
        return len(self._coeffs) - 1 if self._coeffs else -math.inf

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_polyq(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyQ([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self._coeffs)

    def __sub__(self, other):
        other = _as_polyq(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_polyq(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return PolyQ()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return PolyQ(product)

    __rmul__ = __mul__

    def derivative(self) -> 'PolyQ':
        return PolyQ(i * c for i, c in enumerate(self._coeffs) if i)

    def deflate(self, root: Fraction) -> 'PolyQ':
        """Quotient by (x - root) by synthetic division; the remainder is
        discarded, callers divide only at known roots"""
        quotient = []
        acc = Fraction(0)
        for c in reversed(self._coeffs[1:]):
            acc = acc * root + c
            quotient.append(acc)
        return PolyQ(reversed(quotient))

    def reduce(self, p: int) -> 'PolyFp':
        """Image in F_p[x]; raises BadPrime for a non p-integral coefficient"""
        return PolyFp([reduce_mod(c, p) for c in self._coeffs], p)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == PolyQ.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(('PolyQ', self._coeffs))

    def __repr__(self):
        return f'PolyQ({[str(c) for c in self._coeffs]})'


def _as_polyq(value):
    if isinstance(value, PolyQ):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyQ.constant(value)
    return NotImplemented


class PolyFp:
    __slots__ = ('_p', '_coeffs')

    def __init__(self, coeffs, p: int):
        assert 1 < p < _MAX_MODULUS, f'modulus {p} out of range'
        array = np.asarray(coeffs, dtype=np.int64) % p
        nonzero = np.flatnonzero(array)
        self._coeffs = array[:nonzero[-1] + 1] if nonzero.size else array[:0]
        self._p = p

    @classmethod
    def zero(cls, p: int) -> 'PolyFp':
        return cls([], p)

    @classmethod
    def one(cls, p: int) -> 'PolyFp':
        return cls([1], p)

    @property
    def modulus(self) -> int:
        return self._p

    @property
    def coefficients(self) -> List[int]:
        return [int(c) for c in self._coeffs]

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if len(self._coeffs) else -math.inf

    def is_zero(self) -> bool:
        return not len(self._coeffs)

    def __bool__(self):
        return bool(len(self._coeffs))

    def _check(self, other: 'PolyFp'):
        if other._p != self._p:
            raise ValueError(f'moduli differ: {self._p} and {other._p}')

    def __add__(self, other: 'PolyFp') -> 'PolyFp':
        self._check(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        total = a.copy()
        total[:len(b)] += b
        return PolyFp(total, self._p)

    def __neg__(self) -> 'PolyFp':
        return PolyFp(-self._coeffs, self._p)

    def __sub__(self, other: 'PolyFp') -> 'PolyFp':
        return self + (-other)

    def __mul__(self, other) -> 'PolyFp':
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check(other)
        if not len(self._coeffs) or not len(other._coeffs):
            return PolyFp.zero(self._p)
        return PolyFp(np.convolve(self._coeffs, other._coeffs), self._p)

    __rmul__ = __mul__

    def scale(self, k: int) -> 'PolyFp':
        return PolyFp(self._coeffs * (k % self._p), self._p)

    def derivative(self) -> 'PolyFp':
        if len(self._coeffs) < 2:
            return PolyFp.zero(self._p)
        degrees = np.arange(1, len(self._coeffs), dtype=np.int64)
        return PolyFp(self._coeffs[1:] * degrees, self._p)

    def __pow__(self, exponent: int) -> 'PolyFp':
        result = PolyFp.one(self._p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self._p == other._p and np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash(('PolyFp', self._p, tuple(self.coefficients)))

    def __repr__(self):
        return f'PolyFp({self.coefficients}, p={self._p})'


def berkowitz(rows: Sequence[Sequence[R]], zero: R, one: R) -> List[R]:
    """
    Characteristic polynomial det(xI - M) by Berkowitz's division free
    algorithm.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*``, which lets the same routine serve Q and F_p[t].

    Parameters
    ----------
    rows : square matrix as a sequence of rows
    zero, one : the ring's additive and multiplicative identities

    Returns
    -------
    list
        Coefficients ``[1, c_1, ..., c_n]``, highest degree first
    """
    n = len(rows)
    vector = [one]
    for k in range(n - 1, -1, -1):
        size = n - k
        a = rows[k][k]
        row = list(rows[k][k + 1:])
        column = [rows[i][k] for i in range(k + 1, n)]
        trailing = [list(r[k + 1:]) for r in rows[k + 1:]]

        # First column of the lower triangular Toeplitz matrix:
        # 1, -a, -RC, -RMC, -RM^2C, ...
        toeplitz = [one, -a]
        for _ in range(size - 1):
            toeplitz.append(-_dot(row, column, zero))
            column = [_dot(r, column, zero) for r in trailing]

        vector = [_dot([toeplitz[i - j] for j in range(min(i + 1, size))],
                       vector[:min(i + 1, size)], zero)
                  for i in range(size + 1)]
    return vector


def _dot(left, right, zero):
    acc = zero
    for a, b in zip(left, right):
        acc = acc + a * b
    return acc
