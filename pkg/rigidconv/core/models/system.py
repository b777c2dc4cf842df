# -*- coding: utf-8 -*-

"""
Pure data classes for Fuchsian systems and their local data
"""
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from rigidconv.core.types.enumerations import Place
from rigidconv.lib.exact.matrix import MatQ

__all__ = ['FuchsianSystem', 'RankOneTwist', 'LocalSpectrum', 'PointLike']

PointLike = Union[Fraction, Place]


class FuchsianSystem:
    """
    The system y' = A(t) y with A = sum_i A_i / (t - q_i).

    Holds the rank n, the finite singular points q_i and one n x n residue
    matrix A_i per point.  The residue at infinity is always derived as
    -(A_1 + ... + A_r) and never stored.

    Construction only coerces types; :func:`rigidconv.lib.fuchsian.validate`
    checks the invariants (distinct points, square residues of size n).
    """
    __slots__ = ('_rank', '_points', '_residues', '_name', '_description')

    def __init__(self, rank: int, points: Iterable, residues: Iterable,
                 name: Optional[str] = None, description: Optional[str] = None):
        self._rank = rank
        self._points: Tuple[Fraction, ...] = tuple(Fraction(q) for q in points)
        self._residues: Tuple[MatQ, ...] = tuple(
            r if isinstance(r, MatQ) else MatQ(r) for r in residues)
        self._name = name
        self._description = description

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def points(self) -> Tuple[Fraction, ...]:
        return self._points

    @property
    def residues(self) -> Tuple[MatQ, ...]:
        return self._residues

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def description(self) -> Optional[str]:
        return self._description

    def __len__(self):
        return len(self._points)

    def residue_at(self, point: Fraction) -> MatQ:
        return self._residues[self._points.index(Fraction(point))]

    def with_metadata(self, name: Optional[str] = None,
                      description: Optional[str] = None) -> 'FuchsianSystem':
        return FuchsianSystem(self._rank, self._points, self._residues,
                              name=name, description=description)

    def __eq__(self, other):
        if not isinstance(other, FuchsianSystem):
            return NotImplemented
        return (self._rank == other._rank and self._points == other._points
                and self._residues == other._residues)

    def __hash__(self):
        return hash((self._rank, self._points, self._residues))

    def __repr__(self):
        label = f' {self._name!r}' if self._name else ''
        return (f'<FuchsianSystem{label} rank={self._rank} '
                f'points={[str(q) for q in self._points]}>')


class RankOneTwist:
    """Scalars alpha_i aligned with the points of a system; twisting shifts
    the residue A_i by alpha_i * I"""
    __slots__ = ('_alphas',)

    def __init__(self, alphas: Iterable):
        self._alphas: Tuple[Fraction, ...] = tuple(Fraction(a) for a in alphas)

    @classmethod
    def zero(cls, count: int) -> 'RankOneTwist':
        return cls([0] * count)

    @property
    def alphas(self) -> Tuple[Fraction, ...]:
        return self._alphas

    @property
    def infinity_exponent(self) -> Fraction:
        return -sum(self._alphas, Fraction(0))

    def __neg__(self) -> 'RankOneTwist':
        return RankOneTwist(-a for a in self._alphas)

    def __len__(self):
        return len(self._alphas)

    def __eq__(self, other):
        if not isinstance(other, RankOneTwist):
            return NotImplemented
        return self._alphas == other._alphas

    def __hash__(self):
        return hash(self._alphas)

    def __repr__(self):
        return f'RankOneTwist({[str(a) for a in self._alphas]})'


class LocalSpectrum:
    """Eigenvalue multiset of the residue at a point (or at infinity).

    ``eigenvalues`` is None when the characteristic polynomial has a factor
    without rational roots.
    """
    __slots__ = ('_point', '_eigenvalues')

    def __init__(self, point: PointLike,
                 eigenvalues: Optional[Sequence[Tuple[Fraction, int]]]):
        self._point = point
        self._eigenvalues = None if eigenvalues is None else tuple(
            (Fraction(v), int(m)) for v, m in eigenvalues)

    @property
    def point(self) -> PointLike:
        return self._point

    @property
    def eigenvalues(self) -> Optional[Tuple[Tuple[Fraction, int], ...]]:
        return self._eigenvalues

    @property
    def is_rational(self) -> bool:
        return self._eigenvalues is not None

    @property
    def multiplicity_sum(self) -> int:
        return sum(m for _, m in self._eigenvalues or ())

    def multiplicity(self, value) -> int:
        return dict(self._eigenvalues or ()).get(Fraction(value), 0)

    def __repr__(self):
        return f'LocalSpectrum({self._point}, {self._eigenvalues})'
