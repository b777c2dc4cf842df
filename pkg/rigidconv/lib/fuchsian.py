# -*- coding: utf-8 -*-
"""
Operations on Fuchsian systems: validation, twists, sums and products,
local spectra, irreducibility, non-resonance, the index of rigidity and
isomorphism testing.

Systems follow the convention y' = A(t) y with A = sum_i A_i / (t - q_i);
the Kummer system kummer(q, lam) has the solution (t - q)**lam.
"""
import itertools
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from rigidconv.core.errors import (DuplicatePoints, NonRationalSpectrum,
                                   Resonant, ShapeMismatch, UnknownPoint)
from rigidconv.core.models.system import (FuchsianSystem, LocalSpectrum,
                                          RankOneTwist, PointLike)
from rigidconv.core.types.enumerations import Place
from rigidconv.lib.exact.matrix import (MatQ, EchelonSpan, block_diagonal,
                                        centralizer_dimension,
                                        rational_eigenvalues,
                                        simultaneous_conjugacy)

__all__ = ['validate', 'infinity_residue', 'kummer', 'kummer_sum',
           'trivial_system', 'twist', 'direct_sum', 'tensor_product',
           'is_absolutely_irreducible', 'local_spectrum', 'singular_residues',
           'is_non_resonant', 'rigidity_index', 'is_rigid', 'is_isomorphic',
           'spectra']

_log = logging.getLogger(__name__)


def validate(system: FuchsianSystem) -> None:
    """Check the FuchsianSystem invariants.

    Raises
    ------
    ShapeMismatch
        rank not a positive integer, residue count differing from the point
        count, or a residue which is not rank x rank
    DuplicatePoints
        a point repeated; the path names the second occurrence
    """
    n = system.rank
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ShapeMismatch(f'rank must be a positive integer, got {n!r}',
                            path='rank')
    if len(system.residues) != len(system.points):
        raise ShapeMismatch(f'{len(system.residues)} residues for '
                            f'{len(system.points)} points', path='residues')
    for k, residue in enumerate(system.residues):
        if residue.shape != (n, n):
            raise ShapeMismatch(f'residue of shape {residue.shape} in a rank '
                                f'{n} system', path=f'residues[{k}]')
    seen = set()
    for i, point in enumerate(system.points):
        if point in seen:
            raise DuplicatePoints(f'point {point} repeated',
                                  path=f'points[{i}]')
        seen.add(point)


def infinity_residue(system: FuchsianSystem) -> MatQ:
    total = MatQ.zeros(system.rank, system.rank)
    for residue in system.residues:
        total = total + residue
    return -total


def kummer(q, lam) -> FuchsianSystem:
    """Rank one system with the single residue lam at q"""
    return FuchsianSystem(1, [q], [[[Fraction(lam)]]])


def kummer_sum(points: Sequence, lam) -> FuchsianSystem:
    """Direct sum of kummer(q, lam) over the given points"""
    system = kummer(points[0], lam)
    for q in points[1:]:
        system = direct_sum(system, kummer(q, lam))
    return system


def trivial_system(n: int, points: Sequence = ()) -> FuchsianSystem:
    return FuchsianSystem(n, points, [MatQ.zeros(n, n) for _ in points])


def twist(system: FuchsianSystem, alphas: RankOneTwist) -> FuchsianSystem:
    """Tensor with the rank one system with residues alpha_i: each residue
    A_i becomes A_i + alpha_i * I"""
    if len(alphas) != len(system.points):
        raise ShapeMismatch(f'{len(alphas)} twist exponents for '
                            f'{len(system.points)} points', path='alphas')
    n = system.rank
    residues = [residue + MatQ.scalar(n, alpha)
                for residue, alpha in zip(system.residues, alphas.alphas)]
    return FuchsianSystem(n, system.points, residues)


def _merged_points(first: FuchsianSystem,
                   second: FuchsianSystem) -> Tuple[Fraction, ...]:
    return first.points + tuple(q for q in second.points
                                if q not in first.points)


def _residue_or_zero(system: FuchsianSystem, point: Fraction) -> MatQ:
    if point in system.points:
        return system.residue_at(point)
    return MatQ.zeros(system.rank, system.rank)


def direct_sum(first: FuchsianSystem, second: FuchsianSystem) -> FuchsianSystem:
    points = _merged_points(first, second)
    residues = [block_diagonal([_residue_or_zero(first, q),
                                _residue_or_zero(second, q)]) for q in points]
    return FuchsianSystem(first.rank + second.rank, points, residues)


def tensor_product(first: FuchsianSystem,
                   second: FuchsianSystem) -> FuchsianSystem:
    """Residues A (x) I + I (x) B at every point of either system"""
    points = _merged_points(first, second)
    eye_first = MatQ.identity(first.rank)
    eye_second = MatQ.identity(second.rank)
    residues = [_residue_or_zero(first, q).kron(eye_second)
                + eye_first.kron(_residue_or_zero(second, q)) for q in points]
    return FuchsianSystem(first.rank * second.rank, points, residues)


def is_absolutely_irreducible(system: FuchsianSystem) -> bool:
    """
    Burnside's criterion: the residues act absolutely irreducibly iff the
    associative algebra they generate together with I is all of M_n.

    The algebra is grown as the span of words in the generators, multiplying
    new basis elements by each generator until no new direction appears.
    """
    n = system.rank
    target = n * n
    generators = [r for r in system.residues if not r.is_zero()]
    span = EchelonSpan(target)
    identity = MatQ.identity(n)
    span.add(identity.flatten())
    pending = [identity]
    for g in generators:
        if span.add(g.flatten()):
            pending.append(g)
    while pending and span.dimension < target:
        element = pending.pop()
        for g in generators:
            word = g @ element
            if span.add(word.flatten()):
                pending.append(word)
    _log.debug("algebra generated by residues has dimension %d of %d",
               span.dimension, target)
    return span.dimension == target


def _residue_for(system: FuchsianSystem, point: PointLike) -> MatQ:
    if point is Place.INFINITY:
        return infinity_residue(system)
    try:
        return system.residue_at(Fraction(point))
    except (ValueError, TypeError):
        raise UnknownPoint(f'{point} is not a singular point of the system')


def local_spectrum(system: FuchsianSystem, point: PointLike) -> LocalSpectrum:
    residue = _residue_for(system, point)
    try:
        eigenvalues = rational_eigenvalues(residue)
    except NonRationalSpectrum:
        eigenvalues = None
    return LocalSpectrum(point, eigenvalues)


def singular_residues(system: FuchsianSystem) -> List[Tuple[PointLike, MatQ]]:
    """The (point, residue) pairs with a nonzero residue, infinity last"""
    pairs = [(q, r) for q, r in zip(system.points, system.residues)
             if not r.is_zero()]
    at_infinity = infinity_residue(system)
    if not at_infinity.is_zero():
        pairs.append((Place.INFINITY, at_infinity))
    return pairs


def _rational_spectrum(point: PointLike, residue: MatQ):
    try:
        return rational_eigenvalues(residue)
    except NonRationalSpectrum as e:
        raise NonRationalSpectrum(f'residue at {getattr(point, "value", point)} '
                                  f'has irrational eigenvalues: {e.message}')


def is_non_resonant(system: FuchsianSystem) -> bool:
    """True iff no two distinct eigenvalues of a residue at a singular point
    (infinity included) differ by an integer"""
    for point, residue in singular_residues(system):
        values = [v for v, _ in _rational_spectrum(point, residue)]
        for a, b in itertools.combinations(values, 2):
            if (a - b).denominator == 1:
                _log.debug("resonance at %s: %s - %s", point, a, b)
                return False
    return True


def rigidity_index(system: FuchsianSystem) -> int:
    """
    Katz's index of rigidity (2 - m) n**2 + sum dim Z(A) over the m points
    with a nonzero residue, infinity included.

    Raises
    ------
    Resonant
        The index is only meaningful for non-resonant systems
    NonRationalSpectrum
    """
    if not is_non_resonant(system):
        raise Resonant('rigidity index of a resonant system')
    pairs = singular_residues(system)
    n = system.rank
    return (2 - len(pairs)) * n * n + sum(centralizer_dimension(r)
                                          for _, r in pairs)


def is_rigid(system: FuchsianSystem) -> bool:
    return is_absolutely_irreducible(system) and rigidity_index(system) == 2


def is_isomorphic(first: FuchsianSystem, second: FuchsianSystem) -> bool:
    """Systems on the same points are isomorphic iff their residue tuples
    are simultaneously conjugate"""
    if first.rank != second.rank or set(first.points) != set(second.points):
        return False
    if not first.points:
        return True
    ordered = [second.residue_at(q) for q in first.points]
    return simultaneous_conjugacy(first.residues, ordered) is not None


def spectra(system: FuchsianSystem) -> List[LocalSpectrum]:
    """Local spectra at every finite point followed by infinity"""
    places: List[Union[Fraction, Place]] = list(system.points) + [Place.INFINITY]
    return [local_spectrum(system, q) for q in places]
