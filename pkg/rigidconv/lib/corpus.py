# -*- coding: utf-8 -*-
"""
Named example systems shipped with the package.

Every entry is built on demand by a factory so that callers always receive
a fresh, validated system carrying its corpus name.
"""
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from rigidconv.core.models.system import FuchsianSystem
from rigidconv.lib.convolution import mc
from rigidconv.lib.fuchsian import kummer, validate

__all__ = ['hypergeometric', 'names', 'get', 'RIGID', 'CORPUS']

F = Fraction


def hypergeometric(a, b, c) -> FuchsianSystem:
    """
    Rank two rigid system with three singular points, the middle
    convolution mc_c of the rank one system (a at 0, b at 1).

    The residues are [[a + c, b], [0, 0]] at 0 and [[0, 0], [a, b + c]] at 1;
    the residue at infinity has eigenvalues -c and -(a + b + c).
    """
    a, b, c = F(a), F(b), F(c)
    system = mc(FuchsianSystem(1, [0, 1], [[[a]], [[b]]]), c)
    return system.with_metadata(
        'hypergeometric',
        f'mc_{c} of ({a} at 0, {b} at 1)')


def _kummer_half():
    return kummer(0, F(1, 2)).with_metadata(
        'kummer-half', 'solution t^(1/2)')


def _kummer_third():
    return kummer(0, F(1, 3)).with_metadata(
        'kummer-third', 'solution t^(1/3)')


def _worked_rank_one():
    return FuchsianSystem(1, [0, 1], [[[F(1, 2)]], [[F(1, 3)]]],
                          'worked-rank-one', 'residues 1/2 at 0, 1/3 at 1')


def _worked_rank_two():
    return FuchsianSystem(
        2, [0, 1],
        [[[F(2, 3), F(1, 3)], [0, 0]],
         [[0, 0], [F(1, 2), F(1, 2)]]],
        'worked-rank-two', 'mc_1/6 of worked-rank-one')


def _apparent_rank_one():
    return FuchsianSystem(1, [0, 1], [[[0]], [[F(1, 3)]]],
                          'apparent-rank-one',
                          'apparent point at 0; mc_1/6 prunes to kummer(1, 1/2)')


def _nilpotent_residues():
    return FuchsianSystem(2, [0, 1], [[[0, 1], [0, 0]], [[0, 0], [1, 0]]],
                          'nilpotent-residues',
                          'resonant at infinity (eigenvalues 1, -1)')


def _hypergeometric():
    return hypergeometric(F(1, 3), F(1, 5), F(1, 7))


def _non_rigid_four_point():
    return FuchsianSystem(
        2, [0, 1, -1],
        [[[F(1, 5), 0], [0, 0]],
         [[0, 0], [F(139, 385), F(2, 7)]],
         [[0, F(1, 385)], [0, F(3, 11)]]],
        'non-rigid-four-point',
        'irreducible, non-resonant, rigidity index 0')


CORPUS: Dict[str, Callable[[], FuchsianSystem]] = {
    'kummer-half': _kummer_half,
    'kummer-third': _kummer_third,
    'worked-rank-one': _worked_rank_one,
    'worked-rank-two': _worked_rank_two,
    'apparent-rank-one': _apparent_rank_one,
    'nilpotent-residues': _nilpotent_residues,
    'hypergeometric': _hypergeometric,
    'non-rigid-four-point': _non_rigid_four_point,
}

# Irreducible systems of rigidity index 2 with a complete Katz reduction
RIGID: Tuple[str, ...] = ('kummer-half', 'kummer-third', 'worked-rank-one',
                          'worked-rank-two', 'hypergeometric')


def names() -> List[str]:
    return list(CORPUS)


def get(name: str) -> FuchsianSystem:
    try:
        factory = CORPUS[name]
    except KeyError:
        raise KeyError(f'no corpus system named {name!r}; known: '
                       f'{", ".join(CORPUS)}')
    system = factory()
    validate(system)
    return system
