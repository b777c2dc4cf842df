# -*- coding: utf-8 -*-
"""
JSON documents for systems and reports.

A system document is an object with the keys ``rank``, ``points`` (a list of
rational strings), ``residues`` (one row major matrix of rational strings per
point) and the optional ``name`` and ``description``.  Rationals are always
written as strings in lowest terms, ``"a/b"`` or ``"a"``; JSON numbers are
accepted for integers only.
"""
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List

import numpy as np

from rigidconv.core.errors import ParseError, ShapeMismatch
from rigidconv.lib.exact.matrix import MatQ
from rigidconv.lib.exact.polynomial import PolyFp, PolyQ
from rigidconv.lib.exact.rational import format_rational, parse_rational
from rigidconv.lib.fuchsian import validate
from .reports import report_entities
from .system import FuchsianSystem, LocalSpectrum, RankOneTwist

__all__ = ['SystemEncoder', 'system_document', 'parse_system', 'emit_system',
           'to_json', 'object_value_map']


def system_document(system: FuchsianSystem) -> Dict[str, Any]:
    document = {
        'rank': system.rank,
        'points': [format_rational(q) for q in system.points],
        'residues': [_matrix(r) for r in system.residues],
    }
    if system.name is not None:
        document['name'] = system.name
    if system.description is not None:
        document['description'] = system.description
    return document


def _matrix(m: MatQ) -> List[List[str]]:
    return [[format_rational(v) for v in row] for row in m.tolist()]


def _spectrum(s: LocalSpectrum) -> Dict[str, Any]:
    point = s.point.value if isinstance(s.point, Enum) else format_rational(s.point)
    eigenvalues = None if s.eigenvalues is None else [
        [format_rational(v), m] for v, m in s.eigenvalues]
    return {'point': point, 'eigenvalues': eigenvalues}


# Declare object -> serialized value transforms
object_value_map: Dict[type, Callable[[Any], Any]] = {
    Fraction: format_rational,
    MatQ: _matrix,
    PolyQ: lambda o: [format_rational(c) for c in o.coefficients],
    PolyFp: lambda o: o.coefficients,
    RankOneTwist: lambda o: [format_rational(a) for a in o.alphas],
    LocalSpectrum: _spectrum,
    FuchsianSystem: system_document,
}


class SystemEncoder(json.JSONEncoder):
    """
    Encode systems, exact values and report records.

    Types listed in ``object_value_map`` are serialized by their transform.
    Report records have their ``__slots__`` mapped to a JSON object with the
    leading underscore of each slot stripped, in declaration order.
    """
    def default(self, o: Any):
        if isinstance(o, report_entities):
            return {key.lstrip('_'): getattr(o, key) for key in o.__slots__}
        for klass, serializer in object_value_map.items():
            if isinstance(o, klass):
                return serializer(o)
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, np.integer):
            return int(o)
        return super().default(o)


def to_json(o: Any, indent: int = 2) -> str:
    return json.dumps(o, cls=SystemEncoder, indent=indent, sort_keys=False)


def emit_system(system: FuchsianSystem) -> str:
    """Canonical text of a system document"""
    return to_json(system_document(system))


def _rational(value, path: str) -> Fraction:
    if isinstance(value, (bool, float)):
        raise ParseError(f'expected a rational string, got {value!r}',
                         path=path)
    try:
        return parse_rational(value)
    except ParseError as e:
        raise ParseError(e.message, path=path)


def _field(document: dict, key: str):
    try:
        return document[key]
    except KeyError:
        raise ParseError(f'missing field {key!r}', path=key)


def _list(value, path: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f'expected a list, got {type(value).__name__}',
                         path=path)
    return value


def _residue(value, n: int, path: str) -> MatQ:
    rows = _list(value, path)
    if len(rows) != n:
        raise ShapeMismatch(f'{len(rows)} rows in a rank {n} system',
                            path=path)
    entries = []
    for i, row in enumerate(rows):
        row = _list(row, f'{path}[{i}]')
        if len(row) != n:
            raise ShapeMismatch(f'{len(row)} columns in a rank {n} system',
                                path=f'{path}[{i}]')
        entries.append([_rational(v, f'{path}[{i}][{j}]')
                        for j, v in enumerate(row)])
    return MatQ(entries, shape=(n, n))


def parse_system(text: str) -> FuchsianSystem:
    """
    Decode and validate a system document.

    Raises
    ------
    ParseError
        Malformed JSON (with its line number), a missing field or a field of
        the wrong type (with its path, e.g. ``residues[0][1][0]``)
    ShapeMismatch
    DuplicatePoints
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno)
    if not isinstance(document, dict):
        raise ParseError('a system document must be a JSON object')

    rank = _field(document, 'rank')
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise ParseError(f'rank must be an integer, got {rank!r}', path='rank')
    if rank < 1:
        raise ShapeMismatch(f'rank must be positive, got {rank}', path='rank')
    points = [_rational(q, f'points[{i}]')
              for i, q in enumerate(_list(_field(document, 'points'),
                                          'points'))]
    raw = _list(_field(document, 'residues'), 'residues')
    if len(raw) != len(points):
        raise ShapeMismatch(f'{len(raw)} residues for {len(points)} points',
                            path='residues')
    residues = [_residue(r, rank, f'residues[{k}]') for k, r in enumerate(raw)]

    metadata = {}
    for key in ('name', 'description'):
        value = document.get(key)
        if value is not None and not isinstance(value, str):
            raise ParseError(f'{key} must be a string', path=key)
        metadata[key] = value

    system = FuchsianSystem(rank, points, residues, **metadata)
    validate(system)
    return system
