# -*- coding: utf-8 -*-
"""
Exception hierarchy for rigidconv.

Every error raised deliberately by the library derives from
:class:`RigidConvError`.  Errors carry an optional ``path`` locating the
offending field of a system document (e.g. ``points[1]``) and an
``exit_code`` used by the command line front end: domain errors exit with 1,
usage and parse errors with 2.
"""
from typing import Optional

__all__ = ['RigidConvError', 'DomainError', 'UsageError', 'ParseError',
           'ZeroInput', 'NotSquare', 'NonRationalSpectrum', 'ShapeMismatch',
           'SingularMatrix', 'IndeterminateConjugacy', 'DuplicatePoints',
           'UnknownPoint', 'IntegerParameter', 'InvarianceViolation',
           'VanishingConvolution', 'PreconditionSkipped', 'BadPrime',
           'SymbolResidue', 'KatzError', 'Resonant', 'NotRigid',
           'NotIrreducible', 'Stuck', 'ReplayMismatch', 'GraphError']


class RigidConvError(Exception):
    exit_code = 1

    def __init__(self, message: str = '', path: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.path = path

    def __str__(self):
        if self.path is not None:
            return f'{self.path}: {self.message}'
        return self.message

    def to_json(self) -> dict:
        return {'error': self.__class__.__name__, 'message': self.message,
                'path': self.path}


class DomainError(RigidConvError):
    exit_code = 1


class UsageError(RigidConvError):
    exit_code = 2


class ParseError(UsageError):
    def __init__(self, message: str = '', path: Optional[str] = None,
                 line: Optional[int] = None):
        super().__init__(message, path)
        self.line = line

    def __str__(self):
        text = super().__str__()
        if self.line is not None:
            return f'line {self.line}: {text}'
        return text

    def to_json(self) -> dict:
        payload = super().to_json()
        payload['line'] = self.line
        return payload


class ZeroInput(DomainError):
    pass


class NotSquare(DomainError):
    pass


class NonRationalSpectrum(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class IndeterminateConjugacy(DomainError):
    pass


class DuplicatePoints(DomainError):
    pass


class UnknownPoint(DomainError):
    pass


class IntegerParameter(DomainError):
    pass


class InvarianceViolation(DomainError):
    """Internal consistency failure of a construction which is guaranteed
    by theory, e.g. a convolution quotient which is not invariant."""


class VanishingConvolution(DomainError):
    """The middle convolution has rank zero."""


class PreconditionSkipped(DomainError):
    pass


class BadPrime(DomainError):
    pass


class SymbolResidue(DomainError):
    pass


class KatzError(DomainError):
    """Base for errors of the Katz reduction.

    ``trace`` holds the partial :class:`~rigidconv.core.models.reports.KatzTrace`
    when the error was raised part way through a reduction.
    """
    def __init__(self, message: str = '', path: Optional[str] = None,
                 trace=None):
        super().__init__(message, path)
        self.trace = trace


class Resonant(KatzError):
    pass


class NotRigid(KatzError):
    pass


class NotIrreducible(KatzError):
    pass


class Stuck(KatzError):
    pass


class ReplayMismatch(DomainError):
    pass


class GraphError(DomainError):
    def __init__(self, graph, message: str):
        super().__init__(message)
        self.graph = graph
