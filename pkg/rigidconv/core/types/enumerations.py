# -*- coding: utf-8 -*-
import logging
from enum import Enum

__all__ = ['LOG_LEVEL_MAP', 'PCurvatureStatus', 'Place', 'OutputFormat']

LOG_LEVEL_MAP = {'debug': logging.DEBUG, 'info': logging.INFO,
                 'warning': logging.WARNING, 'error': logging.ERROR,
                 'critical': logging.CRITICAL}


class PCurvatureStatus(Enum):
    """Verdict on the p-curvature of a system at a single prime"""
    ZERO = "zero"
    NILPOTENT = "nilpotent"
    NON_NILPOTENT = "non_nilpotent"
    BAD_PRIME = "bad_prime"

    @property
    def is_nilpotent(self) -> bool:
        return self in (PCurvatureStatus.ZERO, PCurvatureStatus.NILPOTENT)


class Place(Enum):
    """Marker for the point at infinity, used wherever a finite singular
    point (a Fraction) would otherwise be expected."""
    INFINITY = "infinity"


class OutputFormat(Enum):
    JSON = "json"
    TABLE = "table"
