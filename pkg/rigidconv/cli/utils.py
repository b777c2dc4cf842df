# -*- coding: utf-8 -*-
import logging
import sys
from typing import Any

import pandas as pd

from rigidconv.core.types.enumerations import LOG_LEVEL_MAP

__all__ = ['LOG_FORMAT', 'configure_logging', 'render_table']

LOG_FORMAT = logging.Formatter(fmt="%(asctime)s:%(levelname)s - %(module)s:"
                                   "%(funcName)s :: %(message)s",
                               datefmt="%H:%M:%S")

_handler = None


def configure_logging(level: str = 'warning') -> logging.Logger:
    """Route the package log to stderr at the given level name, replacing any
    handler installed by an earlier call"""
    global _handler
    log = logging.getLogger('rigidconv')
    if _handler is not None:
        log.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(LOG_FORMAT)
    log.addHandler(_handler)
    log.setLevel(LOG_LEVEL_MAP[level.lower()])
    return log


def _is_records(value: Any) -> bool:
    return (isinstance(value, list) and bool(value)
            and all(isinstance(v, dict) for v in value))


def render_table(payload: Any) -> str:
    """
    Render a decoded JSON payload as text tables.

    Scalar and nested object fields are flattened into one two column table;
    every field holding a list of objects gets a table of its own, headed by
    the field name.
    """
    if _is_records(payload):
        return pd.json_normalize(payload).to_string(index=False)
    if not isinstance(payload, dict):
        return str(payload)

    scalars = {k: v for k, v in payload.items() if not _is_records(v)}
    sections = []
    if scalars:
        frame = pd.json_normalize(scalars).T
        sections.append(frame.to_string(header=False))
    for key, value in payload.items():
        if _is_records(value):
            frame = pd.json_normalize(value)
            sections.append(f'{key}:\n{frame.to_string(index=False)}')
    return '\n\n'.join(sections)
