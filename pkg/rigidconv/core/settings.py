# -*- coding: utf-8 -*-
"""
Process wide settings, read from an ini file.

The settings file is located by the ``RIGIDCONV_CONFIG`` environment variable,
falling back to ``~/.rigidconv.ini``; a missing file simply leaves the
defaults in place.  Values are addressed with :class:`SettingsKey` members
which hold ``"section/option"`` strings.
"""
import configparser
import os
from enum import Enum
from pathlib import Path

__all__ = ['set_settings', 'settings', 'SettingsKey', 'get_value',
           'get_int', 'thread_count', 'load_settings']

THREADS_ENV = 'RIGIDCONV_THREADS'
CONFIG_ENV = 'RIGIDCONV_CONFIG'

DEFAULTS = {
    'sweep': {'threads': '0', 'primes_lo': '3', 'primes_hi': '50'},
    'radius': {'smax': '64', 'window': '', 'extra_prime_bound': '0'},
    'log': {'level': 'warning'},
}


def load_settings(path=None) -> configparser.ConfigParser:
    """Create a ConfigParser populated with the defaults, then overlaid with
    the contents of path (or the default settings file) if it exists"""
    parser = configparser.ConfigParser()
    parser.read_dict(DEFAULTS)
    if path is None:
        path = os.environ.get(CONFIG_ENV) or Path('~/.rigidconv.ini').expanduser()
    parser.read(str(path))
    return parser


_settings = load_settings()


def set_settings(handle: configparser.ConfigParser):
    """Set the global settings object to a custom handler"""
    global _settings
    _settings = handle


def settings() -> configparser.ConfigParser:
    """Expose the global settings object"""
    return _settings


class SettingsKey(Enum):
    Threads = "sweep/threads"
    PrimesLo = "sweep/primes_lo"
    PrimesHi = "sweep/primes_hi"

    SMax = "radius/smax"
    Window = "radius/window"
    ExtraPrimeBound = "radius/extra_prime_bound"

    LogLevel = "log/level"

    def __call__(self):
        """Allow retrieval of the enum value using call syntax `()` """
        return self.value


def get_value(key: SettingsKey) -> str:
    section, option = key().split('/')
    return _settings.get(section, option,
                         fallback=DEFAULTS[section][option])


def get_int(key: SettingsKey) -> int:
    return int(get_value(key))


def thread_count() -> int:
    """Number of workers for per-prime sweeps.

    RIGIDCONV_THREADS takes precedence over the settings file; 0 selects
    one worker per CPU and 1 runs sweeps inline.
    """
    raw = os.environ.get(THREADS_ENV, '').strip()
    threads = int(raw) if raw else get_int(SettingsKey.Threads)
    if threads <= 0:
        return os.cpu_count() or 1
    return threads
