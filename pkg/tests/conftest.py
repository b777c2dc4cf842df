# -*- coding: utf-8 -*-
import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rigidconv.core.settings import load_settings, set_settings
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.lib import corpus

"""Global pytest configuration file for the rigidconv test suite.

Settings are replaced by an isolated parser holding only the defaults, so a
user's ~/.rigidconv.ini or RIGIDCONV_CONFIG never leaks into a test run.
"""


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long running prime sweeps')


@pytest.fixture(scope='session', autouse=True)
def shim_settings(tmpdir_factory):
    """Override the settings object with one read from an empty ini file"""
    path = tmpdir_factory.mktemp('rigidconv').join('rigidconv.ini')
    path.write('')
    set_settings(load_settings(str(path)))
    yield
    set_settings(load_settings(str(path)))


@pytest.fixture()
def single_thread(monkeypatch):
    monkeypatch.setenv('RIGIDCONV_THREADS', '1')


@pytest.fixture()
def system_factory():
    def _factory(rank, points, residues):
        return FuchsianSystem(rank, [Fraction(q) for q in points], residues)
    return _factory


@pytest.fixture()
def worked_rank_one():
    return corpus.get('worked-rank-one')


@pytest.fixture()
def worked_rank_two():
    return corpus.get('worked-rank-two')


@pytest.fixture()
def nilpotent_residues():
    return corpus.get('nilpotent-residues')


@pytest.fixture()
def hypergeometric_system():
    return corpus.get('hypergeometric')


@pytest.fixture()
def non_rigid():
    return corpus.get('non-rigid-four-point')


@pytest.fixture()
def kummer_half():
    return corpus.get('kummer-half')
