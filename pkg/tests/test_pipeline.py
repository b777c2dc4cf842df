# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from rigidconv.core.errors import GraphError, Resonant
from rigidconv.core.types.enumerations import Place
from rigidconv.lib.convolution import mc
from rigidconv.lib.fuchsian import (is_absolutely_irreducible, local_spectrum,
                                    rigidity_index, spectra, validate)
from rigidconv.lib.pipeline import ProbeGraph

F = Fraction


def survey(system):
    """validate -> spectra -> rigidity, with a convolution branch fed by a
    list dependency"""
    return {'system': system,
            'place': Place.INFINITY,
            'lam': F(-1, 6),
            'valid': (validate, 'system'),
            'spectra': (spectra, 'system'),
            'infinity': (local_spectrum, 'system', 'place'),
            'index': (rigidity_index, 'system'),
            'irreducible': (is_absolutely_irreducible, 'system'),
            'rigid': (lambda index, irreducible: index == 2 and irreducible,
                      'index', 'irreducible'),
            'convolved': (mc, 'system', 'lam'),
            'ranks': (lambda systems: [s.rank for s in systems],
                      ['system', 'convolved']),
            }


class TestProbeGraph:
    def test_survey(self, worked_rank_two):
        results = ProbeGraph(survey(worked_rank_two)).execute()
        assert results['valid'] is None
        assert results['infinity'].eigenvalues == ((F(-1), 1), (F(-1, 6), 1))
        assert [s.multiplicity_sum for s in results['spectra']] == [2, 2, 2]
        assert results['index'] == 2
        assert results['rigid'] is True
        assert results['ranks'] == [2, 1]

    def test_non_rigid(self, non_rigid):
        graph = survey(non_rigid)
        del graph['convolved'], graph['ranks']
        results = ProbeGraph(graph).execute()
        assert results['index'] == 0
        assert results['irreducible'] is True
        assert results['rigid'] is False

    def test_dependencies_run_first(self, worked_rank_one):
        calls = []

        def record(name, func):
            def _probe(*args):
                calls.append(name)
                return func(*args)
            return _probe

        graph = {'system': worked_rank_one,
                 'rigid': (record('rigid', lambda i, r: i == 2 and r),
                           'index', 'irreducible'),
                 'index': (record('index', rigidity_index), 'system'),
                 'irreducible': (record('irreducible',
                                        is_absolutely_irreducible), 'system')}
        probes = ProbeGraph(graph)
        results = probes.execute()
        assert results['rigid'] is True
        assert calls[-1] == 'rigid'
        assert sorted(calls) == ['index', 'irreducible', 'rigid']
        assert probes.execute() is results
        assert len(calls) == 3

    def test_cycle(self, worked_rank_two):
        graph = {'system': worked_rank_two,
                 'lam': F(1, 5),
                 'forward': (mc, 'backward', 'lam'),
                 'backward': (mc, 'forward', 'lam')}
        with pytest.raises(GraphError) as info:
            ProbeGraph(graph)
        assert 'Cycle detected' in str(info.value)
        assert info.value.exit_code == 1

    def test_unknown_dependency(self, worked_rank_two):
        graph = {'system': worked_rank_two,
                 'index': (rigidity_index, 'sytem')}
        with pytest.raises(GraphError) as info:
            ProbeGraph(graph)
        assert "'sytem'" in str(info.value)
        assert info.value.graph is graph

    def test_probe_errors_propagate(self, nilpotent_residues):
        probes = ProbeGraph({'system': nilpotent_residues,
                             'index': (rigidity_index, 'system')})
        with pytest.raises(Resonant):
            probes.execute()

    def test_subclass(self, worked_rank_two):
        class Survey(ProbeGraph):
            def __init__(self, system):
                self.probe_graph = survey(system)
                super().__init__()

        assert Survey(worked_rank_two).execute()['index'] == 2
