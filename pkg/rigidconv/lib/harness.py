# -*- coding: utf-8 -*-
"""
Cross-check of the arithmetic evidence along a Katz reduction.

For a rigid irreducible system the following are expected to agree: the
p-curvature is nilpotent at every good prime, the truncated global inverse
radius is finite and does not move when more primes are considered, and
the rank one end of the reduction has vanishing p-curvature.
"""
import logging
from functools import partial
from operator import itemgetter
from typing import List, Tuple

from rigidconv.core.models.reports import (ChainProbe, HarnessReport,
                                           KatzTrace, RankOneVerdict,
                                           RhoEstimate, SweepSummary)
from rigidconv.core.models.system import FuchsianSystem
from rigidconv.core.settings import SettingsKey, get_int
from rigidconv.lib.arithmetic.pcurvature import (nilpotency_sweep,
                                                 rank_one_verdict)
from rigidconv.lib.arithmetic.radius import rho_truncated
from rigidconv.lib.katz import katz_chain
from rigidconv.lib.pipeline import ProbeGraph

__all__ = ['EquivalenceHarness', 'equivalence_harness']

_log = logging.getLogger(__name__)


class EquivalenceHarness(ProbeGraph):
    def __init__(self, system: FuchsianSystem, prime_range: Tuple[int, int],
                 S: int, threads: int = None):
        self.prime_range = prime_range
        self.S = S
        self.threads = threads
        extra = get_int(SettingsKey.ExtraPrimeBound)
        self.doubled_bound = 2 * max(S, extra)
        self.probe_graph = {
            'system': system,
            'chain': (katz_chain, 'system'),
            'trace': (itemgetter(0), 'chain'),
            'systems': (itemgetter(1), 'chain'),
            'sweeps': (self.sweeps, 'systems'),
            'radii': (partial(self.radii, extra_prime_bound=extra), 'systems'),
            'radii_doubled': (partial(self.radii,
                                      extra_prime_bound=self.doubled_bound),
                              'systems'),
            'terminal': (self.terminal_verdict, 'trace'),
            'probes': (self.probes, 'systems', 'sweeps', 'radii',
                       'radii_doubled'),
            'report': (HarnessReport, 'trace', 'probes', 'terminal'),
        }
        super().__init__()

    def sweeps(self, systems: List[FuchsianSystem]) -> List[SweepSummary]:
        return [nilpotency_sweep(s, self.prime_range, self.threads)
                for s in systems]

    def radii(self, systems: List[FuchsianSystem],
              extra_prime_bound: int) -> List[RhoEstimate]:
        return [rho_truncated(s, self.S, extra_prime_bound=extra_prime_bound,
                              threads=self.threads) for s in systems]

    def terminal_verdict(self, trace: KatzTrace) -> RankOneVerdict:
        return rank_one_verdict(trace.terminal, self.prime_range, self.threads)

    @staticmethod
    def probes(systems, sweeps, radii, radii_doubled) -> List[ChainProbe]:
        return [ChainProbe(*args)
                for args in zip(systems, sweeps, radii, radii_doubled)]

    def report(self) -> HarnessReport:
        return self.execute()['report']


def equivalence_harness(system: FuchsianSystem, prime_range: Tuple[int, int],
                        S: int = 32, threads: int = None) -> HarnessReport:
    """
    Run p-curvature sweeps and truncated radii on a system and on every
    system of its Katz reduction, and report whether the evidence agrees.

    Raises
    ------
    NotRigid, NotIrreducible, Resonant, Stuck
        The system cannot be reduced
    """
    report = EquivalenceHarness(system, prime_range, S, threads).report()
    _log.info("harness on %d systems: nilpotent=%s type_g=%s agree=%s",
              len(report.chain), report.nilpotent, report.type_g, report.agree)
    return report
