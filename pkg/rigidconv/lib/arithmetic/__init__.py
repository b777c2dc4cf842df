# -*- coding: utf-8 -*-
from .tower import DerivativeTower, build_tower
from .radius import gauss_norm, rho_truncated, h_bound, inequality_report
from .pcurvature import (good_primes, pcurvature, pcurvature_pair,
                         pcurvature_report, nilpotency_sweep, rank_one_verdict)

__all__ = ['DerivativeTower', 'build_tower', 'gauss_norm', 'rho_truncated',
           'h_bound', 'inequality_report', 'good_primes', 'pcurvature',
           'pcurvature_pair', 'pcurvature_report', 'nilpotency_sweep',
           'rank_one_verdict']
