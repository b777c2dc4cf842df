# -*- coding: utf-8 -*-
from .system import FuchsianSystem, RankOneTwist, LocalSpectrum

__all__ = ['FuchsianSystem', 'RankOneTwist', 'LocalSpectrum']
