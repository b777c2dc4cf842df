# -*- coding: utf-8 -*-
from .types.enumerations import PCurvatureStatus, Place, OutputFormat

__all__ = ['PCurvatureStatus', 'Place', 'OutputFormat']
