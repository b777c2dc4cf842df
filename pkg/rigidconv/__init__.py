# -*- coding: utf-8 -*-
__version__ = "0.1.0"

__about__ = f"""
rigidconv version {__version__}

rigidconv is an exact-arithmetic toolkit for Fuchsian systems of linear
differential equations over the rationals: middle convolution, Katz reduction
of rigid systems, p-curvature sweeps and truncated p-adic radii.

rigidconv is written in Python, utilizing numpy and pandas for containers and
reporting, and sympy for prime enumeration and factorization.

"""
