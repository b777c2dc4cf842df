# -*- coding: utf-8 -*-
from .rational import (parse_rational, format_rational, p_adic_valuation,
                       factorial_valuation, digit_sum, height, is_integral)
from .polynomial import PolyQ, PolyFp, berkowitz
from .matrix import (MatQ, rref, rank, kernel_basis, determinant, inverse,
                     char_poly, rational_roots, rational_eigenvalues,
                     centralizer_dimension, simultaneous_conjugacy,
                     EchelonSpan)

__all__ = ['parse_rational', 'format_rational', 'p_adic_valuation',
           'factorial_valuation', 'digit_sum', 'height', 'is_integral',
           'PolyQ', 'PolyFp', 'berkowitz', 'MatQ', 'rref', 'rank',
           'kernel_basis', 'determinant', 'inverse', 'char_poly',
           'rational_roots', 'rational_eigenvalues', 'centralizer_dimension',
           'simultaneous_conjugacy', 'EchelonSpan']
