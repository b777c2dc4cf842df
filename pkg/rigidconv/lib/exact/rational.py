# -*- coding: utf-8 -*-
"""
Helpers for exact rationals.

Rationals are :class:`fractions.Fraction` instances throughout the package;
they are always in lowest terms with a positive denominator.
"""
import re
from fractions import Fraction
from numbers import Integral
from typing import Tuple, Union

from rigidconv.core.errors import ParseError, ZeroInput, BadPrime

__all__ = ['RationalLike', 'parse_rational', 'format_rational',
           'p_adic_valuation', 'ord_p', 'factorial_valuation', 'digit_sum',
           'height', 'is_integral', 'eigen_sort_key', 'reduce_mod']

RationalLike = Union[Fraction, int, str]

_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_rational(value: RationalLike) -> Fraction:
    """Parse the text form ``"a/b"`` or ``"a"`` (optionally signed, the
    unicode minus sign is accepted) into a Fraction.

    Integers and Fractions are passed through; floats are rejected as
    inexact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral) and not isinstance(value, bool):
        return Fraction(int(value))
    if not isinstance(value, str):
        raise ParseError(f'expected a rational string, got {value!r}')
    match = _RATIONAL.match(value.replace('−', '-'))
    if match is None:
        raise ParseError(f'invalid rational {value!r}')
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ParseError(f'zero denominator in {value!r}')
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical text form: lowest terms, ``"a/b"`` or ``"a"``"""
    return str(Fraction(value))


def _int_valuation(p: int, n: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_adic_valuation(p: int, x: RationalLike) -> int:
    """Return v with x = p**v * u, u a p-adic unit.

    Raises
    ------
    ZeroInput
        The valuation of 0 is +infinity; callers must branch on zero.
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroInput(f'p-adic valuation of zero (p={p})')
    return _int_valuation(p, x.numerator) - _int_valuation(p, x.denominator)


ord_p = p_adic_valuation


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n"""
    total = 0
    while n:
        n, digit = divmod(n, p)
        total += digit
    return total


def factorial_valuation(p: int, n: int) -> int:
    """v_p(n!) by Legendre's formula"""
    return (n - digit_sum(n, p)) // (p - 1)


def height(x: Fraction) -> int:
    return abs(x.numerator) + x.denominator


def is_integral(x: RationalLike) -> bool:
    return Fraction(x).denominator == 1


def eigen_sort_key(item: Tuple[Fraction, int]) -> Tuple[int, int, Fraction]:
    """Ordering of (eigenvalue, multiplicity) pairs: multiplicity descending,
    then height ascending, then value ascending"""
    value, multiplicity = item
    return -multiplicity, height(value), value


def reduce_mod(x: Fraction, p: int) -> int:
    """Image of a p-integral rational in F_p"""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise BadPrime(f'{x} is not {p}-integral')
    return x.numerator * pow(x.denominator, -1, p) % p
