"""Exact arithmetic helpers.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.  Every quantity reported by the package is one of
these two types; there is no floating point anywhere in a result.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Union

ExactInt = int
ExactRat = Fraction

Exact = Union[int, Fraction]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def triangular(n: int) -> int:
    """Return the n-th triangular number n(n+1)/2."""
    if n < 0:
        raise ValueError(f"triangular of negative number {n}")
    return n * (n + 1) // 2


def superfactorial(n: int) -> int:
    """Return 1! * 2! * ... * n! (the empty product for n = 0)."""
    if n < 0:
        raise ValueError(f"superfactorial of negative number {n}")
    out = 1
    fact = 1
    for k in range(1, n + 1):
        fact *= k
        out *= fact
    return out


def ipow(base: Exact, m: int) -> Fraction:
    """Exact ``base ** m`` for ``m >= 0`` by repeated squaring."""
    if m < 0:
        raise ValueError("ipow needs a nonnegative exponent")
    base = Fraction(base)
    result = Fraction(1)
    while m:
        if m & 1:
            result *= base
        base *= base
        m >>= 1
    return result


def lcm_range(lo: int, hi: int) -> int:
    """Least common multiple of the integers ``lo..hi`` inclusive."""
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got {lo}, {hi}")
    return reduce(math.lcm, range(lo, hi + 1), 1)


def to_exact(value) -> Fraction:
    """Coerce an int, Fraction or ``"p"``/``"p/q"`` string to a Fraction.

    Floats are rejected: a float has already lost the exactness we need.
    Raises ``ValueError`` on anything else, including a zero denominator.
    """
    if isinstance(value, bool):
        raise ValueError(f"not an exact number: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.count("/") > 1 or not text:
            raise ValueError(f"not an integer or p/q string: {value!r}")
        num, _, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if den else 1
        except ValueError:
            raise ValueError(f"not an integer or p/q string: {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(p, q)
    raise ValueError(f"not an exact number: {value!r}")


def fmt_exact(value: Exact) -> str:
    """Canonical text: ``"123"`` for integers, ``"p/q"`` (q > 1) otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
