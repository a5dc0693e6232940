"""Closed forms conjectured or known for each matrix family.

Each ``predict_*`` returns a :class:`Prediction` of the first appearance
degree and value; :func:`predict` dispatches on a :class:`FamilySpec`.
Predictions beyond the range in which the closed form was originally
checked carry ``beyond_verified=True`` instead of being refused.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .matrices import Family, FamilySpec
from .numeric import factorial, superfactorial, triangular

# largest n at which each closed form had been checked by enumeration
VERIFIED_UP_TO = {
    "identity": 10,
    "circulant": 10,
    "shifted2": 7,
    "hilbert": 7,
    "mult": 7,
    "vandermonde": 7,
    "pascal": 7,
}


@dataclass(frozen=True)
class Prediction:
    """Predicted ``(m1, value)``; ``m1 is None`` means ``m1 = inf``."""

    family: FamilySpec
    n: int
    m1: Optional[int]
    value: Optional[Fraction]
    beyond_verified: bool = False
    constant: Optional[int] = None

    def __post_init__(self):
        if self.m1 is not None and not self.value:
            raise ValueError("a finite first appearance degree needs a nonzero value")

    @property
    def is_infinite(self) -> bool:
        return self.m1 is None


def _need(n: int, lo: int = 2):
    if n < lo:
        raise DomainError(f"closed form stated for n >= {lo}, got n={n}")


def _beyond(key: str, n: int) -> bool:
    return n > VERIFIED_UP_TO[key]


def predict_identity(n: int) -> Prediction:
    """Fixed point count: ``m1 = n - 1`` and ``APD_{n-1} = n!``."""
    _need(n)
    return Prediction(FamilySpec(Family.IDENTITY), n, n - 1, Fraction(factorial(n)),
                      _beyond("identity", n))


def predict_circulant(n: int) -> Prediction:
    _need(n)
    t = triangular(n - 1)
    value = (-1) ** t * n ** (n - 2) * factorial(n)
    return Prediction(FamilySpec(Family.CIRCULANT), n, n - 1, Fraction(value),
                      _beyond("circulant", n))


def predict_shifted2(n: int, d: int) -> Prediction:
    """Row-shifted squares ``(j + (i-1)d)**2``.

    ``m1 = T_{n-1}`` and the value is ``(2d)**T * T! * S(n-1)``.
    """
    _need(n)
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"shift d must be a positive integer, got {d!r}")
    t = triangular(n - 1)
    value = (2 * d) ** t * factorial(t) * superfactorial(n - 1)
    return Prediction(FamilySpec(Family.SHIFTED, d=d, r=2), n, t, Fraction(value),
                      _beyond("shifted2", n))


def predict_shifted1(n: int, d: int) -> Prediction:
    """Linear lattice: the trace is the constant ``T_n + d*T_{n-1}``, so ``m1 = inf``."""
    _need(n)
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"shift d must be a positive integer, got {d!r}")
    return Prediction(FamilySpec(Family.SHIFTED, d=d, r=1), n, None, None,
                      constant=triangular(n) + d * triangular(n - 1))


def hilbert_det(n: int) -> Fraction:
    """``det(H_n) = prod_{k<n} (k!)**4 / prod_{k<2n} k!``."""
    if n < 1:
        raise DomainError(f"Hilbert order must be >= 1, got {n}")
    num = math.prod(factorial(k) ** 4 for k in range(1, n))
    den = math.prod(factorial(k) for k in range(1, 2 * n))
    return Fraction(num, den)


def hilbert_inverse_entry(n: int, i: int, j: int) -> int:
    """Entry ``(i, j)`` of the (integer) inverse of the Hilbert matrix."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"index ({i}, {j}) outside 1..{n}")
    c = math.comb
    return ((-1) ** (i + j) * (i + j - 1) * c(n + i - 1, n - j) * c(n + j - 1, n - i)
            * c(i + j - 2, i - 1) ** 2)


def predict_hilbert(n: int) -> Prediction:
    _need(n)
    value = hilbert_det(n) * n * factorial(n)
    return Prediction(FamilySpec(Family.HILBERT), n, n - 1, value, _beyond("hilbert", n))


def core_apd_value(n: int) -> int:
    """``T_{n-1}! * S(n-1)``, the multiplication table's first appearance value."""
    _need(n)
    return factorial(triangular(n - 1)) * superfactorial(n - 1)


def predict_multiplication(n: int) -> Prediction:
    _need(n)
    return Prediction(FamilySpec(Family.MULT, r=1), n, triangular(n - 1),
                      Fraction(core_apd_value(n)), _beyond("mult", n))


def vandermonde_det(n: int) -> int:
    """Determinant of the Vandermonde matrix on ``1..n``, equal to ``S(n-1)``."""
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    return superfactorial(n - 1)


def predict_vandermonde(n: int) -> Prediction:
    _need(n)
    return Prediction(FamilySpec(Family.VANDERMONDE), n, n - 1,
                      Fraction(factorial(n - 1) * vandermonde_det(n)),
                      _beyond("vandermonde", n))


def predict_pascal(n: int) -> Prediction:
    _need(n)
    return Prediction(FamilySpec(Family.PASCAL), n, n - 1, Fraction(factorial(n - 1)),
                      _beyond("pascal", n))


def predict(spec: FamilySpec, n: int) -> Prediction:
    """Prediction for any family that has a closed form; DomainError otherwise."""
    fam = spec.family
    if fam is Family.IDENTITY:
        return predict_identity(n)
    if fam is Family.CIRCULANT:
        return predict_circulant(n)
    if fam is Family.HILBERT:
        return predict_hilbert(n)
    if fam is Family.VANDERMONDE:
        return predict_vandermonde(n)
    if fam is Family.PASCAL:
        return predict_pascal(n)
    if fam is Family.MULT and spec.r == 1:
        return predict_multiplication(n)
    if fam is Family.SHIFTED and spec.r in (1, 2):
        d = spec.shift_for(n)
        pred = predict_shifted2(n, d) if spec.r == 2 else predict_shifted1(n, d)
        # keep the caller's spec (d may be the symbolic "n")
        return Prediction(spec, n, pred.m1, pred.value, pred.beyond_verified, pred.constant)
    raise DomainError(f"no closed form known for {spec.label}")
