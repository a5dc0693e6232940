"""Alternating power differences and the first appearance degree.

``APD_m = sum over sigma of sgn(sigma) * f(sigma)**m``, evaluated from a
:class:`~apd.permutations.SignedHistogram` as
``sum over values v of (even(v) - odd(v)) * v**m``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional

from .matrices import SquareMatrix
from .numeric import fmt_exact, triangular
from .permutations import SignedHistogram, lex_permutations


class Outcome(str, enum.Enum):
    FOUND = "found"
    CONSTANT_TRACE = "constant-trace"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ApdResult:
    """Result of the search for the first non-vanishing APD.

    ``zero_through`` is the largest ``m`` such that ``APD_1 .. APD_m`` were
    all evaluated and found to be zero.
    """

    outcome: Outcome
    m1: Optional[int] = None
    value: Optional[Fraction] = None
    cap: Optional[int] = None
    zero_through: int = 0

    @property
    def is_infinite(self) -> bool:
        return self.outcome is Outcome.CONSTANT_TRACE

    def m1_text(self) -> str:
        if self.outcome is Outcome.FOUND:
            return str(self.m1)
        if self.outcome is Outcome.CONSTANT_TRACE:
            return "inf"
        return f">{self.cap}"

    def value_text(self) -> str:
        return fmt_exact(self.value) if self.value is not None else "none"

    def __str__(self):
        if self.outcome is Outcome.FOUND:
            return f"m1={self.m1} value={self.value_text()}"
        if self.outcome is Outcome.CONSTANT_TRACE:
            return "m1=inf (constant trace)"
        return f"inconclusive: APD_1..APD_{self.cap} all vanish"


def default_m_cap(n: int) -> int:
    return max(2 * triangular(n - 1), 2 * n)


def _scaled_weights(hist: SignedHistogram):
    """Integer keys ``v * L`` and weights, with ``L`` the key denominator lcm."""
    scale = math.lcm(*(v.denominator for v in hist.buckets)) if hist.buckets else 1
    pairs = [
        (v.numerator * (scale // v.denominator), e - o)
        for v, (e, o) in hist.buckets.items()
        if e != o and v != 0
    ]
    return scale, pairs


def apd_m(hist: SignedHistogram, m: int, rescale: bool = True) -> Fraction:
    """Exact ``APD_m`` for ``m >= 1``.

    With ``rescale`` the powers are taken over integers ``v * L`` and the
    sum is divided by ``L**m`` at the end; otherwise Fractions are powered
    directly.  Both give the same value.
    """
    if m < 1:
        raise ValueError(f"APD degree must be >= 1, got {m}")
    if not rescale:
        return sum(
            ((e - o) * v ** m for v, (e, o) in hist.buckets.items()), Fraction(0)
        )
    scale, pairs = _scaled_weights(hist)
    return Fraction(sum(w * k ** m for k, w in pairs), scale ** m)


def iter_apd(hist: SignedHistogram) -> Iterator[Fraction]:
    """Yield ``APD_1, APD_2, ...`` forever, reusing running powers."""
    scale, pairs = _scaled_weights(hist)
    keys = [k for k, _ in pairs]
    powers = [w for _, w in pairs]
    denom = 1
    while True:
        powers = [p * k for p, k in zip(powers, keys)]
        denom *= scale
        yield Fraction(sum(powers), denom)


def apd_sequence(hist: SignedHistogram, m_max: int) -> List[Fraction]:
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    stream = iter_apd(hist)
    return [next(stream) for _ in range(m_max)]


def is_constant_trace(hist: SignedHistogram) -> bool:
    """A single value taken equally often by even and odd permutations."""
    if len(hist.buckets) != 1:
        return False
    ((even, odd),) = hist.buckets.values()
    return even == odd


def first_appearance(hist: SignedHistogram, m_cap: Optional[int] = None) -> ApdResult:
    """Smallest ``m`` in ``1..m_cap`` with ``APD_m != 0``.

    A constant trace gives :attr:`Outcome.CONSTANT_TRACE` (provably
    ``m1 = inf``).  If every degree up to the cap vanishes otherwise, the
    answer is :attr:`Outcome.INCONCLUSIVE`; that is never reported as
    infinite.
    """
    if m_cap is None:
        m_cap = default_m_cap(hist.n)
    if m_cap < 1:
        raise ValueError("m_cap must be >= 1")
    if is_constant_trace(hist):
        return ApdResult(Outcome.CONSTANT_TRACE, cap=m_cap, zero_through=m_cap)
    for m, value in zip(range(1, m_cap + 1), iter_apd(hist)):
        if value:
            return ApdResult(Outcome.FOUND, m1=m, value=value, cap=m_cap, zero_through=m - 1)
    return ApdResult(Outcome.INCONCLUSIVE, cap=m_cap, zero_through=m_cap)


def apd_bruteforce(matrix: SquareMatrix, m: int) -> Fraction:
    """Reference value: the plain signed sum over all of S_n, no compression."""
    rows = matrix.rows
    total = Fraction(0)
    for perm, sgn in lex_permutations(matrix.n):
        f = sum((rows[i][p - 1] for i, p in enumerate(perm)), Fraction(0))
        total += sgn * f ** m
    return total
