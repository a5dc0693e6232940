"""Even/odd value multisets and their common power-sum degree.

When ``APD_1 .. APD_k`` all vanish, the multiset of trace values over even
permutations and the one over odd permutations have equal power sums up to
degree ``k``: a multiset solution of the Prouhet-Tarry-Escott problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from .numeric import fmt_exact
from .permutations import SignedHistogram


@dataclass(frozen=True)
class MultisetPair:
    """Value -> multiplicity maps for even and odd permutations."""

    n: int
    even: Dict[Fraction, int]
    odd: Dict[Fraction, int]

    def to_histogram(self) -> SignedHistogram:
        keys = set(self.even) | set(self.odd)
        return SignedHistogram(self.n, {v: (self.even.get(v, 0), self.odd.get(v, 0)) for v in keys})


@dataclass(frozen=True)
class AtLeast:
    """Power sums agree through the search cap; the true degree is unknown."""

    bound: int

    def __str__(self):
        return f">={self.bound}"


def extract_multisets(hist: SignedHistogram) -> MultisetPair:
    even = {v: e for v, (e, _) in hist.buckets.items() if e}
    odd = {v: o for v, (_, o) in hist.buckets.items() if o}
    return MultisetPair(hist.n, even, odd)


def _power_sum(ms: Dict[Fraction, int], r: int) -> Fraction:
    return sum((c * v ** r for v, c in ms.items()), Fraction(0))


def pte_degree(pair: MultisetPair, k_cap: int) -> Union[int, AtLeast]:
    """Largest ``k <= k_cap`` with equal power sums for every ``r`` in ``1..k``."""
    if k_cap < 1:
        raise ValueError("k_cap must be >= 1")
    for r in range(1, k_cap + 1):
        if _power_sum(pair.even, r) != _power_sum(pair.odd, r):
            return r - 1
    return AtLeast(k_cap)


def pte_to_json(pair: MultisetPair, degree: Union[int, AtLeast]) -> dict:
    def side(ms):
        return [{"value": fmt_exact(v), "count": str(c)} for v, c in sorted(ms.items())]

    return {
        "n": pair.n,
        "even": side(pair.even),
        "odd": side(pair.odd),
        "pte_degree": degree if isinstance(degree, int) else str(degree),
    }
