"""Enumeration of S_n and the signed value histogram of a trace function.

For a matrix ``A`` the trace function is ``f(sigma) = sum_i A[i, sigma(i)]``.
Every alternating power sum of ``f`` depends only on how many even and how
many odd permutations take each value, so the n! evaluations are
compressed into a :class:`SignedHistogram` once and reused for all ``m``.

Two enumeration strategies are provided and must agree exactly:

``naive``
    lexicographic order, ``f`` recomputed from scratch, sign from an
    explicit inversion count.  Slow; kept as the reference path.
``incremental``
    Steinhaus-Johnson-Trotter order.  Consecutive permutations differ by
    one adjacent transposition, so ``f`` changes by four matrix entries
    and the sign alternates.

Work is sharded by lexicographic rank.  A rank range is cut into aligned
blocks in which a prefix is fixed and the remaining ``k`` positions run
over all ``k!`` arrangements; each block is enumerated independently, and
per-shard histograms are merged by bucket-wise addition.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .errors import DimensionMismatch, OrderTooLarge
from .matrices import SquareMatrix
from .numeric import fmt_exact, to_exact

DEFAULT_MAX_ORDER = 11
STRATEGIES = ("naive", "incremental")

_CHUNK = 1 << 18  # even, so sign parity is preserved across chunks


# -- single permutations ------------------------------------------------------

def sign(perm: Sequence[int]) -> int:
    """Sign of a permutation from the parity of its inversion count."""
    inversions = 0
    n = len(perm)
    for i in range(n):
        pi = perm[i]
        for j in range(i + 1, n):
            if perm[j] < pi:
                inversions += 1
    return -1 if inversions & 1 else 1


def unrank(rank: int, n: int) -> list:
    """The ``rank``-th permutation of ``0..n-1`` in lexicographic order.

    Uses the factorial number system: the leading digit ``rank // (n-1)!``
    picks which remaining element goes first, and so on.
    """
    if not 0 <= rank < math.factorial(n):
        raise ValueError(f"rank {rank} outside 0..{n}!-1")
    pool = list(range(n))
    out = []
    for k in range(n - 1, -1, -1):
        digit, rank = divmod(rank, math.factorial(k))
        out.append(pool.pop(digit))
    return out


def rank_of(perm: Sequence[int]) -> int:
    """Inverse of :func:`unrank` for a permutation of ``0..n-1``."""
    n = len(perm)
    pool = list(range(n))
    rank = 0
    for idx, value in enumerate(perm):
        pos = pool.index(value)
        rank += pos * math.factorial(n - 1 - idx)
        pool.pop(pos)
    return rank


def _check_perm(perm: Sequence[int], n: int) -> list:
    if len(perm) != n:
        raise DimensionMismatch(f"permutation of length {len(perm)} for order {n}")
    zero_based = [p - 1 for p in perm]
    if sorted(zero_based) != list(range(n)):
        raise ValueError(f"{list(perm)} is not a permutation of 1..{n}")
    return zero_based


def trace_of(matrix: SquareMatrix, perm: Sequence[int]) -> Fraction:
    """``tr(A P_sigma) = sum_i A[i, sigma(i)]`` for a 1-based permutation."""
    sigma = _check_perm(perm, matrix.n)
    rows = matrix.rows
    return sum((rows[i][s] for i, s in enumerate(sigma)), Fraction(0))


# -- permutation streams ----------------------------------------------------------

def lex_permutations(n: int) -> Iterator[Tuple[tuple, int]]:
    """Yield ``(sigma, sgn(sigma))`` over S_n in lexicographic order, 1-based."""
    for perm in itertools.permutations(range(1, n + 1)):
        yield perm, sign(perm)


@lru_cache(maxsize=None)
def sjt_swaps(k: int) -> bytes:
    """Swap positions of the Steinhaus-Johnson-Trotter order on ``k`` items.

    Entry ``p`` means "exchange positions p and p+1".  Starting from the
    sorted arrangement the ``k! - 1`` swaps visit every arrangement once.
    The largest item sweeps across the others between consecutive swaps
    of the order on ``k - 1`` items.
    """
    if k < 2:
        return b""
    down = bytes(range(k - 2, -1, -1))
    up = bytes(range(k - 1))
    out = bytearray(down)
    at_left = True
    for q in sjt_swaps(k - 1):
        # the largest item sits at position 0 (shift by one) or at the end
        out.append(q + 1 if at_left else q)
        out += up if at_left else down
        at_left = not at_left
    return bytes(out)


def sjt_permutations(n: int) -> Iterator[Tuple[tuple, int]]:
    """Yield ``(sigma, sgn(sigma))`` in adjacent-transposition order, 1-based."""
    perm = list(range(1, n + 1))
    sgn = 1
    yield tuple(perm), sgn
    for p in sjt_swaps(n):
        perm[p], perm[p + 1] = perm[p + 1], perm[p]
        sgn = -sgn
        yield tuple(perm), sgn


# -- histogram ---------------------------------------------------------------------

@dataclass(frozen=True)
class SignedHistogram:
    """Distinct trace values with their even and odd permutation counts.

    ``buckets`` maps a Fraction value to ``(even_count, odd_count)`` and is
    kept sorted by value; buckets with both counts zero never appear.
    """

    n: int
    buckets: Dict[Fraction, Tuple[int, int]]

    def __post_init__(self):
        clean = {}
        for value, (even, odd) in sorted(self.buckets.items()):
            if even < 0 or odd < 0:
                raise ValueError(f"negative count at value {value}")
            if even or odd:
                clean[Fraction(value)] = (int(even), int(odd))
        object.__setattr__(self, "buckets", clean)

    def __len__(self):
        return len(self.buckets)

    def items(self):
        return self.buckets.items()

    def weights(self) -> Dict[Fraction, int]:
        """``even - odd`` for every bucket; the signed measure behind every APD."""
        return {v: e - o for v, (e, o) in self.buckets.items()}

    @property
    def even_total(self) -> int:
        return sum(e for e, _ in self.buckets.values())

    @property
    def odd_total(self) -> int:
        return sum(o for _, o in self.buckets.values())

    def swap_parity(self) -> "SignedHistogram":
        return SignedHistogram(self.n, {v: (o, e) for v, (e, o) in self.buckets.items()})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "buckets": [
                {"value": fmt_exact(v), "even": str(e), "odd": str(o)}
                for v, (e, o) in self.buckets.items()
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SignedHistogram":
        return cls(
            doc["n"],
            {to_exact(b["value"]): (int(b["even"]), int(b["odd"])) for b in doc["buckets"]},
        )


def merge_histograms(n: int, parts) -> SignedHistogram:
    even: Counter = Counter()
    odd: Counter = Counter()
    for part_even, part_odd in parts:
        even.update(part_even)
        odd.update(part_odd)
    keys = set(even) | set(odd)
    return SignedHistogram(n, {k: (even[k], odd[k]) for k in keys})


def rank_blocks(n: int, lo: int, hi: int) -> Iterator[Tuple[int, int]]:
    """Cut the rank range ``[lo, hi)`` into aligned ``(start, k)`` blocks.

    A block covers ranks ``start .. start + k! - 1``: all permutations that
    share the first ``n - k`` entries of ``unrank(start, n)``.
    """
    while lo < hi:
        k = n
        while k > 0 and (lo % math.factorial(k) or lo + math.factorial(k) > hi):
            k -= 1
        yield lo, k
        lo += math.factorial(k)


def shard_ranges(n: int, partitions: int) -> list:
    total = math.factorial(n)
    return [(total * i // partitions, total * (i + 1) // partitions) for i in range(partitions)]


def _block_naive(rows, n, start, k, even, odd):
    head = unrank(start, n)
    prefix, rest = head[: n - k], head[n - k:]
    for tail in itertools.permutations(rest):
        perm = prefix + list(tail)
        value = sum((rows[i][perm[i]] for i in range(n)), Fraction(0))
        if sign(perm) > 0:
            even[value] += 1
        else:
            odd[value] += 1


def _block_incremental(rows, n, start, k, even, odd):
    head = unrank(start, n)
    cut = n - k
    # rest is sorted because start is aligned to k!
    prefix, perm = head[:cut], head[cut:]
    sub = rows[cut:]
    f = sum(rows[i][prefix[i]] for i in range(cut)) + sum(sub[t][perm[t]] for t in range(k))
    sgn = sign(head)
    swaps = memoryview(sjt_swaps(k))
    vals = [f]
    pos = 0
    while True:
        append = vals.append
        for p in swaps[pos:pos + _CHUNK]:
            a = perm[p]
            b = perm[p + 1]
            ra = sub[p]
            rb = sub[p + 1]
            f += ra[b] + rb[a] - ra[a] - rb[b]
            perm[p] = b
            perm[p + 1] = a
            append(f)
        first, second = (even, odd) if sgn > 0 else (odd, even)
        first.update(vals[0::2])
        second.update(vals[1::2])
        pos += _CHUNK
        if pos >= len(swaps):
            break
        # permutation number pos + 1 opens the next chunk; _CHUNK is even
        if pos == _CHUNK:
            sgn = -sgn
        vals = []


def _shard(args):
    rows, n, lo, hi, strategy = args
    even: Counter = Counter()
    odd: Counter = Counter()
    block = _block_naive if strategy == "naive" else _block_incremental
    for start, k in rank_blocks(n, lo, hi):
        block(rows, n, start, k, even, odd)
    return dict(even), dict(odd)


def signed_value_histogram(
    matrix: SquareMatrix,
    strategy: str = "incremental",
    partitions: int = 1,
    workers: Optional[int] = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> SignedHistogram:
    """Histogram of ``f_A`` over S_n split by permutation parity.

    ``partitions`` shards the lexicographic rank space; ``workers > 1``
    evaluates shards in separate processes.  The result does not depend on
    either setting.  Raises :class:`OrderTooLarge` when ``n > max_order``.
    """
    n = matrix.n
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds cap {max_order} ({n}! permutations)")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if partitions < 1:
        raise ValueError("partitions must be >= 1")

    if strategy == "naive":
        rows, scale = matrix.rows, 1
    else:
        # integer entries make the inner loop several times faster
        scale = matrix.common_denominator()
        rows = tuple(tuple(int(x * scale) for x in row) for row in matrix.rows)

    jobs = [(rows, n, lo, hi, strategy) for lo, hi in shard_ranges(n, partitions) if lo < hi]
    workers = workers or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            parts = list(pool.map(_shard, jobs))
    else:
        parts = [_shard(job) for job in jobs]

    hist = merge_histograms(n, parts)
    if scale != 1:
        hist = SignedHistogram(
            n, {Fraction(v, scale): c for v, c in hist.buckets.items()}
        )
    return hist


def default_workers() -> int:
    """Worker count from ``APD_THREADS``, else 1."""
    value = os.environ.get("APD_THREADS")
    return max(1, int(value)) if value else 1
