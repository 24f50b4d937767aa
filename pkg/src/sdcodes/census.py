"""Weight distributions of binary codes: exhaustive and low-weight census.

The census relies on self-duality. If ``I1`` is an information set of a
self-dual ``[2k, k]`` code then so is its complement ``I2``. A codeword of
weight ``w <= wmax`` splits as ``w = w1 + w2`` over the two halves, so
``min(w1, w2) <= wmax // 2``. Enumerating low-weight messages on both
halves therefore finds every such codeword; a word seen from ``I2`` is only
counted when its ``I1`` weight exceeds ``wmax // 2``, so nothing is counted
twice.
"""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

import numpy as np

from . import _kernels
from .binary import BinaryCode, pack_words
from .errors import DomainError

log = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_CAP = 32
_CHUNK = 1 << 24


@dataclass(frozen=True)
class WeightProfile:
    """Exact counts ``A_w`` for every ``w <= cutoff`` (zeros omitted)."""

    n: int
    cutoff: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.cutoff >= self.n

    def __getitem__(self, w: int) -> int:
        if w > self.cutoff:
            raise KeyError(f"A_{w} lies above the census cutoff {self.cutoff}")
        return self.counts.get(w, 0)

    def min_distance(self) -> int | None:
        """Smallest nonzero weight seen, or None if none lies below the cutoff."""
        nz = [w for w, c in self.counts.items() if w > 0 and c > 0]
        return min(nz) if nz else None

    def truncate(self, cutoff: int) -> "WeightProfile":
        cutoff = min(cutoff, self.cutoff)
        return WeightProfile(self.n, cutoff, {w: c for w, c in self.counts.items() if w <= cutoff})

    def total(self) -> int:
        return sum(self.counts.values())

    def __str__(self) -> str:
        return " ".join(f"A{w}={c}" for w, c in sorted(self.counts.items()))


def _profile(n: int, cutoff: int, arr: np.ndarray) -> WeightProfile:
    return WeightProfile(n, cutoff, {w: int(c) for w, c in enumerate(arr[: cutoff + 1]) if c})


def revolving_door(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """All t-subsets of ``range(n)``; consecutive subsets differ by one swap.

    Pure-Python mirror of the compiled enumeration (Knuth's Algorithm R),
    kept for testing and small cases.
    """
    if t < 0 or t > n:
        return
    if t == 0:
        yield ()
        return
    if t == n:
        yield tuple(range(n))
        return
    if t == 1:
        for i in range(n):
            yield (i,)
        return
    c = list(range(-1, t)) + [n, 0]
    c[0] = 0
    odd = t % 2 == 1
    while True:
        yield tuple(c[1 : t + 1])
        if odd:
            if c[1] + 1 < c[2]:
                c[1] += 1
                continue
            j, step = 2, 4
        else:
            if c[1] > 0:
                c[1] -= 1
                continue
            j, step = 2, 5
        while True:
            if step == 4:
                if c[j] >= j:
                    c[j], c[j - 1] = c[j - 1], j - 2
                    break
                j, step = j + 1, 5
            else:
                if j <= t and c[j] + 1 < c[j + 1]:
                    c[j - 1], c[j] = c[j], c[j] + 1
                    break
                j += 1
                if j > t:
                    return
                step = 4


def _blocks(k: int, tmax: int) -> np.ndarray:
    """Work units ``(t, m)``: t-subsets whose largest element is ``m``."""
    out = [(0, -1)] if tmax >= 0 else []
    for t in range(1, min(tmax, k) + 1):
        out.extend((t, m) for m in range(t - 1, k))
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def _run_blocks(red: np.ndarray, blocks: np.ndarray, wmax: int, min_red: int, workers: int) -> np.ndarray:
    size = wmax + 1
    single = red.shape[1] == 1
    kern = _kernels.census_blocks1 if single else _kernels.census_blocks
    arg = np.ascontiguousarray(red[:, 0]) if single else red

    def work(part: np.ndarray) -> np.ndarray:
        counts = np.zeros(size, dtype=np.int64)
        if len(part):
            kern(arg, part, wmax, min_red, counts)
        return counts

    if workers <= 1 or len(blocks) < 2:
        return work(blocks)
    # Largest blocks first, dealt round-robin, keeps the units balanced.
    t, m = blocks[:, 0], blocks[:, 1]
    cost = np.array([comb(max(int(mm), 0), max(int(tt) - 1, 0)) for tt, mm in zip(t, m)])
    order = blocks[np.argsort(-cost, kind="stable")]
    parts = [order[w::workers] for w in range(workers)]
    with ThreadPoolExecutor(workers) as pool:
        return sum(pool.map(work, parts))


def census_steps(k: int, wmax: int) -> int:
    """Number of candidates the census visits for a self-dual ``[2k, k]`` code."""
    p = wmax // 2
    first = sum(comb(k, t) for t in range(min(p, k) + 1))
    second = sum(comb(k, t) for t in range(min(p, wmax - p - 1, k) + 1))
    return first + second


def low_weight_census(code: BinaryCode, wmax: int, workers: int = 1) -> WeightProfile:
    """Exact ``A_w`` for all ``w <= wmax`` of a self-dual binary code."""
    n, k = code.n, code.k
    if n != 2 * k:
        raise DomainError(f"census needs a self-dual code, got [{n},{k}]")
    if not code.is_self_orthogonal():
        raise DomainError("census needs a self-dual code; rows are not pairwise orthogonal")
    wmax = min(wmax, n)
    if wmax < 0:
        raise DomainError("wmax must be non-negative")
    p = wmax // 2
    info1 = list(code.pivots)
    info2 = [j for j in range(n) if j not in set(info1)]
    red1 = pack_words(code.redundancy(info1), k)
    red2 = pack_words(code.redundancy(info2), k)
    log.debug("census [%d,%d] wmax=%d p=%d steps=%d", n, k, wmax, p, census_steps(k, wmax))
    counts = _run_blocks(red1, _blocks(k, p), wmax, 0, workers)
    tmax2 = min(p, wmax - p - 1)
    if tmax2 >= 0:
        counts = counts + _run_blocks(red2, _blocks(k, tmax2), wmax, p + 1, workers)
    return _profile(n, wmax, counts)


def exhaustive_distribution(code: BinaryCode, cap: int = DEFAULT_EXHAUSTIVE_CAP, workers: int = 1) -> WeightProfile:
    """Full weight distribution by walking all ``2^k`` messages in Gray-code order."""
    n, k = code.n, code.k
    if k > cap:
        raise DomainError(f"dimension {k} exceeds the exhaustive cap {cap}; use low_weight_census instead")
    if k > DEFAULT_EXHAUSTIVE_CAP:
        warnings.warn(f"exhaustive enumeration of 2^{k} codewords; this may take a long time", stacklevel=2)
    if k > 62:
        raise DomainError("exhaustive enumeration supports k <= 62")
    if k == 0:
        return WeightProfile(n, n, {0: 1})
    red = pack_words(code.redundancy(list(code.pivots)), n - k)
    total = 1 << k
    ranges = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    single = red.shape[1] == 1
    arg = np.ascontiguousarray(red[:, 0]) if single else red
    kern = _kernels.exhaustive_range1 if single else _kernels.exhaustive_range

    def work(part) -> np.ndarray:
        counts = np.zeros(n + 1, dtype=np.int64)
        for s, e in part:
            kern(arg, s, e, counts)
        return counts

    if workers <= 1:
        counts = work(ranges)
    else:
        with ThreadPoolExecutor(workers) as pool:
            counts = sum(pool.map(work, [ranges[w::workers] for w in range(workers)]))
    return _profile(n, n, counts)


def min_distance_exhaustive(code: BinaryCode, cap: int = DEFAULT_EXHAUSTIVE_CAP, workers: int = 1) -> int:
    d = exhaustive_distribution(code, cap, workers).min_distance()
    if d is None:
        raise DomainError("the zero code has no minimum distance")
    return d


def has_distance_at_least(code: BinaryCode, d: int, workers: int = 1) -> bool:
    """Cheap screen: True iff no nonzero codeword has weight below ``d``."""
    prof = low_weight_census(code, d - 1, workers)
    return all(w == 0 for w, c in prof.counts.items() if c)
