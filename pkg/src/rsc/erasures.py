"""Erasure-pattern generation and validation.

Timelines are binary arrays over a finite horizon, 1 = erased slot.
Generators cover exhaustive enumeration of bounded-weight patterns,
periodic and burst patterns, i.i.d. sampling, and a sliding-window
adversary that respects an at-most-N-per-window budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True, eq=False)
class ErasureTimeline:
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=np.uint8)
        if b.ndim != 1 or not np.isin(b, (0, 1)).all():
            raise ValueError("timeline bits must be a 1-D 0/1 array")
        object.__setattr__(self, "bits", b)

    def __eq__(self, other):
        if not isinstance(other, ErasureTimeline):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash(self.bits.tobytes())

    @property
    def horizon(self) -> int:
        return len(self.bits)

    @property
    def count(self) -> int:
        return int(self.bits.sum())

    def erased_slots(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.bits))

    def window_counts(self, window: int) -> np.ndarray:
        """Erasure count of every full length-`window` interval."""
        if window < 1:
            raise ValueError("window must be >= 1")
        if window > self.horizon:
            return np.zeros(0, dtype=np.int64)
        return np.convolve(self.bits, np.ones(window, dtype=np.int64), mode="valid")

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from_string(cls, s: str) -> "ErasureTimeline":
        if set(s) - {"0", "1"}:
            raise ValueError("pattern string must contain only 0 and 1")
        return cls(np.frombuffer(s.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def clear(cls, horizon: int) -> "ErasureTimeline":
        return cls(np.zeros(horizon, dtype=np.uint8))

    @classmethod
    def from_slots(cls, slots: Iterable[int], horizon: int) -> "ErasureTimeline":
        bits = np.zeros(horizon, dtype=np.uint8)
        for s in slots:
            bits[s] = 1
        return cls(bits)

    def __repr__(self):
        return f"ErasureTimeline({self.to_string()!r})"


def enumerate_patterns(horizon: int, N: int) -> Iterator[ErasureTimeline]:
    """All timelines with at most N erasures: sum_{j<=N} C(horizon, j) of them."""
    if N > horizon:
        raise ValueError("erasure count cannot exceed the horizon")
    for j in range(N + 1):
        for slots in combinations(range(horizon), j):
            yield ErasureTimeline.from_slots(slots, horizon)


def periodic_pattern(period: int, offsets: Iterable[int], horizon: int) -> ErasureTimeline:
    """Slot i erased iff (i mod period) is one of the offsets."""
    offsets = set(offsets)
    if period < 1:
        raise ValueError("period must be >= 1")
    if any(not 0 <= o < period for o in offsets):
        raise ValueError("offsets must lie in [0, period)")
    bits = np.fromiter(((i % period) in offsets for i in range(horizon)), dtype=np.uint8, count=horizon)
    return ErasureTimeline(bits)


def periodic_burst_pattern(period: int, burst: int, horizon: int) -> ErasureTimeline:
    """Clear run of period-burst slots then a burst, repeated.

    This is the worst-case witness family for rate-optimal streams: a
    (period, period-burst) code runs at exactly the pattern's clear
    fraction and still corrects it.
    """
    if not 0 <= burst <= period:
        raise ValueError("burst length must lie in [0, period]")
    return periodic_pattern(period, range(period - burst, period), horizon)


def burst_pattern(start: int, length: int, horizon: int) -> ErasureTimeline:
    """Contiguous erasures exactly in [start, start+length)."""
    if length < 0 or start < 0 or start + length > horizon:
        raise ValueError("burst must fit inside the horizon")
    bits = np.zeros(horizon, dtype=np.uint8)
    bits[start:start + length] = 1
    return ErasureTimeline(bits)


def sliding_window_valid(timeline: ErasureTimeline, window: int, N: int) -> bool:
    """True iff every length-`window` interval holds at most N erasures."""
    counts = timeline.window_counts(window)
    return bool((counts <= N).all()) if len(counts) else timeline.count <= N


def sample_iid(p: float, horizon: int, seed: int = 0) -> ErasureTimeline:
    """Each slot erased independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("erasure probability must be in [0, 1]")
    rng = np.random.default_rng(seed)
    return ErasureTimeline((rng.random(horizon) < p).astype(np.uint8))


def sample_window_adversary(window: int, N: int, horizon: int, seed: int = 0) -> ErasureTimeline:
    """Random timeline obeying the at-most-N-per-window budget.

    Greedy burst packing: each window-aligned stride gets one burst at
    its start, with length biased toward the full budget N so that many
    windows are tight.  Any window overlaps at most the tail of one
    burst and the head of the next, which keeps every window count at
    or below N by construction; the result is validated before return.
    """
    if not 0 <= N <= window:
        raise ValueError("need 0 <= N <= window")
    rng = np.random.default_rng(seed)
    bits = np.zeros(horizon, dtype=np.uint8)
    for start in range(0, horizon, window):
        burst = N if rng.random() < 0.5 else int(rng.integers(0, N + 1))
        bits[start:min(start + burst, horizon)] = 1
    timeline = ErasureTimeline(bits)
    assert sliding_window_valid(timeline, window, N)
    return timeline
