"""Streaming codes built from block codes by diagonal interleaving.

The packet transmitted at time i carries, at position c, the c-th
codeword symbol of the block that started at time i - c:

    [x_i[0]  x_{i+1}[1]  ...  x_{i+n-1}[n-1]]
        = [u_i[0]  u_{i+1}[1]  ...  u_{i+k-1}[k-1]] . G

so positions 0..k-1 of each packet are systematic copies of the current
message and each length-n diagonal is one block codeword.  A stream
inherits the block code's erasure tolerance: message symbol u_i[l] is
recoverable by time i + min(D_l, n-1-l) whenever the diagonal through
it sees at most N erased packets.  Messages with negative index are
zero by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .block_codes import BlockCode
from .erasures import ErasureTimeline, enumerate_patterns
from .galois import OnlineSolver


@dataclass(frozen=True)
class Emission:
    """One decoded source symbol: message index, symbol index, value, slot."""

    msg: int
    sym: int
    value: int
    time: int


class StreamingEncoder:
    """Stateful diagonal-interleaving encoder; call step() once per slot."""

    def __init__(self, code: BlockCode):
        self.code = code
        # history[j] = message vector for time clock-1-j; length n-1 suffices
        # because parity positions only ever reference the past n-1 messages.
        self.history: list[list[int]] = []
        self.clock = 0

    def step(self, u: Sequence[int]) -> list[int]:
        code = self.code
        if len(u) != code.k:
            raise ValueError(f"expected {code.k} source symbols, got {len(u)}")
        u = list(u)
        f = code.field
        packet = list(u) + [0] * (code.n - code.k)
        for c in range(code.k, code.n):
            acc = 0
            for l in range(code.k):
                # contribution of u_{i-c+l}[l]; negative-index messages are zero
                age = c - l  # how many slots ago that message was current
                if age == 0:
                    src = u
                elif age <= len(self.history):
                    src = self.history[age - 1]
                else:
                    continue
                acc = f.add(acc, f.mul(src[l], code.generator.rows[l][c]))
            packet[c] = acc
        self.history.insert(0, u)
        del self.history[code.n - 1:]
        self.clock += 1
        return packet


class StreamingDecoder:
    """Per-diagonal erasure decoder; call step() once per slot.

    step() takes the received packet or None for an erased slot and
    returns every source symbol newly determined at this slot.  A
    symbol is emitted at the earliest slot whose received history pins
    it down; diagonals whose erasures exceed the code's budget simply
    never emit the undetermined symbols.
    """

    def __init__(self, code: BlockCode):
        self.code = code
        self._solvers: dict[int, OnlineSolver] = {}
        self._emitted: dict[int, set[int]] = {}
        self.clock = 0

    def _solver_for(self, d: int) -> OnlineSolver:
        solver = self._solvers.get(d)
        if solver is None:
            solver = OnlineSolver(self.code.field, self.code.k)
            if d < 0:
                # Boundary diagonal: symbols of negative-index messages
                # are known zeros.
                for l in range(min(-d, self.code.k)):
                    unit = [0] * self.code.k
                    unit[l] = 1
                    solver.add_equation(unit, 0)
            self._solvers[d] = solver
            self._emitted[d] = set()
        return solver

    def step(self, packet: Optional[Sequence[int]]) -> list[Emission]:
        code = self.code
        t = self.clock
        out: list[Emission] = []
        if packet is not None:
            if len(packet) != code.n:
                raise ValueError(f"expected packet of length {code.n}")
            for c in range(code.n):
                d = t - c
                if d <= -code.k:
                    continue  # diagonal carries only zero messages
                solver = self._solver_for(d)
                solver.add_equation(code.generator.column(c), packet[c])
                emitted = self._emitted[d]
                for l, value in solver.determined().items():
                    if l in emitted or d + l < 0:
                        continue
                    emitted.add(l)
                    out.append(Emission(d + l, l, value, t))
        # Diagonals ending before the next slot can be dropped.
        for d in [d for d in self._solvers if d + code.n - 1 <= t - 1]:
            del self._solvers[d]
            del self._emitted[d]
        self.clock += 1
        out.sort(key=lambda e: (e.msg, e.sym))
        return out


def stream_deadline(code: BlockCode, l: int) -> int:
    """Delay bound for symbol l of any message in the interleaved stream."""
    return min(code.spectrum[l], code.n - 1 - l)


def run_stream(code: BlockCode, messages, timeline: ErasureTimeline):
    """Encode, erase, decode; returns {(msg, sym): Emission}.

    The stream is flushed with zero messages so every diagonal started
    within the horizon completes; slots past the horizon are erasure
    free.
    """
    enc = StreamingEncoder(code)
    dec = StreamingDecoder(code)
    results: dict[tuple[int, int], Emission] = {}
    horizon = len(messages)
    for i in range(horizon + code.n - 1):
        u = messages[i] if i < horizon else [0] * code.k
        packet = enc.step(u)
        erased = i < timeline.horizon and timeline.bits[i]
        for em in dec.step(None if erased else packet):
            if em.msg < horizon:
                results[(em.msg, em.sym)] = em
    return results


def check_streaming_achievability(code: BlockCode, N: int, horizon: int, seed: int = 0):
    """Test every placement of at most N erasures within the horizon.

    Returns (True, None) when each message symbol u_i[l] is recovered
    correctly no later than i + min(D_l, n-1-l) for every pattern, else
    (False, witness_timeline).
    """
    import random

    if horizon < 2 * code.n:
        raise ValueError("horizon must be at least twice the block length")
    rng = random.Random(seed)
    messages = [[rng.randrange(code.field.order) for _ in range(code.k)] for _ in range(horizon)]
    for timeline in enumerate_patterns(horizon, N):
        results = run_stream(code, messages, timeline)
        for i in range(horizon):
            for l in range(code.k):
                em = results.get((i, l))
                if em is None or em.value != messages[i][l] or em.time > i + stream_deadline(code, l):
                    return False, timeline
    return True, None
