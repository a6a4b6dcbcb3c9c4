"""Relaying strategies over two erasure hops: symbol-wise decode-forward,
message-wise decode-forward, and instantaneous forwarding.

All three are deterministic state machines around interleaved block
codes.  For decode-forward the relay runs a first-hop stream decoder,
re-packs its estimates into second-hop messages on a fixed schedule,
and encodes them with a second interleaved code:

* symbol-wise: first hop (n, k) with spectrum (T-N2, ..., N1), second
  hop (m, k) delivering relay-message position l with delay N2 + l.
  The estimate of s_i[l] is decoded by the relay at time i + T-N2-l and
  transmitted immediately at second-hop wire offset k-1-l, which puts
  all k estimates of message i on one second-hop diagonal that starts
  at time i+N1 and ends exactly at the deadline i+T.

* message-wise: both hops carry whole messages with flat per-hop
  delays (T1, T2), T1+T2 <= T.  When the two rate-optimal hop codes
  disagree on symbols per slot, the larger-k hop is shortened to the
  common k = min(T1-N1+1, T2-N2+1).

* instantaneous forwarding: the relay copies each received packet in
  the same slot, so the two hops compose into a single erasure channel
  (erased when either hop erases) carrying one point-to-point stream.

When the relay cannot decode a scheduled symbol it transmits a zero
placeholder in that position and records the loss.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from .block_codes import BlockCode, new_mds_block_code
from .erasures import ErasureTimeline
from .galois import DEFAULT_FIELD, Field
from .streaming import Emission, StreamingDecoder, StreamingEncoder


@dataclass(frozen=True)
class RelayScheme:
    kind: str  # 'symbol' | 'message' | 'if'
    T: int
    N1: int
    N2: int
    k: int
    hop1: Optional[BlockCode]  # None for 'if'
    hop2: Optional[BlockCode]  # None for 'if'
    composed: Optional[BlockCode]  # only for 'if'
    profile: tuple[tuple[int, int], ...]  # (t_l, tau_l) per symbol
    rate: Fraction
    T1: int = 0  # relay re-encode delay for 'message'
    T2: int = 0

    @property
    def n(self) -> int:
        return self.composed.n if self.kind == "if" else self.hop1.n

    @property
    def m(self) -> int:
        return self.composed.n if self.kind == "if" else self.hop2.n

    @property
    def scheme_id(self) -> str:
        return f"{self.kind}(T={self.T},N1={self.N1},N2={self.N2})"

    def relay_source(self, j: int, p: int) -> tuple[int, int]:
        """Source (message, symbol) carried at position p of the relay
        message transmitted at time j."""
        if self.kind == "symbol":
            return j - self.N1 - p, self.k - 1 - p
        if self.kind == "message":
            return j - self.T1, p
        raise ValueError("instantaneous forwarding has no relay messages")

    def relay_slot(self, i: int, l: int) -> tuple[int, int]:
        """Inverse of relay_source: (time, position) where the estimate of
        s_i[l] is transmitted by the relay."""
        if self.kind == "symbol":
            return i + self.N1 + self.k - 1 - l, self.k - 1 - l
        if self.kind == "message":
            return i + self.T1, l
        raise ValueError("instantaneous forwarding has no relay messages")


def _check_budgets(T: int, N1: int, N2: int) -> None:
    if N1 < 0 or N2 < 0 or T < 0:
        raise ValueError("T, N1, N2 must be non-negative")
    if T < N1 + N2:
        raise ValueError(f"capacity zero: delay T={T} cannot cover N1+N2={N1 + N2} erasures")


def symbol_wise_scheme_from_codes(T: int, N1: int, N2: int,
                                  hop1: BlockCode, hop2: BlockCode) -> RelayScheme:
    """Assemble a symbol-wise scheme from explicit hop codes (they must be
    the (T-N2+1, k) and (T-N1+1, k) shapes the schedule assumes)."""
    _check_budgets(T, N1, N2)
    k = T - N1 - N2 + 1
    if (hop1.k, hop1.n) != (k, k + N1) or (hop2.k, hop2.n) != (k, k + N2):
        raise ValueError("hop codes do not match the symbol-wise layout")
    profile = tuple((T - N2 - l, N2 + l) for l in range(k))
    rate = Fraction(k, max(hop1.n, hop2.n))
    return RelayScheme("symbol", T, N1, N2, k, hop1, hop2, None, profile, rate)


def build_symbol_wise_df(T: int, N1: int, N2: int, field: Field | None = None) -> RelayScheme:
    """Rate-optimal symbol-wise decode-forward scheme; needs field order
    at least T + 1."""
    _check_budgets(T, N1, N2)
    field = field or DEFAULT_FIELD
    hop1 = new_mds_block_code(T - N2, N1, field)
    hop2 = new_mds_block_code(T - N1, N2, field)
    return symbol_wise_scheme_from_codes(T, N1, N2, hop1, hop2)


def build_message_wise_df(T: int, N1: int, N2: int, T1: int, T2: int,
                          field: Field | None = None) -> RelayScheme:
    """Message-wise decode-forward at the split (T1, T2)."""
    _check_budgets(T, N1, N2)
    if T1 + T2 > T:
        raise ValueError(f"split T1+T2={T1 + T2} exceeds the delay budget T={T}")
    if T1 < N1 or T2 < N2:
        raise ValueError(f"need T1 >= N1 and T2 >= N2, got T1={T1},N1={N1},T2={T2},N2={N2}")
    field = field or DEFAULT_FIELD
    k = min(T1 - N1 + 1, T2 - N2 + 1)
    # Shorten the larger-capacity hop: a (k+N, k) code is the (T'+1, k)
    # rate-optimal code at the reduced delay T' = k+N-1 <= Ti.
    hop1 = new_mds_block_code(k + N1 - 1, N1, field)
    hop2 = new_mds_block_code(k + N2 - 1, N2, field)
    profile = tuple((T1, T2) for _ in range(k))
    rate = Fraction(k, max(hop1.n, hop2.n))
    return RelayScheme("message", T, N1, N2, k, hop1, hop2, None, profile, rate,
                       T1=T1, T2=T2)


def build_instantaneous_forwarding(T: int, N1: int, N2: int,
                                   field: Field | None = None) -> RelayScheme:
    """One point-to-point stream over the composed channel."""
    _check_budgets(T, N1, N2)
    field = field or DEFAULT_FIELD
    code = new_mds_block_code(T, N1 + N2, field)
    profile = tuple((0, T - l) for l in range(code.k))
    rate = Fraction(code.k, code.n)
    return RelayScheme("if", T, N1, N2, code.k, None, None, code, profile, rate)


@dataclass
class TranscriptRow:
    time: int
    hop1_packet: Optional[list[int]]  # None when erased
    hop2_packet: Optional[list[int]]
    emissions: list[Emission] = dc_field(default_factory=list)


class RelaySession:
    """One end-to-end run of a relay scheme; call step() once per slot.

    step() feeds the source message for this slot plus the two per-hop
    erasure flags and returns the destination estimates that became
    available.  Relay-side decode failures are recorded in
    relay_losses and replaced by zero placeholders on the wire.
    """

    def __init__(self, scheme: RelayScheme):
        self.scheme = scheme
        self.clock = 0
        self.relay_losses: list[tuple[int, int]] = []
        self.destination: dict[tuple[int, int], Emission] = {}
        if scheme.kind == "if":
            self._enc = StreamingEncoder(scheme.composed)
            self._dec = StreamingDecoder(scheme.composed)
        else:
            self._enc1 = StreamingEncoder(scheme.hop1)
            self._relay_dec = StreamingDecoder(scheme.hop1)
            self._enc2 = StreamingEncoder(scheme.hop2)
            self._dec2 = StreamingDecoder(scheme.hop2)
            self._estimates: dict[tuple[int, int], int] = {}

    def step(self, s_i: Sequence[int], hop1_erased: bool, hop2_erased: bool
             ) -> tuple[list[Emission], TranscriptRow]:
        scheme = self.scheme
        t = self.clock
        if scheme.kind == "if":
            packet = self._enc.step(s_i)
            erased = hop1_erased or hop2_erased
            emitted = self._dec.step(None if erased else packet)
            out = [em for em in emitted if em.msg >= 0]
            for em in out:
                self.destination[(em.msg, em.sym)] = em
            row = TranscriptRow(t, None if hop1_erased else packet,
                                None if erased else list(packet), out)
            self.clock += 1
            return out, row

        packet1 = self._enc1.step(s_i)
        for em in self._relay_dec.step(None if hop1_erased else packet1):
            self._estimates[(em.msg, em.sym)] = em.value
        v = [0] * scheme.k
        for p in range(scheme.k):
            i, l = scheme.relay_source(t, p)
            if i >= 0:
                try:
                    v[p] = self._estimates[(i, l)]
                except KeyError:
                    self.relay_losses.append((i, l))  # zero placeholder goes out
        packet2 = self._enc2.step(v)
        out = []
        for em in self._dec2.step(None if hop2_erased else packet2):
            i, l = scheme.relay_source(em.msg, em.sym)
            if i >= 0:
                dest = Emission(i, l, em.value, em.time)
                out.append(dest)
                self.destination[(i, l)] = dest
        out.sort(key=lambda e: (e.msg, e.sym))
        row = TranscriptRow(t, None if hop1_erased else packet1,
                            None if hop2_erased else packet2, out)
        self.clock += 1
        return out, row


@dataclass
class SessionResult:
    scheme: RelayScheme
    messages: list[list[int]]
    destination: dict[tuple[int, int], Emission]
    relay_losses: list[tuple[int, int]]
    transcript: list[TranscriptRow]

    def message_failures(self, first: int = 0, last: Optional[int] = None) -> list[int]:
        """Messages in [first, last] with any symbol missing, wrong, or late.

        A symbol the relay replaced by its zero placeholder counts as
        lost even when the placeholder happens to equal the true value:
        the delivered number is not a function of the source symbol, so
        such a coincidence is not a recovery (and counting it would make
        loss statistics depend on the field size).
        """
        last = len(self.messages) - 1 if last is None else last
        placeholder = set(self.relay_losses)
        bad = []
        for i in range(first, last + 1):
            for l in range(self.scheme.k):
                em = self.destination.get((i, l))
                if (em is None or em.value != self.messages[i][l]
                        or em.time > i + self.scheme.T or (i, l) in placeholder):
                    bad.append(i)
                    break
        return bad


def run_relay(scheme: RelayScheme, messages: Sequence[Sequence[int]],
              hop1: ErasureTimeline, hop2: ErasureTimeline,
              flush: bool = True) -> SessionResult:
    """Drive a session over the message list; erasures beyond each
    timeline's horizon are clear.  With flush=True the session runs
    T + max(n, m) extra zero-message slots so every in-horizon message
    reaches its deadline."""
    session = RelaySession(scheme)
    transcript = []
    extra = scheme.T + max(scheme.n, scheme.m) if flush else 0
    for t in range(len(messages) + extra):
        u = list(messages[t]) if t < len(messages) else [0] * scheme.k
        e1 = t < hop1.horizon and bool(hop1.bits[t])
        e2 = t < hop2.horizon and bool(hop2.bits[t])
        _, row = session.step(u, e1, e2)
        transcript.append(row)
    return SessionResult(scheme, [list(m) for m in messages],
                         session.destination, session.relay_losses, transcript)


def transcript_csv(result: SessionResult) -> str:
    """Row-per-slot CSV: time, hop1 packet or *, hop2 packet or *, emissions."""
    buf = io.StringIO()
    buf.write("time,hop1,hop2,emitted\n")
    for row in result.transcript:
        p1 = "*" if row.hop1_packet is None else " ".join(map(str, row.hop1_packet))
        p2 = "*" if row.hop2_packet is None else " ".join(map(str, row.hop2_packet))
        ems = ";".join(f"s{em.msg}[{em.sym}]={em.value}@{em.time}" for em in row.emissions)
        buf.write(f"{row.time},{p1},{p2},{ems}\n")
    return buf.getvalue()
