"""Systematic block codes with per-symbol decoding deadlines.

A block code here is a systematic MDS code [I_k | P] together with a
delay spectrum (D_0, ..., D_{k-1}): the symbol transmitted at in-block
time l must be recovered by time min(l + D_l, n - 1).  The rate-optimal
family used throughout the package takes k = T - N + 1, n = T + 1 and
spectrum (T, T-1, ..., N); it corrects any N erasures per block with
every deadline landing exactly on the last block slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .galois import (
    DEFAULT_FIELD,
    Field,
    GeneratorMatrix,
    OnlineSolver,
    make_mds_generator,
    vec_mat,
)

ERASED = None  # received-symbol marker


@dataclass(frozen=True)
class BlockCode:
    generator: GeneratorMatrix
    spectrum: tuple[int, ...]
    target_erasures: int

    def __post_init__(self):
        if len(self.spectrum) != self.k:
            raise ValueError("spectrum length must equal k")
        if any(d < 0 for d in self.spectrum):
            raise ValueError("spectrum entries must be non-negative")
        if not (0 <= self.target_erasures <= self.n - self.k):
            raise ValueError("target erasure count must be within the parity budget")

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def k(self) -> int:
        return self.generator.k

    @property
    def n(self) -> int:
        return self.generator.n

    def deadline(self, l: int) -> int:
        """In-block time by which symbol l must be decoded."""
        return min(l + self.spectrum[l], self.n - 1)


@dataclass(frozen=True)
class DecodedSymbol:
    value: Optional[int]
    time: Optional[int]  # in-block slot at which the value became determined

    @property
    def ok(self) -> bool:
        return self.value is not None


def new_mds_block_code(T: int, N: int, field: Field | None = None) -> BlockCode:
    """Rate-optimal (T+1, T-N+1) MDS block code with spectrum (T, ..., N).

    Corrects any N erasures within its block; every symbol is decodable
    by the final block slot, which coincides with each deadline.
    """
    if N < 0:
        raise ValueError("erasure budget must be non-negative")
    if T < N:
        raise ValueError(f"capacity is zero for T={T} < N={N}: no such code exists")
    field = field or DEFAULT_FIELD
    k = T - N + 1
    gen = make_mds_generator(k, N, field)
    spectrum = tuple(T - l for l in range(k))
    return BlockCode(gen, spectrum, N)


def encode_block(code: BlockCode, u: Sequence[int]):
    """Encode k source symbols into the n-symbol codeword u . G."""
    if len(u) != code.k:
        raise ValueError(f"expected {code.k} source symbols, got {len(u)}")
    return vec_mat(code.field, list(u), [list(r) for r in code.generator.rows])


def decode_block(code: BlockCode, received: Sequence[Optional[int]]):
    """Decode a codeword with erasures marked as None.

    Returns one DecodedSymbol per source symbol.  The decode time is
    the earliest in-block slot whose received prefix determines the
    symbol.  Symbols that stay undetermined (possible only when the
    pattern has more erasures than the code corrects) come back as
    DecodedSymbol(None, None) rather than raising.
    """
    if len(received) != code.n:
        raise ValueError(f"expected {code.n} received symbols, got {len(received)}")
    solver = OnlineSolver(code.field, code.k)
    results: list[DecodedSymbol] = [DecodedSymbol(None, None)] * code.k
    found = 0
    for t, y in enumerate(received):
        if y is not None:
            solver.add_equation(code.generator.column(t), y)
            for l, value in solver.determined().items():
                if results[l].value is None:
                    results[l] = DecodedSymbol(value, t)
                    found += 1
        if found == code.k:
            break
    return results


def check_block_achievability(code: BlockCode, N: int, seed: int = 0):
    """Exhaustively test every pattern of at most N erasures.

    Returns (True, None) when every source symbol of every pattern is
    recovered correctly by its deadline, else (False, witness) where
    the witness is the offending tuple of erased positions.
    """
    import random

    rng = random.Random(seed)
    u = [rng.randrange(code.field.order) for _ in range(code.k)]
    x = encode_block(code, u)
    for j in range(N + 1):
        for erased in combinations(range(code.n), j):
            received = [ERASED if t in erased else x[t] for t in range(code.n)]
            decoded = decode_block(code, received)
            for l, sym in enumerate(decoded):
                if sym.value != u[l] or sym.time is None or sym.time > code.deadline(l):
                    return False, erased
    return True, None
