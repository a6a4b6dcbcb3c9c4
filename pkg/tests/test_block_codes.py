import random
from itertools import combinations

import pytest

from rsc.block_codes import (
    BlockCode,
    check_block_achievability,
    decode_block,
    encode_block,
    new_mds_block_code,
)
from rsc.galois import BinaryField, GeneratorMatrix, verify_mds

GF256 = BinaryField(8)


def reference_5_3_code(field=GF256):
    """(5, 3) block code with parity columns (1,1,1) and (1,2,4), delay
    spectrum (4, 3, 2); corrects any 2 erasures by the block end."""
    gen = GeneratorMatrix(field, ((1, 0, 0, 1, 1), (0, 1, 0, 1, 2), (0, 0, 1, 1, 4)))
    return BlockCode(gen, (4, 3, 2), 2)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def test_new_code_shapes_and_spectrum():
    code = new_mds_block_code(4, 2, GF256)
    assert (code.n, code.k) == (5, 3)
    assert code.spectrum == (4, 3, 2)
    code = new_mds_block_code(5, 2, GF256)
    assert (code.n, code.k) == (6, 4)
    assert code.spectrum == (5, 4, 3, 2)


def test_trivial_code():
    code = new_mds_block_code(0, 0, GF256)
    assert (code.n, code.k) == (1, 1)
    assert encode_block(code, [5]) == [5]


def test_delay_budget_below_erasures_rejected():
    with pytest.raises(ValueError, match="capacity is zero"):
        new_mds_block_code(1, 2, GF256)


def test_generated_codes_are_mds():
    for T in range(0, 8):
        for N in range(0, T + 1):
            assert verify_mds(new_mds_block_code(T, N, GF256).generator)


def test_deadlines_sit_at_block_end():
    # The rate-optimal spectrum makes l + D_l == n - 1 for every symbol.
    for T, N in [(4, 2), (5, 2), (8, 3), (3, 0)]:
        code = new_mds_block_code(T, N, GF256)
        for l in range(code.k):
            assert l + code.spectrum[l] == code.n - 1
            assert code.deadline(l) == code.n - 1


# ---------------------------------------------------------------------------
# Encoding
# ---------------------------------------------------------------------------

def test_encode_zero_message():
    code = reference_5_3_code()
    assert encode_block(code, [0, 0, 0]) == [0, 0, 0, 0, 0]


def test_encode_reference_rows():
    code = reference_5_3_code()
    assert encode_block(code, [1, 0, 0]) == [1, 0, 0, 1, 1]
    assert encode_block(code, [0, 0, 1]) == [0, 0, 1, 1, 4]


def test_encode_wrong_length():
    code = reference_5_3_code()
    with pytest.raises(ValueError):
        encode_block(code, [1, 2])


def test_encode_linearity():
    f = GF256
    code = reference_5_3_code()
    rng = random.Random(4)
    for _ in range(20):
        u1 = [rng.randrange(256) for _ in range(3)]
        u2 = [rng.randrange(256) for _ in range(3)]
        s = [f.add(a, b) for a, b in zip(u1, u2)]
        x = [f.add(a, b) for a, b in zip(encode_block(code, u1), encode_block(code, u2))]
        assert encode_block(code, s) == x


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------

def test_decode_no_erasures_systematic_readoff():
    code = reference_5_3_code()
    u = [9, 8, 7]
    out = decode_block(code, encode_block(code, u))
    assert [d.value for d in out] == u
    assert [d.time for d in out] == [0, 1, 2]


def test_decode_two_leading_erasures():
    code = reference_5_3_code()
    u = [31, 41, 59]
    x = encode_block(code, u)
    out = decode_block(code, [None, None] + x[2:])
    assert [d.value for d in out] == u
    assert all(d.time <= 4 for d in out)


def test_decode_three_erasures_reports_per_symbol_failure():
    code = reference_5_3_code()
    u = [31, 41, 59]
    x = encode_block(code, u)
    out = decode_block(code, [None, None, None, x[3], x[4]])
    assert all(d.value is None for d in out)  # 2 equations cannot pin 3 unknowns
    # partial pattern: one systematic symbol survives
    out = decode_block(code, [None, x[1], None, None, x[4]])
    assert out[1].value == u[1] and out[1].time == 1
    assert out[0].value is None and out[2].value is None


def test_decode_linearity_under_no_erasures():
    f = GF256
    code = new_mds_block_code(5, 2, f)
    rng = random.Random(11)
    u1 = [rng.randrange(256) for _ in range(code.k)]
    u2 = [rng.randrange(256) for _ in range(code.k)]
    x = [f.add(a, b) for a, b in zip(encode_block(code, u1), encode_block(code, u2))]
    got = [d.value for d in decode_block(code, x)]
    assert got == [f.add(a, b) for a, b in zip(u1, u2)]


def test_decode_wrong_length():
    with pytest.raises(ValueError):
        decode_block(reference_5_3_code(), [None] * 3)


# ---------------------------------------------------------------------------
# Achievability
# ---------------------------------------------------------------------------

def test_reference_code_two_achievable_sixteen_patterns():
    code = reference_5_3_code()
    assert sum(1 for j in range(3) for _ in combinations(range(5), j)) == 16
    ok, witness = check_block_achievability(code, 2)
    assert ok and witness is None


def test_reference_code_not_three_achievable():
    ok, witness = check_block_achievability(reference_5_3_code(), 3)
    assert not ok
    assert witness is not None and len(witness) == 3


def test_trivial_code_zero_achievable():
    ok, _ = check_block_achievability(new_mds_block_code(0, 0, GF256), 0)
    assert ok


def test_generated_codes_achievable_exhaustive():
    # every construction with k + N <= 13 passes its own budget
    for T in range(0, 9):
        for N in range(0, min(T, 4) + 1):
            if (T - N + 1) + N > 13:
                continue
            code = new_mds_block_code(T, N, GF256)
            ok, witness = check_block_achievability(code, N)
            assert ok, (T, N, witness)


def test_achievability_fails_beyond_budget():
    code = new_mds_block_code(4, 1, GF256)
    ok, witness = check_block_achievability(code, 2)
    assert not ok and witness is not None
