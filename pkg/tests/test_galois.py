import random
from itertools import combinations

import pytest

from rsc.galois import (
    BinaryField,
    GeneratorMatrix,
    OnlineSolver,
    PrimeField,
    SingularMatrixError,
    field_of_order,
    make_mds_generator,
    mat_rank,
    solve_linear,
    vec_mat,
    verify_mds,
)


# ---------------------------------------------------------------------------
# Field axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("field", [BinaryField(2), BinaryField(3), PrimeField(5), PrimeField(7)])
def test_field_axioms_exhaustive_small(field):
    els = list(field.elements())
    for a in els:
        assert field.add(a, 0) == a
        assert field.mul(a, 1) == a
        assert field.mul(a, 0) == 0
        assert field.add(a, field.neg(a)) == 0
    for a in els:
        for b in els:
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            for c in els:
                assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
                assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
                assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))


def test_inverses_exhaustive_gf8():
    f = BinaryField(3)
    for a in range(1, 8):
        assert f.mul(a, f.inv(a)) == 1


def test_field_axioms_randomized_gf256():
    f = BinaryField(8)
    rng = random.Random(42)
    for _ in range(500):
        a, b, c = (rng.randrange(256) for _ in range(3))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for _ in range(200):
        a = rng.randrange(1, 256)
        assert f.mul(a, f.inv(a)) == 1


def test_gf256_table_matches_bitwise_reference():
    # Values independently derived by carry-less multiply mod 0x11d.
    f = BinaryField(8)
    assert f.mul(2, 4) == 8
    assert f.mul(7, 11) == 49
    assert f.mul(163, 89) == 159
    rng = random.Random(1)
    for _ in range(2000):
        a, b = rng.randrange(256), rng.randrange(256)
        assert f.mul(a, b) == f._mul_nolut(a, b)


def test_division_errors_and_identities():
    for f in (BinaryField(8), PrimeField(13)):
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ZeroDivisionError):
            f.div(5, 0)
        assert f.div(0, 3) == 0
        assert f.div(7, 7) == 1


def test_field_of_order_dispatch():
    assert isinstance(field_of_order(256), BinaryField)
    assert isinstance(field_of_order(8), BinaryField)
    assert isinstance(field_of_order(13), PrimeField)
    with pytest.raises(ValueError):
        field_of_order(12)
    with pytest.raises(ValueError):
        field_of_order(2 ** 17)


# ---------------------------------------------------------------------------
# MDS generators
# ---------------------------------------------------------------------------

def test_known_5x3_generator_is_mds():
    # Parity columns (1,1,1) and (1,2,4); labels are field elements, so the
    # matrix must check out in whichever field is active.
    rows = ((1, 0, 0, 1, 1), (0, 1, 0, 1, 2), (0, 0, 1, 1, 4))
    for field in (BinaryField(3), BinaryField(8)):
        gen = GeneratorMatrix(field, rows)
        assert verify_mds(gen)


def test_zero_parity_entry_breaks_mds():
    gen = GeneratorMatrix(BinaryField(3), ((1, 0, 0), (0, 1, 1)))
    assert not verify_mds(gen)  # columns {e1, parity} have rank 1


def test_repeated_column_breaks_mds():
    gen = GeneratorMatrix(BinaryField(3), ((1, 0, 1, 1), (0, 1, 2, 2)))
    assert not verify_mds(gen)


def test_trivial_identity_generator():
    gen = make_mds_generator(1, 0, BinaryField(3))
    assert gen.rows == ((1,),)
    assert verify_mds(gen)


def test_make_mds_2x3_all_minors_invertible():
    f = BinaryField(3)
    gen = make_mds_generator(2, 1, f)
    for cols in combinations(range(3), 2):
        sub = [[gen.rows[i][j] for j in cols] for i in range(2)]
        assert mat_rank(f, sub) == 2


def test_make_mds_generator_exhaustive_grid():
    # Every k + r <= 12 over GF(256), plus tight-field cases.
    f = BinaryField(8)
    for k in range(1, 13):
        for r in range(0, 13 - k):
            assert verify_mds(make_mds_generator(k, r, f))
    assert verify_mds(make_mds_generator(3, 2, field_of_order(5)))
    assert verify_mds(make_mds_generator(3, 2, BinaryField(3)))


def test_make_mds_field_too_small():
    with pytest.raises(ValueError, match="minimum order is 9"):
        make_mds_generator(5, 4, BinaryField(3))


def test_generator_must_be_systematic():
    with pytest.raises(ValueError):
        GeneratorMatrix(BinaryField(3), ((1, 1, 0), (0, 1, 1)))


# ---------------------------------------------------------------------------
# Linear solving
# ---------------------------------------------------------------------------

def test_solve_identity_system():
    f = PrimeField(5)
    assert solve_linear(f, [[1, 0], [0, 1]], [4, 2]) == [4, 2]


def test_solve_2x2_gf5_verified_by_substitution():
    f = PrimeField(5)
    a = [[1, 2], [3, 4]]
    x = solve_linear(f, a, [0, 3])
    assert x == [3, 1]
    for row, b in zip(a, [0, 3]):
        assert sum(r * v for r, v in zip(row, x)) % 5 == b


def test_solve_singular_raises():
    f = PrimeField(5)
    with pytest.raises(SingularMatrixError):
        solve_linear(f, [[0, 0], [0, 0]], [1, 0])
    with pytest.raises(SingularMatrixError):
        solve_linear(f, [[1, 2], [2, 4]], [1, 0])


def test_solve_roundtrip_random_nonsingular():
    f = BinaryField(8)
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randrange(1, 6)
        while True:
            a = [[rng.randrange(256) for _ in range(n)] for _ in range(n)]
            if mat_rank(f, a) == n:
                break
        x = [rng.randrange(256) for _ in range(n)]
        b = [0] * n
        for i in range(n):
            for j in range(n):
                b[i] = f.add(b[i], f.mul(a[i][j], x[j]))
        assert solve_linear(f, a, b) == x


def test_online_solver_tracks_determined_set():
    f = PrimeField(7)
    s = OnlineSolver(f, 3)
    s.add_equation([1, 1, 0], 5)
    assert s.determined() == {}
    s.add_equation([0, 1, 0], 2)
    got = s.determined()
    assert got == {0: 3, 1: 2}
    s.add_equation([1, 1, 1], 3)
    assert s.determined() == {0: 3, 1: 2, 2: 5}  # x2 = 3 - (x0 + x1) mod 7


def test_vec_mat_matches_manual():
    f = PrimeField(7)
    g = [[1, 0, 2], [0, 1, 3]]
    assert vec_mat(f, [2, 3], g) == [2, 3, (2 * 2 + 3 * 3) % 7]
