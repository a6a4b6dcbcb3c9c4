"""Finite-field arithmetic and systematic MDS generator matrices.

Field elements are plain integers in ``[0, q)``.  For binary extension
fields GF(2^m) the integer's bits are the coefficients of a polynomial
over GF(2), reduced modulo a fixed primitive polynomial; multiplication
uses log/antilog tables.  Prime fields GF(p) use ordinary modular
arithmetic.  Matrices are lists of row lists of integers.

The default field used throughout the package is GF(2^8) with the
primitive polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11d).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class SingularMatrixError(ValueError):
    """Raised when a linear system has no unique solution."""


# Primitive polynomials for GF(2^m), m = 1..16.  x (label 2) is a
# primitive element for each; the table constructor verifies this.
_GF2_POLY = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


class Field:
    """Common interface: elements are ints in [0, order)."""

    order: int

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        return self.mul(a, self.inv(b))

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def elements(self):
        return range(self.order)


class BinaryField(Field):
    """GF(2^m) with log/antilog tables built from a primitive polynomial."""

    def __init__(self, m: int):
        if m not in _GF2_POLY:
            raise ValueError(f"unsupported extension degree m={m}; supported 1..16")
        self.m = m
        self.poly = _GF2_POLY[m]
        self.order = 1 << m
        q = self.order
        self._exp = [0] * (2 * (q - 1))
        self._log = [0] * q
        x = 1
        for i in range(q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = self._mul_nolut(x, 2)
        if x != 1:
            raise ValueError(f"polynomial {self.poly:#x} is not primitive for m={m}")
        for i in range(q - 1, 2 * (q - 1)):
            self._exp[i] = self._exp[i - (q - 1)]

    def _mul_nolut(self, a: int, b: int) -> int:
        """Carry-less multiply mod the field polynomial; no table lookups.

        Kept as an independent reference path for the table-based
        multiply (the tables are validated against it in tests).
        """
        p = 0
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            if a & self.order:
                a ^= self.poly
            b >>= 1
        return p

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[(self.order - 1) - self._log[a]]


class PrimeField(Field):
    """GF(p) for prime p."""

    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.order = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.order

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.order

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.order

    def inv(self, a: int) -> int:
        if a % self.order == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, self.order - 2, self.order)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def field_of_order(q: int) -> Field:
    """Return GF(q) for q prime or q = 2^m with m <= 16."""
    if q >= 2 and q & (q - 1) == 0:
        return BinaryField(q.bit_length() - 1)
    if _is_prime(q):
        return PrimeField(q)
    raise ValueError(f"unsupported field order {q}: need a prime or a power of 2 up to 2^16")


DEFAULT_FIELD = BinaryField(8)


# ----------------------------------------------------------------------
# Vectors and matrices (lists of int labels)
# ----------------------------------------------------------------------

def vec_mat(field: Field, u, g):
    """Row vector times matrix: returns u . g."""
    k = len(g)
    n = len(g[0]) if k else 0
    if len(u) != k:
        raise ValueError(f"vector length {len(u)} does not match matrix rows {k}")
    out = [0] * n
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = g[i]
        for j in range(n):
            out[j] = field.add(out[j], field.mul(ui, row[j]))
    return out


def mat_rank(field: Field, rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pinv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(pinv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [field.sub(v, field.mul(factor, p)) for v, p in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def solve_linear(field: Field, a, b):
    """Solve a . x = b for square nonsingular a.

    Raises SingularMatrixError when the system has no unique solution,
    which for erasure decoding signals an uncorrectable pattern.
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_linear needs a square matrix and a matching vector")
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pinv = field.inv(aug[col][col])
        aug[col] = [field.mul(pinv, v) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [field.sub(v, field.mul(factor, p)) for v, p in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


class OnlineSolver:
    """Incremental Gaussian elimination over k unknowns.

    Equations arrive one at a time as (coefficients, rhs).  The solver
    keeps a reduced row set and can report exactly which unknowns are
    already uniquely determined, and their values, at any point.
    """

    def __init__(self, field: Field, k: int):
        self.field = field
        self.k = k
        # rows[i] = (coeffs list, rhs), normalized so coeffs[pivot] == 1
        # and pivots strictly increase down the list.
        self.rows: list[tuple[list[int], int]] = []
        self.pivots: list[int] = []

    def add_equation(self, coeffs, rhs: int) -> None:
        f = self.field
        coeffs = list(coeffs)
        for (row, rval), p in zip(self.rows, self.pivots):
            c = coeffs[p]
            if c != 0:
                coeffs = [f.sub(v, f.mul(c, rv)) for v, rv in zip(coeffs, row)]
                rhs = f.sub(rhs, f.mul(c, rval))
        pivot = next((j for j in range(self.k) if coeffs[j] != 0), None)
        if pivot is None:
            return  # dependent equation (consistent by construction)
        pinv = f.inv(coeffs[pivot])
        coeffs = [f.mul(pinv, v) for v in coeffs]
        rhs = f.mul(pinv, rhs)
        # Back-eliminate the new pivot from earlier rows.
        for i, ((row, rval), _) in enumerate(zip(self.rows, self.pivots)):
            c = row[pivot]
            if c != 0:
                self.rows[i] = (
                    [f.sub(v, f.mul(c, nv)) for v, nv in zip(row, coeffs)],
                    f.sub(rval, f.mul(c, rhs)),
                )
        at = next((i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, (coeffs, rhs))
        self.pivots.insert(at, pivot)

    def determined(self) -> dict[int, int]:
        """Unknown index -> value, for every uniquely determined unknown."""
        out = {}
        for (row, rval), p in zip(self.rows, self.pivots):
            if all(v == 0 for j, v in enumerate(row) if j != p):
                out[p] = rval
        return out


# ----------------------------------------------------------------------
# Systematic MDS generator matrices
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMatrix:
    """Systematic generator [I_k | P] over a finite field."""

    field: Field
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.rows)
        if k == 0:
            raise ValueError("generator needs at least one row")
        n = len(self.rows[0])
        if n < k or any(len(r) != n for r in self.rows):
            raise ValueError("generator rows must share a length >= k")
        for i in range(k):
            for j in range(k):
                if self.rows[i][j] != (1 if i == j else 0):
                    raise ValueError("generator is not systematic: first k columns must be I_k")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int):
        return [self.rows[i][j] for i in range(self.k)]

    def parity(self):
        return [list(r[self.k:]) for r in self.rows]


def make_mds_generator(k: int, r: int, field: Field | None = None) -> GeneratorMatrix:
    """Build a k x (k+r) systematic MDS generator [I_k | P].

    P is a Cauchy block P[i][j] = 1/(x_i - y_j) over 2k + ... distinct
    labels, which makes every square submatrix of P nonsingular and
    hence the whole matrix MDS.  Requires field order >= k + r.
    """
    if k < 1 or r < 0:
        raise ValueError("need k >= 1 and r >= 0")
    field = field or DEFAULT_FIELD
    if field.order < k + r:
        raise ValueError(
            f"field of order {field.order} is too small for a ({k + r}, {k}) MDS code; "
            f"minimum order is {k + r}"
        )
    xs = list(range(k))
    ys = list(range(k, k + r))
    rows = []
    for x in xs:
        parity = [field.inv(field.sub(x, y)) for y in ys]
        rows.append(tuple([1 if c == x else 0 for c in range(k)] + parity))
    return GeneratorMatrix(field, tuple(rows))


def verify_mds(gen: GeneratorMatrix) -> bool:
    """Check every k-column subset of [I_k | P] has full rank k.

    Direct definitional check by elimination; independent of the Cauchy
    construction used by make_mds_generator.
    """
    k, n = gen.k, gen.n
    for cols in combinations(range(n), k):
        sub = [[gen.rows[i][j] for j in cols] for i in range(k)]
        if mat_rank(gen.field, sub) != k:
            return False
    return True
