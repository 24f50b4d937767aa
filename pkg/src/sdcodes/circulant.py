"""Dense ring matrices and lambda-circulant matrices.

A lambda-circulant is kept as its first row ``(a_0, ..., a_{n-1})``; row ``i``
is row ``i-1`` shifted right by one with the wrapped entry multiplied by
lambda. Products are computed as polynomial products modulo ``x^n - lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .rings import Ring


@dataclass(frozen=True, eq=False)
class RingMatrix:
    ring: Ring
    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.uint8)
        if arr.ndim != 2:
            raise DomainError("RingMatrix data must be two-dimensional")
        if arr.size and int(arr.max()) >= self.ring.order:
            raise DomainError(f"entry out of range for {self.ring.value}")
        object.__setattr__(self, "data", arr)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls(ring, np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "RingMatrix":
        return cls(ring, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def exchange(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls(ring, np.eye(n, dtype=np.uint8)[::-1].copy())

    def _compat(self, other: "RingMatrix") -> None:
        if other.ring is not self.ring:
            raise DomainError(f"mixed rings {self.ring.value} and {other.ring.value}")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._compat(other)
        if self.shape != other.shape:
            raise DomainError(f"shape mismatch {self.shape} vs {other.shape}")
        return RingMatrix(self.ring, self.data ^ other.data)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        self._compat(other)
        if self.shape[1] != other.shape[0]:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ring is Ring.F2:
            prod = (self.data.astype(np.int64) @ other.data.astype(np.int64)) & 1
            return RingMatrix(self.ring, prod.astype(np.uint8))
        terms = self.ring.mul_table[self.data[:, :, None], other.data[None, :, :]]
        return RingMatrix(self.ring, np.bitwise_xor.reduce(terms, axis=1))

    @property
    def T(self) -> "RingMatrix":
        return RingMatrix(self.ring, self.data.T.copy())

    def scale(self, scalar: int) -> "RingMatrix":
        return RingMatrix(self.ring, self.ring.mul_table[scalar][self.data])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return other.ring is self.ring and np.array_equal(self.data, other.data)

    def is_identity(self) -> bool:
        r, c = self.shape
        return r == c and np.array_equal(self.data, np.eye(r, dtype=np.uint8))

    def is_zero(self) -> bool:
        return not self.data.any()

    def __repr__(self) -> str:
        rows = ["".join("0123456789ABCDEF"[x] for x in row) for row in self.data]
        return f"RingMatrix({self.ring.value}, {rows})"


def dense_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a @ b


def dense_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a + b


def dense_transpose(a: RingMatrix) -> RingMatrix:
    return a.T


def exchange_matrix(ring: Ring, n: int) -> RingMatrix:
    return RingMatrix.exchange(ring, n)


def shift_matrix(ring: Ring, n: int, lam: int) -> RingMatrix:
    """``P_lambda``: ones on the superdiagonal, lambda in the bottom-left corner."""
    data = np.zeros((n, n), dtype=np.uint8)
    for i in range(n - 1):
        data[i, i + 1] = 1
    data[n - 1, 0] ^= lam
    return RingMatrix(ring, data)


@dataclass(frozen=True)
class LambdaCirculant:
    ring: Ring
    lam: int
    row: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(int(x) for x in self.row))
        if not self.row:
            raise DomainError("circulant must have n >= 1")
        if not 0 <= self.lam < self.ring.order or any(not 0 <= x < self.ring.order for x in self.row):
            raise DomainError(f"entry out of range for {self.ring.value}")

    @property
    def n(self) -> int:
        return len(self.row)

    @classmethod
    def identity(cls, ring: Ring, n: int, lam: int = 1) -> "LambdaCirculant":
        return cls(ring, lam, (1,) + (0,) * (n - 1))

    def _compat(self, other: "LambdaCirculant") -> None:
        if other.ring is not self.ring:
            raise DomainError(f"mixed rings {self.ring.value} and {other.ring.value}")
        if other.n != self.n:
            raise DomainError(f"size mismatch {self.n} vs {other.n}")
        if other.lam != self.lam:
            raise DomainError("lambda mismatch: product of different lambda-circulants is not lambda-circulant")

    def to_dense(self) -> RingMatrix:
        n, mul = self.n, self.ring.mul_table
        a = np.array(self.row, dtype=np.uint8)
        wrapped = mul[self.lam][a]
        data = np.empty((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                data[i, j] = a[j - i] if j >= i else wrapped[n + j - i]
        return RingMatrix(self.ring, data)

    def __add__(self, other: "LambdaCirculant") -> "LambdaCirculant":
        self._compat(other)
        return LambdaCirculant(self.ring, self.lam, tuple(x ^ y for x, y in zip(self.row, other.row)))

    def __mul__(self, other: "LambdaCirculant") -> "LambdaCirculant":
        self._compat(other)
        n, mul = self.n, self.ring.mul_table
        a = np.array(self.row, dtype=np.uint8)
        b = np.array(other.row, dtype=np.uint8)
        # Polynomial product mod x^n - lam: terms with i + j >= n wrap with a factor lam.
        terms = mul[a[:, None], b[None, :]]
        k = np.add.outer(np.arange(n), np.arange(n))
        wrap = k >= n
        terms[wrap] = mul[self.lam][terms[wrap]]
        out = np.zeros(n, dtype=np.uint8)
        np.bitwise_xor.at(out, (k % n).ravel(), terms.ravel())
        return LambdaCirculant(self.ring, self.lam, tuple(int(x) for x in out))

    def transpose(self) -> "LambdaCirculant":
        """The transpose, a lambda^{-1}-circulant with row (a_0, l*a_{n-1}, ..., l*a_1)."""
        lam_inv = self.ring.inverse(self.lam)
        mul = self.ring.mul_table
        a = self.row
        row = (a[0],) + tuple(int(mul[self.lam, a[self.n - j]]) for j in range(1, self.n))
        return LambdaCirculant(self.ring, lam_inv, row)

    @property
    def T(self) -> "LambdaCirculant":
        return self.transpose()

    def is_identity(self) -> bool:
        return self.row[0] == 1 and not any(self.row[1:])

    def column_sums(self) -> np.ndarray:
        """Entry ``j`` is the sum of column ``j``, i.e. the all-ones vector times the matrix."""
        return np.bitwise_xor.reduce(self.to_dense().data, axis=0)


def circ_mul(a: LambdaCirculant, b: LambdaCirculant) -> LambdaCirculant:
    return a * b


def circ_add(a: LambdaCirculant, b: LambdaCirculant) -> LambdaCirculant:
    return a + b


def circ_transpose(a: LambdaCirculant) -> LambdaCirculant:
    return a.transpose()


def to_dense(a: LambdaCirculant) -> RingMatrix:
    return a.to_dense()


def is_orthogonal(c: LambdaCirculant) -> bool:
    """True iff ``C C^T = I``, evaluated densely."""
    d = c.to_dense()
    return (d @ d.T).is_identity()


def orthogonal_mask(ring: Ring, lam: int, rows: np.ndarray) -> np.ndarray:
    """For each first row in ``rows`` (shape ``(m, n)``), whether ``C C^T = I``.

    Needs ``lam * lam = 1`` so that ``C^T`` is again a lam-circulant.
    """
    rows = np.asarray(rows, dtype=np.uint8)
    m, n = rows.shape
    mul = ring.mul_table
    tr = np.empty_like(rows)
    tr[:, 0] = rows[:, 0]
    tr[:, 1:] = mul[lam][rows[:, :0:-1]]
    out = np.zeros((m, n), dtype=np.uint8)
    for i in range(n):
        term = mul[rows[:, i : i + 1], tr]  # a_i * b_j, lands on i + j
        shifted = np.roll(term, i, axis=1)
        shifted[:, :i] = mul[lam][shifted[:, :i]]
        out ^= shifted
    target = np.zeros(n, dtype=np.uint8)
    target[0] = 1
    return (out == target).all(axis=1)
