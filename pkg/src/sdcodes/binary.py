"""Binary linear codes with rows stored as Python int bitsets.

Bit ``j`` of a row is the entry in column ``j`` (column 0 is the leftmost
character when printed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CensusError


def weight(x: int) -> int:
    return x.bit_count()


def bits_to_int(bits: Iterable[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b & 1:
            out |= 1 << j
    return out


def int_to_bits(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


def parse_bits(text: str) -> int:
    text = text.strip().strip("()")
    if any(ch not in "01" for ch in text):
        from .errors import ParseError

        raise ParseError(f"expected a 0/1 string, got {text!r}")
    return bits_to_int(int(ch) for ch in text)


def format_bits(x: int, n: int) -> str:
    return "".join("1" if (x >> j) & 1 else "0" for j in range(n))


def rref(rows: Sequence[int], n: int | None = None) -> tuple[list[int], int, list[int]]:
    """Reduced row-echelon form over GF(2), leftmost pivots first.

    Returns ``(basis, rank, pivots)`` with ``basis[i]`` having its pivot at
    ``pivots[i]`` and zeros in every other pivot column.
    """
    work = [r for r in rows if r]
    if n is None:
        n = max((r.bit_length() for r in work), default=0)
    basis: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        bit = 1 << col
        idx = next((i for i, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        basis = [b ^ p if b & bit else b for b in basis]
        basis.append(p)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return basis, len(basis), pivots


def rank(rows: Sequence[int], n: int | None = None) -> int:
    return rref(rows, n)[1]


def inner(x: int, y: int) -> int:
    return (x & y).bit_count() & 1


@dataclass(frozen=True)
class BinaryCode:
    """A binary ``[n, k]`` code held as a reduced basis."""

    n: int
    rows: tuple[int, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[int], n: int) -> "BinaryCode":
        basis, _, pivots = rref(list(rows), n)
        order = sorted(range(len(basis)), key=lambda i: pivots[i])
        return cls(n, tuple(basis[i] for i in order), tuple(pivots[i] for i in order))

    @classmethod
    def from_matrix(cls, matrix) -> "BinaryCode":
        arr = np.asarray(matrix, dtype=np.uint8)
        return cls.from_rows((bits_to_int(r) for r in arr), arr.shape[1])

    @property
    def k(self) -> int:
        return len(self.rows)

    def to_matrix(self) -> np.ndarray:
        return np.array([int_to_bits(r, self.n) for r in self.rows], dtype=np.uint8).reshape(self.k, self.n)

    def contains(self, x: int) -> bool:
        for r, p in zip(self.rows, self.pivots):
            if (x >> p) & 1:
                x ^= r
        return x == 0

    def is_self_orthogonal(self) -> bool:
        return all(inner(a, b) == 0 for i, a in enumerate(self.rows) for b in self.rows[i:])

    def is_self_dual(self) -> bool:
        return self.n == 2 * self.k and self.is_self_orthogonal()

    def dual_rows(self) -> list[int]:
        """A basis of the dual code, from the systematic form on the pivots."""
        piv = set(self.pivots)
        out = []
        for j in range(self.n):
            if j in piv:
                continue
            v = 1 << j
            for r, p in zip(self.rows, self.pivots):
                if (r >> j) & 1:
                    v |= 1 << p
            out.append(v)
        return out

    def intersection_dim(self, other: "BinaryCode") -> int:
        return self.k + other.k - rank(list(self.rows) + list(other.rows), self.n)

    def redundancy(self, info: Sequence[int]) -> list[int]:
        """Systematic re-encoding on the column set ``info``.

        Returns one packed word per message bit ``i``: the entries of the
        codeword with message ``e_i`` on the columns outside ``info`` (in
        increasing column order), packed low bit first.
        """
        info = list(info)
        if len(info) != self.k:
            raise CensusError(f"information set has {len(info)} columns, need {self.k}")
        work = list(self.rows)
        sys_rows: list[int] = []
        for col in info:
            bit = 1 << col
            idx = next((i for i, r in enumerate(work) if r & bit), None)
            if idx is None:
                raise CensusError(f"columns {info} are not an information set")
            p = work.pop(idx)
            work = [r ^ p if r & bit else r for r in work]
            sys_rows = [r ^ p if r & bit else r for r in sys_rows]
            sys_rows.append(p)
        rest = [j for j in range(self.n) if j not in set(info)]
        return [sum(((r >> j) & 1) << pos for pos, j in enumerate(rest)) for r in sys_rows]


def is_self_dual(code: BinaryCode) -> bool:
    return code.is_self_dual()


def pack_words(words: Sequence[int], nbits: int) -> np.ndarray:
    """Pack Python ints into a ``(len, W)`` uint64 array, ``W = ceil(nbits / 64)``."""
    nw = max(1, -(-nbits // 64))
    out = np.zeros((len(words), nw), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, x in enumerate(words):
        for w in range(nw):
            out[i, w] = (x >> (64 * w)) & mask
    return out
