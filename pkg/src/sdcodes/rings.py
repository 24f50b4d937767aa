"""The four characteristic-2 alphabets and their hex notation.

Elements are stored as small integers whose bit ``i`` is the coefficient of
the ``i``-th basis monomial:

======  ======================  =====
ring    basis (bit 0 first)     order
======  ======================  =====
F2      1                       2
F2U     1, u                    4
F2UV    1, u, v, uv             16
F4U     1, w, u, wu             16
======  ======================  =====

With this convention the integer value is exactly the hex symbol used to
print the element, e.g. ``0xB`` in F2UV is ``1 + u + uv``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, ParseError

HEX_DIGITS = "0123456789ABCDEF"


def _mul_f2u(x: int, y: int) -> int:
    # (a + bu)(c + du) = ac + (ad + bc)u
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    return (a & c) | (((a & d) ^ (b & c)) << 1)


def _mul_f4(x: int, y: int) -> int:
    # (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, using w^2 = 1 + w
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    return ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1)


def _mul_square_zero(base_mul, x: int, y: int) -> int:
    # S[t]/(t^2) over a 4-element base ring S: (p + qt)(r + st) = pr + (ps + qr)t
    p, q = x & 3, x >> 2
    r, s = y & 3, y >> 2
    return base_mul(p, r) | ((base_mul(p, s) ^ base_mul(q, r)) << 2)


class Ring(enum.Enum):
    F2 = "F2"
    F2U = "F2U"
    F2UV = "F2UV"
    F4U = "F4U"

    @property
    def order(self) -> int:
        return {"F2": 2, "F2U": 4, "F2UV": 16, "F4U": 16}[self.value]

    @property
    def nbits(self) -> int:
        return self.order.bit_length() - 1

    @property
    def basis(self) -> tuple[str, ...]:
        return {
            "F2": ("1",),
            "F2U": ("1", "u"),
            "F2UV": ("1", "u", "v", "uv"),
            "F4U": ("1", "w", "u", "wu"),
        }[self.value]

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self is Ring.F2:
            fn = lambda x, y: x & y  # noqa: E731
        elif self is Ring.F2U:
            fn = _mul_f2u
        elif self is Ring.F2UV:
            fn = lambda x, y: _mul_square_zero(_mul_f2u, x, y)  # noqa: E731
        else:
            fn = lambda x, y: _mul_square_zero(_mul_f4, x, y)  # noqa: E731
        q = self.order
        table = np.zeros((q, q), dtype=np.uint8)
        for x in range(q):
            for y in range(q):
                table[x, y] = fn(x, y)
        table.setflags(write=False)
        return table

    @cached_property
    def unit_mask(self) -> np.ndarray:
        """Boolean lookup: ``unit_mask[x]`` iff ``x`` is invertible."""
        # Each ring is local; units are the elements with nonzero residue.
        residue = 3 if self is Ring.F4U else 1
        mask = np.array([(x & residue) != 0 for x in range(self.order)])
        mask.setflags(write=False)
        return mask

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def is_unit(self, x: int) -> bool:
        return bool(self.unit_mask[x])

    def inverse(self, x: int) -> int:
        if not self.is_unit(x):
            raise DomainError(f"{self.symbol(x)} is not a unit in {self.value}")
        row = self.mul_table[x]
        return int(np.flatnonzero(row == 1)[0])

    def involutions(self) -> list[int]:
        """All ``x`` with ``x * x == 1``."""
        return [x for x in range(self.order) if self.mul_table[x, x] == 1]

    def symbol(self, x: int) -> str:
        return HEX_DIGITS[x]

    def parse_symbol(self, ch: str) -> int:
        try:
            x = int(ch, 16)
        except ValueError:
            raise ParseError(f"invalid hex symbol {ch!r}") from None
        if len(ch) != 1 or x >= self.order:
            raise ParseError(f"symbol {ch!r} is not an element of {self.value}")
        return x

    def parse_vector(self, text: str) -> np.ndarray:
        """Read a string of hex symbols, leftmost first, as a vector of codes."""
        text = text.strip().strip("()")
        return np.array([self.parse_symbol(ch) for ch in text], dtype=np.uint8)

    def format_vector(self, vec) -> str:
        return "".join(HEX_DIGITS[int(x)] for x in vec)

    @classmethod
    def parse(cls, name: str) -> "Ring":
        key = name.strip().upper().replace("+", "").replace("_", "")
        aliases = {"F2": "F2", "F2U": "F2U", "F2UF2": "F2U", "F2UV": "F2UV", "F4U": "F4U", "F4UF4": "F4U"}
        if key not in aliases:
            raise ParseError(f"unknown ring {name!r}; expected one of F2, F2U, F2UV, F4U")
        return cls(aliases[key])


@dataclass(frozen=True)
class RingElement:
    """A single ring element; arithmetic operators dispatch to the ring tables."""

    ring: Ring
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ring.order:
            raise DomainError(f"{self.value} is out of range for {self.ring.value}")

    @classmethod
    def from_hex(cls, sym: str, ring: Ring) -> "RingElement":
        return cls(ring, ring.parse_symbol(sym))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.ring.nbits))

    def hex(self) -> str:
        return HEX_DIGITS[self.value]

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine RingElement with {type(other).__name__}")
        if other.ring is not self.ring:
            raise DomainError(f"mixed rings {self.ring.value} and {other.ring.value}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self) -> "RingElement":
        return self

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inverse(self.value))

    def __str__(self) -> str:
        terms = [m for i, m in enumerate(self.ring.basis) if (self.value >> i) & 1]
        return "+".join(terms) if terms else "0"


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_is_unit(x: RingElement) -> bool:
    return x.is_unit()


def ring_inverse(x: RingElement) -> RingElement:
    return x.inverse()


def hex_decode(sym: str, ring: Ring) -> RingElement:
    return RingElement.from_hex(sym, ring)


def hex_encode(x: RingElement) -> str:
    return x.hex()


def vec_mul(ring: Ring, scalar: int, vec: np.ndarray) -> np.ndarray:
    """Scalar times vector (or matrix), elementwise."""
    return ring.mul_table[scalar][np.asarray(vec, dtype=np.uint8)]


def inner(ring: Ring, x: np.ndarray, y: np.ndarray) -> int:
    """Euclidean inner product of two code vectors."""
    prods = ring.mul_table[np.asarray(x, dtype=np.uint8), np.asarray(y, dtype=np.uint8)]
    return int(np.bitwise_xor.reduce(prods)) if prods.size else 0
