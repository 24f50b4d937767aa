"""Bordered lambda-circulant construction, building-up and neighbours.

The bordered generator over a ring R of characteristic 2 is::

    [ v      | 0 | x3  x4  ]
    [ I_{2n} | X | v^T v^T ]      X = [[A C, B], [B^T C, A^T]]

with ``v = (x1, ..., x1, x2, ..., x2)``, ``A``, ``B`` lambda-circulant and
``C`` mu-circulant. Given ``C C^T = I``, it generates a self-dual code of
length ``2(2n+1)`` exactly when ``A A^T + B B^T = I``, ``sum x_i^2 = 0``,
``x_j (x3 + x4 + 1) = 0`` for ``j = 1, 2``, and the border row
``(x1 A + x2 B, x1 B + x2 A, x3, x4)`` has free rank one. All supported rings
are local, so the last condition reduces to "some entry is a unit".
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .binary import BinaryCode, inner as bin_inner
from .circulant import LambdaCirculant, RingMatrix
from .errors import ConstructionError, DomainError, ParseError
from .rings import Ring, inner


@dataclass(frozen=True)
class ConstructionParams:
    ring: Ring
    n: int
    lam: int
    mu: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    xi: tuple[int, int, int, int]

    def __post_init__(self):
        for name in ("a", "b", "c", "xi"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        q = self.ring.order
        if self.n < 1 or self.n % 2 == 0:
            raise DomainError(f"n must be odd and positive, got {self.n}")
        for name in ("a", "b", "c"):
            if len(getattr(self, name)) != self.n:
                raise DomainError(f"{name} has length {len(getattr(self, name))}, expected n={self.n}")
        if len(self.xi) != 4:
            raise DomainError("xi must have four entries")
        if any(not 0 <= x < q for x in (self.lam, self.mu, *self.a, *self.b, *self.c, *self.xi)):
            raise DomainError(f"entry out of range for {self.ring.value}")
        for name in ("lam", "mu"):
            x = getattr(self, name)
            if self.ring.mul(x, x) != 1:
                raise DomainError(f"{name}={self.ring.symbol(x)} does not square to 1")

    @classmethod
    def from_hex(cls, ring: Ring | str, a: str, b: str, c: str, xi: str, lam: str = "1", mu: str = "1") -> "ConstructionParams":
        ring = Ring.parse(ring) if isinstance(ring, str) else ring
        av, bv, cv = (tuple(ring.parse_vector(s)) for s in (a, b, c))
        xv = tuple(ring.parse_vector(xi))
        if len(xv) != 4:
            raise ParseError(f"xi must have 4 symbols, got {xi!r}")
        return cls(ring, len(av), ring.parse_symbol(lam.strip()), ring.parse_symbol(mu.strip()), av, bv, cv, xv)

    def to_hex(self) -> dict[str, str]:
        f = self.ring.format_vector
        return {
            "ring": self.ring.value,
            "n": str(self.n),
            "lambda": self.ring.symbol(self.lam),
            "mu": self.ring.symbol(self.mu),
            "a": f(self.a),
            "b": f(self.b),
            "c": f(self.c),
            "xi": f(self.xi),
        }

    @property
    def A(self) -> LambdaCirculant:
        return LambdaCirculant(self.ring, self.lam, self.a)

    @property
    def B(self) -> LambdaCirculant:
        return LambdaCirculant(self.ring, self.lam, self.b)

    @property
    def C(self) -> LambdaCirculant:
        return LambdaCirculant(self.ring, self.mu, self.c)

    @property
    def length(self) -> int:
        return 2 * (2 * self.n + 1)


@dataclass(frozen=True)
class ConditionReport:
    orthogonal_c: bool
    identity_sum: bool
    xi_square_sum: bool
    border_xi: bool
    free_rank_one: bool

    def __bool__(self) -> bool:
        return all(asdict(self).values())

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)

    def __str__(self) -> str:
        return " ".join(f"{k}={'true' if v else 'false'}" for k, v in asdict(self).items())


def border_vector(p: ConstructionParams) -> np.ndarray:
    """``(x1 A + x2 B, x1 B + x2 A, x3, x4)`` with ``x A`` the all-x vector times A."""
    mul = p.ring.mul_table
    x1, x2, x3, x4 = p.xi
    sa, sb = p.A.column_sums(), p.B.column_sums()
    left = mul[x1][sa] ^ mul[x2][sb]
    right = mul[x1][sb] ^ mul[x2][sa]
    return np.concatenate([left, right, np.array([x3, x4], dtype=np.uint8)])


def check_conditions(p: ConstructionParams) -> ConditionReport:
    ring = p.ring
    mul = ring.mul_table
    A, B, C = p.A, p.B, p.C
    x1, x2, x3, x4 = p.xi
    orthogonal_c = (C * C.T).is_identity()
    identity_sum = (A * A.T + B * B.T).is_identity()
    sq = 0
    for x in p.xi:
        sq ^= int(mul[x, x])
    t = x3 ^ x4 ^ 1
    border_xi = int(mul[x1, t]) == 0 and int(mul[x2, t]) == 0
    free_rank_one = bool(ring.unit_mask[border_vector(p)].any())
    return ConditionReport(orthogonal_c, identity_sum, sq == 0, border_xi, free_rank_one)


def theorem1_generator(p: ConstructionParams, check: bool = True) -> RingMatrix:
    """The ``(2n+1) x 2(2n+1)`` bordered generator matrix.

    With ``check=False`` the matrix is assembled whatever the conditions say;
    that mode exists so the converse direction can be tested.
    """
    if check:
        report = check_conditions(p)
        if not report:
            raise ConstructionError(report)
    ring, n = p.ring, p.n
    A, B, C = (m.to_dense() for m in (p.A, p.B, p.C))
    X = np.block([[(A @ C).data, B.data], [(B.T @ C).data, A.T.data]])
    x1, x2, x3, x4 = p.xi
    v = np.array([x1] * n + [x2] * n, dtype=np.uint8)
    N = 2 * (2 * n + 1)
    G = np.zeros((2 * n + 1, N), dtype=np.uint8)
    G[0, : 2 * n] = v
    G[0, 4 * n] = x3
    G[0, 4 * n + 1] = x4
    G[1:, : 2 * n] = np.eye(2 * n, dtype=np.uint8)
    G[1:, 2 * n : 4 * n] = X
    G[1:, 4 * n] = v
    G[1:, 4 * n + 1] = v
    return RingMatrix(ring, G)


def buildup(G: RingMatrix, delta, epsilon: int = 1, check: bool = True) -> RingMatrix:
    """Extend a self-dual code of length ``2m`` to length ``2m + 2`` with border ``delta``.

    In characteristic 2, ``-1 = 1``: the conditions read ``epsilon^2 = 1`` and
    ``<delta, delta> = 1``, and each row ``r_i`` gains the prefix
    ``(g_i, epsilon g_i)`` with ``g_i = <r_i, delta>``.
    """
    ring = G.ring
    delta = np.asarray(delta, dtype=np.uint8)
    rows, cols = G.shape
    if delta.shape != (cols,):
        raise DomainError(f"delta has length {delta.size}, expected {cols}")
    if ring.mul(epsilon, epsilon) != 1:
        raise DomainError("epsilon must satisfy epsilon^2 = -1 (= 1 in characteristic 2)")
    if inner(ring, delta, delta) != 1:
        raise DomainError("delta must satisfy <delta, delta> = -1 (= 1 in characteristic 2)")
    if check and not (G @ G.T).is_zero():
        raise DomainError("G is not self-orthogonal")
    mul = ring.mul_table
    gammas = np.bitwise_xor.reduce(mul[G.data, delta[None, :]], axis=1)
    out = np.zeros((rows + 1, cols + 2), dtype=np.uint8)
    out[0, 0] = 1
    out[0, 2:] = delta
    out[1:, 0] = gammas
    out[1:, 1] = mul[epsilon][gammas]
    out[1:, 2:] = G.data
    return RingMatrix(ring, out)


def buildup_binary(code: BinaryCode, delta: int) -> BinaryCode:
    """Building-up over F2 for a code held as bitsets."""
    G = RingMatrix(Ring.F2, code.to_matrix())
    d = np.array([(delta >> j) & 1 for j in range(code.n)], dtype=np.uint8)
    return BinaryCode.from_matrix(buildup(G, d).data)


def neighbour(code: BinaryCode, x: int) -> BinaryCode:
    """The neighbour ``<<x>^perp ∩ C, x>`` of a binary self-dual code."""
    if x >> code.n:
        raise DomainError(f"x is longer than the code length {code.n}")
    if x.bit_count() % 2:
        raise DomainError("x must have even weight for the neighbour to be self-dual")
    if code.contains(x):
        raise DomainError("x lies in the code; it has no proper neighbour through x")
    rows = list(code.rows)
    odd = [r for r in rows if bin_inner(r, x)]
    even = [r for r in rows if not bin_inner(r, x)]
    # x is outside C = C^perp, so some row is not orthogonal to it
    pivot = odd[0]
    sub = even + [r ^ pivot for r in odd[1:]]
    return BinaryCode.from_rows(sub + [x], code.n)
