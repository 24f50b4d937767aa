"""Independent reference implementations used only by the tests.

Nothing here imports the package's linear algebra: matrices are plain
lists of 0/1 lists and ring products come from expanding polynomials.
"""

from itertools import product

# Monomial exponents per basis position: (u, v, w) degrees.
_BASES = {
    "F2": [(0, 0, 0)],
    "F2U": [(0, 0, 0), (1, 0, 0)],
    "F2UV": [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)],
    "F4U": [(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)],
}


def _reduce(poly: dict, name: str) -> dict:
    """Reduce a {(du, dv, dw): coeff} polynomial by the ring relations."""
    out: dict = {}
    for (du, dv, dw), c in poly.items():
        if not c % 2:
            continue
        if du > 1 or dv > 1:
            continue  # u^2 = v^2 = 0
        # w^2 = w + 1, so w^k folds back onto {1, w}
        terms = {0: 1} if dw == 0 else {1: 1} if dw == 1 else None
        if terms is None:
            a, b = 0, 1  # w^k = a + b w, start at k = 1
            for _ in range(dw - 1):
                a, b = b, (a + b) % 2
            terms = {d: 1 for d, c2 in ((0, a), (1, b)) if c2}
        for d in terms:
            key = (du, dv, d)
            out[key] = (out.get(key, 0) + 1) % 2
    return {k: 1 for k, c in out.items() if c}


def brute_mul(name: str, x: int, y: int) -> int:
    """Multiply two ring codes by polynomial expansion and reduction."""
    basis = _BASES[name]
    poly: dict = {}
    for i, mi in enumerate(basis):
        if not (x >> i) & 1:
            continue
        for j, mj in enumerate(basis):
            if (y >> j) & 1:
                key = tuple(a + b for a, b in zip(mi, mj))
                poly[key] = poly.get(key, 0) + 1
    red = _reduce(poly, name)
    out = 0
    for i, m in enumerate(basis):
        if red.get(m):
            out |= 1 << i
    assert all(k in basis for k in red), (name, x, y, red)
    return out


def brute_inverse(name: str, x: int) -> int | None:
    q = 1 << len(_BASES[name])
    for y in range(q):
        if brute_mul(name, x, y) == 1:
            return y
    return None


def gf2_rank(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def self_dual(rows: list[list[int]]) -> bool:
    """n = 2 rank and every pair of rows orthogonal."""
    if not rows:
        return False
    n = len(rows[0])
    if 2 * gf2_rank(rows) != n:
        return False
    return all(sum(a & b for a, b in zip(r, s)) % 2 == 0 for r in rows for s in rows)


def span(rows: list[list[int]]) -> set[tuple[int, ...]]:
    n = len(rows[0])
    out = set()
    for coeffs in product((0, 1), repeat=len(rows)):
        w = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                w = [a ^ b for a, b in zip(w, r)]
        out.add(tuple(w))
    return out


def weight_distribution(rows: list[list[int]]) -> dict[int, int]:
    dist: dict[int, int] = {}
    for w in span(rows):
        dist[sum(w)] = dist.get(sum(w), 0) + 1
    return dist


def to_lists(code) -> list[list[int]]:
    return [[(r >> j) & 1 for j in range(code.n)] for r in code.rows]


def random_self_dual(rng, k: int, steps: int = 6):
    """A random binary self-dual [2k, k] code.

    Starts from k disjoint copies of {00, 11} under a random column
    permutation, then takes random neighbour steps.
    """
    from sdcodes.binary import BinaryCode
    from sdcodes.constructions import neighbour

    n = 2 * k
    perm = rng.permutation(n)
    rows = [(1 << int(perm[2 * i])) | (1 << int(perm[2 * i + 1])) for i in range(k)]
    code = BinaryCode.from_rows(rows, n)
    for _ in range(steps):
        x = int(rng.integers(0, 1 << n))
        if bin(x).count("1") % 2 or code.contains(x):
            continue
        code = neighbour(code, x)
    return code
