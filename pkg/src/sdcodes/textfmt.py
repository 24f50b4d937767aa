"""Plain-text generator matrix files.

Layout::

    # free-form comments, anywhere
    code n=78 k=39 field=F2
    010010...
    ...
    # trailing metadata comments

Each matrix row is ``n`` symbols of the field's hex alphabet (``0``/``1`` for
F2), leftmost symbol in column 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .binary import BinaryCode, bits_to_int
from .circulant import RingMatrix
from .errors import ParseError
from .rings import HEX_DIGITS, Ring

_HEADER = re.compile(r"^code\s+n=(\d+)\s+k=(\d+)\s+field=(\w+)\s*$")


@dataclass
class MatrixText:
    ring: Ring
    data: np.ndarray
    comments: list[str] = field(default_factory=list)
    trailer: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.data.shape[1]

    @property
    def k(self) -> int:
        return self.data.shape[0]

    @classmethod
    def from_matrix(cls, m: RingMatrix, comments=(), trailer=()) -> "MatrixText":
        return cls(m.ring, m.data, list(comments), list(trailer))

    @classmethod
    def from_code(cls, code: BinaryCode, comments=(), trailer=()) -> "MatrixText":
        return cls(Ring.F2, code.to_matrix(), list(comments), list(trailer))

    def matrix(self) -> RingMatrix:
        return RingMatrix(self.ring, self.data)

    def binary_code(self) -> BinaryCode:
        """The binary code of the file; ring matrices go through their Gray pipeline."""
        if self.ring is Ring.F2:
            return BinaryCode.from_rows([bits_to_int(r) for r in self.data], self.n)
        from .gray import to_binary_code

        return to_binary_code(self.matrix())

    def dumps(self) -> str:
        lines = [f"# {c}" for c in self.comments]
        lines.append(f"code n={self.n} k={self.k} field={self.ring.value}")
        lines.extend("".join(HEX_DIGITS[x] for x in row) for row in self.data)
        lines.extend(f"# {c}" for c in self.trailer)
        return "\n".join(lines) + "\n"

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())


def loads(text: str) -> MatrixText:
    header = None
    rows: list[list[int]] = []
    comments: list[str] = []
    trailer: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            (trailer if header and len(rows) == header[1] else comments).append(line[1:].strip())
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"line {lineno}: expected header 'code n=<N> k=<K> field=<F>', got {line!r}")
            ring = Ring.parse(m.group(3))
            header = (int(m.group(1)), int(m.group(2)), ring)
            continue
        n, k, ring = header
        if len(rows) == k:
            raise ParseError(f"line {lineno}: more than k={k} rows")
        if len(line) != n:
            raise ParseError(f"line {lineno}: row has {len(line)} symbols, expected n={n}")
        try:
            rows.append([ring.parse_symbol(ch) for ch in line])
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    if header is None:
        raise ParseError("no 'code' header line found")
    n, k, ring = header
    if len(rows) != k:
        raise ParseError(f"expected k={k} rows, found {len(rows)}")
    data = np.array(rows, dtype=np.uint8).reshape(k, n)
    return MatrixText(ring, data, comments, trailer)


def load(path: str | Path) -> MatrixText:
    return loads(Path(path).read_text())
