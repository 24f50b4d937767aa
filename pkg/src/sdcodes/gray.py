"""Orthogonality-preserving Gray maps down to binary.

Every map acts on whole vectors and writes two halves side by side:

* ``phi_f2u``:  F2U^n  -> F2^2n,   a + b u      -> (b, a + b)
* ``phi_f4u``:  F4U^n  -> F4^2n,   a + b u      -> (b, a + b)
* ``phi_f2uv``: F2UV^n -> F2U^2n,  a + b v      -> (b, a + b)
* ``psi_f4``:   F4^n   -> F2^2n,   a w + b(1+w) -> (a, b)
* ``psi_f4u``:  F4U^n  -> F2U^2n,  a w + b(1+w) -> (a, b)

Vectors are numpy arrays of element codes; leading axes are carried along,
so a whole generator matrix can be mapped at once. F4 elements use codes
0..3 over the basis (1, w).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .binary import BinaryCode, bits_to_int
from .circulant import RingMatrix
from .errors import DomainError
from .rings import Ring


def _vec(v, order: int, name: str) -> np.ndarray:
    v = np.asarray(v)
    if v.size and (v.min() < 0 or v.max() >= order):
        raise DomainError(f"{name} got symbols outside its {order}-letter alphabet")
    return v.astype(np.uint8)


def _cat(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return np.concatenate([left, right], axis=-1).astype(np.uint8)


def phi_f2u(v) -> np.ndarray:
    v = _vec(v, 4, "phi_f2u")
    a, b = v & 1, v >> 1
    return _cat(b, a ^ b)


def phi_f4u(v) -> np.ndarray:
    v = _vec(v, 16, "phi_f4u")
    a, b = v & 3, v >> 2
    return _cat(b, a ^ b)


def phi_f2uv(v) -> np.ndarray:
    v = _vec(v, 16, "phi_f2uv")
    a, b = v & 3, v >> 2
    return _cat(b, a ^ b)


def psi_f4(v) -> np.ndarray:
    # c0 + c1 w = b + (a + b) w, so b = c0 and a = c0 + c1
    v = _vec(v, 4, "psi_f4")
    c0, c1 = v & 1, (v >> 1) & 1
    return _cat(c0 ^ c1, c0)


def psi_f4u(v) -> np.ndarray:
    # Split x = p + q w with p, q in F2U; then b = p, a = p + q.
    v = _vec(v, 16, "psi_f4u")
    p = (v & 1) | (((v >> 2) & 1) << 1)
    q = ((v >> 1) & 1) | (((v >> 3) & 1) << 1)
    return _cat(p ^ q, p)


MAPS = {
    "phi_f2u": (phi_f2u, Ring.F2U, Ring.F2),
    "phi_f4u": (phi_f4u, Ring.F4U, "F4"),
    "phi_f2uv": (phi_f2uv, Ring.F2UV, Ring.F2U),
    "psi_f4": (psi_f4, "F4", Ring.F2),
    "psi_f4u": (psi_f4u, Ring.F4U, Ring.F2U),
}


@dataclass(frozen=True)
class GrayPipeline:
    source: Ring
    stages: tuple[str, ...]

    def __post_init__(self):
        alphabet = self.source
        for name in self.stages:
            _, src, dst = MAPS[name]
            if src != alphabet:
                raise DomainError(f"stage {name} expects {src}, got {alphabet}")
            alphabet = dst
        if alphabet != Ring.F2:
            raise DomainError(f"pipeline ends in {alphabet}, not F2")

    @property
    def expansion(self) -> int:
        return 2 ** len(self.stages)

    def __call__(self, v) -> np.ndarray:
        out = np.asarray(v)
        for name in self.stages:
            out = MAPS[name][0](out)
        return out


PIPELINES = {
    Ring.F2: GrayPipeline(Ring.F2, ()),
    Ring.F2U: GrayPipeline(Ring.F2U, ("phi_f2u",)),
    Ring.F2UV: GrayPipeline(Ring.F2UV, ("phi_f2uv", "phi_f2u")),
    Ring.F4U: GrayPipeline(Ring.F4U, ("psi_f4u", "phi_f2u")),
}

# The other route for F4U, through F4; gives an equivalent binary code.
F4U_VIA_F4 = GrayPipeline(Ring.F4U, ("phi_f4u", "psi_f4"))

# Scalars whose multiples of a row span its R-module image additively.
SPANNING_SCALARS = {
    Ring.F2: (1,),
    Ring.F2U: (1, 2),
    Ring.F2UV: (1, 2, 4, 8),
    Ring.F4U: (1, 2, 4, 8),
}


def to_binary_code(G: RingMatrix, pipeline: GrayPipeline | None = None) -> BinaryCode:
    """Binary image of the R-linear code generated by the rows of ``G``."""
    ring = G.ring
    pipeline = pipeline or PIPELINES[ring]
    if pipeline.source is not ring:
        raise DomainError(f"pipeline for {pipeline.source.value} applied to {ring.value}")
    mul = ring.mul_table
    images = [pipeline(mul[s][G.data]) for s in SPANNING_SCALARS[ring]]
    rows = [bits_to_int(r) for img in images for r in img]
    return BinaryCode.from_rows(rows, G.shape[1] * pipeline.expansion)


def lee_weight(ring: Ring, v) -> int:
    return int(PIPELINES[ring](v).sum())
