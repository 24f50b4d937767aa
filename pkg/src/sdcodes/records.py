"""Line-oriented code records and the append-only record store.

One record per line, ``key=value`` pairs separated by single spaces, in the
fixed key order of ``FIELDS``. Vectors are written in hex symbols, one per
ring element (``0``/``1`` over F2). ``profile`` lists nonzero census counts
as ``w:A_w`` pairs joined by commas. Lines starting with ``#`` are comments.

``kind=buildup`` and ``kind=neighbour`` records carry the parameters of the
bordered parent code plus the full-length border vector (``delta``, in ring
symbols) or neighbour vector (``x``, binary), so each line reconstructs its
code on its own.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable

import numpy as np

from .binary import BinaryCode, parse_bits
from .census import WeightProfile, low_weight_census
from .constructions import ConstructionParams, buildup, neighbour, theorem1_generator
from .errors import DomainError, ParseError
from .gray import to_binary_code
from .rings import Ring

log = logging.getLogger(__name__)

KINDS = ("theorem1", "buildup", "neighbour")
FIELDS = (
    "label", "kind", "ring", "n", "lambda", "mu", "a", "b", "c", "xi", "delta", "x",
    "length", "k", "d", "family", "alpha", "beta", "cutoff", "profile", "seed", "attempt", "aut",
)


@dataclass(frozen=True)
class CodeRecord:
    kind: str
    params: ConstructionParams
    delta: str | None = None
    x: str | None = None
    label: str | None = None
    length: int | None = None
    k: int | None = None
    d: int | None = None
    family: str | None = None
    alpha: int | None = None
    beta: int | None = None
    profile: WeightProfile | None = None
    seed: int | None = None
    attempt: int | None = None
    aut: str | None = None  # transcribed, never verified here

    def to_line(self) -> str:
        vals = dict(self.params.to_hex())
        vals.update(
            label=self.label, kind=self.kind, delta=self.delta, x=self.x, length=self.length,
            k=self.k, d=self.d, family=self.family, alpha=self.alpha, beta=self.beta,
            seed=self.seed, attempt=self.attempt, aut=self.aut,
        )
        if self.profile is not None:
            vals["cutoff"] = self.profile.cutoff
            vals["profile"] = ",".join(f"{w}:{c}" for w, c in sorted(self.profile.counts.items()))
        return " ".join(f"{key}={vals[key]}" for key in FIELDS if vals.get(key) is not None)

    @classmethod
    def from_line(cls, line: str, lineno: int = 0) -> "CodeRecord":
        where = f"line {lineno}: " if lineno else ""
        vals: dict[str, str] = {}
        for tok in line.split():
            key, sep, value = tok.partition("=")
            if not sep or not value:
                raise ParseError(f"{where}malformed token {tok!r}")
            if key not in FIELDS:
                raise ParseError(f"{where}unknown field {key!r}")
            vals[key] = value
        for key in ("kind", "ring", "a", "b", "c", "xi"):
            if key not in vals:
                raise ParseError(f"{where}missing field {key!r}")
        if vals["kind"] not in KINDS:
            raise ParseError(f"{where}field 'kind': unknown kind {vals['kind']!r}")

        def field(key, conv):
            if key not in vals:
                return None
            try:
                return conv(vals[key])
            except (ValueError, DomainError) as e:
                raise ParseError(f"{where}field {key!r}: {e}") from None

        ring = field("ring", Ring.parse)
        vecs = {key: field(key, lambda s: tuple(ring.parse_vector(s))) for key in ("a", "b", "c", "xi")}
        lam = field("lambda", ring.parse_symbol) if "lambda" in vals else 1
        mu = field("mu", ring.parse_symbol) if "mu" in vals else 1
        try:
            params = ConstructionParams(ring, len(vecs["a"]), lam, mu, vecs["a"], vecs["b"], vecs["c"], vecs["xi"])
        except DomainError as e:
            raise ParseError(f"{where}{e}") from None
        if "n" in vals and field("n", int) != params.n:
            raise ParseError(f"{where}field 'n': does not match the length of a")
        field("delta", ring.parse_vector)
        field("x", parse_bits)
        profile = None
        if "profile" in vals:
            counts = field("profile", lambda s: {int(w): int(c) for w, c in (p.split(":") for p in s.split(","))})
            cutoff = field("cutoff", int)
            if cutoff is None:
                raise ParseError(f"{where}field 'profile' needs 'cutoff'")
            length = field("length", int) or _length(vals["kind"], params)
            profile = WeightProfile(length, cutoff, counts)
        return cls(
            kind=vals["kind"], params=params, delta=vals.get("delta"), x=vals.get("x"),
            label=vals.get("label"), length=field("length", int), k=field("k", int), d=field("d", int),
            family=vals.get("family"), alpha=field("alpha", int), beta=field("beta", int),
            profile=profile, seed=field("seed", int), attempt=field("attempt", int), aut=vals.get("aut"),
        )

    def reconstruct(self) -> BinaryCode:
        """Rebuild the binary code from the stored parameters."""
        p = self.params
        G = theorem1_generator(p)
        if self.kind == "buildup":
            if self.delta is None:
                raise DomainError("buildup record without delta")
            G = buildup(G, p.ring.parse_vector(self.delta))
        code = to_binary_code(G)
        if self.kind == "neighbour":
            if self.x is None:
                raise DomainError("neighbour record without x")
            code = neighbour(code, parse_bits(self.x))
        return code

    def key(self) -> tuple:
        return (self.length, self.family, self.alpha, self.beta)


def _length(kind: str, p: ConstructionParams) -> int:
    base = p.length * (1 if p.ring is Ring.F2 else 2 if p.ring is Ring.F2U else 4)
    return base + (2 if kind == "buildup" else 0)


def parse_records(text: str) -> list[CodeRecord]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(CodeRecord.from_line(line, lineno))
    return out


def verify_record(rec: CodeRecord, workers: int = 1) -> bool:
    """Rebuild the code and compare it with what the record claims."""
    code = rec.reconstruct()
    if not code.is_self_dual():
        return False
    if rec.length is not None and code.n != rec.length:
        return False
    if rec.profile is not None:
        return low_weight_census(code, rec.profile.cutoff, workers).counts == rec.profile.counts
    return True


class RecordStore:
    """Append-only file of ``CodeRecord`` lines; one writer at a time."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def append(self, records: CodeRecord | Iterable[CodeRecord]) -> None:
        if isinstance(records, CodeRecord):
            records = [records]
        with self.path.open("a") as fh:
            for rec in records:
                fh.write(rec.to_line() + "\n")

    def load(self, validate: bool = False) -> list[CodeRecord]:
        if not self.path.exists():
            return []
        recs = parse_records(self.path.read_text())
        if validate:
            for rec in recs:
                if not verify_record(rec):
                    raise DomainError(f"record {rec.label or rec.to_line()[:40]} does not reproduce")
        return recs

    def query(self, **kw) -> list[CodeRecord]:
        return query(self.load(), **kw)


def query(records: Iterable[CodeRecord], length=None, family=None, alpha=None, beta=None, label=None) -> list[CodeRecord]:
    out = []
    for r in records:
        if length is not None and r.length != length:
            continue
        if family is not None and r.family != family:
            continue
        if alpha is not None and r.alpha != alpha:
            continue
        if beta is not None and r.beta != beta:
            continue
        if label is not None and r.label != label:
            continue
        out.append(r)
    return out


def published_records() -> list[CodeRecord]:
    """The published codes, one record each, with their reported parameters."""
    text = resources.files("sdcodes").joinpath("data/published_codes.txt").read_text()
    return parse_records(text)


def fixture(label: str) -> CodeRecord:
    hits = query(published_records(), label=label)
    if not hits:
        raise KeyError(label)
    return hits[0]


def with_analysis(rec: CodeRecord, code: BinaryCode, profile: WeightProfile, fit) -> CodeRecord:
    return replace(
        rec, length=code.n, k=code.k, d=profile.min_distance(), profile=profile,
        family=fit.family if fit and fit.consistent else None,
        alpha=fit.alpha if fit and fit.consistent else None,
        beta=fit.beta if fit and fit.consistent else None,
    )
