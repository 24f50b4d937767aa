"""Randomised search over bordered-construction parameters.

Reproducibility contract: attempt ``i`` of a run with seed ``s`` draws from
``numpy.random.default_rng(SeedSequence(s, spawn_key=(i,)))``. Attempts are
dealt to workers by index, and merged output is ordered by attempt index,
so the emitted records depend only on ``(config, seed)`` and never on the
number of workers.
"""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator

import numpy as np

from .circulant import orthogonal_mask
from .census import has_distance_at_least, low_weight_census
from .constructions import ConstructionParams, check_conditions, theorem1_generator
from .enumerators import FAMILIES, CodeType, extremal_bound, fit_enumerator, required_cutoff
from .errors import DomainError, ParseError
from .gray import PIPELINES, to_binary_code
from .records import CodeRecord, with_analysis
from .rings import Ring

log = logging.getLogger(__name__)

# c candidates are drawn in blocks of this size; the first orthogonal one wins.
_C_BATCH = 64


@dataclass
class SearchConfig:
    ring: Ring = Ring.F2
    n: int = 3
    lambdas: tuple[int, ...] | None = None
    mus: tuple[int, ...] | None = None
    d_min: int = 2
    cutoff: int | None = None
    seed: int = 0
    workers: int = 1
    max_attempts: int = 1000
    max_c_draws: int = 10000

    def __post_init__(self):
        inv = self.ring.involutions()
        self.lambdas = tuple(self.lambdas) if self.lambdas else tuple(inv)
        self.mus = tuple(self.mus) if self.mus else tuple(inv)
        for x in self.lambdas + self.mus:
            if x not in inv:
                raise DomainError(f"{self.ring.symbol(x)} does not square to 1 in {self.ring.value}")
        if self.n < 1 or self.n % 2 == 0:
            raise DomainError(f"n must be odd and positive, got {self.n}")

    @property
    def length(self) -> int:
        return 2 * (2 * self.n + 1) * PIPELINES[self.ring].expansion

    @property
    def census_cutoff(self) -> int:
        if self.cutoff is not None:
            return self.cutoff
        if any(f.n == self.length for f in FAMILIES.values()):
            return required_cutoff(self.length)
        return self.d_min + 2

    @classmethod
    def loads(cls, text: str) -> "SearchConfig":
        """Read a flat ``key=value`` file; ``#`` starts a comment."""
        raw: dict[str, str] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ParseError(f"line {lineno}: expected key=value, got {line!r}")
            raw[key.strip()] = value.strip()
        ring = Ring.parse(raw.pop("ring", "F2"))
        kw: dict = {"ring": ring}
        try:
            for key in ("n", "d_min", "cutoff", "seed", "workers", "max_attempts", "max_c_draws"):
                if key in raw:
                    kw[key] = int(raw.pop(key))
            for key in ("lambdas", "mus"):
                if key in raw:
                    kw[key] = tuple(ring.parse_symbol(s.strip()) for s in raw.pop(key).split(",") if s.strip())
        except ValueError as e:
            raise ParseError(str(e)) from None
        if raw:
            raise ParseError(f"unknown config keys: {', '.join(sorted(raw))}")
        return cls(**kw)

    @classmethod
    def load(cls, path: str | Path) -> "SearchConfig":
        return cls.loads(Path(path).read_text())


@dataclass
class SearchStats:
    attempts: int = 0
    no_orthogonal_c: int = 0
    failed_conditions: int = 0
    screened_out: int = 0
    duplicates: int = 0
    emitted: int = 0
    failures: dict[str, int] = field(default_factory=dict)


def attempt_rng(seed: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(attempt,)))


def random_params(config: SearchConfig, rng: np.random.Generator) -> ConstructionParams | None:
    """Uniform a, b, xi; c resampled until ``C C^T = I``. None if that never happens."""
    q, n, ring = config.ring.order, config.n, config.ring
    lam = int(rng.choice(config.lambdas))
    mu = int(rng.choice(config.mus))
    a = tuple(int(x) for x in rng.integers(0, q, n))
    b = tuple(int(x) for x in rng.integers(0, q, n))
    xi = tuple(int(x) for x in rng.integers(0, q, 4))
    drawn = 0
    while drawn < config.max_c_draws:
        batch = min(_C_BATCH, config.max_c_draws - drawn)
        cs = rng.integers(0, q, (batch, n))
        ok = np.flatnonzero(orthogonal_mask(ring, mu, cs))
        if ok.size:
            c = tuple(int(x) for x in cs[ok[0]])
            return ConstructionParams(ring, n, lam, mu, a, b, c, xi)
        drawn += batch
    return None


def evaluate(params: ConstructionParams, config: SearchConfig, stats: SearchStats | None = None,
             census_workers: int = 1) -> CodeRecord | None:
    """One pass of the search pipeline for fixed parameters."""
    stats = stats if stats is not None else SearchStats()
    report = check_conditions(params)
    if not report.orthogonal_c:
        stats.no_orthogonal_c += 1
        return None
    if not report:
        stats.failed_conditions += 1
        for name, ok in report.as_dict().items():
            if not ok:
                stats.failures[name] = stats.failures.get(name, 0) + 1
        return None
    code = to_binary_code(theorem1_generator(params, check=False))
    if config.d_min > 1 and not has_distance_at_least(code, config.d_min, census_workers):
        stats.screened_out += 1
        return None
    profile = low_weight_census(code, config.census_cutoff, census_workers)
    fit = None
    if any(f.n == code.n for f in FAMILIES.values()) and profile.cutoff >= min(
        min(f.terms) for f in FAMILIES.values() if f.n == code.n
    ):
        fit = fit_enumerator(code.n, profile)
    rec = CodeRecord(kind="theorem1", params=params)
    return with_analysis(rec, code, profile, fit)


def _bound_ok(config: SearchConfig) -> bool:
    length = config.length
    bounds = [extremal_bound(length, CodeType.TYPE_I)]
    if length % 8 == 0:
        bounds.append(extremal_bound(length, CodeType.TYPE_II))
    if config.d_min > max(bounds):
        warnings.warn(
            f"d_min={config.d_min} exceeds the extremal bound {max(bounds)} for length {length}; nothing can be found",
            stacklevel=3,
        )
        return False
    return True


def _run_attempt(config: SearchConfig, attempt: int) -> tuple[CodeRecord | None, SearchStats]:
    stats = SearchStats(attempts=1)
    params = random_params(config, attempt_rng(config.seed, attempt))
    if params is None:
        stats.no_orthogonal_c += 1
        return None, stats
    rec = evaluate(params, config, stats)
    if rec is not None:
        rec = replace(rec, seed=config.seed, attempt=attempt)
    return rec, stats


def search(config: SearchConfig, stats: SearchStats | None = None) -> Iterator[CodeRecord]:
    """Yield new records in attempt order, suppressing duplicate (n, k, d, profile)."""
    stats = stats if stats is not None else SearchStats()
    if not _bound_ok(config):
        return
    seen: set = set()
    batch = max(1, config.workers) * 8
    pool = ThreadPoolExecutor(config.workers) if config.workers > 1 else None
    try:
        for start in range(0, config.max_attempts, batch):
            idx = range(start, min(start + batch, config.max_attempts))
            if pool is None:
                results = [_run_attempt(config, i) for i in idx]
            else:
                results = list(pool.map(lambda i: _run_attempt(config, i), idx))
            for rec, st in results:
                _merge(stats, st)
                if rec is None:
                    continue
                key = (rec.length, rec.k, rec.d, tuple(sorted(rec.profile.counts.items())))
                if key in seen:
                    stats.duplicates += 1
                    continue
                seen.add(key)
                stats.emitted += 1
                yield rec
    finally:
        if pool is not None:
            pool.shutdown()


def _merge(total: SearchStats, part: SearchStats) -> None:
    total.attempts += part.attempts
    total.no_orthogonal_c += part.no_orthogonal_c
    total.failed_conditions += part.failed_conditions
    total.screened_out += part.screened_out
    for k, v in part.failures.items():
        total.failures[k] = total.failures.get(k, 0) + v
