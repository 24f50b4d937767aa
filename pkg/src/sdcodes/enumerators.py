"""Extremal bounds, Type I/II classification and weight-enumerator fitting.

Each family is a list of its displayed low-order coefficients, written as
linear forms ``const + ca*alpha + cb*beta``. Fitting solves for alpha (and
beta) from the lowest coefficients and then checks every remaining displayed
coefficient that the profile covers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .census import WeightProfile
from .errors import DomainError


class CodeType(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    INDETERMINATE = "?"


def extremal_bound(n: int, code_type: CodeType | str) -> int:
    """Upper bound on the minimum distance of a Type I or Type II self-dual code."""
    if isinstance(code_type, str):
        code_type = CodeType(code_type.upper())
    if n <= 0 or n % 2:
        raise DomainError(f"self-dual codes have even positive length, got {n}")
    q = n // 24
    if code_type is CodeType.TYPE_II:
        if n % 8:
            raise DomainError(f"Type II codes need n divisible by 8, got {n}")
        return 4 * q + 4
    if code_type is not CodeType.TYPE_I:
        raise DomainError("bound needs Type I or Type II")
    if n % 24 == 0:
        return 4 * q + 2
    if n % 24 == 22:
        return 4 * q + 6
    return 4 * q + 4


def classify_type(profile: WeightProfile) -> CodeType:
    """Type II iff every nonzero weight is 0 mod 4; one weight 2 mod 4 certifies Type I."""
    if any(c and w % 4 == 2 for w, c in profile.counts.items()):
        return CodeType.TYPE_I
    if profile.complete:
        return CodeType.TYPE_II
    return CodeType.INDETERMINATE


# Highest minimum distance currently known for the lengths studied here.
BEST_KNOWN_DISTANCE = {56: 10, 62: 12, 78: 14, 92: 16, 94: 16}


@dataclass(frozen=True)
class Family:
    name: str
    n: int
    # weight -> (constant, alpha coefficient, beta coefficient)
    terms: dict[int, tuple[int, int, int]]

    @property
    def has_alpha(self) -> bool:
        return any(ca for _, ca, _ in self.terms.values())

    @property
    def has_beta(self) -> bool:
        return any(cb for _, _, cb in self.terms.values())

    def coefficient(self, w: int, alpha: int = 0, beta: int = 0) -> int:
        c0, ca, cb = self.terms[w]
        return c0 + ca * alpha + cb * beta

    def synthesize(self, alpha: int = 0, beta: int = 0) -> WeightProfile:
        counts = {0: 1}
        counts.update({w: self.coefficient(w, alpha, beta) for w in self.terms})
        return WeightProfile(self.n, max(self.terms), {w: c for w, c in counts.items() if c})

    def fit(self, profile: WeightProfile) -> tuple[int | None, int | None] | None:
        """Solve for (alpha, beta) from the profile, or None if inconsistent."""
        usable = sorted(w for w in self.terms if w <= profile.cutoff)
        alpha = beta = None
        for w in usable:
            c0, ca, cb = self.terms[w]
            rest = profile[w] - c0
            if ca and alpha is None:
                if cb and beta is None:
                    return None
                rest -= cb * (beta or 0)
                if rest % ca:
                    return None
                alpha = rest // ca
                continue
            rest -= ca * (alpha or 0)
            if cb and beta is None:
                if rest % cb:
                    return None
                beta = rest // cb
                continue
            if rest - cb * (beta or 0) != 0:
                return None
        # Odd weights and weights below d must vanish.
        lowest = min(self.terms)
        for w, c in profile.counts.items():
            if c and 0 < w and (w < lowest or w % 2):
                return None
        return alpha, beta


def _fam(name, n, terms):
    return Family(name, n, terms)


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        _fam("W56_1", 56, {10: (308, 4, 0), 12: (4246, -8, 0)}),
        _fam("W56_2", 56, {10: (308, 4, 0), 12: (3990, -8, 0)}),
        _fam("W62_1", 62, {12: (2308, 0, 0), 14: (23767, 0, 0)}),
        _fam("W62_2", 62, {12: (1860, 32, 0), 14: (28055, -160, 0)}),
        _fam("W78_1", 78, {14: (3705, 8, 0), 16: (62244, -24, 512), 18: (774592, -64, -4608)}),
        _fam("W78_2", 78, {14: (3705, 8, 0), 16: (71460, -24, 0), 18: (658880, -64, 0)}),
        _fam("W92_1", 92, {16: (4692, 4, 0), 18: (174800, -8, 256), 20: (2425488, -52, -2048)}),
        _fam("W92_2", 92, {16: (4692, 4, 0), 18: (174800, -8, 256), 20: (2441872, -52, -2048)}),
        _fam("W92_3", 92, {16: (4692, 4, 0), 18: (121296, -8, 0), 20: (3213968, -52, 0)}),
        _fam("W94_1", 94, {16: (0, 2, 0), 18: (134044, -2, 128), 20: (2010660, -30, -896)}),
        _fam("W94_2", 94, {16: (0, 2, 0), 18: (134044, -2, 128), 20: (2018852, -30, -896)}),
        _fam("W94_3", 94, {16: (0, 2, 0), 18: (134044, -2, 128), 20: (2190884, -30, -896)}),
    ]
}


def family_label(name: str) -> str:
    """``W94_1`` -> ``W_{94,1}``."""
    n, i = name[1:].split("_")
    return f"W_{{{n},{i}}}"


def parse_family(text: str) -> str:
    t = text.strip().replace("W_{", "W").replace("}", "").replace(",", "_").replace("W_", "W")
    if t not in FAMILIES:
        raise DomainError(f"unknown weight-enumerator family {text!r}")
    return t


@dataclass(frozen=True)
class EnumeratorFit:
    family: str | None
    alpha: int | None
    beta: int | None
    consistent: bool
    candidates: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ambiguous(self) -> bool:
        """More than one family agrees with the coefficients available."""
        return len(self.candidates) > 1

    def __str__(self) -> str:
        if not self.consistent:
            return "no consistent family"
        parts = [family_label(self.family)]
        if self.alpha is not None:
            parts.append(f"alpha={self.alpha}")
        if self.beta is not None:
            parts.append(f"beta={self.beta}")
        if self.ambiguous:
            parts.append("(also consistent: " + ", ".join(family_label(c) for c in self.candidates[1:]) + ")")
        return " ".join(parts)


def fit_enumerator(n: int, profile: WeightProfile) -> EnumeratorFit:
    """Identify the family and parameters matching a low-weight profile.

    All families for the length that agree with the covered coefficients are
    reported as candidates; the first is the primary answer. When alpha and
    beta differ between candidates the fit is still reported as ambiguous.
    """
    fams = [f for f in FAMILIES.values() if f.n == n]
    if not fams:
        raise DomainError(f"no weight-enumerator families known for length {n}")
    need = min(min(f.terms) for f in fams)
    if profile.cutoff < need:
        raise DomainError(f"profile cutoff {profile.cutoff} is below the first displayed weight {need}")
    hits = []
    for f in fams:
        r = f.fit(profile)
        if r is not None:
            hits.append((f.name, r))
    if not hits:
        return EnumeratorFit(None, None, None, False)
    name, (alpha, beta) = hits[0]
    return EnumeratorFit(name, alpha, beta, True, tuple(h[0] for h in hits))


def required_cutoff(n: int, disambiguate: bool = False) -> int:
    """Census cutoff that determines alpha and beta (or the family, if asked)."""
    fams = [f for f in FAMILIES.values() if f.n == n]
    if not fams:
        raise DomainError(f"no weight-enumerator families known for length {n}")
    if disambiguate:
        return max(max(f.terms) for f in fams)
    return {56: 12, 62: 14, 78: 18, 92: 18, 94: 18}[n]
