"""Two-qubit catalyzability: the feasible catalyst-ratio interval [m, M].

For canonical spectra linked by a valid slack triple (eps1, eps2, eps3), a
two-qubit catalyst (p, 1-p) enables the otherwise impossible transformation
exactly when its ratio r = (1-p)/p satisfies m <= r <= M, where

    m = max((alpha2 - eps1)/(alpha1 + eps1),
            (alpha4 - eps3)/(alpha3 + eps3),
            eps2/eps1)                     (+infinity when eps1 = 0)
    M = min((alpha3 + eps3)/(alpha2 - eps1),
            eps3/eps2)

with alpha the source spectrum.  m > 0 and M < 1 always, so every feasible
ratio corresponds to a p in [1/2, 1].  ``analyze`` packages the whole
decision; ``closed_form_lambda_prime`` gives the eight partial sums of the
target-plus-catalyst spectrum in closed form, valid exactly on the feasible
interval, as an independent cross-check surface.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .majorization import locc_possible
from .rationals import INFINITY, ExtendedRational, is_infinite
from .spectra import (
    EpsilonTriple,
    Spectrum4,
    StarViolation,
    _as_fraction,
    epsilon_decompose,
)

HALF = Fraction(1, 2)


class DegenerateSpectrumError(ValueError):
    """A bound formula has a vanishing denominator with no vacuous reading.

    No slack triple produced by epsilon_decompose on real spectra reaches
    this (eps2 > 0 forces alpha2 - eps1 > 0); it is surfaced explicitly
    rather than assigning the expression a convention.
    """


class Verdict(Enum):
    LOCC_ALREADY_POSSIBLE = "locc_already_possible"
    CATALYZABLE = "catalyzable"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class InfeasibleReason:
    """Why catalysis is impossible: the star pattern failed, or m > M."""

    kind: str  # "star_violated" | "empty_interval"
    star_violation: Optional[StarViolation] = None

    def __post_init__(self) -> None:
        if self.kind not in ("star_violated", "empty_interval"):
            raise ValueError(f"unknown reason kind {self.kind!r}")
        if (self.kind == "star_violated") != (self.star_violation is not None):
            raise ValueError("star_violated carries a violation; empty_interval does not")

    @classmethod
    def star_violated(cls, violation: StarViolation) -> "InfeasibleReason":
        return cls("star_violated", violation)

    @classmethod
    def empty_interval(cls) -> "InfeasibleReason":
        return cls("empty_interval")


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the full decision procedure for source -> target.

    The ratio bounds m, M are present whenever a valid slack decomposition
    exists (verdicts CATALYZABLE and INFEASIBLE/empty_interval).  Both the
    r-interval [m, M] and the equivalent p-interval [1/(1+M), 1/(1+m)] are
    carried, because r = (1-p)/p inversions are a perennial hazard.
    """

    verdict: Verdict
    m: Optional[ExtendedRational] = None
    M: Optional[Fraction] = None
    r_interval: Optional[tuple[Fraction, Fraction]] = None
    p_interval: Optional[tuple[Fraction, Fraction]] = None
    reason: Optional[InfeasibleReason] = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.LOCC_ALREADY_POSSIBLE:
            assert self.m is None and self.M is None
            assert self.r_interval is None and self.p_interval is None
            assert self.reason is None
        elif self.verdict is Verdict.CATALYZABLE:
            assert self.m is not None and self.M is not None
            assert not is_infinite(self.m) and self.m <= self.M
            assert 0 < self.m and self.M <= 1
            assert self.r_interval == (self.m, self.M)
            assert self.p_interval == (1 / (1 + self.M), 1 / (1 + self.m))
            assert HALF <= self.p_interval[0] <= self.p_interval[1] < 1
            assert self.reason is None
        else:
            assert self.reason is not None
            if self.reason.kind == "star_violated":
                assert self.m is None and self.M is None
            else:
                assert self.m is not None and self.M is not None
                assert self.m > self.M
            assert self.r_interval is None and self.p_interval is None


def compute_m(alpha: Spectrum4, eps: EpsilonTriple) -> ExtendedRational:
    """Lower bound m of the feasible catalyst-ratio interval.

    +infinity when eps1 = 0 (no catalyst ratio is large enough).

    When alpha3 + eps3 = 0 the middle ratio is 0/0 (alpha3 = alpha4 =
    eps3 = 0, so its numerator alpha4 - eps3 vanishes too); the partial-sum
    constraint it encodes is vacuous there and the term is omitted from the
    max.  Such pairs are still reachable valid decompositions, but eps3 = 0
    forces the upper bound to 0, so they are never catalyzable either way.
    """
    if eps.eps1 == 0:
        return INFINITY
    candidates = [
        (alpha[1] - eps.eps1) / (alpha[0] + eps.eps1),
        eps.eps2 / eps.eps1,
    ]
    if alpha[2] + eps.eps3 != 0:
        candidates.append((alpha[3] - eps.eps3) / (alpha[2] + eps.eps3))
    return max(candidates)


def compute_M(alpha: Spectrum4, eps: EpsilonTriple) -> Fraction:
    """Upper bound M of the feasible catalyst-ratio interval.

    Equals 0 when eps3 = 0.  Raises DegenerateSpectrumError when
    alpha2 - eps1 <= 0, which no valid slack triple can produce.
    """
    if alpha[1] - eps.eps1 <= 0:
        raise DegenerateSpectrumError(
            "alpha2 - eps1 <= 0: implied target has a vanishing second coefficient"
        )
    return min(
        (alpha[2] + eps.eps3) / (alpha[1] - eps.eps1),
        eps.eps3 / eps.eps2,
    )


@lru_cache(maxsize=None)
def analyze(source: Spectrum4, target: Spectrum4) -> FeasibilityReport:
    """Full decision: LOCC-possible, catalyzable with interval, or infeasible.

    The LOCC check runs first; the catalyzable verdict is reserved for pairs
    that are impossible on their own.
    """
    if locc_possible(source, target):
        return FeasibilityReport(verdict=Verdict.LOCC_ALREADY_POSSIBLE)
    decomposition = epsilon_decompose(source, target)
    if isinstance(decomposition, StarViolation):
        return FeasibilityReport(
            verdict=Verdict.INFEASIBLE,
            reason=InfeasibleReason.star_violated(decomposition),
        )
    m = compute_m(source, decomposition)
    M = compute_M(source, decomposition)
    if m <= M:
        return FeasibilityReport(
            verdict=Verdict.CATALYZABLE,
            m=m,
            M=M,
            r_interval=(m, M),
            p_interval=(1 / (1 + M), 1 / (1 + m)),
        )
    return FeasibilityReport(
        verdict=Verdict.INFEASIBLE,
        m=m,
        M=M,
        reason=InfeasibleReason.empty_interval(),
    )


def is_valid_catalyst(source: Spectrum4, target: Spectrum4, p) -> bool:
    """Whether the two-qubit catalyst (p, 1-p) enables source -> target.

    True iff m <= (1-p)/p <= M; always False when the pair is infeasible.
    Raises ValueError when p is outside [1/2, 1] or when the transformation
    is already possible under LOCC (no catalyst is needed, the interval
    machinery does not apply).
    """
    p = _as_fraction(p)
    if not HALF <= p <= 1:
        raise ValueError(f"catalyst parameter p must be in [1/2, 1], got {p}")
    report = analyze(source, target)
    if report.verdict is Verdict.LOCC_ALREADY_POSSIBLE:
        raise ValueError(
            "transformation is already possible under LOCC; catalysis does not apply"
        )
    if report.verdict is Verdict.INFEASIBLE:
        return False
    r = (1 - p) / p
    return report.m <= r <= report.M


def closed_form_lambda_prime(
    target: Spectrum4, eps: EpsilonTriple, p
) -> tuple[Fraction, ...]:
    """The eight partial sums of the target-with-catalyst spectrum, in closed
    form.

    Valid only for feasible catalysts (m <= (1-p)/p <= M): only then is the
    descending order of the eight products fixed, which is what makes the
    closed forms the true sorted partial sums.  The source spectrum is
    recovered from (target, eps); a ValueError propagates when the pair is
    not a genuine decomposition or the ratio is outside [m, M].
    """
    p = _as_fraction(p)
    if not 0 < p <= 1:
        raise ValueError(f"catalyst parameter p must be in (0, 1], got {p}")
    a1 = target[0] - eps.eps1
    a2 = target[1] + eps.eps1 + eps.eps2
    a3 = target[2] - eps.eps2 - eps.eps3
    a4 = target[3] + eps.eps3
    source = Spectrum4((a1, a2, a3, a4))
    m = compute_m(source, eps)
    M = compute_M(source, eps)
    r = (1 - p) / p
    if not m <= r <= M:
        raise ValueError(
            f"ratio (1-p)/p = {r} outside feasible interval [{m}, {M}]; "
            "closed forms do not describe the sorted spectrum there"
        )
    q = 1 - p
    e1, e2, e3 = eps.eps1, eps.eps2, eps.eps3
    return (
        a1 * p + e1 * p,
        a1 + e1,
        a1 + a2 * p + e1 * q - e2 * p,
        a1 + a2 * p + a3 * p + e1 * q + e3 * p,
        a1 + a2 + a3 * p - e2 * q + e3 * p,
        a1 + a2 + a3 + e3,
        a1 + a2 + a3 + a4 * p + e3 * q,
        a1 + a2 + a3 + a4,
    )
