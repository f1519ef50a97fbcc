"""Schmidt-coefficient spectra and the slack decomposition between two states.

A four-state spectrum is the probability vector of Schmidt coefficients of a
pure bipartite state, kept in canonical form: sorted descending, exact
Fractions, summing to 1.  A catalyst spectrum is the same for the borrowed
ancilla state; the two-qubit case (p, 1-p) is the one the interval theorem
speaks about, but any length is accepted for brute-force exploration.

``epsilon_decompose`` extracts the (eps1, eps2, eps3) slack variables linking
a source spectrum to a target spectrum:

    target1 = source1 + eps1
    target2 = source2 - eps1 - eps2
    target3 = source3 + eps2 + eps3
    target4 = source4 - eps3

with eps1 >= 0, eps2 > 0, eps3 >= 0.  Such a triple exists exactly when the
star pattern holds: the largest coefficient may only grow, the top-two sum
strictly shrinks (the sole majorization violation), and the smallest
coefficient may only shrink.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .rationals import Rational


def _as_fraction(value: Rational | int | str) -> Fraction:
    # Floats are rejected everywhere: Fraction(0.1) would capture the binary
    # approximation, silently breaking exactness.
    if isinstance(value, float):
        raise TypeError("binary floats are not exact; pass a Fraction, int, or string")
    return Fraction(value)


@dataclass(frozen=True)
class Spectrum4:
    """Canonical four-component Schmidt spectrum (sorted descending, sum 1)."""

    alpha: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.alpha) != 4:
            raise ValueError(f"spectrum needs exactly 4 components, got {len(self.alpha)}")
        if any(not isinstance(a, Fraction) for a in self.alpha):
            raise TypeError("spectrum components must be Fractions")
        if any(a < 0 for a in self.alpha):
            raise ValueError("spectrum components must be nonnegative")
        if any(self.alpha[i] < self.alpha[i + 1] for i in range(3)):
            raise ValueError("spectrum components must be sorted descending")
        total = sum(self.alpha)
        if total != 1:
            raise ValueError(f"spectrum components must sum to 1, got {total}")

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.alpha)

    def __getitem__(self, index: int) -> Fraction:
        return self.alpha[index]


@dataclass(frozen=True)
class CatalystSpectrum:
    """Canonical catalyst spectrum: n >= 1 components, sorted descending, sum 1."""

    kappa: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.kappa) < 1:
            raise ValueError("catalyst needs at least one component")
        if any(not isinstance(k, Fraction) for k in self.kappa):
            raise TypeError("catalyst components must be Fractions")
        if any(k < 0 for k in self.kappa):
            raise ValueError("catalyst components must be nonnegative")
        if any(self.kappa[i] < self.kappa[i + 1] for i in range(len(self.kappa) - 1)):
            raise ValueError("catalyst components must be sorted descending")
        total = sum(self.kappa)
        if total != 1:
            raise ValueError(f"catalyst components must sum to 1, got {total}")

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.kappa)

    def __len__(self) -> int:
        return len(self.kappa)

    def __getitem__(self, index: int) -> Fraction:
        return self.kappa[index]


@dataclass(frozen=True)
class EpsilonTriple:
    """Valid slack decomposition: eps1 >= 0, eps2 > 0, eps3 >= 0."""

    eps1: Fraction
    eps2: Fraction
    eps3: Fraction

    def __post_init__(self) -> None:
        if self.eps1 < 0 or self.eps2 <= 0 or self.eps3 < 0:
            raise ValueError("slack triple must satisfy eps1 >= 0, eps2 > 0, eps3 >= 0")


class StarViolation(Enum):
    """Which sign condition of the slack decomposition failed."""

    EPS1_NEGATIVE = "eps1_negative"
    EPS2_NOT_POSITIVE = "eps2_not_positive"
    EPS3_NEGATIVE = "eps3_negative"

    @property
    def inequality(self) -> str:
        """The violated inequality on the spectra themselves."""
        return {
            StarViolation.EPS1_NEGATIVE: "source1 <= target1",
            StarViolation.EPS2_NOT_POSITIVE: "source1 + source2 > target1 + target2",
            StarViolation.EPS3_NEGATIVE: "source4 >= target4",
        }[self]


def make_spectrum(values: Iterable[Rational | int | str]) -> Spectrum4:
    """Build a canonical spectrum from four probabilities in any order.

    Raises ValueError on a negative component or a sum different from 1.
    """
    alpha = tuple(sorted((_as_fraction(v) for v in values), reverse=True))
    if len(alpha) != 4:
        raise ValueError(f"spectrum needs exactly 4 components, got {len(alpha)}")
    return Spectrum4(alpha)


def make_catalyst(values: Iterable[Rational | int | str]) -> CatalystSpectrum:
    """Build a canonical catalyst spectrum from components in any order."""
    kappa = tuple(sorted((_as_fraction(v) for v in values), reverse=True))
    return CatalystSpectrum(kappa)


def two_qubit_catalyst(p: Rational) -> CatalystSpectrum:
    """The catalyst (p, 1-p) with 1/2 <= p <= 1.

    Raises ValueError when p is outside [1/2, 1].
    """
    p = _as_fraction(p)
    if not Fraction(1, 2) <= p <= 1:
        raise ValueError(f"two-qubit catalyst parameter must be in [1/2, 1], got {p}")
    return CatalystSpectrum((p, 1 - p))


def epsilon_decompose(
    source: Spectrum4, target: Spectrum4
) -> Union[EpsilonTriple, StarViolation]:
    """Slack decomposition of source -> target, or the violated sign condition.

    On success the third target line holds automatically by normalization:
    target3 = source3 + eps2 + eps3.  Multiple violations report the first
    in (eps1, eps2, eps3) order.
    """
    eps1 = target[0] - source[0]
    eps2 = (source[0] + source[1]) - (target[0] + target[1])
    eps3 = source[3] - target[3]
    if eps1 < 0:
        return StarViolation.EPS1_NEGATIVE
    if eps2 <= 0:
        return StarViolation.EPS2_NOT_POSITIVE
    if eps3 < 0:
        return StarViolation.EPS3_NEGATIVE
    return EpsilonTriple(eps1, eps2, eps3)


def satisfies_star(source: Spectrum4, target: Spectrum4) -> bool:
    """True iff the star pattern holds between the two canonical spectra.

    Checked directly on the spectra (not via epsilon_decompose) so the two
    formulations can be tested against each other.
    """
    return (
        source[0] <= target[0]
        and source[0] + source[1] > target[0] + target[1]
        and source[3] >= target[3]
    )
