"""Partial sums, the majorization preorder, the LOCC criterion, Lorenz points.

A vector a is majorized by a vector b (of equal length and equal total) when
every partial sum of the descending rearrangement of a is at most the
corresponding partial sum for b.  For pure bipartite states sharing a Schmidt
basis, the transformation source -> target is possible under local operations
and classical communication exactly when the source spectrum is majorized by
the target spectrum.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .spectra import Spectrum4, _as_fraction

PartialSums = tuple[Fraction, ...]


def _checked_values(values: Iterable) -> list[Fraction]:
    out = [_as_fraction(v) for v in values]
    for v in out:
        if v < 0:
            raise ValueError(f"components must be nonnegative, got {v}")
    return out


def partial_sums(values: Iterable) -> PartialSums:
    """Cumulative sums of the descending rearrangement of ``values``.

    Raises ValueError on a negative component.
    """
    ordered = sorted(_checked_values(values), reverse=True)
    sums = []
    acc = Fraction(0)
    for v in ordered:
        acc += v
        sums.append(acc)
    return tuple(sums)


def is_majorized_by(a: Sequence, b: Sequence) -> bool:
    """True iff a is majorized by b.

    Inputs are re-sorted internally, so any component order is accepted.
    Raises ValueError when lengths differ or totals differ (equal totals are
    part of the definition and are verified, not assumed).
    """
    first = _checked_values(a)
    second = _checked_values(b)
    if len(first) != len(second):
        raise ValueError(f"length mismatch: {len(first)} vs {len(second)}")
    if sum(first) != sum(second):
        raise ValueError(f"total mismatch: {sum(first)} vs {sum(second)}")
    return first_violated_index(first, second) is None


def first_violated_index(a: Sequence, b: Sequence) -> Optional[int]:
    """Smallest k (1-based) whose partial sum of a exceeds that of b, else None."""
    first = sorted(_checked_values(a), reverse=True)
    second = sorted(_checked_values(b), reverse=True)
    sum_a = Fraction(0)
    sum_b = Fraction(0)
    for k, (x, y) in enumerate(zip(first, second), start=1):
        sum_a += x
        sum_b += y
        if sum_a > sum_b:
            return k
    return None


def locc_possible(source: Spectrum4, target: Spectrum4) -> bool:
    """Nielsen's criterion: source -> target works under LOCC iff source
    is majorized by target."""
    return is_majorized_by(source.alpha, target.alpha)


def lorenz_points(values: Iterable) -> list[tuple[Fraction, Fraction]]:
    """Lorenz curve vertices (k/n, k-th partial sum) for k = 0..n.

    ``values`` must be nonnegative and sum to 1; the origin (0, 0) is
    prepended.  Majorization of one vector by another is containment of its
    polyline beneath the other's.
    """
    checked = _checked_values(values)
    total = sum(checked)
    if total != 1:
        raise ValueError(f"components must sum to 1, got {total}")
    n = len(checked)
    points = [(Fraction(0), Fraction(0))]
    points.extend(
        (Fraction(k, n), s) for k, s in enumerate(partial_sums(checked), start=1)
    )
    return points
