"""Exact rational scalars: parsing, rendering, mediants, and +infinity.

Every quantity in the core math is a ``fractions.Fraction`` (arbitrary
precision, canonical reduced form, exact comparisons).  Binary floats are
banned from all computations; they appear nowhere except as the ordering
sentinel ``INFINITY`` below, which never enters arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction

# Upper bound of the catalyst-ratio interval can be unbounded; comparisons
# between Fraction and math.inf are exact (CPython special-cases infinities),
# and INFINITY is only ever compared, never added or multiplied.
INFINITY: float = math.inf

ExtendedRational = Union[Fraction, float]


def is_infinite(value: ExtendedRational) -> bool:
    """True for the +infinity sentinel, False for any Fraction."""
    return not isinstance(value, Fraction) and value == INFINITY


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or a finite decimal literal into an exact Fraction.

    Decimal literals convert through powers of ten ("0.45" -> 9/20); the
    value never passes through a binary float.

    Raises ValueError on malformed text or a zero denominator.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational {text!r}") from None
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None


def render_rational(value: ExtendedRational) -> str:
    """Render as "num/den" (or "inf"); parse_rational round-trips the result."""
    if is_infinite(value):
        return "inf"
    return f"{value.numerator}/{value.denominator}"


def render_decimal(value: ExtendedRational, max_digits: int = 12) -> tuple[str, bool]:
    """Decimal rendering for display only.

    Returns (text, exact).  ``exact`` is False when the expansion does not
    terminate within ``max_digits`` fractional digits; the text is then a
    truncation and must be treated as approximate.
    """
    if is_infinite(value):
        return "inf", True
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    whole, rem = divmod(num, den)
    if rem == 0:
        return f"{sign}{whole}", True
    digits = []
    for _ in range(max_digits):
        rem *= 10
        digit, rem = divmod(rem, den)
        digits.append(str(digit))
        if rem == 0:
            return f"{sign}{whole}.{''.join(digits)}", True
    return f"{sign}{whole}.{''.join(digits)}", False


def mediant(n1: Rational | int, d1: Rational | int,
            n2: Rational | int, d2: Rational | int) -> Fraction:
    """Mediant (n1+n2)/(d1+d2) of two explicitly represented fractions.

    The result depends on the representation, not the value: (2,4) and
    (1,2) denote the same number but give different mediants against a
    third fraction, so callers must pass the pairs they mean.  Whenever
    n1/d1 >= n2/d2 with positive denominators, the mediant lies between
    them (weakly).

    Raises ValueError if either denominator is not positive.
    """
    if d1 <= 0 or d2 <= 0:
        raise ValueError("mediant requires positive denominators")
    return Fraction(n1 + n2, d1 + d2)
