"""Exact scalar arithmetic used everywhere else in the package.

Python's built-in ``int`` is the arbitrary-precision integer type and
``fractions.Fraction`` is the rational type: always reduced, denominator
positive, zero stored as 0/1.  ``str(Fraction)`` already produces the
canonical text form ("num/den", denominator omitted when 1), so this module
only adds strict parsing, a validity check usable by tests, and the odd
double factorials that show up in all the zeta denominators.

No floating-point value appears anywhere on the computation path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "is_canonical",
    "double_factorial_odd",
    "double_factorial_product",
]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse canonical rational text: an integer or "num/den" in base 10."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical text form, e.g. "-1/30" or "945"."""
    return str(Fraction(q))


def is_canonical(q: Fraction) -> bool:
    """True when q is reduced with a positive denominator (test helper)."""
    return q.denominator > 0 and math.gcd(abs(q.numerator), q.denominator) == 1


@lru_cache(maxsize=None)
def double_factorial_odd(i: int) -> int:
    """(2i+1)!! = 3 * 5 * ... * (2i+1), the empty product 1 for i = 0."""
    if i < 0:
        raise ValueError("i must be >= 0")
    return math.prod(range(3, 2 * i + 2, 2))


@lru_cache(maxsize=None)
def double_factorial_product(k: int) -> int:
    """prod_{i=1}^{k} (2i+1)!!, the denominator tower of the even zeta values."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    return double_factorial_product(k - 1) * double_factorial_odd(k)
