"""Dense univariate polynomials over exact rationals.

Coefficients are stored ascending (index i holds the coefficient of x^i)
with trailing zeros trimmed; the zero polynomial is the empty tuple and its
degree is None rather than a numeric sentinel.  Values are immutable, so
they are safe to share between threads and to use as dict keys.

Division is provided only for the exact linear case the recursion needs:
dividing by (2x - 2c) when c is a root, with a nonzero remainder treated as
an internal consistency violation rather than truncated.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["Polynomial", "InexactDivisionError", "X", "ONE", "ZERO"]


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return ZERO
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, x0: Scalar) -> Fraction:
        """Exact value at x0, by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose_affine(self, a: Scalar, b: Scalar) -> "Polynomial":
        """The polynomial q with q(x) = p(a*x + b), computed exactly."""
        inner = Polynomial((b, a))
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial((c,))
        return acc

    def divide_linear_exact(self, c: Scalar) -> "Polynomial":
        """Divide by (2x - 2c), requiring a remainder of exactly zero.

        Synthetic division by (x - c) followed by a scalar halving.  A
        nonzero remainder means the caller fed a polynomial that does not
        vanish at c, which in this package is always a bug upstream.
        """
        if not self.coeffs:
            return ZERO
        c = Fraction(c)
        n = len(self.coeffs) - 1
        quot = [Fraction(0)] * n
        acc = self.coeffs[n]
        for i in range(n - 1, -1, -1):
            quot[i] = acc
            acc = self.coeffs[i] + c * acc
        if acc != 0:
            raise InexactDivisionError(
                f"remainder {acc} dividing by (2x - 2*{c}); expected exact division"
            )
        return Polynomial(q / 2 for q in quot)

    # -- canonical text / JSON forms -----------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif mag == 1:
                body = "x" if i == 1 else f"x^{i}"
            else:
                body = f"{mag}*x" if i == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def coefficient_strings(self) -> list[str]:
        """Ascending coefficients as canonical rational strings (JSON form)."""
        return [str(c) for c in self.coeffs]


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))
