"""Exact rational arithmetic: perfect-square detection and quadratic solving.

Every quantity the verification pipeline touches is an arbitrary-precision
integer or a reduced fraction of such integers.  Rationals are represented by
:class:`fractions.Fraction`, which already maintains the canonical form this
package relies on (positive denominator, gcd(|num|, den) = 1, zero as 0/1).
No floating point enters any code path in this module: square detection on
floats is unsound, and exactness is the whole point.

All values are immutable and all functions are pure, so they can be shared
freely across threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


class IndeterminateEquationError(ValueError):
    """Raised when a quadratic degenerates to 0 = 0.

    Every rational satisfies such an equation; no caller can consume an
    infinite root set, so this is an error rather than a sentinel.
    """


def normalize(num: int, den: int) -> Fraction:
    """Return num/den in canonical reduced form with positive denominator.

    Raises ZeroDivisionError when den is zero.
    """
    return Fraction(num, den)


def int_sqrt_exact(n: int) -> int | None:
    """Return r with r*r == n exactly, or None when n is not a perfect square.

    Raises ValueError for negative n.  math.isqrt is purely integral, so the
    floor square root is exact at any magnitude; the multiply-back check then
    decides squareness soundly.
    """
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt_exact(q: Fraction) -> Fraction | None:
    """Return the nonnegative rational square root of q, or None.

    A reduced fraction a/b is a rational square iff a >= 0 and both a and b
    are perfect integer squares (numerator and denominator of a square of a
    reduced fraction are themselves coprime squares).
    """
    if q < 0:
        return None
    num = int_sqrt_exact(q.numerator)
    if num is None:
        return None
    den = int_sqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def solve_rational_quadratic(
    a: Fraction, b: Fraction, c: Fraction
) -> set[Fraction]:
    """Return exactly the set of rational x with a*x**2 + b*x + c == 0.

    Degenerate cases: a == 0, b != 0 gives the single linear root {-c/b};
    a == b == 0 with c != 0 has no solutions; a == b == c == 0 raises
    IndeterminateEquationError.  For a != 0 the root set is nonempty iff the
    discriminant b**2 - 4ac has a rational square root, and every returned
    root satisfies the equation exactly.
    """
    if a == 0:
        if b == 0:
            if c == 0:
                raise IndeterminateEquationError(
                    "all coefficients vanish: every rational is a solution"
                )
            return set()
        return {-c / b}
    disc = b * b - 4 * a * c
    root = rational_sqrt_exact(disc)
    if root is None:
        return set()
    return {(-b + root) / (2 * a), (-b - root) / (2 * a)}


# Text format shared by the CLI and all reports: `p/q` with an optional sign
# on p, or a bare integer meaning p/1.
_RATIONAL_RE = re.compile(r"\A[+-]?[0-9]+(?:/[0-9]+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse `p/q` or a bare integer; reject anything else, including q = 0."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    """Render a rational as `p/q` (denominator kept even when it is 1)."""
    return f"{q.numerator}/{q.denominator}"
