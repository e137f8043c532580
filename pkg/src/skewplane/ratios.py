"""Two-point ratio, three-point ratio and four-point cross-ratio.

These operate on line coordinates (scalars of the active backend).  The
factor order of each formula is load-bearing over a non-commutative
field and is never rearranged:

    ratio2(A, B)            = B^-1 * A
    ratio3(A, B, C)         = (B - C)^-1 * (A - C)
    cross_ratio(A, B, C, D) = [(A - D)^-1 * (B - D)] * [(B - C)^-1 * (A - C)]

The cross-ratio precondition is exactly that the two inverted
differences are nonzero (A != D and B != C); the stricter classical
condition is available separately as :func:`no_three_equal`.
"""

from __future__ import annotations

from typing import Tuple

from .errors import (
    CoincidentPointsError,
    SingularCrossRatioError,
    ZeroDenominatorPointError,
)
from .scalars import SkewScalar


def ratio2(a: SkewScalar, b: SkewScalar) -> SkewScalar:
    """The ratio point B^-1 * A; B must differ from the zero point."""
    if b.is_zero():
        raise ZeroDenominatorPointError("ratio2 needs B distinct from the zero point")
    return b.inverse() * a


def ratio3(a: SkewScalar, b: SkewScalar, c: SkewScalar) -> SkewScalar:
    """The unique R with (B - C) * R = A - C, i.e. (B - C)^-1 * (A - C)."""
    if b == c:
        raise CoincidentPointsError("ratio3 needs B distinct from C")
    return (b - c).inverse() * (a - c)


def cross_ratio_factors(a: SkewScalar, b: SkewScalar, c: SkewScalar,
                        d: SkewScalar) -> Tuple[SkewScalar, SkewScalar]:
    """The two bracketed factors of the cross-ratio, in display order."""
    if a == d:
        raise SingularCrossRatioError("A-D", a)
    if b == c:
        raise SingularCrossRatioError("B-C", b)
    return ((a - d).inverse() * (b - d), (b - c).inverse() * (a - c))


def cross_ratio(a: SkewScalar, b: SkewScalar, c: SkewScalar,
                d: SkewScalar) -> SkewScalar:
    """The cross-ratio point [(A-D)^-1 (B-D)] * [(B-C)^-1 (A-C)]."""
    first, second = cross_ratio_factors(a, b, c, d)
    return first * second


def no_three_equal(a: SkewScalar, b: SkewScalar, c: SkewScalar,
                   d: SkewScalar) -> bool:
    """True iff no value occurs three or more times among the four points."""
    points = (a, b, c, d)
    return all(sum(1 for q in points if q == p) < 3 for p in points)
