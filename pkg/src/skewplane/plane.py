"""Coordinate model of the affine plane over the active skew field.

Points are coordinate pairs; lines are parametric: a base point plus a
normalized direction, with the scalar parameter acting on the LEFT,

    points of the line = { base + t * direction : t in the field }.

Left action is one of the two legal conventions over a skew field; fixing
it here fixes it for every other module.  Directions are normalized by
left-multiplying with the inverse of the leading nonzero coordinate (so
dx = 1, or dx = 0 and dy = 1), which turns parallelism into a plain
equality test instead of a proportionality search in a non-commutative
ring.  Lines additionally re-anchor their base point to a canonical
representative, so structural equality of PlaneLine values coincides with
geometric equality of the lines.

Intersections go through an exact non-commutative 2x2 solver.  Because
the parameters sit on the left of the direction coordinates, elimination
applies inverses on the right (t = (...) * dx^-1); each unique solution
is re-verified by back-substitution before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import (
    CoincidentPointsError,
    IdenticalLinesError,
    NoSolutionError,
    ParallelLinesError,
    UnderdeterminedError,
)
from .scalars import SkewScalar, ensure_same_backend

Direction = Tuple[SkewScalar, SkewScalar]


@dataclass(frozen=True)
class PlanePoint:
    """A point of the plane; both coordinates from the same backend."""

    x: SkewScalar
    y: SkewScalar

    def __post_init__(self):
        ensure_same_backend(self.x, self.y)

    def displacement_to(self, other: "PlanePoint") -> Direction:
        """The direction vector other - self."""
        return (other.x - self.x, other.y - self.y)

    def translate(self, direction: Direction) -> "PlanePoint":
        return PlanePoint(self.x + direction[0], self.y + direction[1])

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def scale_direction(t: SkewScalar, direction: Direction) -> Direction:
    """Left scalar action on a direction vector: t * (dx, dy)."""
    return (t * direction[0], t * direction[1])


class PlaneLine:
    """A line in parametric form with canonical direction and anchor.

    The normalized direction is either (1, m) or (0, 1).  The anchor is
    the unique point of the line with x = 0 (when the line is not
    vertical) or with y = 0 (vertical lines), so two PlaneLine values
    compare equal exactly when they denote the same set of points.
    """

    __slots__ = ("base", "direction")

    def __init__(self, base: PlanePoint, direction: Direction):
        dx, dy = direction
        ensure_same_backend(base.x, base.y, dx, dy)
        if dx.is_zero() and dy.is_zero():
            raise ValueError("line direction must be nonzero")
        if not dx.is_zero():
            inv = dx.inverse()
            norm_dir = (inv * dx, inv * dy)  # (1, dx^-1 * dy)
            # anchor at x = 0: parameter t = -base.x
            t = -base.x
            anchor = PlanePoint(base.x + t * norm_dir[0], base.y + t * norm_dir[1])
        else:
            inv = dy.inverse()
            norm_dir = (dx - dx, inv * dy)  # (0, 1)
            anchor = PlanePoint(base.x, base.y - base.y)
        object.__setattr__(self, "base", anchor)
        object.__setattr__(self, "direction", norm_dir)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneLine is immutable")

    def point_at(self, t: SkewScalar) -> PlanePoint:
        """The point base + t * direction."""
        return PlanePoint(self.base.x + t * self.direction[0],
                          self.base.y + t * self.direction[1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneLine):
            return NotImplemented
        return self.base == other.base and self.direction == other.direction

    def __hash__(self):
        return hash((self.base, self.direction))

    def __str__(self) -> str:
        return f"{{base={self.base}, dir=({self.direction[0]},{self.direction[1]})}}"

    def __repr__(self) -> str:
        return f"PlaneLine(base={self.base!r}, direction={self.direction!r})"


def line_through(p: PlanePoint, q: PlanePoint) -> PlaneLine:
    """The unique line containing the two distinct points p and q."""
    if p == q:
        raise CoincidentPointsError(f"no unique line through coincident point {p}")
    return PlaneLine(p, p.displacement_to(q))


def parallel_through(p: PlanePoint, line: PlaneLine) -> PlaneLine:
    """The unique line through p with line's direction (line itself if p is on it)."""
    return PlaneLine(p, line.direction)


def is_parallel(l1: PlaneLine, l2: PlaneLine) -> bool:
    """True iff normalized directions agree; every line is parallel to itself."""
    return l1.direction == l2.direction


def on_line(p: PlanePoint, line: PlaneLine) -> bool:
    """True iff base + t * direction = p is solvable for t."""
    dx, dy = line.direction
    if not dx.is_zero():  # dx == 1
        t = p.x - line.base.x
        return line.base.y + t * dy == p.y
    return p.x == line.base.x


def collinear(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> bool:
    """True iff the three points admit a common line (coincidences count)."""
    if p == q or p == r or q == r:
        return True
    return on_line(r, line_through(p, q))


@dataclass(frozen=True)
class Linear2System:
    """The system  t*d - s*e = r  componentwise over one backend.

    Coefficients dx, dy and ex, ey multiply the unknown parameters on
    the RIGHT (the unknowns act on the left, matching the line
    parameterization); rx, ry are the right-hand sides.
    """

    dx: SkewScalar
    dy: SkewScalar
    ex: SkewScalar
    ey: SkewScalar
    rx: SkewScalar
    ry: SkewScalar

    def __post_init__(self):
        ensure_same_backend(self.dx, self.dy, self.ex, self.ey, self.rx, self.ry)

    def residual(self, t: SkewScalar, s: SkewScalar) -> Direction:
        """Back-substitution residual of a candidate solution."""
        return (t * self.dx - s * self.ex - self.rx,
                t * self.dy - s * self.ey - self.ry)


def solve2(system: Linear2System) -> Tuple[SkewScalar, SkewScalar]:
    """Solve t*d - s*e = r exactly over the skew field.

    Returns the unique (t, s) when it exists; raises NoSolutionError for
    an inconsistent system and UnderdeterminedError when a free parameter
    remains (rank < 2).  Elimination keeps every unknown on the left of
    its coefficient, so the inverses divide on the right.  Unique
    solutions are verified by back-substitution before returning.
    """
    dx, dy, ex, ey, rx, ry = (system.dx, system.dy, system.ex,
                              system.ey, system.rx, system.ry)
    if not dx.is_zero():
        t, s = _eliminate(dx, dy, ex, ey, rx, ry)
    elif not dy.is_zero():
        t, s = _eliminate(dy, dx, ey, ex, ry, rx)
    else:
        t, s = _solve_single(system)
    zero = (dx - dx, dx - dx)
    if system.residual(t, s) != zero:  # pragma: no cover - algebra guard
        raise AssertionError("solve2 back-substitution failed")
    return t, s


def _eliminate(dx, dy, ex, ey, rx, ry):
    """Unique-solution elimination assuming dx != 0 (coordinates may be swapped)."""
    dx_inv = dx.inverse()
    m = dx_inv * dy
    # substitute t = (rx + s*ex) * dx^-1 into the second equation:
    #   s * (ex*m - ey) = ry - rx*m
    g = ex * m - ey
    rhs = ry - rx * m
    if g.is_zero():
        if rhs.is_zero():
            raise UnderdeterminedError("system has rank < 2")
        raise NoSolutionError("system is inconsistent")
    s = rhs * g.inverse()
    t = (rx + s * ex) * dx_inv
    return t, s


def _solve_single(system: Linear2System):
    """Degenerate case d = 0: only s is constrained, so a unique (t, s) never exists."""
    ex, ey, rx, ry = system.ex, system.ey, system.rx, system.ry
    if not ex.is_zero():
        s = (-rx) * ex.inverse()
        consistent = (s * ey + ry).is_zero() if not ey.is_zero() else ry.is_zero()
    elif not ey.is_zero():
        s = (-ry) * ey.inverse()
        consistent = rx.is_zero()
    else:
        consistent = rx.is_zero() and ry.is_zero()
    if consistent:
        raise UnderdeterminedError("system has rank < 2")
    raise NoSolutionError("system is inconsistent")


def intersect(l1: PlaneLine, l2: PlaneLine) -> PlanePoint:
    """The unique common point of two distinct non-parallel lines."""
    if l1 == l2:
        raise IdenticalLinesError(f"line {l1} intersected with itself")
    if is_parallel(l1, l2):
        raise ParallelLinesError(f"{l1} and {l2} are parallel and disjoint")
    offset = l1.base.displacement_to(l2.base)
    system = Linear2System(
        dx=l1.direction[0], dy=l1.direction[1],
        ex=l2.direction[0], ey=l2.direction[1],
        rx=offset[0], ry=offset[1],
    )
    t, _ = solve2(system)
    point = l1.point_at(t)
    if not (on_line(point, l1) and on_line(point, l2)):  # pragma: no cover
        raise AssertionError("intersection point failed containment check")
    return point
