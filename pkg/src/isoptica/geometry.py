"""Planar angle arithmetic and line/circle primitives.

Angles are plain floats in radians; canonical values live in [0, 2*pi).
Lines are kept in Hesse normal form: an outward unit normal direction and a
signed offset from the origin, the associated body side being
x . n(normal) <= offset.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import ParallelLines

TWO_PI = 2.0 * math.pi

# |sin(normal gap)| below which two lines count as parallel.  Well below any
# normal gap produced by the rational-angle experiments, well above double
# rounding.
PARALLEL_TOL = 1e-10


def normalize_angle(x: float) -> float:
    """Reduce an angle to the canonical interval [0, 2*pi)."""
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    y = math.fmod(x, TWO_PI)
    if y < 0.0:
        y += TWO_PI
    if y >= TWO_PI:
        # adding 2*pi to a tiny negative remainder can round to 2*pi itself
        y = 0.0
    return y


def signed_angle_diff(a: float, b: float) -> float:
    """Wrapped difference a - b, in (-pi, pi]."""
    d = math.fmod(a - b, TWO_PI)
    if d <= -math.pi:
        d += TWO_PI
    elif d > math.pi:
        d -= TWO_PI
    return d


def angle_distance(a: float, b: float) -> float:
    """Circular distance between two angles, in [0, pi]."""
    return abs(signed_angle_diff(a, b))


class Point2(NamedTuple):
    """Point (or vector) in the Euclidean plane, origin at the circle center."""

    x: float
    y: float

    def __add__(self, other):
        return Point2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point2(self.x - other[0], self.y - other[1])

    def scaled(self, c: float) -> "Point2":
        return Point2(c * self.x, c * self.y)

    def dot(self, other) -> float:
        return self.x * other[0] + self.y * other[1]

    def cross(self, other) -> float:
        return self.x * other[1] - self.y * other[0]

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Polar angle atan2(y, x), in (-pi, pi]."""
        return math.atan2(self.y, self.x)

    def rotated(self, angle: float) -> "Point2":
        c, s = math.cos(angle), math.sin(angle)
        return Point2(c * self.x - s * self.y, s * self.x + c * self.y)


def unit_vector(angle: float) -> Point2:
    return Point2(math.cos(angle), math.sin(angle))


class OrientedLine(NamedTuple):
    """Line {x : x . n(normal) = offset}; the body lies on x . n <= offset."""

    normal: float
    offset: float

    def normal_vector(self) -> Point2:
        return unit_vector(self.normal)

    def signed_distance(self, point) -> float:
        """Distance of `point` from the line, positive on the outward side."""
        return (point[0] * math.cos(self.normal)
                + point[1] * math.sin(self.normal) - self.offset)

    def foot_point(self) -> Point2:
        """Orthogonal projection of the origin onto the line."""
        return unit_vector(self.normal).scaled(self.offset)

    def same_unoriented(self, other: "OrientedLine", tol: float = 1e-9) -> bool:
        """True if both describe the same line, ignoring orientation."""
        if angle_distance(self.normal, other.normal) <= tol:
            return abs(self.offset - other.offset) <= tol
        if angle_distance(self.normal, other.normal + math.pi) <= tol:
            return abs(self.offset + other.offset) <= tol
        return False


def intersect_lines(l1: OrientedLine, l2: OrientedLine) -> Point2:
    """Intersection point of two oriented lines.

    Raises ParallelLines when |sin(normal gap)| < PARALLEL_TOL.
    """
    det = math.sin(l2.normal - l1.normal)
    if abs(det) < PARALLEL_TOL:
        raise ParallelLines(
            f"lines with normals {l1.normal} and {l2.normal} are parallel")
    x = (l1.offset * math.sin(l2.normal) - l2.offset * math.sin(l1.normal)) / det
    y = (l2.offset * math.cos(l1.normal) - l1.offset * math.cos(l2.normal)) / det
    return Point2(x, y)


def line_circle_intersections(line: OrientedLine, r: float) -> list[Point2]:
    """Intersections of a line with the circle of radius r about the origin.

    Returns 0, 1 or 2 points, ordered counterclockwise starting from the
    line's normal direction.
    """
    if not r > 0.0:
        raise ValueError(f"circle radius must be positive, got {r}")
    d2 = r * r - line.offset * line.offset
    if d2 < 0.0:
        return []
    foot = line.foot_point()
    if d2 == 0.0:
        return [foot]
    t = math.sqrt(d2)
    tx, ty = -math.sin(line.normal), math.cos(line.normal)
    return [Point2(foot.x + t * tx, foot.y + t * ty),
            Point2(foot.x - t * tx, foot.y - t * ty)]
