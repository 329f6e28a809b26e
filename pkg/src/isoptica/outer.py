"""Outer constant-angle billiard: slide along a tangent ray of a convex body
to the unique farther point with the same angle of sight, then switch to the
other tangent.  Equivalent to an inner billiard on the isoptic that turns by
pi - alpha at every rebound."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketingFailed
from .geometry import Point2, angle_distance, normalize_angle, unit_vector
from .shapes import SupportShape

SCAN_POINTS = 64
FINE_SCAN_POINTS = 512
BRACKET_START_DIAMS = 64.0
BRACKET_LIMIT_DIAMS = 1e6
BISECT_REL = 1e-12
# Slack (radians) when checking that the sight angle decreases along the ray.
MONOTONE_SLACK = 1e-9


@dataclass(frozen=True)
class OuterState:
    """Point on the isoptic, the supporting normal of its tangent ray, and the
    unit direction of travel (pointing from the point toward the tangency)."""

    point: Point2
    tangent_normal: float
    direction: float


def initial_state(shape: SupportShape, point, ccw: bool = True) -> OuterState:
    """Outer-billiard state at an exterior point, oriented counterclockwise
    around the body by default."""
    p = Point2(float(point[0]), float(point[1]))
    best = None
    for phi in shape.tangent_normals(p):
        touch = shape.touch_point(phi)
        cr = p.cross(touch - p)
        if best is None or (cr > best[0]) == ccw:
            best = (cr, phi, touch)
    _, phi, touch = best
    direction = math.atan2(touch.y - p.y, touch.x - p.x)
    return OuterState(p, normalize_angle(phi), normalize_angle(direction))


def _first_crossing(sights, alpha: float):
    for i in range(len(sights) - 1):
        if sights[i] >= alpha > sights[i + 1]:
            return i
    return None


def outer_step(shape: SupportShape, state: OuterState) -> OuterState:
    """One rebound of the outer billiard.

    Walks the tangent ray beyond the tangency point until the angle of sight
    drops back to its value at the current point (bracketing plus bisection;
    a 64-point scan guards the assumed monotone decay and falls back to a
    finer scan for the first crossing if it fails), then switches to the
    other tangent from the landing point.
    """
    p = state.point
    alpha = shape.sight_angle(p)
    touch = shape.touch_point(state.tangent_normal)
    u = unit_vector(state.direction)
    if u.dot(touch - p) <= 0.0:
        raise ValueError("direction must point from the point toward its tangency")
    diam = shape.diameter()

    def sight(t: float) -> float:
        return shape.sight_angle(Point2(touch.x + t * u.x, touch.y + t * u.y))

    t_lo = 1e-3 * diam
    while sight(t_lo) <= alpha:
        t_lo /= 8.0
        if t_lo < 1e-9 * diam:
            raise BracketingFailed("no point with larger sight angle just past tangency")
    t_hi = BRACKET_START_DIAMS * diam
    while sight(t_hi) >= alpha:
        t_hi *= 2.0
        if t_hi > BRACKET_LIMIT_DIAMS * diam:
            raise BracketingFailed(
                f"sight angle stays above {alpha:.6g} out to {t_hi:.3g}")

    ts = np.linspace(t_lo, t_hi, SCAN_POINTS)
    sights = [sight(float(t)) for t in ts]
    monotone = all(sights[i + 1] <= sights[i] + MONOTONE_SLACK
                   for i in range(len(sights) - 1))
    if not monotone:
        ts = np.linspace(t_lo, t_hi, FINE_SCAN_POINTS)
        sights = [sight(float(t)) for t in ts]
    i = _first_crossing(sights, alpha)
    if i is None:
        raise BracketingFailed("sight angle never crosses alpha along the ray")
    lo, hi = float(ts[i]), float(ts[i + 1])
    while hi - lo > BISECT_REL * diam:
        mid = 0.5 * (lo + hi)
        if sight(mid) >= alpha:
            lo = mid
        else:
            hi = mid
    t_star = 0.5 * (lo + hi)
    landing = Point2(touch.x + t_star * u.x, touch.y + t_star * u.y)

    phi1, phi2 = shape.tangent_normals(landing)
    if angle_distance(phi1, state.tangent_normal) >= angle_distance(phi2, state.tangent_normal):
        new_normal = phi1
    else:
        new_normal = phi2
    new_touch = shape.touch_point(new_normal)
    direction = math.atan2(new_touch.y - landing.y, new_touch.x - landing.x)
    return OuterState(landing, normalize_angle(new_normal), normalize_angle(direction))


def detect_period(shape: SupportShape, start: OuterState, max_steps: int,
                  tol: float):
    """Smallest step count returning to the start state, or None.

    Recurrence means the point returns within `tol` and the tangent normal
    within tol / diameter.
    """
    diam = shape.diameter()
    state = start
    for m in range(1, max_steps + 1):
        state = outer_step(shape, state)
        if ((state.point - start.point).norm() <= tol
                and angle_distance(state.tangent_normal, start.tangent_normal)
                <= tol / diam):
            return m
    return None
