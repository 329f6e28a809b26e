"""Isoptic curves: the locus of points seeing a convex body at a fixed angle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateFit, OutOfRange
from .geometry import TWO_PI, Point2
from .shapes import SupportShape


@dataclass(frozen=True)
class IsopticCurve:
    """Sampled isoptic: point k is the intersection of the support lines at
    phi[k] and phi[k] + (pi - alpha)."""

    alpha: float
    phi: np.ndarray
    points: np.ndarray  # shape (n, 2)

    def __len__(self) -> int:
        return len(self.phi)

    def point_list(self) -> list[Point2]:
        return [Point2(float(x), float(y)) for x, y in self.points]


class CircleFit(NamedTuple):
    center: Point2
    radius: float
    max_deviation: float


def isoptic_curve(shape: SupportShape, alpha: float, n: int) -> IsopticCurve:
    """Isoptic of `shape` at angle alpha, sampled at n tangent normals.

    Each sample intersects the support lines at phi and phi + (pi - alpha);
    the normal gap pi - alpha lies in (0, pi), so the pair is never parallel.
    For polygons with an exterior vertex angle exceeding pi - alpha, the
    parameter stretches where both normals support the same vertex collapse
    onto that vertex.
    """
    if not 0.0 < alpha < math.pi:
        raise OutOfRange(f"alpha must lie in (0, pi), got {alpha}")
    if n < 3:
        raise OutOfRange(f"need at least 3 samples, got {n}")
    phi = np.linspace(0.0, TWO_PI, n, endpoint=False)
    phi2 = phi + (math.pi - alpha)
    h1 = shape.support(phi)
    h2 = shape.support(phi2)
    det = math.sin(alpha)  # sin(phi2 - phi) for every sample
    x = (h1 * np.sin(phi2) - h2 * np.sin(phi)) / det
    y = (h2 * np.cos(phi) - h1 * np.cos(phi2)) / det
    return IsopticCurve(alpha, phi, np.column_stack([x, y]))


def circle_fit(samples) -> CircleFit:
    """Least-squares circle through sample points, plus the worst radial defect.

    Algebraic (Kasa) fit followed by one Gauss-Newton refinement step on the
    geometric residuals.  Accepts an IsopticCurve or an (n, 2) array-like.
    Raises DegenerateFit when the samples are (nearly) collinear.
    """
    pts = np.asarray(getattr(samples, "points", samples), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise OutOfRange(f"expected (n, 2) samples, got shape {pts.shape}")
    if pts.shape[0] < 8:
        raise OutOfRange(f"need at least 8 samples, got {pts.shape[0]}")
    x, y = pts[:, 0], pts[:, 1]
    span = max(float(np.ptp(x)), float(np.ptp(y)), 1e-300)
    a = np.column_stack([x, y, np.ones_like(x)])
    b = x * x + y * y
    sol, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < 3:
        raise DegenerateFit("samples are collinear")
    cx, cy = 0.5 * sol[0], 0.5 * sol[1]
    r2 = sol[2] + cx * cx + cy * cy
    if not (r2 > 0.0 and math.isfinite(r2)) or math.sqrt(r2) > 1e6 * span:
        raise DegenerateFit("samples are (nearly) collinear")
    radius = math.sqrt(r2)
    # one Gauss-Newton step on r_i = |P_i - c| - radius
    dx, dy = x - cx, y - cy
    dist = np.hypot(dx, dy)
    jac = np.column_stack([-dx / dist, -dy / dist, -np.ones_like(dist)])
    update, *_ = np.linalg.lstsq(jac, -(dist - radius), rcond=None)
    cx += update[0]
    cy += update[1]
    radius += update[2]
    dist = np.hypot(x - cx, y - cy)
    return CircleFit(Point2(float(cx), float(cy)), float(radius),
                     float(np.max(np.abs(dist - radius))))
