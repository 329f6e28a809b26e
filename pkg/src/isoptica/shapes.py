"""Convex bodies represented by their support function.

A body containing the origin is encoded by h(phi), the signed distance from
the origin to the supporting line with outward normal direction phi.  Smooth
variants expose h together with its first two derivatives, which is enough
for boundary points, the curvature radius h + h'', tangent normals from an
exterior point and the angle of sight.  Polygons carry h only.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (BracketingFailed, ConvexityViolated, NotCoprime,
                     PointInsideShape, UnsupportedForPolygon)
from .geometry import (TWO_PI, OrientedLine, Point2, normalize_angle,
                       unit_vector)
from .profiles import AntiPeriodicProfile

# Strictly-outside margin on max(P.n - h) for tangent preconditions.
OUTSIDE_TOL = 1e-9
# Default bracketing grid for tangent normals; refined once to 8x on failure.
TANGENT_GRID = 1024
# Target interval width (radians) for the tangent-normal bisection.
TANGENT_BISECT_TOL = 1e-13
# Convexity validation grid and relative positivity margin.
CONVEXITY_GRID = 4096
CONVEXITY_MARGIN = 1e-9


class SupportShape:
    """Base class; subclasses provide a vectorized support function."""

    smooth = True

    def support(self, phi):
        """h(phi); accepts scalars or numpy arrays."""
        raise NotImplementedError

    def support_jet(self, phi):
        """(h, h', h'') at phi; smooth shapes only."""
        raise NotImplementedError

    def _scale(self) -> float:
        """Characteristic length used for relative tolerances."""
        return float(self.support(0.0))

    def support_line(self, phi: float) -> OrientedLine:
        phi = normalize_angle(phi)
        return OrientedLine(phi, float(self.support(phi)))

    def boundary_point(self, phi: float) -> Point2:
        """Boundary point touched by the support line at phi."""
        h, h1, _ = self.support_jet(phi)
        c, s = math.cos(phi), math.sin(phi)
        return Point2(h * c - h1 * s, h * s + h1 * c)

    def touch_point(self, phi: float) -> Point2:
        """Where the support line at phi touches the body (polygons: a vertex)."""
        return self.boundary_point(phi)

    def outline(self, n: int = 720) -> np.ndarray:
        """(n, 2) boundary samples for rendering."""
        phi = np.linspace(0.0, TWO_PI, n, endpoint=False)
        h, h1, _ = self.support_jet(phi)
        c, s = np.cos(phi), np.sin(phi)
        return np.column_stack([h * c - h1 * s, h * s + h1 * c])

    def diameter(self) -> float:
        return _shape_diameter(self)

    def tangent_normals(self, point) -> tuple[float, float]:
        """Normals (phi1, phi2) of the two tangent lines from an exterior point.

        Ordered so that normalize_angle(phi2 - phi1) lies in (0, pi).  Raises
        PointInsideShape when the point is not strictly outside and
        BracketingFailed when the root grid cannot isolate two normals.
        """
        return _tangent_normals_bracketed(self, point)

    def sight_angle(self, point) -> float:
        """Angle of sight at an exterior point: the tangent-cone aperture."""
        phi1, phi2 = self.tangent_normals(point)
        return math.pi - normalize_angle(phi2 - phi1)


@functools.lru_cache(maxsize=None)
def _shape_diameter(shape: SupportShape) -> float:
    phi = np.linspace(0.0, math.pi, 1024, endpoint=False)
    widths = shape.support(phi) + shape.support(phi + math.pi)
    return float(np.max(widths))


def _validate_smooth(shape: SupportShape, scale: float) -> None:
    """Grid check: origin interior (h > 0) and strict convexity (h + h'' > 0)."""
    phi = np.linspace(0.0, TWO_PI, CONVEXITY_GRID, endpoint=False)
    h, _, h2 = shape.support_jet(phi)
    margin = CONVEXITY_MARGIN * scale
    i = int(np.argmin(h))
    if h[i] <= margin:
        raise ConvexityViolated(
            f"origin not strictly interior: min h = {h[i]:.6g} at phi = {phi[i]:.6g}",
            min_value=float(h[i]), phi=float(phi[i]))
    rad = h + h2
    j = int(np.argmin(rad))
    if rad[j] <= margin:
        raise ConvexityViolated(
            f"not strictly convex: min(h + h'') = {rad[j]:.6g} at phi = {phi[j]:.6g}",
            min_value=float(rad[j]), phi=float(phi[j]))


@dataclass(frozen=True)
class Disk(SupportShape):
    """Disk of radius `radius` centered at the origin: h = radius."""

    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"disk radius must be positive, got {self.radius!r}")

    def support(self, phi):
        phi = np.asarray(phi, dtype=float)
        h = np.full_like(phi, self.radius)
        return h if phi.ndim else float(h)

    def support_jet(self, phi):
        phi = np.asarray(phi, dtype=float)
        h = np.full_like(phi, self.radius)
        z = np.zeros_like(phi)
        if phi.ndim:
            return h, z, z
        return float(h), 0.0, 0.0

    def diameter(self) -> float:
        return 2.0 * self.radius

    def tangent_normals(self, point) -> tuple[float, float]:
        # closed form: P.n(phi) = d*cos(theta - phi) = radius
        px, py = float(point[0]), float(point[1])
        d = math.hypot(px, py)
        if d - self.radius <= OUTSIDE_TOL:
            raise PointInsideShape(
                f"point at distance {d:.6g} is not strictly outside radius {self.radius:.6g}")
        theta = math.atan2(py, px)
        u = math.acos(self.radius / d)
        return normalize_angle(theta - u), normalize_angle(theta + u)

    def sight_angle(self, point) -> float:
        px, py = float(point[0]), float(point[1])
        d = math.hypot(px, py)
        if d - self.radius <= OUTSIDE_TOL:
            raise PointInsideShape(
                f"point at distance {d:.6g} is not strictly outside radius {self.radius:.6g}")
        return 2.0 * math.asin(self.radius / d)


@dataclass(frozen=True)
class Ellipse(SupportShape):
    """Axis-aligned ellipse with semi-axes a >= b > 0, centered at the origin.

    h(phi) = sqrt(a^2 cos^2 phi + b^2 sin^2 phi).
    """

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)
                and self.a >= self.b > 0.0):
            raise ValueError(f"ellipse needs a >= b > 0, got a={self.a!r}, b={self.b!r}")

    def support(self, phi):
        phi = np.asarray(phi, dtype=float)
        c, s = np.cos(phi), np.sin(phi)
        h = np.sqrt(self.a * self.a * c * c + self.b * self.b * s * s)
        return h if phi.ndim else float(h)

    def support_jet(self, phi):
        phi = np.asarray(phi, dtype=float)
        c, s = np.cos(phi), np.sin(phi)
        h = np.sqrt(self.a * self.a * c * c + self.b * self.b * s * s)
        k = self.b * self.b - self.a * self.a
        h1 = k * np.sin(2.0 * phi) / (2.0 * h)
        h2 = k * np.cos(2.0 * phi) / h - h1 * h1 / h
        if phi.ndim:
            return h, h1, h2
        return float(h), float(h1), float(h2)

    def diameter(self) -> float:
        return 2.0 * self.a


@dataclass(frozen=True)
class FourierSupport(SupportShape):
    """Support function given by a finite Fourier series.

    h(phi) = a0 + sum over (m, a_m, b_m) of a_m cos(m phi) + b_m sin(m phi).
    Validated at construction: h > 0 and h + h'' > 0 on the grid.
    """

    a0: float
    harmonics: tuple[tuple[int, float, float], ...] = ()

    def __post_init__(self):
        if not (math.isfinite(self.a0) and self.a0 > 0.0):
            raise ValueError(f"a0 must be positive, got {self.a0!r}")
        clean = []
        for m, am, bm in self.harmonics:
            m = int(m)
            if m < 1:
                raise ValueError(f"harmonic order must be >= 1, got {m}")
            clean.append((m, float(am), float(bm)))
        object.__setattr__(self, "harmonics", tuple(clean))
        _validate_smooth(self, self.a0)

    def support(self, phi):
        phi = np.asarray(phi, dtype=float)
        h = np.full_like(phi, self.a0)
        for m, am, bm in self.harmonics:
            h += am * np.cos(m * phi) + bm * np.sin(m * phi)
        return h if phi.ndim else float(h)

    def support_jet(self, phi):
        phi = np.asarray(phi, dtype=float)
        h = np.full_like(phi, self.a0)
        h1 = np.zeros_like(phi)
        h2 = np.zeros_like(phi)
        for m, am, bm in self.harmonics:
            cm, sm = np.cos(m * phi), np.sin(m * phi)
            h += am * cm + bm * sm
            h1 += m * (bm * cm - am * sm)
            h2 -= m * m * (am * cm + bm * sm)
        if phi.ndim:
            return h, h1, h2
        return float(h), float(h1), float(h2)


@dataclass(frozen=True)
class SinBeta(SupportShape):
    """Exact constant-angle shape: h(phi) = r * sin(alpha/2 + w(phi)).

    With alpha = p*pi/q and w anti-periodic under phi -> phi + (q-p)*pi/q,
    the chord family of this support function is exactly compatible with the
    constant-angle billiard on the circle of radius r; see the construction
    module for the validated constructor.
    """

    r: float
    p: int
    q: int
    profile: AntiPeriodicProfile

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise ValueError(f"circle radius must be positive, got {self.r!r}")
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise ValueError("p and q must be integers")
        if not 0 < self.p < self.q:
            raise ValueError(f"need 0 < p < q, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise NotCoprime(f"p={self.p} and q={self.q} are not coprime")
        if self.profile.q_base != self.q:
            raise ValueError(
                f"profile was built for q={self.profile.q_base}, shape has q={self.q}")
        _validate_smooth(self, self.r * math.sin(self.alpha / 2.0))

    @property
    def alpha(self) -> float:
        return math.pi * self.p / self.q

    def beta_values(self, phi):
        """The chord angle alpha/2 + w(phi) behind the support function."""
        phi = np.asarray(phi, dtype=float)
        b = 0.5 * self.alpha + self.profile(phi)
        return b if phi.ndim else float(b)

    def support(self, phi):
        phi = np.asarray(phi, dtype=float)
        h = self.r * np.sin(0.5 * self.alpha + self.profile(phi))
        return h if phi.ndim else float(h)

    def support_jet(self, phi):
        phi = np.asarray(phi, dtype=float)
        b = 0.5 * self.alpha + self.profile(phi)
        w1 = self.profile.derivative(phi)
        w2 = self.profile.second_derivative(phi)
        sb, cb = np.sin(b), np.cos(b)
        h = self.r * sb
        h1 = self.r * cb * w1
        h2 = self.r * (cb * w2 - sb * w1 * w1)
        if phi.ndim:
            return h, h1, h2
        return float(h), float(h1), float(h2)


@dataclass(frozen=True)
class Polygon(SupportShape):
    """Strictly convex polygon, counterclockwise, origin strictly inside.

    h(phi) = max over vertices of v . n(phi); no derivatives.
    """

    vertices: tuple[Point2, ...]

    smooth = False

    def __post_init__(self):
        verts = tuple(Point2(float(v[0]), float(v[1])) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if (b - a).cross(c - b) <= 0.0:
                raise ValueError(
                    f"vertices must be strictly convex and counterclockwise "
                    f"(violated at index {(i + 1) % n})")
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            if (b - a).cross(Point2(-a.x, -a.y)) <= 0.0:
                raise ValueError("origin must lie strictly inside the polygon")

    def _vertex_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def support(self, phi):
        phi = np.asarray(phi, dtype=float)
        c, s = np.cos(phi), np.sin(phi)
        verts = self._vertex_array()
        h = np.full_like(phi, -np.inf)
        for vx, vy in verts:
            h = np.maximum(h, vx * c + vy * s)
        return h if phi.ndim else float(h)

    def support_jet(self, phi):
        raise UnsupportedForPolygon("polygons have no support derivatives")

    def touch_point(self, phi: float) -> Point2:
        return self.vertices[self.support_vertex(phi)]

    def support_vertex(self, phi: float) -> int:
        """Index of the vertex attaining h(phi)."""
        c, s = math.cos(phi), math.sin(phi)
        dots = [v.x * c + v.y * s for v in self.vertices]
        return max(range(len(dots)), key=dots.__getitem__)

    def outline(self, n: int = 720) -> np.ndarray:
        return self._vertex_array()

    def diameter(self) -> float:
        verts = self.vertices
        return max((a - b).norm() for a in verts for b in verts)

    def contains(self, point, tol: float = 0.0) -> bool:
        p = Point2(float(point[0]), float(point[1]))
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if (b - a).cross(p - a) < -tol:
                return False
        return True

    def tangent_normals(self, point) -> tuple[float, float]:
        # Extreme-vertex angular search: the tangent lines from P pass through
        # the two vertices extremal in bearing as seen from P.
        p = Point2(float(point[0]), float(point[1]))
        if self.contains(p, tol=OUTSIDE_TOL):
            raise PointInsideShape("point is not strictly outside the polygon")
        verts = self.vertices
        cx = sum(v.x for v in verts) / len(verts)
        cy = sum(v.y for v in verts) / len(verts)
        ref = math.atan2(cy - p.y, cx - p.x)
        offsets = []
        for v in verts:
            bearing = math.atan2(v.y - p.y, v.x - p.x)
            d = math.fmod(bearing - ref, TWO_PI)
            if d <= -math.pi:
                d += TWO_PI
            elif d > math.pi:
                d -= TWO_PI
            offsets.append(d)
        lo = min(range(len(verts)), key=offsets.__getitem__)
        hi = max(range(len(verts)), key=offsets.__getitem__)
        normals = [self._tangent_normal_at_vertex(p, i) for i in (lo, hi)]
        phi1, phi2 = normals
        if normalize_angle(phi2 - phi1) < math.pi:
            return phi1, phi2
        return phi2, phi1

    def _tangent_normal_at_vertex(self, p: Point2, index: int) -> float:
        v = self.vertices[index]
        bearing = math.atan2(v.y - p.y, v.x - p.x)
        best_phi, best_defect = None, math.inf
        for phi in (bearing + 0.5 * math.pi, bearing - 0.5 * math.pi):
            n = unit_vector(phi)
            target = v.dot(n)
            defect = max(u.dot(n) for u in self.vertices) - target
            if defect < best_defect:
                best_phi, best_defect = normalize_angle(phi), defect
        return best_phi


def _tangent_normals_bracketed(shape: SupportShape, point,
                               grid: int = TANGENT_GRID) -> tuple[float, float]:
    """Grid bracketing plus bisection on f(phi) = P.n(phi) - h(phi)."""
    px, py = float(point[0]), float(point[1])

    def f(phi: float) -> float:
        return px * math.cos(phi) + py * math.sin(phi) - float(shape.support(phi))

    outside_seen = False
    roots: list[float] = []
    for n in (grid, 8 * grid):
        phis = np.linspace(0.0, TWO_PI, n, endpoint=False)
        vals = px * np.cos(phis) + py * np.sin(phis) - shape.support(phis)
        if float(vals.max()) <= OUTSIDE_TOL:
            continue
        outside_seen = True
        roots = _bracketed_roots(f, phis, vals)
        if len(roots) == 2:
            break
    if not outside_seen:
        raise PointInsideShape(
            f"point ({px:.6g}, {py:.6g}) is not strictly outside the shape")
    if len(roots) != 2:
        raise BracketingFailed(
            f"expected 2 tangent normals, isolated {len(roots)} "
            f"(grid up to {8 * grid} points)")
    phi1, phi2 = roots
    if normalize_angle(phi2 - phi1) < math.pi:
        return phi1, phi2
    return phi2, phi1


def _bracketed_roots(f, phis: np.ndarray, vals: np.ndarray) -> list[float]:
    n = len(phis)
    pos = vals > 0.0
    roots = []
    for i in range(n):
        j = (i + 1) % n
        if vals[i] == 0.0:
            roots.append(float(phis[i]))
            continue
        if pos[i] == pos[j] or vals[j] == 0.0:
            continue
        lo = float(phis[i])
        hi = float(phis[j]) if j else TWO_PI
        lo_positive = bool(pos[i])
        while hi - lo > TANGENT_BISECT_TOL:
            mid = 0.5 * (lo + hi)
            if (f(mid) > 0.0) == lo_positive:
                lo = mid
            else:
                hi = mid
        roots.append(normalize_angle(0.5 * (lo + hi)))
    return roots


def support_eval(shape: SupportShape, phi):
    """(h, h', h'') for smooth shapes; h alone for polygons."""
    if shape.smooth:
        return shape.support_jet(phi)
    return shape.support(phi)


def boundary_point(shape: SupportShape, phi: float) -> Point2:
    return shape.boundary_point(phi)


def tangents_from(shape: SupportShape, point) -> tuple[float, float]:
    """Normals of the two tangent lines from an exterior point."""
    return shape.tangent_normals(point)


def angle_of_sight(shape: SupportShape, point) -> float:
    """Aperture of the cone of rays from `point` meeting the body, in (0, pi)."""
    return shape.sight_angle(point)
