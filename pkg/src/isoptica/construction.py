"""Constructors and validators for constant-angle shapes.

Two routes live here side by side.  The exact family is parameterized in the
tangent-normal variable: a profile w with w(phi + gamma) = -w(phi) for
gamma = (q - p) * pi / q yields the support function
h(phi) = r * sin(alpha/2 + w(phi)), whose chord family satisfies the billiard
compatibility equation beta(psi + pi - 2*beta(psi)) = alpha - beta(psi)
identically.  The arc-based rigid extension (copying a seed function between
the 2q arcs with alternating sign) satisfies the same equation only to second
order in the seed's size; beta_residual measures the defect for either route.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .classify import RationalAngle
from .errors import (BetaOutOfRange, OutOfRange, ParallelLines,
                     ParityObstruction)
from .geometry import TWO_PI, Point2, intersect_lines, normalize_angle
from .profiles import AntiPeriodicProfile, ThetaArcProfile
from .shapes import SinBeta, SupportShape

ANTIPERIODIC_GRID = 4096
ANTIPERIODIC_TOL = 1e-12
RESIDUAL_SAMPLES = 720


def build_shape(p: int, q: int, r: float, w: AntiPeriodicProfile) -> SinBeta:
    """Exact constant-angle shape for alpha = p*pi/q seen from the circle of radius r.

    Validates coprimality, the parity condition (q - p odd unless w is zero),
    anti-periodicity of w, the chord-angle range alpha/2 + w in (0, pi/2),
    and convexity of the resulting support function.
    """
    angle = RationalAngle(p, q)
    if not r > 0.0:
        raise OutOfRange(f"circle radius must be positive, got {r}")
    if w.q_base != q:
        raise OutOfRange(f"profile was built for q={w.q_base}, requested q={q}")
    if not angle.parity_odd:
        if not w.is_zero:
            raise ParityObstruction(
                f"q - p = {q - p} is even: only the disk has constant angle "
                f"{p}*pi/{q} (drop the perturbation)")
    else:
        gamma = (q - p) * math.pi / q
        phi = np.linspace(0.0, TWO_PI, ANTIPERIODIC_GRID, endpoint=False)
        defect = float(np.max(np.abs(w(phi + gamma) + w(phi))))
        if defect > ANTIPERIODIC_TOL * max(1.0, w.amplitude_bound()):
            raise ParityObstruction(
                f"profile is not anti-periodic for gamma = (q-p)*pi/q "
                f"(defect {defect:.3g})")
    alpha = angle.value
    beta = 0.5 * alpha + w(np.linspace(0.0, TWO_PI, ANTIPERIODIC_GRID, endpoint=False))
    if float(beta.min()) <= 0.0 or float(beta.max()) >= 0.5 * math.pi:
        raise BetaOutOfRange(
            f"alpha/2 + w(phi) must stay in (0, pi/2); range is "
            f"[{float(beta.min()):.6g}, {float(beta.max()):.6g}]")
    return SinBeta(r, p, q, w)


def beta_from_tangents(shape: SupportShape, r: float, psi: float) -> float:
    """Chord angle beta(psi) measured from the tangents of the shape.

    From the circle point at angle psi, the outgoing tangent normal phi is
    the one with psi + pi/2 - phi in (0, pi/2); beta is that value.  Raises
    PointInsideShape when the shape is not strictly inside the circle.
    """
    point = Point2(r * math.cos(psi), r * math.sin(psi))
    phi1, phi2 = shape.tangent_normals(point)
    candidates = []
    for phi in (phi1, phi2):
        c = normalize_angle(psi + 0.5 * math.pi - phi)
        if 0.0 < c <= 0.5 * math.pi + 1e-12:
            candidates.append(c)
    if not candidates:
        raise BetaOutOfRange(
            f"no outgoing tangent with beta in (0, pi/2] at psi={psi:.6g}")
    return min(candidates)


def beta_function_of(shape: SupportShape, r: float):
    """beta(psi) of a shape seen from the circle of radius r, as a callable."""
    return lambda psi: beta_from_tangents(shape, r, psi)


def beta_residual(shape_or_beta, alpha: float, r: float = 1.0,
                  samples: int = RESIDUAL_SAMPLES) -> float:
    """Max defect of beta(psi + pi - 2*beta(psi)) = alpha - beta(psi) on a psi grid.

    Accepts a SupportShape (beta sampled via its tangents from the circle of
    radius r) or a bare callable beta(psi).  Zero exactly for a consistent
    constant-angle system; the rigid arc extension scales quadratically in
    the seed size.
    """
    if callable(shape_or_beta) and not isinstance(shape_or_beta, SupportShape):
        beta = shape_or_beta
    else:
        beta = beta_function_of(shape_or_beta, r)
    worst = 0.0
    for psi in np.linspace(0.0, TWO_PI, samples, endpoint=False):
        b = float(beta(float(psi)))
        b_next = float(beta(normalize_angle(psi + math.pi - 2.0 * b)))
        worst = max(worst, abs(b_next - (alpha - b)))
    return worst


@dataclass(frozen=True)
class RigidExtension:
    """beta(psi) produced by rigid_extend_theta; callable on scalars or arrays."""

    alpha: float
    delta: float
    arc_count: int
    theta: ThetaArcProfile

    def __call__(self, psi):
        psi = np.asarray(psi, dtype=float)
        wrapped = np.mod(psi, TWO_PI)
        j = np.clip(np.floor(wrapped / self.delta), 0, self.arc_count - 1)
        sign = 1.0 - 2.0 * np.mod(j, 2.0)
        value = 0.5 * self.alpha + sign * self.theta(wrapped - j * self.delta)
        return value if psi.ndim else float(value)


def rigid_extend_theta(theta: ThetaArcProfile, p: int, q: int) -> RigidExtension:
    """Extend a seed theta on one arc of length pi/q to beta(psi) on the whole circle.

    Arc j of [0, 2*pi) carries alpha/2 + (-1)^j * theta(psi - j*pi/q).  The
    dynamics revisits each arc after q steps with sign (-1)^q, so for q - p
    even (q odd) a nonzero seed contradicts itself: ParityObstruction.
    """
    angle = RationalAngle(p, q)
    delta = math.pi / q
    if not math.isclose(theta.delta, delta, rel_tol=1e-9):
        raise OutOfRange(
            f"seed is defined on an arc of length {theta.delta:.6g}, "
            f"expected pi/q = {delta:.6g}")
    if not angle.parity_odd and not theta.is_zero:
        raise ParityObstruction(
            f"q - p = {q - p} is even: the alternation returns the seed with "
            f"opposite sign after one full turn, so theta must vanish")
    return RigidExtension(alpha=angle.value, delta=delta, arc_count=2 * q,
                          theta=theta)


def envelope_from_lines(lines) -> list[Point2]:
    """Discrete envelope: intersections of consecutive lines, cyclically.

    Expects at least 3 lines sorted by normal angle mod 2*pi.  Consecutive
    (near-)parallel pairs are skipped; a RuntimeWarning reports how many.
    """
    lines = list(lines)
    if len(lines) < 3:
        raise OutOfRange(f"need at least 3 lines, got {len(lines)}")
    points: list[Point2] = []
    skipped = 0
    for i in range(len(lines)):
        try:
            points.append(intersect_lines(lines[i], lines[(i + 1) % len(lines)]))
        except ParallelLines:
            skipped += 1
    if skipped:
        warnings.warn(
            f"envelope skipped {skipped} (near-)parallel consecutive pairs",
            RuntimeWarning, stacklevel=2)
    return points
