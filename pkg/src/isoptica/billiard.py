"""Constant-sight-angle billiard on a circle.

A state is a position angle psi on the circle of radius r together with the
angle beta between the outgoing chord and the radius there.  One step moves
to the chord's other endpoint; the rebound keeps the angle between incoming
and outgoing chords equal to the governing sight angle alpha, which forces
beta' = alpha - beta and makes the double step a rigid rotation by -2*alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import RationalAngle
from .errors import BetaOutOfRange, NoSignChange, OutOfRange
from .geometry import TWO_PI, OrientedLine, Point2, normalize_angle

# |beta(psi*) - alpha/2| target for find_regular_start.
REGULAR_START_TOL = 1e-10


@dataclass(frozen=True)
class BilliardState:
    """Position angle psi on the circle and outgoing chord angle beta."""

    psi: float
    beta: float

    def position(self, r: float = 1.0) -> Point2:
        return Point2(r * math.cos(self.psi), r * math.sin(self.psi))


def _check_state(state: BilliardState, alpha: float) -> None:
    if not 0.0 < alpha < math.pi:
        raise BetaOutOfRange(f"alpha must lie in (0, pi), got {alpha}")
    if not 0.0 < state.beta < alpha:
        raise BetaOutOfRange(
            f"beta must lie in (0, alpha), got beta={state.beta}, alpha={alpha}")


def step(state: BilliardState, alpha: float) -> BilliardState:
    """One bounce: psi' = psi + pi - 2*beta, beta' = alpha - beta."""
    _check_state(state, alpha)
    return BilliardState(normalize_angle(state.psi + math.pi - 2.0 * state.beta),
                         alpha - state.beta)


def step_double(state: BilliardState, alpha: float) -> BilliardState:
    """Two bounces at once: a rotation by -2*alpha with beta unchanged."""
    _check_state(state, alpha)
    return BilliardState(normalize_angle(state.psi - 2.0 * alpha), state.beta)


def step_inverse(state: BilliardState, alpha: float) -> BilliardState:
    """Undo one bounce; step_inverse(step(s)) == s."""
    _check_state(state, alpha)
    beta_prev = alpha - state.beta
    return BilliardState(normalize_angle(state.psi - math.pi + 2.0 * beta_prev),
                         beta_prev)


def chord(state: BilliardState, r: float) -> OrientedLine:
    """Outgoing chord as an oriented line: normal psi + pi/2 - beta, offset r*sin(beta)."""
    if not r > 0.0:
        raise OutOfRange(f"circle radius must be positive, got {r}")
    if not 0.0 < state.beta < math.pi:
        raise BetaOutOfRange(f"beta must lie in (0, pi), got {state.beta}")
    return OrientedLine(normalize_angle(state.psi + 0.5 * math.pi - state.beta),
                        r * math.sin(state.beta))


@dataclass
class OrbitRecord:
    """A trajectory: n+1 states and the n chords connecting them."""

    states: list[BilliardState]
    chords: list[OrientedLine]
    alpha: float
    r: float

    @property
    def steps(self) -> int:
        return len(self.chords)

    def positions(self) -> np.ndarray:
        psi = np.array([s.psi for s in self.states])
        return self.r * np.column_stack([np.cos(psi), np.sin(psi)])

    def chord_normals(self) -> np.ndarray:
        return np.array([c.normal for c in self.chords])


def orbit(state: BilliardState, alpha: float, r: float, n: int) -> OrbitRecord:
    """Iterate the billiard n times from `state` on the circle of radius r."""
    if n < 1:
        raise OutOfRange(f"need at least one step, got n={n}")
    if not r > 0.0:
        raise OutOfRange(f"circle radius must be positive, got {r}")
    states = [state]
    for _ in range(n):
        states.append(step(states[-1], alpha))
    chords = [chord(s, r) for s in states[:-1]]
    return OrbitRecord(states, chords, alpha, r)


def closure_steps(p: int, q: int) -> int:
    """Steps after which the beta = alpha/2 trajectory of alpha = p*pi/q closes.

    The chord normal advances by (q-p)*pi/q per step, so the closure count is
    the least m with m*(q-p) = 0 (mod 2q): 2q when q - p is odd, q when even.
    """
    angle = RationalAngle(p, q)
    return 2 * angle.q if angle.parity_odd else angle.q


def slope_gap(orbit_or_chords) -> float:
    """Largest gap between consecutive chord slopes (normal angles mod pi).

    Accepts an OrbitRecord or any sequence of OrientedLine, e.g. the
    even-indexed chords of an orbit.
    """
    chords_ = getattr(orbit_or_chords, "chords", orbit_or_chords)
    if len(chords_) < 2:
        raise OutOfRange("need at least two chords")
    slopes = np.sort(np.mod([c.normal for c in chords_], math.pi))
    gaps = np.diff(slopes)
    wrap = slopes[0] + math.pi - slopes[-1]
    return float(max(gaps.max(), wrap))


def find_regular_start(beta_fn, alpha: float, samples: int = 1024) -> float:
    """Position psi* with beta(psi*) = alpha/2, the start of a regular 2q-gon.

    Sign-change bracketing of beta - alpha/2 on a psi grid plus bisection.
    If there is no sign change but beta is alpha/2 somewhere within 1e-10,
    that grid point is returned (any point works for beta identically
    alpha/2); otherwise NoSignChange is raised.
    """
    if samples < 2:
        raise OutOfRange(f"need at least two samples, got {samples}")
    psis = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    g = np.array([beta_fn(float(psi)) for psi in psis]) - 0.5 * alpha
    pos = g > 0.0
    for i in range(samples):
        if g[i] == 0.0:
            return float(psis[i])
        j = (i + 1) % samples
        if pos[i] == pos[j] or g[j] == 0.0:
            continue
        lo = float(psis[i])
        hi = lo + TWO_PI / samples
        lo_positive = bool(pos[i])
        while hi - lo > 1e-13:
            mid = 0.5 * (lo + hi)
            if (beta_fn(normalize_angle(mid)) - 0.5 * alpha > 0.0) == lo_positive:
                lo = mid
            else:
                hi = mid
        return normalize_angle(0.5 * (lo + hi))
    k = int(np.argmin(np.abs(g)))
    if abs(g[k]) < REGULAR_START_TOL:
        return float(psis[k])
    raise NoSignChange(
        f"beta - alpha/2 keeps the sign on the grid (min |residual| = {abs(g[k]):.3g})")
