"""Perturbation profiles that parameterize non-circular constant-angle shapes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AntiPeriodicProfile:
    """Trigonometric profile w(phi) = sum k_l * sin(l*q*phi + delta_l).

    Restricting the multipliers l to odd integers makes w anti-periodic,
    w(phi + gamma) = -w(phi), for every gamma = (q - p) * pi / q with q - p
    odd.  Amplitudes are radians; they perturb the chord angle beta around
    alpha / 2.
    """

    q_base: int
    terms: tuple[tuple[int, float, float], ...] = ()  # (odd multiplier, amplitude, phase)

    def __post_init__(self):
        if not isinstance(self.q_base, int) or self.q_base < 1:
            raise ValueError(f"q_base must be a positive integer, got {self.q_base!r}")
        clean = []
        for term in self.terms:
            mult, amp, phase = term
            mult = int(mult)
            if mult < 1 or mult % 2 == 0:
                raise ValueError(f"multiplier must be a positive odd integer, got {mult}")
            clean.append((mult, float(amp), float(phase)))
        object.__setattr__(self, "terms", tuple(clean))

    @classmethod
    def single(cls, q: int, amplitude: float, phase: float = 0.0) -> "AntiPeriodicProfile":
        """The one-mode profile amplitude * sin(q*phi + phase)."""
        return cls(q, ((1, amplitude, phase),))

    @classmethod
    def zero(cls, q: int) -> "AntiPeriodicProfile":
        return cls(q, ())

    @property
    def is_zero(self) -> bool:
        return all(amp == 0.0 for _, amp, _ in self.terms)

    def amplitude_bound(self) -> float:
        """Upper bound sum |k_l| on the sup norm of w."""
        return sum(abs(amp) for _, amp, _ in self.terms)

    def __call__(self, phi):
        phi = np.asarray(phi, dtype=float)
        w = np.zeros_like(phi)
        for mult, amp, phase in self.terms:
            w += amp * np.sin(mult * self.q_base * phi + phase)
        return w if phi.ndim else float(w)

    def derivative(self, phi):
        phi = np.asarray(phi, dtype=float)
        w = np.zeros_like(phi)
        for mult, amp, phase in self.terms:
            n = mult * self.q_base
            w += amp * n * np.cos(n * phi + phase)
        return w if phi.ndim else float(w)

    def second_derivative(self, phi):
        phi = np.asarray(phi, dtype=float)
        w = np.zeros_like(phi)
        for mult, amp, phase in self.terms:
            n = mult * self.q_base
            w -= amp * n * n * np.sin(n * phi + phase)
        return w if phi.ndim else float(w)


@dataclass(frozen=True)
class ThetaArcProfile:
    """Seed function theta(t) = sum c_j * sin(j*pi*t / delta) on one arc [0, delta].

    A pure sine series vanishes together with its second derivative at both
    arc ends, so the arc-by-arc extension stays C^2 at the junctions.  Keep
    c2_norm() small: the envelope of the resulting chord family is only
    convex for perturbations C^2-close to zero.
    """

    delta: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not (math.isfinite(self.delta) and self.delta > 0.0):
            raise ValueError(f"delta must be a positive length, got {self.delta!r}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @classmethod
    def for_arc_count(cls, q: int, coeffs) -> "ThetaArcProfile":
        """Profile on the fundamental arc of length pi/q."""
        return cls(math.pi / q, tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def c2_norm(self) -> float:
        """Bound sum |c_j| * (1 + (j*pi/delta)^2) on |theta| + |theta''|."""
        return sum(abs(c) * (1.0 + (j * math.pi / self.delta) ** 2)
                   for j, c in enumerate(self.coeffs, start=1))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        th = np.zeros_like(t)
        for j, c in enumerate(self.coeffs, start=1):
            th += c * np.sin(j * math.pi * t / self.delta)
        return th if t.ndim else float(th)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        th = np.zeros_like(t)
        for j, c in enumerate(self.coeffs, start=1):
            k = j * math.pi / self.delta
            th += c * k * np.cos(k * t)
        return th if t.ndim else float(th)

    def second_derivative(self, t):
        t = np.asarray(t, dtype=float)
        th = np.zeros_like(t)
        for j, c in enumerate(self.coeffs, start=1):
            k = j * math.pi / self.delta
            th -= c * k * k * np.sin(k * t)
        return th if t.ndim else float(th)
