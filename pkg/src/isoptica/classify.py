"""Which rational sight angles admit non-circular constant-angle shapes.

For alpha = p*pi/q in lowest terms, non-circular shapes exist exactly when
q - p is odd; the admissible perturbation modes sin(m*phi) are those with
m*(q - p) = q (mod 2q), i.e. the odd multiples of q.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NotCoprime, OutOfRange


class Classification(enum.Enum):
    DISK_ONLY = "DiskOnly"
    NON_DISK_EXISTS = "NonDiskExists"


@dataclass(frozen=True)
class RationalAngle:
    """Angle p*pi/q with gcd(p, q) = 1 and 0 < p < q."""

    p: int
    q: int

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise OutOfRange(f"{name} must be an integer, got {value!r}")
        if not 0 < self.p < self.q:
            raise OutOfRange(f"need 0 < p < q, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise NotCoprime(f"p={self.p} and q={self.q} are not coprime")

    @property
    def value(self) -> float:
        return math.pi * self.p / self.q

    @property
    def parity_odd(self) -> bool:
        """True when q - p is odd (non-circular shapes exist)."""
        return (self.q - self.p) % 2 == 1


def classify(p: int, q: int) -> Classification:
    """Decide whether alpha = p*pi/q admits non-circular constant-angle shapes."""
    angle = RationalAngle(p, q)
    if angle.parity_odd:
        return Classification.NON_DISK_EXISTS
    return Classification.DISK_ONLY


def antiperiodic_modes(p: int, q: int, m_max: int) -> list[int]:
    """Modes m <= m_max whose sin(m*phi) flips sign under phi -> phi + (q-p)*pi/q.

    Equivalent integer condition: m*(q - p) = q (mod 2q).  Empty exactly when
    q - p is even; otherwise the odd multiples of q.
    """
    angle = RationalAngle(p, q)
    if not isinstance(m_max, int) or isinstance(m_max, bool) or m_max < 0:
        raise OutOfRange(f"m_max must be a nonnegative integer, got {m_max!r}")
    step = angle.q - angle.p
    return [m for m in range(1, m_max + 1) if (m * step - angle.q) % (2 * angle.q) == 0]
