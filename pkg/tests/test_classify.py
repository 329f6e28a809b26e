import cmath
import math

import pytest

from helpers import coprime_pairs
from isoptica.classify import (Classification, RationalAngle,
                               antiperiodic_modes, classify)
from isoptica.construction import build_shape
from isoptica.errors import NotCoprime, OutOfRange
from isoptica.profiles import AntiPeriodicProfile


class TestClassify:
    def test_known_verdicts(self):
        assert classify(1, 3) is Classification.DISK_ONLY
        assert classify(2, 3) is Classification.NON_DISK_EXISTS
        assert classify(1, 2) is Classification.NON_DISK_EXISTS

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            classify(4, 6)

    @pytest.mark.parametrize("p,q", [(0, 3), (3, 3), (5, 3), (-1, 2)])
    def test_out_of_range(self, p, q):
        with pytest.raises(OutOfRange):
            classify(p, q)

    def test_rejects_non_integers(self):
        with pytest.raises(OutOfRange):
            classify(1.0, 3)


class TestAntiperiodicModes:
    def test_examples(self):
        # oracle: brute-force scan checking e^{i m gamma} == -1
        def scan(p, q, m_max):
            gamma = (q - p) * math.pi / q
            return [m for m in range(1, m_max + 1)
                    if abs(cmath.exp(1j * m * gamma) + 1.0) < 1e-9]

        assert antiperiodic_modes(2, 3, 20) == scan(2, 3, 20) == [3, 9, 15]
        assert antiperiodic_modes(3, 8, 30) == scan(3, 8, 30) == [8, 24]
        assert antiperiodic_modes(1, 3, 50) == scan(1, 3, 50) == []

    @pytest.mark.parametrize("p,q", coprime_pairs(12))
    def test_matches_complex_scan(self, p, q):
        gamma = (q - p) * math.pi / q
        expected = [m for m in range(1, 4 * q + 1)
                    if abs(cmath.exp(1j * m * gamma) + 1.0) < 1e-9]
        assert antiperiodic_modes(p, q, 4 * q) == expected

    def test_negative_m_max(self):
        with pytest.raises(OutOfRange):
            antiperiodic_modes(2, 3, -1)


def test_classify_and_modes_agree_up_to_q50():
    # two independent renderings of the parity dichotomy
    for p, q in coprime_pairs(50):
        modes = antiperiodic_modes(p, q, 2 * q)
        if classify(p, q) is Classification.NON_DISK_EXISTS:
            assert modes and min(modes) == q
        else:
            assert modes == []


def test_odd_parity_admits_small_shapes_up_to_q20():
    # convexity budget: sin(B) + cos(B) w'' > 0 needs roughly k < tan(alpha/2)/q^2,
    # so "sufficiently small" must shrink with q (1e-3 is already too large
    # for (1, 12))
    for p, q in coprime_pairs(20, parity="odd"):
        k = min(1e-3, 0.2 * math.tan(math.pi * p / (2 * q)) / q**2)
        shape = build_shape(p, q, 1.0, AntiPeriodicProfile.single(q, k))
        assert shape.q == q


def test_rational_angle_value():
    angle = RationalAngle(2, 3)
    assert angle.value == pytest.approx(2 * math.pi / 3)
    assert angle.parity_odd
