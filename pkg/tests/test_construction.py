import math

import numpy as np
import pytest

from helpers import coprime_pairs, distance_to_body, distance_to_polyline
from isoptica.billiard import BilliardState, chord
from isoptica.construction import (RigidExtension, beta_from_tangents,
                                   beta_function_of, beta_residual, build_shape,
                                   envelope_from_lines, rigid_extend_theta)
from isoptica.errors import (BetaOutOfRange, ConvexityViolated, NotCoprime,
                             OutOfRange, ParityObstruction)
from isoptica.geometry import OrientedLine, normalize_angle
from isoptica.isoptics import circle_fit
from isoptica.profiles import AntiPeriodicProfile, ThetaArcProfile
from isoptica.shapes import Disk

TWO_PI = 2.0 * math.pi


class TestAntiPeriodicProfile:
    def test_rejects_even_multiplier(self):
        with pytest.raises(ValueError):
            AntiPeriodicProfile(3, ((2, 0.1, 0.0),))

    def test_anti_periodicity_on_grid(self):
        # gamma = (q-p)*pi/q with q-p odd flips the sign of every odd-q-multiple mode
        for p, q in ((2, 3), (3, 8), (4, 7)):
            w = AntiPeriodicProfile(q, ((1, 0.07, 0.3), (3, 0.01, -1.0)))
            gamma = (q - p) * math.pi / q
            phi = np.linspace(0.0, TWO_PI, 512, endpoint=False)
            assert np.abs(w(phi + gamma) + w(phi)).max() < 1e-12

    @pytest.mark.parametrize("p,q", [(2, 3), (3, 8)])
    def test_mode_structure(self, p, q):
        # sin(m phi) is anti-periodic under phi -> phi + gamma iff m is an odd
        # multiple of q; brute-force grid scan over all m <= 10 q
        gamma = (q - p) * math.pi / q
        phi = np.linspace(0.0, TWO_PI, 256, endpoint=False)
        for m in range(1, 10 * q + 1):
            flips = np.abs(np.sin(m * (phi + gamma)) + np.sin(m * phi)).max() < 1e-9
            expected = (m % q == 0) and ((m // q) % 2 == 1)
            assert flips == expected, f"mode {m}"

    def test_derivatives_against_fd(self):
        w = AntiPeriodicProfile(3, ((1, 0.2, 0.5), (3, 0.03, 0.0)))
        for phi in (0.0, 0.7, 2.9):
            eps = 1e-6
            fd1 = (w(phi + eps) - w(phi - eps)) / (2 * eps)
            assert w.derivative(phi) == pytest.approx(fd1, abs=1e-7)
            eps = 1e-4  # second difference: roundoff blows up at smaller steps
            fd2 = (w(phi + eps) + w(phi - eps) - 2 * w(phi)) / eps**2
            assert w.second_derivative(phi) == pytest.approx(fd2, abs=1e-4)


class TestBuildShape:
    @pytest.mark.parametrize("p,q,k", [(3, 8, 0.01), (2, 3, 0.25)])
    def test_reference_parameters_are_convex(self, p, q, k):
        shape = build_shape(p, q, 1.0, AntiPeriodicProfile.single(q, k))
        phi = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        h, _, h2 = shape.support_jet(phi)
        assert float(np.min(h + h2)) > 0.0
        assert float(np.min(h)) > 0.0

    def test_zero_profile_gives_disk(self):
        shape = build_shape(1, 2, 1.0, AntiPeriodicProfile.zero(2))
        phi = np.linspace(0.0, TWO_PI, 1000)
        assert np.abs(shape.support(phi) - math.sin(math.pi / 4)).max() <= 1e-14

    def test_parity_obstruction(self):
        with pytest.raises(ParityObstruction):
            build_shape(1, 3, 1.0, AntiPeriodicProfile.single(3, 0.1))

    def test_even_parity_zero_profile_allowed(self):
        shape = build_shape(1, 3, 1.0, AntiPeriodicProfile.zero(3))
        assert shape.support(0.3) == pytest.approx(math.sin(math.pi / 6))

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            build_shape(2, 4, 1.0, AntiPeriodicProfile.zero(4))

    def test_convexity_violated_reports_minimum(self):
        with pytest.raises(ConvexityViolated) as err:
            build_shape(2, 3, 1.0, AntiPeriodicProfile.single(3, 0.5))
        assert err.value.min_value < 0.0
        assert err.value.phi is not None

    def test_beta_out_of_range(self):
        with pytest.raises(BetaOutOfRange):
            build_shape(2, 3, 1.0, AntiPeriodicProfile.single(3, 1.2))

    def test_profile_q_mismatch(self):
        with pytest.raises(OutOfRange):
            build_shape(2, 3, 1.0, AntiPeriodicProfile.single(5, 0.1))


class TestBetaResidual:
    def test_disk_is_exact(self):
        for alpha in (0.8, math.pi / 2, 2 * math.pi / 3):
            disk = Disk(math.sin(alpha / 2))
            assert beta_residual(disk, alpha, r=1.0, samples=180) < 1e-10

    def test_constructed_shape_is_exact(self):
        shape = build_shape(2, 3, 1.0, AntiPeriodicProfile.single(3, 0.25))
        assert beta_residual(shape, 2 * math.pi / 3, r=1.0, samples=720) < 1e-8

    def test_beta_from_tangents_matches_profile(self):
        # beta(psi) = alpha/2 + w(phi_out(psi)) for the exact construction
        shape = build_shape(2, 3, 1.0, AntiPeriodicProfile.single(3, 0.25))
        alpha = 2 * math.pi / 3
        for psi in np.linspace(0.0, TWO_PI, 36, endpoint=False):
            beta = beta_from_tangents(shape, 1.0, float(psi))
            phi_out = normalize_angle(psi + math.pi / 2 - beta)
            assert beta == pytest.approx(alpha / 2 + shape.profile(phi_out), abs=1e-10)

    def test_rigid_extension_residual_quadratic(self):
        p, q = 2, 3
        alpha = math.pi * p / q
        residuals = {}
        for k in (0.1, 0.05, 0.025):
            theta = ThetaArcProfile.for_arc_count(q, (k,))
            residuals[k] = beta_residual(rigid_extend_theta(theta, p, q), alpha,
                                         samples=720)
        assert residuals[0.1] / residuals[0.05] == pytest.approx(4.0, abs=0.8)
        assert residuals[0.05] / residuals[0.025] == pytest.approx(4.0, abs=0.8)


class TestRigidExtendTheta:
    def test_zero_seed_constant(self):
        beta = rigid_extend_theta(ThetaArcProfile.for_arc_count(3, (0.0,)), 1, 3)
        assert beta(1.234) == pytest.approx(math.pi / 6)

    def test_single_mode_global_formula(self):
        # seed k*sin(q t) extends to alpha/2 + k*sin(q psi) on the whole circle
        beta = rigid_extend_theta(ThetaArcProfile.for_arc_count(3, (0.1,)), 2, 3)
        for psi in np.linspace(0.0, TWO_PI, 333):
            assert beta(float(psi)) == pytest.approx(
                math.pi / 3 + 0.1 * math.sin(3 * psi), abs=1e-13)

    def test_parity_obstruction(self):
        with pytest.raises(ParityObstruction):
            rigid_extend_theta(ThetaArcProfile.for_arc_count(3, (0.1,)), 1, 3)

    def test_parity_obstruction_is_total(self):
        rng = np.random.default_rng(30)
        pairs = coprime_pairs(20, parity="even")
        for i in range(100):
            p, q = pairs[i % len(pairs)]
            coeffs = tuple(rng.uniform(-0.05, 0.05, size=int(rng.integers(1, 4))))
            if all(c == 0.0 for c in coeffs):
                continue
            with pytest.raises(ParityObstruction):
                rigid_extend_theta(ThetaArcProfile.for_arc_count(q, coeffs), p, q)

    def test_wrong_arc_length(self):
        with pytest.raises(OutOfRange):
            rigid_extend_theta(ThetaArcProfile(0.5, (0.1,)), 2, 3)

    def test_is_vectorized(self):
        beta = rigid_extend_theta(ThetaArcProfile.for_arc_count(3, (0.05,)), 2, 3)
        psi = np.linspace(0.0, TWO_PI, 100)
        assert np.allclose(beta(psi), [beta(float(x)) for x in psi])


class TestEnvelope:
    def test_disk_tangent_polygon_radius(self):
        lines = [OrientedLine(float(phi), 1.0)
                 for phi in np.linspace(0.0, TWO_PI, 360, endpoint=False)]
        env = np.asarray(envelope_from_lines(lines))
        radius = np.hypot(env[:, 0], env[:, 1])
        assert np.abs(radius - 1.0 / math.cos(math.pi / 360)).max() < 1e-9

    def test_irrational_even_chords_envelop_circle(self):
        from isoptica.billiard import orbit
        rec = orbit(BilliardState(0.0, 0.6), 1.0, 1.0, 10_000)
        even = sorted(rec.chords[0::2], key=lambda c: c.normal)
        fit = circle_fit(np.asarray(envelope_from_lines(even)))
        assert abs(fit.radius - math.sin(0.6)) < 1e-4
        assert fit.center.norm() < 1e-6

    def test_constructed_shape_chords_envelop_its_boundary(self):
        # chords built from tangent-measured beta reproduce the boundary
        shape = build_shape(2, 3, 1.0, AntiPeriodicProfile.single(3, 0.25))
        beta = beta_function_of(shape, 1.0)
        lines = [chord(BilliardState(float(psi), beta(float(psi))), 1.0)
                 for psi in np.linspace(0.0, TWO_PI, 2000, endpoint=False)]
        lines.sort(key=lambda c: c.normal)
        env = np.asarray(envelope_from_lines(lines))
        assert distance_to_body(env, shape).max() < 1e-4
        assert distance_to_polyline(shape.outline(500), env) < 1e-4

    def test_parallel_duplicates_skipped_with_warning(self):
        lines = [OrientedLine(0.0, 1.0), OrientedLine(0.0, 1.0),
                 OrientedLine(2.0, 1.0), OrientedLine(4.0, 1.0)]
        with pytest.warns(RuntimeWarning, match="parallel"):
            pts = envelope_from_lines(lines)
        assert len(pts) == 3

    def test_needs_three_lines(self):
        with pytest.raises(OutOfRange):
            envelope_from_lines([OrientedLine(0.0, 1.0), OrientedLine(1.0, 1.0)])


def test_rigid_extension_repr_fields():
    beta = rigid_extend_theta(ThetaArcProfile.for_arc_count(5, (0.01,)), 4, 5)
    assert isinstance(beta, RigidExtension)
    assert beta.arc_count == 10
    assert beta.delta == pytest.approx(math.pi / 5)
