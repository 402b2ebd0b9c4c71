import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.optimize import bisect

from gravscatter import dirac
from gravscatter.errors import KinematicsError, PhysicsError
from gravscatter.kinematics import (
    beta,
    boost_matrix,
    build_state,
    energy_loss,
    lorentz_boost,
    mandelstam_t,
    max_scattering_angle,
    scattered_energy,
)

# E' at m=1, M=10, E=5, theta=pi/3 from the bisection oracle below
GENERIC_E_PRIME = 4.039037228634829


def closure_residual(E_prime, E, m, M, theta):
    """(p_i + q_i - p_f)^2 - M^2 as a function of the trial outgoing energy."""
    p = math.sqrt(E * E - m * m)
    pp = math.sqrt(max(E_prime * E_prime - m * m, 0.0))
    k = np.array([E + M - E_prime, -pp * math.sin(theta), 0.0, p - pp * math.cos(theta)])
    return k[0] ** 2 - k[1] ** 2 - k[2] ** 2 - k[3] ** 2 - M * M


def bisection_energy(E, m, M, theta):
    return bisect(closure_residual, m, E, args=(E, m, M, theta), xtol=1e-15, rtol=1e-15, maxiter=500)


def test_generic_point_matches_bisection():
    oracle = bisection_energy(5.0, 1.0, 10.0, math.pi / 3)
    assert oracle == pytest.approx(GENERIC_E_PRIME, rel=1e-14)
    assert scattered_energy(5.0, 1.0, 10.0, math.pi / 3) == pytest.approx(oracle, rel=1e-10)


def test_forward_limit():
    assert scattered_energy(5.0, 1.0, 10.0, 1e-8) == pytest.approx(5.0, rel=1e-12)


def test_heavy_scatterer_elastic():
    M = 1.0
    E = 1e-4 * M
    # first-order loss is 2 beta^2 (E/M) sin^2(theta/2); beta = 0.05 keeps it below 1e-6
    m = E * math.sqrt(1 - 0.05**2)
    for theta in (0.3, math.pi / 2, math.pi):
        assert scattered_energy(E, m, M, theta) == pytest.approx(E, rel=1e-6)


@given(
    st.floats(-1, 2), st.floats(-1, 2), st.floats(-4, 2), st.floats(1e-3, math.pi),
)
@settings(max_examples=300, deadline=None)
def test_closed_form_matches_bisection(log_m, log_M, log_ratio, theta):
    m, M = 10.0 ** log_m, 10.0 ** log_M
    E = M * 10.0 ** log_ratio
    assume(m < M and E > 1.01 * m)
    E_prime = scattered_energy(E, m, M, theta)
    assert E_prime == pytest.approx(bisection_energy(E, m, M, theta), rel=1e-10)
    assert m <= E_prime <= E


def test_energy_loss_consistent():
    for args in [(5.0, 1.0, 10.0, 1.0), (50.0, 1.0, 2.0, 2.5), (1.2, 1.0, 3.0, math.pi)]:
        assert energy_loss(*args) == pytest.approx(args[0] - scattered_energy(*args), rel=1e-12)


def test_energy_loss_resolves_tiny_transfers():
    # E - E' ~ 2 p^2 sin^2(theta/2) / M, far below the spacing of floats near E
    E, m, M, theta = 1.0, 0.5, 1e8, 1e-3
    p2 = E * E - m * m
    leading = 2 * p2 / M * math.sin(theta / 2) ** 2
    assert energy_loss(E, m, M, theta) == pytest.approx(leading, rel=1e-6)


def test_build_state_conservation_and_shell(sample_states):
    for s in sample_states:
        resid = s.p_i + s.q_i - s.p_f - s.q_f
        assert np.abs(resid).max() <= 1e-9 * s.E
        assert dirac.minkowski_square(s.q_f) == pytest.approx(s.M ** 2, rel=1e-9)
        assert dirac.is_on_shell(s.p_i, s.m) and dirac.is_on_shell(s.p_f, s.m)
        assert s.m <= s.E_prime <= s.E
        assert mandelstam_t(s) < 0


def test_backscatter_geometry():
    s = build_state(5.0, 1.0, 10.0, math.pi, 0.0)
    assert s.p_f[1] == pytest.approx(0.0, abs=1e-15)
    assert s.p_f[2] == 0.0
    assert s.p_f[3] == -s.p_prime_mag


def test_phi_only_rotates():
    a = build_state(5.0, 1.0, 10.0, 1.1, 0.0)
    b = build_state(5.0, 1.0, 10.0, 1.1, 2.0)
    assert a.E_prime == b.E_prime
    assert np.hypot(*b.p_f[1:3]) == pytest.approx(a.p_f[1], rel=1e-15)


@pytest.mark.parametrize("args", [
    (1.0, 1.0, 10.0, 1.0),  # E == m
    (5.0, 1.0, 0.0, 1.0),  # M == 0
    (5.0, 1.0, 10.0, 0.0),  # theta == 0
    (5.0, 1.0, 10.0, 4.0),  # theta > pi
])
def test_unphysical_inputs(args):
    with pytest.raises(PhysicsError):
        scattered_energy(*args)


def test_phi_out_of_range():
    with pytest.raises(PhysicsError):
        build_state(5.0, 1.0, 10.0, 1.0, 2 * math.pi)


def test_heavy_projectile_has_maximum_angle():
    m, M = 3.0, 1.0
    limit = max_scattering_angle(m, M)
    assert limit == pytest.approx(math.asin(1 / 3))
    assert scattered_energy(10.0, m, M, 0.9 * limit) < 10.0
    with pytest.raises(KinematicsError):
        scattered_energy(10.0, m, M, 1.1 * limit)
    with pytest.raises(KinematicsError):
        scattered_energy(10.0, 2.0, 2.0, 2.0)


def test_equal_masses_forward_hemisphere():
    s = build_state(3.0, 2.0, 2.0, 1.0)
    assert dirac.minkowski_square(s.q_f) == pytest.approx(4.0, rel=1e-12)


def test_mandelstam_t_identities():
    s = build_state(5.0, 1.0, 10.0, math.pi / 3)
    via_dot = 2 * s.m ** 2 - 2 * dirac.minkowski_dot(s.p_i, s.p_f)
    assert mandelstam_t(s) == pytest.approx(via_dot, rel=1e-12)
    assert mandelstam_t(s) == pytest.approx(-2 * s.M * s.energy_loss, rel=1e-12)
    assert -1e-12 < mandelstam_t(build_state(5.0, 1.0, 10.0, 1e-7)) < 0


def test_mandelstam_t_heavy_limit():
    M, E, m = 1e6, 2.0, 1.0
    for theta in (0.4, 2.0, math.pi):
        s = build_state(E, m, M, theta)
        leading = -4 * s.p_mag ** 2 * math.sin(theta / 2) ** 2
        assert mandelstam_t(s) == pytest.approx(leading, rel=1e-5)


def test_elasticity_monotone_in_angle():
    thetas = np.linspace(1e-4, math.pi, 200)
    losses = [energy_loss(5.0, 1.0, 10.0, t) for t in thetas]
    assert all(x > 0 for x in losses)
    assert np.all(np.diff(losses) > 0)


@pytest.mark.parametrize("ratio", [1e-3, 1e-4, 1e-5])
def test_heavy_scatterer_expansion(ratio):
    M = 1.0
    E = ratio * M
    m = 0.5 * E
    for theta in np.linspace(0.1, math.pi, 12):
        p2 = E * E - m * m
        leading = 2 * p2 / M * math.sin(theta / 2) ** 2
        assert abs(energy_loss(E, m, M, theta) - leading) <= 4 * (E / M) * (p2 / M)


@pytest.mark.parametrize("e_over_m", [1e-2, 0.5, 3.0, 100.0])
def test_ultrarelativistic_expansion(e_over_m):
    M = 1.0
    E = e_over_m * M
    m = 1e-4 * E
    for theta in np.linspace(0.1, math.pi, 12):
        expect = 1 / (1 + 2 * e_over_m * math.sin(theta / 2) ** 2)
        assert abs(scattered_energy(E, m, M, theta) / E - expect) <= 1e-3


def test_beta():
    assert beta(5.0, 3.0) == pytest.approx(0.8)


def test_boost_identity_and_invariance():
    s = build_state(5.0, 1.0, 10.0, 1.0, 0.5)
    for a, b in zip(lorentz_boost(s, [0, 0, 0]), s.momenta()):
        np.testing.assert_array_equal(a, b)
    v = 0.99 * np.array([0.6, 0.0, 0.8])
    for k_new, k in zip(lorentz_boost(s, v), s.momenta()):
        assert dirac.minkowski_square(k_new) == pytest.approx(dirac.minkowski_square(k), rel=1e-9)


def test_boost_to_projectile_rest_frame():
    s = build_state(5.0, 1.0, 10.0, 1.0)
    p_rest = lorentz_boost(s, s.p_i[1:] / s.p_i[0])[0]
    np.testing.assert_allclose(p_rest, [s.m, 0, 0, 0], atol=1e-9)


def test_superluminal_boost_rejected():
    with pytest.raises(PhysicsError):
        boost_matrix([0, 0, 1.0])
