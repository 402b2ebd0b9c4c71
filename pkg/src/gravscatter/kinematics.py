"""Elastic two-body kinematics in the rest frame of the heavy particle.

The light particle (mass ``m``, energy ``E``) moves along +z and scatters off
the particle of mass ``M`` at rest into polar angle ``theta`` and azimuth
``phi``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dirac import four_vector, minkowski_square
from .errors import KinematicsError, PhysicsError


def momentum_magnitude(E, m):
    """``|p| = sqrt(E^2 - m^2)``, evaluated as a product to keep precision near E = m."""
    return np.sqrt((E - m) * (E + m))


def beta(E, m):
    """Speed ``|p| / E`` of a particle with energy ``E`` and mass ``m``."""
    return momentum_magnitude(E, m) / E


def energy_from_beta(b, m):
    if not 0.0 < b < 1.0:
        raise PhysicsError(f"beta must lie in (0, 1), got {b}")
    return m / np.sqrt((1.0 - b) * (1.0 + b))


def _check_inputs(E, m, M, theta):
    if not m > 0:
        raise PhysicsError(f"light mass must be positive, got m={m}")
    if not M > 0:
        raise PhysicsError(f"heavy mass must be positive, got M={M}")
    if not E > m:
        raise PhysicsError(f"incoming energy must exceed the mass, got E={E}, m={m}")
    if not 0.0 < theta <= np.pi:
        raise PhysicsError(f"scattering angle must lie in (0, pi], got theta={theta}")


def max_scattering_angle(m, M):
    """Largest reachable angle: ``pi`` for ``m < M``, ``arcsin(M/m)`` otherwise."""
    if m < M:
        return np.pi
    return float(np.arcsin(M / m))


def _recoil_solution(E, m, M, theta):
    # Energy conservation E'(E + M) - (m^2 + E M) = |p||p'| cos(theta), squared,
    # is a quadratic in E' with discriminant p^2 (M^2 - m^2 sin^2 theta). The
    # root continuous with E' = E at theta = 0 is taken; each branch below is
    # written so that neither E' nor E - E' suffers cancellation.
    _check_inputs(E, m, M, theta)
    s, c = np.sin(theta), np.cos(theta)
    if m >= M and (c <= 0.0 or m * s > M):
        raise KinematicsError(
            f"theta={theta} exceeds the maximum scattering angle "
            f"{max_scattering_angle(m, M)} for m={m} >= M={M}"
        )
    p2 = (E - m) * (E + m)
    root = np.sqrt(max((M - m * s) * (M + m * s), 0.0))
    A = E + M
    B = m * m + E * M
    den = M * M + 2.0 * E * M + m * m + p2 * s * s
    if c >= 0.0:
        E_prime = (A * B + p2 * c * root) / den
        loss = p2 * s * s * (E + (M * M + m * m * c * c) / (M + c * root)) / den
    else:
        E_prime = (B * B + c * c * m * m * p2) / (A * B - p2 * c * root)
        loss = p2 * (M + E * s * s - c * root) / den
    if loss <= 0.5 * E:
        E_prime = E - loss
    slack = 8.0 * np.finfo(float).eps * E
    if not (m - slack <= E_prime <= E + slack) or loss < 0.0:
        raise KinematicsError(
            f"recoil solution out of range: E'={E_prime!r} for E={E}, m={m}, M={M}, theta={theta}"
        )
    return float(min(max(E_prime, m), E)), float(loss)


def scattered_energy(E, m, M, theta) -> float:
    """Energy ``E'`` of the light particle after scattering by ``theta``.

    Raises
    ------
    PhysicsError
        For ``E <= m``, non-positive masses, or ``theta`` outside ``(0, pi]``.
    KinematicsError
        When ``m >= M`` and ``theta`` is beyond the maximum scattering angle.
    """
    return float(_recoil_solution(E, m, M, theta)[0])


def energy_loss(E, m, M, theta) -> float:
    """``E - E'`` computed directly, accurate even when it is tiny compared with E."""
    return float(_recoil_solution(E, m, M, theta)[1])


@dataclass(frozen=True)
class KinematicState:
    """On-shell 2 -> 2 elastic configuration in the rest frame of ``M``."""

    m: float
    M: float
    E: float
    theta: float
    phi: float
    E_prime: float
    energy_loss: float
    p_i: np.ndarray = field(repr=False)
    p_f: np.ndarray = field(repr=False)
    q_i: np.ndarray = field(repr=False)
    q_f: np.ndarray = field(repr=False)

    @property
    def p_mag(self):
        return momentum_magnitude(self.E, self.m)

    @property
    def p_prime_mag(self):
        return momentum_magnitude(self.E_prime, self.m)

    @property
    def beta(self):
        return beta(self.E, self.m)

    def momenta(self):
        return self.p_i, self.p_f, self.q_i, self.q_f


def build_state(E, m, M, theta, phi=0.0) -> KinematicState:
    E, m, M, theta, phi = map(float, (E, m, M, theta, phi))
    if not 0.0 <= phi < 2.0 * np.pi:
        raise PhysicsError(f"azimuth must lie in [0, 2pi), got phi={phi}")
    E_prime, loss = _recoil_solution(E, m, M, theta)
    p = momentum_magnitude(E, m)
    pp = momentum_magnitude(E_prime, m)
    s, c = np.sin(theta), np.cos(theta)
    half = np.sin(0.5 * theta)
    p_i = four_vector(E, 0.0, 0.0, p)
    p_f = four_vector(E_prime, pp * s * np.cos(phi), pp * s * np.sin(phi), pp * c)
    q_i = four_vector(M, 0.0, 0.0, 0.0)
    # p - p' cos(theta) = (p^2 - p'^2)/(p + p') + 2 p' sin^2(theta/2), with p^2 - p'^2 = (E - E')(E + E')
    recoil_z = loss * (E + E_prime) / (p + pp) + 2.0 * pp * half * half
    q_f = four_vector(M + loss, -p_f[1], -p_f[2], recoil_z)
    return KinematicState(
        m=m, M=M, E=E, theta=theta, phi=phi, E_prime=E_prime, energy_loss=loss,
        p_i=p_i, p_f=p_f, q_i=q_i, q_f=q_f,
    )


def mandelstam_t(state: KinematicState) -> float:
    """Squared momentum transfer ``(p_f - p_i)^2`` (GeV^2), negative for theta > 0."""
    return float(minkowski_square(state.p_f - state.p_i))


def boost_matrix(velocity) -> np.ndarray:
    """Pure Lorentz boost into a frame moving with ``velocity`` (units of c)."""
    v = np.asarray(velocity, dtype=float)
    if v.shape != (3,):
        raise ValueError("velocity must have three components")
    v2 = float(v @ v)
    if v2 == 0.0:
        return np.eye(4)
    if not np.sqrt(v2) < 1.0 - 1e-9:
        raise PhysicsError(f"boost velocity must satisfy |v| < 1, got |v|={np.sqrt(v2)}")
    gamma = 1.0 / np.sqrt(1.0 - v2)
    L = np.eye(4)
    L[0, 0] = gamma
    L[0, 1:] = -gamma * v
    L[1:, 0] = -gamma * v
    L[1:, 1:] += (gamma - 1.0) * np.outer(v, v) / v2
    return L


def lorentz_boost(state: KinematicState, velocity):
    """Boost ``p_i, p_f, q_i, q_f`` by the same pure boost; returns a 4-tuple."""
    L = boost_matrix(velocity)
    return tuple(L @ k for k in state.momenta())
