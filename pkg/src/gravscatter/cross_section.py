"""Differential cross-sections in the rest frame of the heavy particle (GeV^-2)."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.integrate import simpson

from .amplitude import CouplingConfig, spin_averaged_msq_trace
from .dirac import minkowski_dot
from .errors import ForwardSingularityError, KinematicsError, PhysicsError
from .kinematics import KinematicState, build_state

GEV2_TO_MB = 0.3894


class Provenance(str, enum.Enum):
    FULL_RECOIL = "full_recoil"
    ENERGY_FORM = "energy_form"
    MOTT_LIKE = "mott_like"
    RUTHERFORD = "rutherford"
    ULTRA_RELATIVISTIC = "ultra_relativistic"


class CrossSectionValue(NamedTuple):
    """``dsigma/dOmega'`` in GeV^-2 tagged with the formula that produced it."""

    value: float
    provenance: Provenance

    def __float__(self):
        return float(self.value)


def _check_angle(theta):
    if theta == 0.0:
        raise ForwardSingularityError("cross-section diverges at theta = 0")
    if not 0.0 < theta <= math.pi:
        raise PhysicsError(f"scattering angle must lie in (0, pi], got theta={theta}")


def flux_factor(p_i, q_i, m, M):
    """Invariant flux normalisation ``m M / sqrt((p_i.q_i)^2 - m^2 M^2)``."""
    pq = minkowski_dot(p_i, q_i)
    return m * M / math.sqrt((pq - m * M) * (pq + m * M))


def dsigma_recoil_form(state: KinematicState, coupling: CouplingConfig) -> CrossSectionValue:
    """Cross-section from the recoil-corrected phase-space factor and the trace formula."""
    _check_angle(state.theta)
    p, pp = state.p_mag, state.p_prime_mag
    recoil = state.M + state.E - (p / pp) * state.E_prime * math.cos(state.theta)
    if not recoil > 0.0:
        raise KinematicsError(f"non-positive recoil denominator {recoil!r} for {state}")
    msq = spin_averaged_msq_trace(state, coupling)
    value = (pp / p) * state.m ** 2 * state.M / recoil * msq / (2.0 * math.pi) ** 2
    return CrossSectionValue(value, Provenance.FULL_RECOIL)


def energy_form_bracket(E, E_prime, m, M, energy_loss=None):
    """Curly bracket of the energy form; reduces to ``2 E^2 / M^2`` at ``E' = E``."""
    loss = E - E_prime if energy_loss is None else energy_loss
    return (E * E + E_prime * E_prime) / (M * M) - (1.0 + (m / M) ** 2) * loss / M


def dsigma_energy_form(E, E_prime, theta, m, M, coupling: CouplingConfig,
                       energy_loss=None) -> CrossSectionValue:
    """Cross-section written through ``E`` and ``E'`` only.

    ``energy_loss`` may carry ``E - E'`` computed independently of the two
    rounded energies; near the forward direction their difference alone loses
    most significant digits. ``theta`` is only checked, the formula does not
    use it.
    """
    _check_angle(theta)
    loss = E - E_prime if energy_loss is None else energy_loss
    if not loss > 0.0:
        raise ForwardSingularityError(f"E' must be below E (theta > 0), got E - E' = {loss!r}")
    p2 = (E - m) * (E + m)
    pp2 = (E_prime - m) * (E_prime + m)
    # E E' - m^2 (1 + E/M - E'/M), rearranged around p^2 = E^2 - m^2
    recoil = p2 - loss * (E + m * m / M)
    kinematic = pp2 ** 1.5 / math.sqrt(p2) * m * m / recoil
    strength = coupling.strength ** 2 / (4.0 * math.pi) ** 2 * M * M * (E + E_prime) ** 2 / 4.0
    bracket = energy_form_bracket(E, E_prime, m, M, loss)
    value = kinematic * strength * bracket / (2.0 * m * m * loss * loss)
    return CrossSectionValue(value, Provenance.ENERGY_FORM)


def dsigma(state: KinematicState, coupling: CouplingConfig) -> CrossSectionValue:
    """Full cross-section for a state (energy form fed with the state's exact energy loss)."""
    return dsigma_energy_form(state.E, state.E_prime, state.theta, state.m, state.M,
                              coupling, energy_loss=state.energy_loss)


def differential_cross_section(E, m, M, theta, coupling: CouplingConfig) -> CrossSectionValue:
    return dsigma(build_state(E, m, M, theta), coupling)


def mott_like_limit(beta, theta, M, coupling: CouplingConfig) -> CrossSectionValue:
    """Heavy-scatterer limit ``E/M -> 0`` at fixed speed ``beta``.

    ``beta = 1`` is accepted as the formal massless endpoint.
    """
    _check_angle(theta)
    if not 0.0 < beta <= 1.0:
        raise PhysicsError(f"beta must lie in (0, 1], got {beta}")
    s2 = math.sin(0.5 * theta) ** 2
    pref = coupling.g_squared ** 2 / (4.0 * math.pi) ** 2 * coupling.G ** 2 * M * M
    value = pref * (1.0 - beta * beta * s2) / (4.0 * beta ** 4 * s2 * s2)
    return CrossSectionValue(value, Provenance.MOTT_LIKE)


def rutherford_limit(v, theta, M, G) -> CrossSectionValue:
    """Non-relativistic limit ``G^2 M^2 / (4 v^4 sin^4(theta/2))``; independent of ``m``."""
    _check_angle(theta)
    if not 0.0 < v < 1.0:
        raise PhysicsError(f"speed must lie in (0, 1), got v={v}")
    s2 = math.sin(0.5 * theta) ** 2
    return CrossSectionValue(G * G * M * M / (4.0 * v ** 4 * s2 * s2), Provenance.RUTHERFORD)


def ultrarelativistic_limit(E, theta, M, coupling: CouplingConfig) -> CrossSectionValue:
    """Limit ``m/E -> 0`` at arbitrary ``E/M``."""
    _check_angle(theta)
    if not E > 0.0:
        raise PhysicsError(f"energy must be positive, got E={E}")
    s2 = math.sin(0.5 * theta) ** 2
    c2 = math.cos(0.5 * theta) ** 2
    x = E / M
    soft = 1.0 + 2.0 * x * s2
    value = (coupling.strength ** 2 / (4.0 * math.pi) ** 2 * M * M / (4.0 * s2 * s2)
             * (1.0 + x * s2) ** 2 / soft ** 3
             * (c2 + 2.0 * x * x * s2 * s2 / soft))
    return CrossSectionValue(value, Provenance.ULTRA_RELATIVISTIC)


class Spacing(str, enum.Enum):
    UNIFORM_THETA = "uniform_theta"
    UNIFORM_COS_THETA = "uniform_cos_theta"


@dataclass(frozen=True)
class AngularGrid:
    theta_min: float
    theta_max: float = math.pi
    n_points: int = 1001
    spacing: Spacing = Spacing.UNIFORM_THETA

    def __post_init__(self):
        object.__setattr__(self, "spacing", Spacing(self.spacing))
        if not self.theta_min > 0.0:
            raise ForwardSingularityError(
                f"theta_min must be positive (forward integral diverges), got {self.theta_min}")
        if not self.theta_min < self.theta_max <= math.pi:
            raise PhysicsError(
                f"need 0 < theta_min < theta_max <= pi, got [{self.theta_min}, {self.theta_max}]")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise PhysicsError(f"n_points must be an integer >= 2, got {self.n_points}")

    def nodes(self) -> np.ndarray:
        """Angles of the grid nodes, ascending in theta."""
        n = int(self.n_points)
        if self.spacing is Spacing.UNIFORM_THETA:
            theta = np.linspace(self.theta_min, self.theta_max, n)
        else:
            x = np.linspace(math.cos(self.theta_max), math.cos(self.theta_min), n)
            theta = np.arccos(x)[::-1]
            theta[0], theta[-1] = self.theta_min, self.theta_max
        return theta


def integrated_cross_section(E, m, M, grid: AngularGrid, coupling: CouplingConfig,
                             dsigma_domega=None) -> float:
    """``2 pi int sin(theta) dsigma/dOmega dtheta`` over ``grid`` by composite Simpson.

    ``dsigma_domega(theta) -> float`` overrides the default full cross-section.
    """
    if dsigma_domega is None:
        def dsigma_domega(theta):
            return differential_cross_section(E, m, M, theta, coupling).value

    theta = grid.nodes()
    values = np.array([float(dsigma_domega(th)) for th in theta])
    if grid.spacing is Spacing.UNIFORM_THETA:
        return float(2.0 * math.pi * simpson(values * np.sin(theta), x=theta))
    # d(cos theta) nodes, reversed so that cos theta ascends
    x = np.linspace(math.cos(grid.theta_max), math.cos(grid.theta_min), int(grid.n_points))
    return float(2.0 * math.pi * simpson(values[::-1], x=x))
