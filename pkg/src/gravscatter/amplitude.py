"""Tree-level gravitational amplitude for two Dirac particles of unequal mass.

The matrix element is

    M = -(g l_P)^2 [ubar_f gamma^mu u_i] (p_i + p_f).(q_i + q_f) / (4 t) [Ubar_f gamma_mu U_i]

with ``t = (p_f - p_i)^2 < 0``. Spin-averaged squares are available both as an
explicit sum over the 16 spin assignments and in closed trace form; the two
are kept as independent code paths on purpose.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .dirac import (
    METRIC,
    SPINS,
    SpinLabel,
    bilinear_current,
    dirac_spinor,
    lower_index,
    minkowski_dot,
    minkowski_square,
)
from .errors import ForwardSingularityError, PhysicsError
from .kinematics import KinematicState

# Newton constant in natural units, GeV^-2.
NEWTON_G = 6.70883e-39

PERTURBATIVE_THRESHOLD = 0.1


@dataclass(frozen=True)
class CouplingConfig:
    """Gravitational coupling: Newton constant ``G`` (GeV^-2) and dimensionless ``g^2``."""

    G: float = NEWTON_G
    g_squared: float = 4.0 * math.pi

    def __post_init__(self):
        if not (math.isfinite(self.G) and self.G > 0):
            raise PhysicsError(f"G must be positive, got {self.G}")
        if not (math.isfinite(self.g_squared) and self.g_squared > 0):
            raise PhysicsError(f"g_squared must be positive, got {self.g_squared}")

    @property
    def ell_P(self):
        """Planck length ``sqrt(G)`` in GeV^-1."""
        return math.sqrt(self.G)

    @property
    def strength(self):
        """``(g l_P)^2 = g^2 G``."""
        return self.g_squared * self.G


def _momentum_transfer(p_i, p_f):
    t = float(minkowski_square(np.asarray(p_f) - np.asarray(p_i)))
    if not t < 0.0:
        raise ForwardSingularityError(f"momentum transfer must be negative, got t={t!r}")
    return t


def _energy_weight(p_i, p_f, q_i, q_f):
    return float(minkowski_dot(np.asarray(p_i) + p_f, np.asarray(q_i) + q_f))


def invariant_amplitude(p_i, p_f, q_i, q_f, m, M, spins, coupling: CouplingConfig,
                        representation="dirac") -> complex:
    """Matrix element for explicit momenta.

    ``spins`` is ``(light_in, light_out, heavy_in, heavy_out)``.
    """
    s_i, s_f, S_i, S_f = (SpinLabel(s) for s in spins)
    t = _momentum_transfer(p_i, p_f)
    J = bilinear_current(dirac_spinor(p_f, m, s_f, representation),
                         dirac_spinor(p_i, m, s_i, representation), representation)
    K = bilinear_current(dirac_spinor(q_f, M, S_f, representation),
                         dirac_spinor(q_i, M, S_i, representation), representation)
    weight = _energy_weight(p_i, p_f, q_i, q_f)
    return complex(-coupling.strength * (J @ lower_index(K)) * weight / (4.0 * t))


def matrix_element(state: KinematicState, spins, coupling: CouplingConfig,
                   representation="dirac") -> complex:
    """Matrix element for one spin assignment of ``state``.

    Raises ``ForwardSingularityError`` when ``t`` is not strictly negative.
    """
    return invariant_amplitude(*state.momenta(), state.m, state.M, spins, coupling,
                               representation)


def lepton_tensor(p_i, p_f, m) -> np.ndarray:
    """Spin-summed current product ``sum ubar_f g^mu u_i ubar_i g^nu u_f``, closed form."""
    p_i = np.asarray(p_i, dtype=float)
    p_f = np.asarray(p_f, dtype=float)
    outer = np.outer(p_i, p_f)
    return (outer + outer.T + (m * m - minkowski_dot(p_i, p_f)) * METRIC) / (m * m)


def _current_table(k_i, k_f, mass, representation):
    u_i = {s: dirac_spinor(k_i, mass, s, representation) for s in SPINS}
    u_f = {s: dirac_spinor(k_f, mass, s, representation) for s in SPINS}
    return {(a, b): bilinear_current(u_f[b], u_i[a], representation)
            for a in SPINS for b in SPINS}


def msq_bruteforce_from_momenta(p_i, p_f, q_i, q_f, m, M, coupling: CouplingConfig,
                                representation="dirac") -> float:
    t = _momentum_transfer(p_i, p_f)
    light = _current_table(p_i, p_f, m, representation)
    heavy = _current_table(q_i, q_f, M, representation)
    pref = -coupling.strength * _energy_weight(p_i, p_f, q_i, q_f) / (4.0 * t)
    total = 0.0
    for (s_i, s_f), (S_i, S_f) in itertools.product(light, heavy):
        amp = pref * (light[s_i, s_f] @ lower_index(heavy[S_i, S_f]))
        total += amp.real ** 2 + amp.imag ** 2
    return 0.25 * total


def spin_averaged_msq_bruteforce(state: KinematicState, coupling: CouplingConfig,
                                 representation="dirac") -> float:
    """Average over incoming and sum over outgoing spins by explicit enumeration."""
    return msq_bruteforce_from_momenta(*state.momenta(), state.m, state.M, coupling,
                                       representation)


def msq_trace_from_momenta(p_i, p_f, q_i, q_f, m, M, coupling: CouplingConfig) -> float:
    t = _momentum_transfer(p_i, p_f)
    weight = _energy_weight(p_i, p_f, q_i, q_f)
    dot = minkowski_dot
    bracket = (
        dot(p_i, q_i) * dot(p_f, q_f)
        + dot(p_i, q_f) * dot(p_f, q_i)
        - m * m * dot(q_i, q_f)
        - M * M * dot(p_i, p_f)
        + 2.0 * m * m * M * M
    )
    return float(coupling.strength ** 2 * weight ** 2 / 16.0
                 * bracket / (2.0 * m * m * M * M * t * t))


def spin_averaged_msq_trace(state: KinematicState, coupling: CouplingConfig) -> float:
    """Spin-averaged squared amplitude from the closed trace formula."""
    return msq_trace_from_momenta(*state.momenta(), state.m, state.M, coupling)


def interaction_strength(state: KinematicState, coupling: CouplingConfig) -> float:
    """Energy-dependent coupling ``(g l_P)^2 (p_i + p_f).(q_i + q_f) / 4``."""
    return coupling.strength * _energy_weight(*state.momenta()) / 4.0


def rest_frame_strength(M, E, E_prime, coupling: CouplingConfig) -> float:
    """``(g l_P)^2 M (E + E') / 2``, the rest-frame form of the interaction strength."""
    return coupling.strength * M * (E + E_prime) / 2.0


def perturbativity_indicator(state: KinematicState, coupling: CouplingConfig,
                             threshold=PERTURBATIVE_THRESHOLD):
    """Return ``(strength, is_perturbative)`` with the flag set below ``threshold``."""
    value = rest_frame_strength(state.M, state.E, state.E_prime, coupling)
    return value, bool(value < threshold)
