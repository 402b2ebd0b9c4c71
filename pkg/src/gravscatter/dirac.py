"""Dirac algebra kernel.

Four-vectors are plain ``numpy`` arrays of shape ``(4,)`` holding contravariant
components ``(E, px, py, pz)`` in GeV, metric signature ``(+, -, -, -)``.
Spinors are complex arrays of shape ``(4,)`` normalised to ``ubar u = 1``.

Two gamma-matrix representations are available: ``"dirac"`` (default) and
``"chiral"``. The chiral one exists so that representation independence of
spin-summed quantities can be checked; everything else uses the default.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import OffShellError, PhysicsError

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

ON_SHELL_RTOL = 1e-9

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)
PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


class SpinLabel(enum.Enum):
    """Spin projection along the rest-frame z axis."""

    UP = "up"
    DOWN = "down"


SPINS = (SpinLabel.UP, SpinLabel.DOWN)

_REST_SPINORS = {
    SpinLabel.UP: np.array([1.0, 0.0], dtype=complex),
    SpinLabel.DOWN: np.array([0.0, 1.0], dtype=complex),
}


def _dirac_gammas():
    g0 = np.block([[_I2, _Z2], [_Z2, -_I2]])
    gk = [np.block([[_Z2, s], [-s, _Z2]]) for s in PAULI]
    return np.array([g0, *gk])


def _chiral_gammas():
    g0 = np.block([[_Z2, _I2], [_I2, _Z2]])
    gk = [np.block([[_Z2, s], [-s, _Z2]]) for s in PAULI]
    return np.array([g0, *gk])


_GAMMAS = {"dirac": _dirac_gammas(), "chiral": _chiral_gammas()}
for _g in _GAMMAS.values():
    _g.setflags(write=False)


def _gammas(representation):
    try:
        return _GAMMAS[representation]
    except KeyError:
        raise ValueError(f"unknown gamma representation {representation!r}") from None


def four_vector(E, px=0.0, py=0.0, pz=0.0) -> np.ndarray:
    v = np.array([E, px, py, pz], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"four-vector components must be finite, got {v}")
    return v


def lower_index(a) -> np.ndarray:
    """Return the covariant components ``a_mu = eta_{mu nu} a^nu``."""
    return METRIC @ np.asarray(a)


def minkowski_dot(a, b):
    """Minkowski product ``a^0 b^0 - a.b`` (GeV^2)."""
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]


def minkowski_square(a):
    return minkowski_dot(a, a)


def is_on_shell(p, m, rtol=ON_SHELL_RTOL) -> bool:
    # Relative to (p^0)^2: a float four-vector cannot pin p^2 any finer than that.
    p = np.asarray(p, dtype=float)
    scale = max(p[0] * p[0], m * m)
    return abs(minkowski_square(p) - m * m) <= rtol * scale


def gamma_matrix(mu: int, representation: str = "dirac") -> np.ndarray:
    """Gamma matrix ``gamma^mu`` as a 4x4 complex array (read-only copy)."""
    if not isinstance(mu, (int, np.integer)) or not 0 <= mu <= 3:
        raise IndexError(f"Lorentz index must be 0..3, got {mu!r}")
    return _gammas(representation)[mu].copy()


def gamma_matrices(representation: str = "dirac") -> np.ndarray:
    """All four gamma matrices stacked as an array of shape ``(4, 4, 4)``."""
    return _gammas(representation).copy()


def feynman_slash(p, representation: str = "dirac") -> np.ndarray:
    """``gamma^mu p_mu``."""
    return np.einsum("m,mab->ab", lower_index(p), _gammas(representation))


def _check_massive_on_shell(p, m):
    if not m > 0:
        raise PhysicsError(f"mass must be positive, got m={m}")
    if not p[0] > 0:
        raise PhysicsError(f"energy must be positive, got p0={p[0]}")
    if not is_on_shell(p, m):
        raise OffShellError(
            f"momentum {p} is off-shell for m={m}: p^2={minkowski_square(p)!r}"
        )


def dirac_spinor(p, m, spin: SpinLabel, representation: str = "dirac") -> np.ndarray:
    """Positive-energy spinor ``u(p, spin)`` with ``ubar u = 1``.

    The spin label refers to the rest-frame z projection; the spinor is the
    rest-frame state boosted to momentum ``p``.

    Raises
    ------
    PhysicsError
        If ``m <= 0`` or ``p^0 <= 0``.
    OffShellError
        If ``p^2`` differs from ``m^2`` beyond ``ON_SHELL_RTOL``.
    """
    _gammas(representation)
    p = np.asarray(p, dtype=float)
    _check_massive_on_shell(p, m)
    xi = _REST_SPINORS[SpinLabel(spin)]
    E = p[0]
    sigma_p = np.einsum("k,kab->ab", p[1:], PAULI)
    if representation == "dirac":
        norm = np.sqrt((E + m) / (2.0 * m))
        return norm * np.concatenate([xi, sigma_p @ xi / (E + m)])
    # chiral: sqrt(p.sigma) = (E - sigma.p + m) / sqrt(2(E + m)), likewise for sigma-bar
    root = 1.0 / np.sqrt(2.0 * (E + m))
    left = root * ((E + m) * _I2 - sigma_p) @ xi
    right = root * ((E + m) * _I2 + sigma_p) @ xi
    return np.concatenate([left, right]) / np.sqrt(2.0 * m)


def adjoint_spinor(u, representation: str = "dirac") -> np.ndarray:
    """Dirac adjoint ``ubar = u^dagger gamma^0`` as a 1-D (row) array."""
    return np.conj(np.asarray(u)) @ _gammas(representation)[0]


def bilinear_current(u_f, u_i, representation: str = "dirac") -> np.ndarray:
    """Vector current ``J^mu = ubar_f gamma^mu u_i`` for mu = 0..3."""
    ubar = adjoint_spinor(u_f, representation)
    return np.einsum("a,mab,b->m", ubar, _gammas(representation), np.asarray(u_i))


def energy_projector(p, m, representation: str = "dirac") -> np.ndarray:
    """Positive-energy projector ``(pslash + m) / 2m``."""
    if not m > 0:
        raise PhysicsError(f"mass must be positive, got m={m}")
    return (feynman_slash(p, representation) + m * np.eye(4)) / (2.0 * m)


def trace(M):
    return complex(np.trace(np.asarray(M)))
