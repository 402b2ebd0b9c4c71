"""Tree-level gravitational scattering of two Dirac particles of unequal mass.

Amplitudes, spin-averaged squared matrix elements and rest-frame differential
cross-sections (with their heavy-scatterer, Rutherford and ultra-relativistic
limits), each closed-form expression paired with an independent numerical
check.
"""
from .amplitude import (
    NEWTON_G,
    CouplingConfig,
    interaction_strength,
    invariant_amplitude,
    lepton_tensor,
    matrix_element,
    perturbativity_indicator,
    spin_averaged_msq_bruteforce,
    spin_averaged_msq_trace,
)
from .cross_section import (
    AngularGrid,
    CrossSectionValue,
    Provenance,
    differential_cross_section,
    dsigma,
    dsigma_energy_form,
    dsigma_recoil_form,
    integrated_cross_section,
    mott_like_limit,
    rutherford_limit,
    ultrarelativistic_limit,
)
from .dirac import SpinLabel
from .errors import ForwardSingularityError, KinematicsError, OffShellError, PhysicsError
from .kinematics import KinematicState, build_state, lorentz_boost, mandelstam_t, scattered_energy

__version__ = "0.1.0"
