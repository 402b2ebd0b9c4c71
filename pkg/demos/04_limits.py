"""
From the full formula to Mott and Rutherford
============================================

Push the scatterer mass up and the speed down, and the full cross-section
slides onto the familiar limits.
"""
import numpy as np

from gravscatter import CouplingConfig, differential_cross_section
from gravscatter.cross_section import mott_like_limit, rutherford_limit, ultrarelativistic_limit
from gravscatter.kinematics import energy_from_beta

c = CouplingConfig(G=1.0)
theta = np.pi / 2

# fixed speed, heavier and heavier target: the gap closes like E/M
m = 1.0
E = energy_from_beta(0.5, m)
for ratio in (1e-1, 1e-2, 1e-3, 1e-4):
    M = E / ratio
    full = differential_cross_section(E, m, M, theta, c).value
    print(f"E/M={ratio:.0e}  full/mott - 1 = {full / mott_like_limit(0.5, theta, M, c).value - 1:+.3e}")

# slow down: Mott turns into Rutherford, the gap goes like beta^2
for b in (1e-1, 1e-2, 1e-3):
    print(f"beta={b:.0e}  mott/rutherford - 1 = "
          f"{mott_like_limit(b, theta, 1.0, c).value / rutherford_limit(b, theta, 1.0, c.G).value - 1:+.3e}")

# a nearly massless projectile follows the ultra-relativistic curve at any E/M
M = 1.0
for x in (0.01, 0.5, 10.0):
    E = x * M
    full = differential_cross_section(E, 1e-6 * E, M, theta, c).value
    print(f"E/M={x:5.2f}  full/ultrarel = {full / ultrarelativistic_limit(E, theta, M, c).value:.9f}")
