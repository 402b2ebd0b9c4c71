"""
Integrating over angles
=======================

The total cross-section diverges in the forward direction, so integrate from
a cutoff and compare with the Rutherford antiderivative.
"""
import math

from gravscatter import AngularGrid, CouplingConfig, integrated_cross_section

M, b, cut = 1.0, 1e-4, 0.1
E = 1e-9 * M
m = E * math.sqrt(1 - b * b)
closed = math.pi * M**2 / b**4 / math.tan(cut / 2) ** 2
# nodes uniform in cos(theta) crowd the backward region, where little happens
for n in (101, 1001, 10001):
    for spacing in ("uniform_theta", "uniform_cos_theta"):
        grid = AngularGrid(cut, math.pi, n_points=n, spacing=spacing)
        sigma = integrated_cross_section(E, m, M, grid, CouplingConfig(G=1.0))
        print(f"n={n:6d} {spacing:18s} sigma/closed - 1 = {sigma / closed - 1:+.2e}")
