"""
Gamma matrices and spinors
==========================

Check the Clifford algebra, build a spinor and watch it solve the Dirac
equation, then compare a four-slash trace against its closed form.
"""
import numpy as np

from gravscatter import dirac

g = dirac.gamma_matrices()
worst = max(np.abs(g[a] @ g[b] + g[b] @ g[a] - 2 * dirac.METRIC[a, b] * np.eye(4)).max()
            for a in range(4) for b in range(4))
print("max |{g^mu, g^nu} - 2 g^{mu nu}| =", worst)

# an electron-like particle with 3 GeV of momentum along a tilted axis
m = 0.511e-3
p3 = np.array([1.0, 2.0, 2.0])
p = dirac.four_vector(np.sqrt(m**2 + p3 @ p3), *p3)
u = dirac.dirac_spinor(p, m, dirac.SpinLabel.UP)
print("ubar u =", dirac.adjoint_spinor(u) @ u)
print("|(pslash - m) u| =", np.linalg.norm((dirac.feynman_slash(p) - m * np.eye(4)) @ u))

# the same spinor in the chiral basis gives the same current
uc = dirac.dirac_spinor(p, m, dirac.SpinLabel.UP, representation="chiral")
print("current, Dirac basis :", dirac.bilinear_current(u, u).real)
print("current, chiral basis:", dirac.bilinear_current(uc, uc, representation="chiral").real)
print("p / m                :", p / m)

# Tr(a b c d) = 4[(ab)(cd) - (ac)(bd) + (ad)(bc)]
rng = np.random.default_rng(0)
a, b, c, d = rng.normal(size=(4, 4))
dot = dirac.minkowski_dot
s = dirac.feynman_slash
print("numeric trace:", dirac.trace(s(a) @ s(b) @ s(c) @ s(d)).real)
print("closed form  :", 4 * (dot(a, b) * dot(c, d) - dot(a, c) * dot(b, d) + dot(a, d) * dot(b, c)))
