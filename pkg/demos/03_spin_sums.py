"""
Spin sums two ways
==================

The spin-averaged squared amplitude is computed once by enumerating all 16
spin assignments and once from the closed trace formula.
"""
import numpy as np

from gravscatter import CouplingConfig, build_state
from gravscatter import amplitude as amp
from gravscatter.kinematics import lorentz_boost

c = CouplingConfig(G=1.0)
for E, m, M, theta in [(1.5, 1.0, 3.0, 0.4), (50.0, 0.1, 2.0, 2.5), (1e3, 10.0, 80.0, np.pi)]:
    st = build_state(E, m, M, theta)
    brute = amp.spin_averaged_msq_bruteforce(st, c)
    trace = amp.spin_averaged_msq_trace(st, c)
    print(f"E={E:7.1f} m={m:5.1f} M={M:5.1f}  brute={brute:.15e}  trace={trace:.15e}  "
          f"rel={abs(brute - trace) / trace:.1e}")

# the result is a Lorentz scalar
boosted = amp.msq_trace_from_momenta(*lorentz_boost(st, [0.0, 0.6, 0.6]), st.m, st.M, c)
print("after a boost with |v| = 0.85:", boosted)

# perturbativity with the physical Newton constant is never in question at collider energies
value, ok = amp.perturbativity_indicator(build_state(7e3, 0.938, 0.938 * 208, 0.01), CouplingConfig())
print("strength:", value, "perturbative:", ok)
