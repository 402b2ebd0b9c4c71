"""
Recoil kinematics
=================

How much energy does the light particle lose, and when does the heavy one
stop being heavy?
"""
import numpy as np

from gravscatter.kinematics import build_state, energy_loss, max_scattering_angle, scattered_energy

# a proton bouncing off a lead nucleus barely loses anything
E, m, M = 2.0, 0.938, 193.7
for theta in (0.1, np.pi / 2, np.pi):
    print(f"theta={theta:6.3f}  E'={scattered_energy(E, m, M, theta):.12f}  "
          f"E-E'={energy_loss(E, m, M, theta):.3e}")

# the loss is computed directly, so it survives even where E - E' rounds to zero
print("tiny angle loss:", energy_loss(E, m, M, 1e-7), " naive:", E - scattered_energy(E, m, M, 1e-7))

# a heavy projectile cannot scatter past arcsin(M/m)
print("max angle for m=2, M=1:", max_scattering_angle(2.0, 1.0))

st = build_state(E, m, M, 1.0, phi=0.3)
total_in = st.p_i + st.q_i
total_out = st.p_f + st.q_f
print("four-momentum balance:", total_out - total_in)
