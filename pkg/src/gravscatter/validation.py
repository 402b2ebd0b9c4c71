"""Seeded invariant suites used by ``gravscatter selftest``.

Each suite returns the largest deviation it observed together with the
tolerance it is held to. Reports contain no timings, so a fixed seed gives a
byte-identical report.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import amplitude as amp
from . import cross_section as xs
from . import dirac
from .errors import KinematicsError
from .kinematics import build_state, energy_from_beta, lorentz_boost

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<28s} max_dev={self.max_deviation:.3e}  tol={self.tolerance:.1e}  {status}"


def random_states(rng, n, m_range=(0.1, 100.0), M_range=(0.1, 100.0),
                  energy_ratio_range=(1e-4, 1e2), theta_range=(1e-3, math.pi)):
    """Draw ``n`` valid states; masses and ``E/M`` log-uniform, angles uniform.

    Draws with ``E <= m`` or beyond the maximum angle (``m >= M``) are rejected.
    """
    lo_m, hi_m = np.log10(m_range)
    lo_M, hi_M = np.log10(M_range)
    lo_r, hi_r = np.log10(energy_ratio_range)
    states = []
    while len(states) < n:
        m = 10.0 ** rng.uniform(lo_m, hi_m)
        M = 10.0 ** rng.uniform(lo_M, hi_M)
        E = M * 10.0 ** rng.uniform(lo_r, hi_r)
        theta = rng.uniform(*theta_range)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        if E <= m:
            continue
        try:
            states.append(build_state(E, m, M, theta, phi))
        except KinematicsError:
            continue
    return states


def random_on_shell(rng, m, max_ratio=1e3):
    """Random momentum of mass ``m`` with ``|p| <= max_ratio * m`` (log-uniform size)."""
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    size = m * 10.0 ** rng.uniform(-3.0, np.log10(max_ratio))
    vec = size * direction
    return dirac.four_vector(math.hypot(m, size), *vec)


def _rel(a, b):
    return abs(a - b) / abs(b)


def clifford_suite():
    g = dirac.gamma_matrices()
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            anti = g[mu] @ g[nu] + g[nu] @ g[mu] - 2.0 * dirac.METRIC[mu, nu] * np.eye(4)
            worst = max(worst, float(np.abs(anti).max()))
    return SuiteResult("clifford_algebra", worst, 1e-15)


def spinor_suites(rng, n):
    residual = completeness = conservation = 0.0
    for _ in range(n):
        m = 10.0 ** rng.uniform(-1, 2)
        p = random_on_shell(rng, m)
        proj = dirac.energy_projector(p, m)
        outer = np.zeros((4, 4), dtype=complex)
        for s in dirac.SPINS:
            u = dirac.dirac_spinor(p, m, s)
            r = (dirac.feynman_slash(p) - m * np.eye(4)) @ u
            residual = max(residual, float(np.linalg.norm(r) / (m * np.linalg.norm(u))))
            outer += np.outer(u, dirac.adjoint_spinor(u))
        completeness = max(completeness, float(np.abs(outer - proj).max() / np.abs(proj).max()))
        k = random_on_shell(rng, m)
        for a in dirac.SPINS:
            for b in dirac.SPINS:
                J = dirac.bilinear_current(dirac.dirac_spinor(k, m, b), dirac.dirac_spinor(p, m, a))
                div = abs(dirac.minkowski_dot(k - p, J))
                conservation = max(conservation, float(div / (k[0] + p[0])))
    return [
        SuiteResult("dirac_equation_residual", residual, 1e-12),
        SuiteResult("spin_completeness", completeness, 1e-12),
        SuiteResult("current_conservation", conservation, 1e-12),
    ]


def four_slash_trace_suite(rng, n):
    worst = 0.0
    dot = dirac.minkowski_dot
    for _ in range(n):
        a, b, c, d = (rng.normal(size=4) for _ in range(4))
        numeric = dirac.trace(dirac.feynman_slash(a) @ dirac.feynman_slash(b)
                              @ dirac.feynman_slash(c) @ dirac.feynman_slash(d))
        closed = 4.0 * (dot(a, b) * dot(c, d) - dot(a, c) * dot(b, d) + dot(a, d) * dot(b, c))
        scale = 4.0 * (abs(dot(a, b) * dot(c, d)) + abs(dot(a, c) * dot(b, d)) + abs(dot(a, d) * dot(b, c)))
        worst = max(worst, abs(numeric - closed) / scale)
    return SuiteResult("four_slash_trace", worst, 1e-12)


def amplitude_suites(states, rng, coupling):
    trace_dev = form_dev = boost_dev = exchange_dev = closure = 0.0
    spins = (dirac.SpinLabel.UP, dirac.SpinLabel.DOWN, dirac.SpinLabel.DOWN, dirac.SpinLabel.UP)
    swapped = (spins[2], spins[3], spins[0], spins[1])
    for st in states:
        closure = max(closure, _rel(dirac.minkowski_square(st.q_f), st.M ** 2))
        msq = amp.spin_averaged_msq_trace(st, coupling)
        trace_dev = max(trace_dev, _rel(amp.spin_averaged_msq_bruteforce(st, coupling), msq))
        form_dev = max(form_dev, _rel(xs.dsigma_recoil_form(st, coupling).value,
                                      xs.dsigma(st, coupling).value))
        v = rng.normal(size=3)
        v *= 0.9 / np.linalg.norm(v)
        boosted = amp.msq_trace_from_momenta(*lorentz_boost(st, v), st.m, st.M, coupling)
        boost_dev = max(boost_dev, _rel(boosted, msq))
        direct = amp.matrix_element(st, spins, coupling)
        mirror = amp.invariant_amplitude(st.q_i, st.q_f, st.p_i, st.p_f, st.M, st.m, swapped, coupling)
        if direct != 0:
            exchange_dev = max(exchange_dev, abs(direct - mirror) / abs(direct))
    return [
        SuiteResult("kinematic_closure", closure, 1e-9),
        SuiteResult("trace_vs_bruteforce", trace_dev, 1e-10),
        SuiteResult("recoil_vs_energy_form", form_dev, 1e-9),
        SuiteResult("boost_invariance", boost_dev, 1e-9),
        SuiteResult("exchange_symmetry", exchange_dev, 1e-12),
    ]


def limit_chain_suites(coupling):
    M = 1.0
    thetas = (math.pi / 6, math.pi / 2, 5 * math.pi / 6)

    def full(E, m, theta):
        return xs.differential_cross_section(E, m, M, theta, coupling).value

    # Rutherford: E/M = 1e-5, v = 1e-2
    E = 1e-5 * M
    m = E * math.sqrt((1 - 1e-2) * (1 + 1e-2))
    ruth = max(_rel(full(E, m, th), xs.rutherford_limit(1e-2, th, M, coupling.G).value) for th in thetas)

    # Mott-like: deviation shrinks tenfold per decade of E/M, within a factor 2
    m = 1.0
    E = energy_from_beta(0.5, m)
    devs = []
    for ratio in (1e-2, 1e-3, 1e-4):
        heavy = E / ratio
        got = xs.differential_cross_section(E, m, heavy, math.pi / 2, coupling).value
        devs.append(abs(got / xs.mott_like_limit(0.5, math.pi / 2, heavy, coupling).value - 1.0))
    scaling = max(abs(math.log2(devs[k] / devs[k + 1] / 10.0)) for k in range(2))

    # Ultra-relativistic: m/E = 1e-5 at E/M = 0.5; then E/M -> 0 against beta = 1
    E = 0.5 * M
    ultra = _rel(full(E, 1e-5 * E, math.pi / 2),
                 xs.ultrarelativistic_limit(E, math.pi / 2, M, coupling).value)
    endpoint = max(_rel(xs.ultrarelativistic_limit(1e-5 * M, th, M, coupling).value,
                        xs.mott_like_limit(1.0, th, M, coupling).value) for th in thetas)
    return [
        SuiteResult("rutherford_recovery", ruth, 1e-3),
        SuiteResult("mott_like_scaling_log2", scaling, 1.0),
        SuiteResult("ultrarelativistic_limit", ultra, 1e-3),
        SuiteResult("ultrarel_to_mott_beta1", endpoint, 1e-4),
    ]


def run_suites(seed=DEFAULT_SEED, n_states=1000):
    rng = np.random.default_rng(seed)
    coupling = amp.CouplingConfig(G=1.0)
    results = [clifford_suite()]
    results += spinor_suites(rng, n_states)
    results.append(four_slash_trace_suite(rng, n_states))
    results += amplitude_suites(random_states(rng, n_states), rng, coupling)
    results += limit_chain_suites(coupling)
    return results


def selftest_report(seed=DEFAULT_SEED, n_states=1000):
    """Run every suite; return ``(report_text, all_passed)``."""
    results = run_suites(seed, n_states)
    ok = all(r.passed for r in results)
    lines = [f"gravscatter selftest  seed={seed}  states={n_states}"]
    lines += [r.line() for r in results]
    lines.append(f"overall: {'PASS' if ok else 'FAIL'} ({sum(r.passed for r in results)}/{len(results)} suites)")
    return "\n".join(lines) + "\n", ok
