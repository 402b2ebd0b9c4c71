import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gravscatter import dirac
from gravscatter.dirac import SPINS, SpinLabel
from gravscatter.errors import OffShellError, PhysicsError

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
vectors = st.tuples(finite, finite, finite, finite).map(np.array)


def test_minkowski_dot_basic():
    assert dirac.minkowski_dot([1, 0, 0, 0], [1, 0, 0, 0]) == 1
    E, p = 3.0, 2.0
    assert dirac.minkowski_dot([E, 0, 0, p], [E, 0, 0, p]) == E * E - p * p
    m = 1.7
    k = dirac.four_vector(np.hypot(m, 0.4), 0.1, -0.3, np.sqrt(0.4**2 - 0.1**2 - 0.3**2))
    assert dirac.minkowski_square(k) == pytest.approx(m * m, rel=1e-14)


@given(vectors)
def test_lowering_is_involution(a):
    np.testing.assert_array_equal(dirac.lower_index(dirac.lower_index(a)), a)


def test_four_vector_rejects_non_finite():
    with pytest.raises(ValueError):
        dirac.four_vector(np.nan, 0, 0, 0)


@pytest.mark.parametrize("rep", ["dirac", "chiral"])
def test_clifford_algebra(rep):
    g = dirac.gamma_matrices(rep)
    for mu, nu in itertools.product(range(4), repeat=2):
        anti = g[mu] @ g[nu] + g[nu] @ g[mu]
        assert np.abs(anti - 2 * dirac.METRIC[mu, nu] * np.eye(4)).max() <= 1e-15


def test_gamma_traces():
    for mu, nu in itertools.product(range(4), repeat=2):
        t = dirac.trace(dirac.gamma_matrix(mu) @ dirac.gamma_matrix(nu))
        assert t == 4 * dirac.METRIC[mu, nu]
    for mu in range(4):
        assert dirac.trace(dirac.gamma_matrix(mu)) == 0
    np.testing.assert_array_equal(dirac.gamma_matrix(0) @ dirac.gamma_matrix(0), np.eye(4))


@pytest.mark.parametrize("bad", [-1, 4, 1.0])
def test_gamma_index_out_of_range(bad):
    with pytest.raises(IndexError):
        dirac.gamma_matrix(bad)


def test_gamma_matrix_returns_copy():
    g = dirac.gamma_matrix(0)
    g[0, 0] = 7
    assert dirac.gamma_matrix(0)[0, 0] == 1


def test_slash_rest_frame_and_linearity():
    m = 2.5
    np.testing.assert_allclose(dirac.feynman_slash([m, 0, 0, 0]), m * dirac.gamma_matrix(0))
    a = np.array([1.0, 0.2, -0.5, 0.3])
    b = np.array([0.7, 1.1, 0.4, -2.0])
    np.testing.assert_allclose(dirac.feynman_slash(a + b),
                               dirac.feynman_slash(a) + dirac.feynman_slash(b), atol=1e-15)


@given(vectors)
@settings(max_examples=200)
def test_slash_squared_is_p_squared(p):
    s = dirac.feynman_slash(p)
    scale = max(1.0, float(p @ p))
    assert np.abs(s @ s - dirac.minkowski_square(p) * np.eye(4)).max() <= 1e-13 * scale


def test_rest_frame_spinors():
    m = 0.938
    rest = [m, 0, 0, 0]
    np.testing.assert_array_equal(dirac.dirac_spinor(rest, m, SpinLabel.UP), [1, 0, 0, 0])
    np.testing.assert_array_equal(dirac.dirac_spinor(rest, m, SpinLabel.DOWN), [0, 1, 0, 0])


def test_adjoint_examples():
    np.testing.assert_array_equal(dirac.adjoint_spinor(np.array([1, 0, 0, 0], complex)), [1, 0, 0, 0])
    np.testing.assert_array_equal(dirac.adjoint_spinor(np.array([0, 0, 1, 0], complex)), [0, 0, -1, 0])


def test_spinor_normalisation_and_orthogonality(momentum_pairs):
    for m, p, _ in momentum_pairs[:200]:
        for rep in ("dirac", "chiral"):
            u = {s: dirac.dirac_spinor(p, m, s, rep) for s in SPINS}
            for a, b in itertools.product(SPINS, repeat=2):
                overlap = dirac.adjoint_spinor(u[a], rep) @ u[b]
                assert abs(overlap - (a == b)) <= 1e-11 * p[0] / m


def test_boosted_spinor_residual():
    m = 1.0
    for pz in (0.1, 5.0, 1e3):
        p = dirac.four_vector(np.hypot(m, pz), 0, 0, pz)
        for s in SPINS:
            u = dirac.dirac_spinor(p, m, s)
            r = (dirac.feynman_slash(p) - m * np.eye(4)) @ u
            assert np.linalg.norm(r) <= 1e-12 * m * np.linalg.norm(u)


def test_dirac_residual_and_completeness_sample(momentum_pairs):
    for m, p, _ in momentum_pairs:
        proj = dirac.energy_projector(p, m)
        outer = np.zeros((4, 4), complex)
        for s in SPINS:
            u = dirac.dirac_spinor(p, m, s)
            r = (dirac.feynman_slash(p) - m * np.eye(4)) @ u
            assert np.linalg.norm(r) / (m * np.linalg.norm(u)) <= 1e-12
            outer += np.outer(u, dirac.adjoint_spinor(u))
        assert np.abs(outer - proj).max() <= 1e-12 * np.abs(proj).max()


@pytest.mark.parametrize("bad", [
    dict(p=[1.0, 0, 0, 0.5], m=1.0, exc=OffShellError),
    dict(p=[-1.0, 0, 0, 0], m=1.0, exc=PhysicsError),
    dict(p=[1.0, 0, 0, 0], m=0.0, exc=PhysicsError),
])
def test_spinor_errors(bad):
    with pytest.raises(bad["exc"]):
        dirac.dirac_spinor(bad["p"], bad["m"], SpinLabel.UP)


def test_current_rest_frame():
    m = 1.0
    rest = [m, 0, 0, 0]
    up = dirac.dirac_spinor(rest, m, SpinLabel.UP)
    down = dirac.dirac_spinor(rest, m, SpinLabel.DOWN)
    np.testing.assert_array_equal(dirac.bilinear_current(up, up), [1, 0, 0, 0])
    assert dirac.bilinear_current(down, down)[0] == dirac.bilinear_current(up, up)[0]


def test_current_conservation(momentum_pairs):
    for m, p, k in momentum_pairs:
        for a, b in itertools.product(SPINS, repeat=2):
            J = dirac.bilinear_current(dirac.dirac_spinor(k, m, b), dirac.dirac_spinor(p, m, a))
            assert abs(dirac.minkowski_dot(k - p, J)) <= 1e-12 * (k[0] + p[0])


def test_energy_projector():
    m = 1.3
    np.testing.assert_allclose(dirac.energy_projector([m, 0, 0, 0], m), np.diag([1, 1, 0, 0]))
    p = dirac.four_vector(np.sqrt(m**2 + 14.0), 1.0, 2.0, 3.0)
    P = dirac.energy_projector(p, m)
    assert np.abs(P @ P - P).max() <= 1e-12
    with pytest.raises(PhysicsError):
        dirac.energy_projector(p, 0.0)


def test_trace_examples():
    assert dirac.trace(np.eye(4)) == 4
    a = np.array([1.0, 0.3, -0.2, 0.5])
    b = np.array([2.0, -1.0, 0.4, 0.1])
    assert dirac.trace(dirac.feynman_slash(a) @ dirac.feynman_slash(b)) == pytest.approx(
        4 * dirac.minkowski_dot(a, b), rel=1e-14)


@given(vectors, vectors, vectors, vectors)
@settings(max_examples=300)
def test_four_slash_trace(a, b, c, d):
    dot = dirac.minkowski_dot
    s = [dirac.feynman_slash(v) for v in (a, b, c, d)]
    numeric = dirac.trace(s[0] @ s[1] @ s[2] @ s[3])
    terms = (dot(a, b) * dot(c, d), dot(a, c) * dot(b, d), dot(a, d) * dot(b, c))
    closed = 4 * (terms[0] - terms[1] + terms[2])
    scale = 4 * sum(abs(x) for x in terms)
    assert abs(numeric - closed) <= 1e-12 * scale + 1e-300
