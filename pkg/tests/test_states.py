import numpy as np
import pytest
from numpy.testing import assert_allclose

from su2discord.angular import coupling_unitary
from su2discord.linalg import DensityMatrix, hermitian_eigenvalues, partial_trace
from su2discord.states import (
    SU2State,
    build_product_basis,
    build_total_basis,
    reduced_states,
    rotation,
    spin_matrices,
    state_spectrum,
    total_spin,
)

F_VALUES = [0.0, 0.25, 0.5, 0.9, 1.0]
TWO_JS = [1, 2, 3, 4, 9, 49]


def thresholds(two_j):
    return [two_j / (2 * (two_j + 1)), two_j / (two_j + 1)]


class TestConstruction:
    @pytest.mark.parametrize("two_j, f", [(0, 0.5), (1, -0.1), (1, 1.5), (2.5, 0.5)])
    def test_invalid(self, two_j, f):
        with pytest.raises(ValueError):
            SU2State(two_j, f)

    def test_singlet_total_basis(self):
        rho = build_total_basis(SU2State(1, 1.0))
        assert_allclose(rho.mat, np.diag([0, 0, 0, 1]))

    def test_maximally_mixed_at_discord_zero(self):
        assert_allclose(build_total_basis(SU2State(1, 0.25)).mat, np.eye(4) / 4, atol=1e-16)

    def test_three_halves(self):
        diag = np.diag(build_total_basis(SU2State(3, 0.5)).mat).real
        assert_allclose(diag[:5], 1 / 10)
        assert_allclose(diag[5:], 1 / 6)

    def test_singlet_product_basis(self):
        rho = build_product_basis(SU2State(1, 1.0)).mat
        expect = np.zeros((4, 4))
        expect[1, 1] = expect[2, 2] = 0.5
        expect[1, 2] = expect[2, 1] = -0.5
        assert_allclose(rho, expect, atol=1e-15)

    def test_triplet_product_basis(self):
        psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
        expect = (np.eye(4) - np.outer(psi, psi)) / 3
        assert_allclose(build_product_basis(SU2State(1, 0.0)).mat, expect, atol=1e-15)

    @pytest.mark.parametrize("two_j", TWO_JS)
    @pytest.mark.parametrize("f", F_VALUES)
    def test_product_is_rotated_total(self, two_j, f):
        s = SU2State(two_j, f)
        u = coupling_unitary(two_j)
        assert_allclose(build_product_basis(s).mat, u @ build_total_basis(s).mat @ u.T, atol=1e-12)

    @pytest.mark.parametrize("two_j", TWO_JS)
    def test_density_matrix_invariants(self, two_j):
        for f in F_VALUES + thresholds(two_j):
            rho = build_product_basis(SU2State(two_j, f))
            # re-validate through the constructor checks
            DensityMatrix(rho.mat, rho.dim_a, rho.dim_b)
            assert abs(np.trace(rho.mat) - 1) <= 1e-12


class TestSpectrum:
    @pytest.mark.parametrize("two_j, f, expect", [
        (1, 1.0, [1, 0, 0, 0]),
        (3, 3 / 8, [1 / 8] * 8),
        (2, 0.5, [1 / 4] * 2 + [1 / 8] * 4),
    ])
    def test_values(self, two_j, f, expect):
        assert_allclose(state_spectrum(SU2State(two_j, f)), expect, atol=1e-15)

    @pytest.mark.parametrize("two_j", TWO_JS)
    @pytest.mark.parametrize("f", F_VALUES)
    def test_matches_eigensolver(self, two_j, f):
        s = SU2State(two_j, f)
        assert_allclose(hermitian_eigenvalues(build_product_basis(s)), state_spectrum(s), atol=1e-10)


class TestReduced:
    @pytest.mark.parametrize("two_j, f", [(1, 0.1), (1, 0.9), (9, 0.3), (4, 1.0)])
    def test_marginals(self, two_j, f):
        s = SU2State(two_j, f)
        ra, rb = reduced_states(s)
        assert_allclose(ra, np.eye(two_j + 1) / (two_j + 1))
        assert_allclose(rb, np.eye(2) / 2)
        rho = build_product_basis(s)
        assert_allclose(partial_trace(rho, "A"), ra, atol=1e-14)
        assert_allclose(partial_trace(rho, "B"), rb, atol=1e-14)
        assert np.trace(ra).real == pytest.approx(1)
        assert np.trace(rb).real == pytest.approx(1)


class TestSymmetry:
    @pytest.mark.parametrize("two_j", [1, 2, 3, 9])
    def test_spin_algebra(self, two_j):
        sx, sy, sz = spin_matrices(two_j)
        assert_allclose(sx @ sy - sy @ sx, 1j * sz, atol=1e-12)
        j = two_j / 2
        assert_allclose(sx @ sx + sy @ sy + sz @ sz, j * (j + 1) * np.eye(two_j + 1), atol=1e-12)

    @pytest.mark.parametrize("two_j", [1, 2, 3, 9])
    def test_rotation_invariance(self, two_j):
        rng = np.random.default_rng(two_j)
        for f in (0.2, 0.7, 1.0):
            rho = build_product_basis(SU2State(two_j, f)).mat
            for _ in range(20):
                axis, angle = rng.normal(size=3), rng.uniform(0, 4 * np.pi)
                u = np.kron(rotation(two_j, axis, angle), rotation(1, axis, angle))
                assert_allclose(u @ rho @ u.conj().T, rho, atol=1e-10)

    @pytest.mark.parametrize("two_j", [1, 2, 3, 9])
    def test_commutes_with_total_spin(self, two_j):
        jx, jy, jz = total_spin(two_j)
        rho = build_product_basis(SU2State(two_j, 0.8)).mat
        for comp in (jx, jy, jz):
            assert_allclose(rho @ comp - comp @ rho, 0, atol=1e-10)

    def test_generic_state_is_not_invariant(self):
        # guards against a vacuous invariance check
        rho = np.kron(np.diag([1.0, 0, 0]), np.eye(2) / 2)
        u = np.kron(rotation(2, [1, 0, 0], 0.3), rotation(1, [1, 0, 0], 0.3))
        assert np.max(abs(u @ rho @ u.conj().T - rho)) > 1e-3
