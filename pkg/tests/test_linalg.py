import numpy as np
import pytest

from helpers import kron_oracle, partial_trace_oracle, random_density, random_pure, random_unitary
from qclone.linalg import (
    I2,
    SIGMA_X,
    SIGMA_Z,
    InvalidStateError,
    eig_hermitian,
    fidelity_pure,
    mat_close,
    partial_trace,
    tensor,
    validate_density,
    von_neumann_entropy,
)

BELL = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def bell_diagonal(t1, t2, t3):
    rho = np.eye(4, dtype=complex) / 4.0
    rho += t3 / 4.0 * np.diag([1.0, -1.0, -1.0, 1.0])
    rho[0, 3] += (t1 - t2) / 4.0
    rho[3, 0] += (t1 - t2) / 4.0
    rho[1, 2] += (t1 + t2) / 4.0
    rho[2, 1] += (t1 + t2) / 4.0
    return rho


class TestTensor:
    def test_identity(self):
        assert mat_close(tensor(I2, I2), np.eye(4))

    def test_sigma_z_pair(self):
        assert mat_close(tensor(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))

    def test_sigma_x_on_first_qubit(self):
        ket00 = np.array([1, 0, 0, 0], dtype=complex)
        ket10 = np.array([0, 0, 1, 0], dtype=complex)
        assert mat_close(tensor(SIGMA_X, I2) @ ket00, ket10)

    def test_matches_index_enumeration(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        b = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
        assert mat_close(tensor(a, b), kron_oracle(a, b))

    def test_trace_multiplicative(self):
        rng = np.random.default_rng(8)
        a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert abs(np.trace(tensor(a, b)) - np.trace(a) * np.trace(b)) < 1e-12

    def test_associative(self):
        rng = np.random.default_rng(9)
        mats = [rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(3)]
        assert mat_close(tensor(tensor(mats[0], mats[1]), mats[2]), tensor(mats[0], mats[1], mats[2]))


class TestPartialTrace:
    def test_product_state(self):
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 1.0
        assert mat_close(partial_trace(rho, [2, 2], keep=[0]), [[1, 0], [0, 0]])

    def test_bell_reduction(self):
        rho = np.outer(BELL, BELL.conj())
        assert mat_close(partial_trace(rho, [2, 2], keep=[0]), np.eye(2) / 2)
        assert mat_close(partial_trace(rho, [2, 2], keep=[1]), np.eye(2) / 2)

    def test_three_qubit_cloner_state(self):
        # One side of the universal machine on |0>: a|000> + b|011> + b|101>
        # with a = 1/sqrt(2), b = 1/2; first qubit reduces to diag(3/4, 1/4).
        psi = np.zeros(8, dtype=complex)
        psi[0b000] = 1 / np.sqrt(2)
        psi[0b011] = 0.5
        psi[0b101] = 0.5
        rho = np.outer(psi, psi.conj())
        reduced = partial_trace(rho, [2, 2, 2], keep=[0])
        assert mat_close(reduced, np.diag([0.75, 0.25]), tol=1e-12)
        assert mat_close(reduced, partial_trace_oracle(rho, [2, 2, 2], [0]))

    def test_matches_enumeration_oracle(self):
        rng = np.random.default_rng(11)
        rho = random_density(rng, 8)
        for keep in ([0], [1], [2], [0, 2], [1, 2], [0, 1, 2]):
            assert mat_close(
                partial_trace(rho, [2, 2, 2], keep=keep),
                partial_trace_oracle(rho, [2, 2, 2], keep),
            )

    def test_mixed_dims(self):
        rng = np.random.default_rng(12)
        rho = random_density(rng, 12)
        for keep in ([0], [1], [2], [0, 1]):
            assert mat_close(
                partial_trace(rho, [2, 3, 2], keep=keep),
                partial_trace_oracle(rho, [2, 3, 2], keep),
            )

    def test_order_independent(self):
        rng = np.random.default_rng(13)
        rho = random_density(rng, 8)
        step1 = partial_trace(rho, [2, 2, 2], keep=[0, 2])
        two_step = partial_trace(step1, [2, 2], keep=[0])
        direct = partial_trace(rho, [2, 2, 2], keep=[0])
        assert mat_close(two_step, direct)

    def test_trace_preserved(self):
        rng = np.random.default_rng(14)
        rho = random_density(rng, 8)
        reduced = partial_trace(rho, [2, 2, 2], keep=[1])
        assert abs(np.trace(reduced) - 1.0) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="do not match"):
            partial_trace(np.eye(4) / 4, [2, 3], keep=[0])

    def test_empty_keep(self):
        with pytest.raises(ValueError, match="at least one"):
            partial_trace(np.eye(4) / 4, [2, 2], keep=[])

    def test_keep_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            partial_trace(np.eye(4) / 4, [2, 2], keep=[3])


class TestEigHermitian:
    def test_diagonal(self):
        w, _ = eig_hermitian(np.diag([0.3, 0.7]).astype(complex))
        assert np.allclose(w, [0.7, 0.3])

    def test_pauli_spectrum(self):
        w, _ = eig_hermitian(SIGMA_X)
        assert np.allclose(w, [1.0, -1.0])

    @pytest.mark.parametrize(
        "t,expected",
        [
            # char-poly oracle below confirms both spectra
            (-1.0 / 3.0, [0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0]),
            (1.0 / 3.0, [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0]),
        ],
    )
    def test_bell_diagonal_spectrum(self, t, expected):
        m = bell_diagonal(t, t, t)
        w, _ = eig_hermitian(m)
        assert np.allclose(w, expected, atol=1e-12)
        # independent check: roots of the characteristic polynomial
        roots = np.sort(np.roots(np.poly(m)).real)[::-1]
        assert np.allclose(roots, expected, atol=1e-9)

    def test_eigenpairs(self):
        rng = np.random.default_rng(15)
        m = random_density(rng, 4)
        w, v = eig_hermitian(m)
        for i in range(4):
            assert np.linalg.norm(m @ v[:, i] - w[i] * v[:, i]) < 1e-9
        assert all(w[i] >= w[i + 1] for i in range(3))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="not Hermitian"):
            eig_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))


class TestEntropy:
    def test_pure(self):
        psi = np.array([1, 0, 0, 0], dtype=complex)
        assert von_neumann_entropy(np.outer(psi, psi)) == 0.0

    def test_maximally_mixed(self):
        assert abs(von_neumann_entropy(np.eye(4) / 4) - 2.0) < 1e-12

    def test_two_equal_eigenvalues(self):
        assert abs(von_neumann_entropy(np.diag([0.5, 0.5, 0, 0]).astype(complex)) - 1.0) < 1e-12

    def test_unitary_invariance(self):
        rng = np.random.default_rng(16)
        for _ in range(10):
            rho = random_density(rng, 4)
            u = random_unitary(rng, 4)
            s1 = von_neumann_entropy(rho)
            s2 = von_neumann_entropy(u @ rho @ u.conj().T)
            assert abs(s1 - s2) < 1e-9

    def test_range(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            s = von_neumann_entropy(random_density(rng, 4))
            assert 0.0 <= s <= 2.0 + 1e-12


class TestFidelityPure:
    def test_identical(self):
        psi = np.array([1, 0, 0, 0], dtype=complex)
        assert fidelity_pure(psi, np.outer(psi, psi)) == 1.0

    def test_orthogonal(self):
        psi = np.array([1, 0, 0, 0], dtype=complex)
        phi = np.array([0, 0, 0, 1], dtype=complex)
        assert fidelity_pure(psi, np.outer(phi, phi)) == 0.0

    def test_maximally_mixed(self):
        assert abs(fidelity_pure(BELL, np.eye(4) / 4) - 0.25) < 1e-12

    def test_own_projector(self):
        rng = np.random.default_rng(18)
        for _ in range(20):
            psi = random_pure(rng, 4)
            assert abs(fidelity_pure(psi, np.outer(psi, psi.conj())) - 1.0) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            fidelity_pure(np.array([1, 0]), np.eye(4) / 4)


class TestValidateDensity:
    def test_rejects_non_hermitian(self):
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = 0.1
        with pytest.raises(InvalidStateError, match="Hermitian"):
            validate_density(m)

    def test_rejects_bad_trace(self):
        with pytest.raises(InvalidStateError, match="trace"):
            validate_density(np.eye(4, dtype=complex))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidStateError, match="positive semidefinite"):
            validate_density(np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex))

    def test_accepts_valid(self):
        rng = np.random.default_rng(19)
        validate_density(random_density(rng, 4))
