"""Dense complex linear algebra for small composite quantum systems.

Everything operates on plain numpy arrays: density operators are (d, d)
complex matrices, pure states are length-d complex vectors.  All spaces in
this package are at most 64-dimensional (the full two-sided cloner
simulation), so dense storage is used throughout.
"""
from __future__ import annotations

import numpy as np

# Default absolute tolerance for matrix/vector comparisons.
ATOL = 1e-12
# Density-operator invariants.
HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class InvalidStateError(ValueError):
    """A matrix or vector violates the required state invariants."""


def tensor(a: np.ndarray, b: np.ndarray, *rest: np.ndarray) -> np.ndarray:
    """Kronecker product of two or more operators."""
    out = np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
    for m in rest:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def mat_close(a: np.ndarray, b: np.ndarray, tol: float = ATOL) -> bool:
    """Entrywise equality within an absolute tolerance."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and float(np.max(np.abs(a - b))) <= tol


def validate_pure(psi: np.ndarray, name: str = "psi") -> np.ndarray:
    """Check unit norm and return the amplitudes as a complex vector."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    norm_sq = float(np.vdot(psi, psi).real)
    if abs(norm_sq - 1.0) > ATOL:
        raise InvalidStateError(f"{name} is not normalized: ||psi||^2 = {norm_sq!r}")
    return psi


def validate_density(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Check Hermiticity, unit trace and positivity of a density matrix.

    Returns the matrix as a complex array; raises InvalidStateError with a
    diagnostic naming the violated invariant otherwise.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"{name} must be square, got shape {rho.shape}")
    herm_dev = float(np.max(np.abs(rho - rho.conj().T)))
    if herm_dev > HERMITICITY_TOL:
        raise InvalidStateError(f"{name} is not Hermitian: max |rho - rho^dag| = {herm_dev:.3e}")
    trace_dev = abs(complex(np.trace(rho)) - 1.0)
    if trace_dev > TRACE_TOL:
        raise InvalidStateError(f"{name} does not have unit trace: |Tr - 1| = {trace_dev:.3e}")
    eig_min = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if eig_min < -PSD_TOL:
        raise InvalidStateError(f"{name} is not positive semidefinite: lambda_min = {eig_min:.3e}")
    return rho


def partial_trace(rho: np.ndarray, subsystem_dims: list[int], keep) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep``.

    Args:
        rho: operator on the full tensor-product space.
        subsystem_dims: dimension of each factor, in tensor order.
        keep: indices (0-based) of the subsystems to retain.

    Returns:
        The reduced operator on the kept subsystems, in ascending
        subsystem order.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in subsystem_dims]
    if any(d <= 0 for d in dims):
        raise ValueError(f"subsystem dims must be positive, got {dims}")
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(
            f"subsystem dims {dims} (product {total}) do not match matrix shape {rho.shape}"
        )
    keep = sorted({int(k) for k in keep})
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    work = rho.reshape(dims + dims)
    n = len(dims)
    # Trace from the highest index down so lower axis numbers stay valid.
    for idx in sorted(set(range(len(dims))) - set(keep), reverse=True):
        work = np.trace(work, axis1=idx, axis2=idx + n)
        n -= 1
    d_keep = int(np.prod([dims[i] for i in keep]))
    return work.reshape(d_keep, d_keep)


def eig_hermitian(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Returns (eigenvalues, eigenvectors) with eigenvectors as columns,
    column i pairing with eigenvalue i.
    """
    m = np.asarray(m, dtype=complex)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian: max |m - m^dag| = {herm_dev:.3e}")
    w, v = np.linalg.eigh((m + m.conj().T) / 2)
    return w[::-1], v[:, ::-1]


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -sum(lambda log2 lambda) in bits, with 0 log 0 := 0."""
    rho = validate_density(rho)
    w = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    # Eigenvalues in [-PSD_TOL, 0) are roundoff; validate_density already
    # rejected anything more negative.
    w = np.clip(w, 0.0, None)
    nz = w[w > 0]
    return max(float(-(nz * np.log2(nz)).sum()), 0.0)


def fidelity_pure(psi: np.ndarray, rho: np.ndarray) -> float:
    """Overlap <psi|rho|psi>, clamped to [0, 1]."""
    psi = validate_pure(psi)
    rho = validate_density(rho)
    if psi.shape[0] != rho.shape[0]:
        raise ValueError(f"dimension mismatch: state dim {psi.shape[0]}, operator dim {rho.shape[0]}")
    herm = (rho + rho.conj().T) / 2
    val = complex(np.vdot(psi, herm @ psi))
    if abs(val.imag) > ATOL:
        raise InvalidStateError(f"overlap has imaginary part {val.imag:.3e}")
    return min(max(val.real, 0.0), 1.0)
