"""Input-state families and representations for two-qubit systems.

Covers the Schmidt-form pure states alpha|00> + beta|11>, Werner states,
the Bloch (local vectors + correlation matrix) representation, and the
X-shaped density matrices that every cloner in this package produces.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import ATOL, I2, PAULIS, PSD_TOL, tensor, validate_density

# Off-pattern entries up to this size still count as X-shaped; cloner
# outputs are exactly X-shaped analytically, so this only absorbs roundoff.
X_PATTERN_TOL = 1e-10
XSTATE_TRACE_TOL = 1e-10

SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]],
    dtype=complex,
)


class UnphysicalStateError(ValueError):
    """A parameterization does not correspond to a valid density matrix."""


class NotXStateError(ValueError):
    """A density matrix has support outside the X pattern."""


@dataclass(frozen=True)
class PureSchmidtState:
    """Two-qubit pure state alpha|00> + beta|11| with real alpha, beta >= 0."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha <= 1.0 and 0.0 <= self.beta <= 1.0):
            raise ValueError(f"alpha, beta must lie in [0, 1], got ({self.alpha}, {self.beta})")
        norm = self.alpha**2 + self.beta**2
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"alpha^2 + beta^2 = {norm!r} != 1")

    @classmethod
    def from_alpha_sq(cls, alpha_sq: float) -> "PureSchmidtState":
        """State with the given alpha^2, beta = +sqrt(1 - alpha^2)."""
        if not 0.0 <= alpha_sq <= 1.0:
            raise ValueError(f"alpha^2 must lie in [0, 1], got {alpha_sq}")
        return cls(float(np.sqrt(alpha_sq)), float(np.sqrt(1.0 - alpha_sq)))

    def amplitudes(self) -> np.ndarray:
        return np.array([self.alpha, 0.0, 0.0, self.beta], dtype=complex)


@dataclass(frozen=True)
class WernerState:
    """One-parameter mixture of identity and swap, x in [-1, 1]."""

    x: float

    def __post_init__(self):
        if not -1.0 <= self.x <= 1.0:
            raise ValueError(f"Werner parameter must lie in [-1, 1], got {self.x}")


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors and 3x3 correlation matrix of a two-qubit state."""

    x_vec: np.ndarray
    y_vec: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x_vec", np.asarray(self.x_vec, dtype=float).reshape(3))
        object.__setattr__(self, "y_vec", np.asarray(self.y_vec, dtype=float).reshape(3))
        object.__setattr__(self, "t", np.asarray(self.t, dtype=float).reshape(3, 3))


@dataclass(frozen=True)
class XState:
    """The six independent real entries of an X-shaped density matrix.

    Diagonal (r11, r22, r33, r44) plus the anti-diagonal pair r14 = r41 and
    r23 = r32 (both real for every state handled here).
    """

    r11: float
    r22: float
    r33: float
    r44: float
    r14: float
    r23: float

    def __post_init__(self):
        diag = (self.r11, self.r22, self.r33, self.r44)
        if min(diag) < -XSTATE_TRACE_TOL:
            raise UnphysicalStateError(f"negative diagonal entry in {diag}")
        if abs(sum(diag) - 1.0) > XSTATE_TRACE_TOL:
            raise UnphysicalStateError(f"diagonal does not sum to 1: {sum(diag)!r}")
        if self.r14**2 > self.r11 * self.r44 + 1e-12:
            raise UnphysicalStateError(
                f"r14^2 = {self.r14 ** 2!r} exceeds r11*r44 = {self.r11 * self.r44!r}"
            )
        if self.r23**2 > self.r22 * self.r33 + 1e-12:
            raise UnphysicalStateError(
                f"r23^2 = {self.r23 ** 2!r} exceeds r22*r33 = {self.r22 * self.r33!r}"
            )

    def to_density(self) -> np.ndarray:
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3] = self.r11, self.r22, self.r33, self.r44
        rho[0, 3] = rho[3, 0] = self.r14
        rho[1, 2] = rho[2, 1] = self.r23
        return rho


def pure_to_density(state: PureSchmidtState) -> np.ndarray:
    """Rank-1 projector onto alpha|00> + beta|11>."""
    psi = state.amplitudes()
    return np.outer(psi, psi.conj())


def werner_to_density(state: WernerState) -> np.ndarray:
    """((2-x)/6) I + ((2x-1)/6) SWAP."""
    x = state.x
    return ((2.0 - x) / 6.0) * np.eye(4, dtype=complex) + ((2.0 * x - 1.0) / 6.0) * SWAP


def bloch_decompose(rho: np.ndarray) -> BlochForm:
    """Pauli expectation values x_i, y_i, t_ij of a two-qubit state."""
    rho = validate_density(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a two-qubit (4x4) operator, got shape {rho.shape}")
    x_vec = np.array([np.trace(rho @ tensor(s, I2)).real for s in PAULIS])
    y_vec = np.array([np.trace(rho @ tensor(I2, s)).real for s in PAULIS])
    t = np.array(
        [[np.trace(rho @ tensor(si, sj)).real for sj in PAULIS] for si in PAULIS]
    )
    return BlochForm(x_vec, y_vec, t)


def bloch_compose(form: BlochForm) -> np.ndarray:
    """Reassemble the density matrix from its Bloch components.

    Raises UnphysicalStateError when the components do not describe a
    positive semidefinite operator.
    """
    rho = np.eye(4, dtype=complex)
    for i, s in enumerate(PAULIS):
        rho += form.x_vec[i] * tensor(s, I2)
        rho += form.y_vec[i] * tensor(I2, s)
        for j, sj in enumerate(PAULIS):
            rho += form.t[i, j] * tensor(s, sj)
    rho /= 4.0
    eig_min = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if eig_min < -PSD_TOL:
        raise UnphysicalStateError(f"unphysical Bloch form: lambda_min = {eig_min:.3e}")
    return rho


def as_x_state(rho: np.ndarray) -> XState:
    """Extract the X-state entries, rejecting any off-pattern support."""
    rho = validate_density(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a two-qubit (4x4) operator, got shape {rho.shape}")
    x_positions = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in x_positions and abs(rho[i, j]) > X_PATTERN_TOL:
                raise NotXStateError(
                    f"entry ({i}, {j}) = {rho[i, j]!r} lies outside the X pattern"
                )
    for i, j in ((0, 3), (1, 2)):
        if abs(rho[i, j].imag) > X_PATTERN_TOL:
            raise NotXStateError(
                f"entry ({i}, {j}) has imaginary part {rho[i, j].imag:.3e}; real entries required"
            )
    return XState(
        r11=rho[0, 0].real,
        r22=rho[1, 1].real,
        r33=rho[2, 2].real,
        r44=rho[3, 3].real,
        r14=rho[0, 3].real,
        r23=rho[1, 2].real,
    )
