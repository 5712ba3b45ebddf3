"""Two-qubit Pauli channels used as fidelity references for the cloners.

A channel is a weight table over the 16 conjugations by sigma_i (x) sigma_j
(including the identity); conjugations are computed on demand.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import I2, PAULIS, fidelity_pure, tensor, validate_density
from .states import PureSchmidtState, pure_to_density

WEIGHT_NORM_TOL = 1e-12


@dataclass(frozen=True)
class PauliChannelParams:
    """Weights (s, p_i, q_i, t_ij); must be nonnegative and sum to 1."""

    s: float
    p: np.ndarray
    q: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", np.asarray(self.p, dtype=float).reshape(3))
        object.__setattr__(self, "q", np.asarray(self.q, dtype=float).reshape(3))
        object.__setattr__(self, "t", np.asarray(self.t, dtype=float).reshape(3, 3))
        if self.s < 0 or self.p.min() < 0 or self.q.min() < 0 or self.t.min() < 0:
            raise ValueError("all channel weights must be nonnegative")
        total = self.s + self.p.sum() + self.q.sum() + self.t.sum()
        if abs(total - 1.0) > WEIGHT_NORM_TOL:
            raise ValueError(f"channel weights sum to {total!r}, expected 1")


def identity_channel() -> PauliChannelParams:
    return PauliChannelParams(1.0, np.zeros(3), np.zeros(3), np.zeros((3, 3)))


def one_pauli(s: float) -> PauliChannelParams:
    """Channel with p3 = q3 = t33 = (1 - s)/3 and no other Pauli weight."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    w = (1.0 - s) / 3.0
    p = np.array([0.0, 0.0, w])
    t = np.zeros((3, 3))
    t[2, 2] = w
    return PauliChannelParams(s, p, p.copy(), t)


def two_pauli(s: float) -> PauliChannelParams:
    """Channel with weight (1 - s)/8 on each sigma_1/sigma_3 conjugation."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    w = (1.0 - s) / 8.0
    p = np.array([w, 0.0, w])
    t = np.zeros((3, 3))
    for i in (0, 2):
        for j in (0, 2):
            t[i, j] = w
    return PauliChannelParams(s, p, p.copy(), t)


def apply_pauli_channel(params: PauliChannelParams, rho_in: np.ndarray) -> np.ndarray:
    """Weighted sum of the 16 Pauli conjugations of rho_in."""
    rho_in = validate_density(rho_in)
    if rho_in.shape != (4, 4):
        raise ValueError(f"expected a two-qubit (4x4) operator, got shape {rho_in.shape}")
    out = params.s * rho_in
    for i, sigma in enumerate(PAULIS):
        if params.p[i] != 0.0:
            op = tensor(sigma, I2)
            out = out + params.p[i] * (op @ rho_in @ op)
        if params.q[i] != 0.0:
            op = tensor(I2, sigma)
            out = out + params.q[i] * (op @ rho_in @ op)
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            if params.t[i, j] != 0.0:
                op = tensor(si, sj)
                out = out + params.t[i, j] * (op @ rho_in @ op)
    return out


def channel_fidelity(params: PauliChannelParams, state: PureSchmidtState) -> float:
    """Overlap of a Schmidt-form pure input with the channel output."""
    rho_out = apply_pauli_channel(params, pure_to_density(state))
    return fidelity_pure(state.amplitudes(), rho_out)
