"""Symmetric 1-to-2 cloning machines for qubit pairs.

A local machine is fixed by amplitudes (|a|, |b|, |c|) of the symmetric
transformation

    U|0>|0>|X> = |a| |00>|A>  + |b| (|01> + |10>) |B>  + |c| |11>|C>
    U|1>|0>|X> = |a| |11>|A'> + |b| (|10> + |01>) |B'> + |c| |00>|C'>

applied by each party to its own qubit.  With c = 0 and the overlap
parameter mu = Re(<A|B'> + <B|A'>)^2 saturated at 4, the reduced clone-pair
state is a diagonal Bloch map: x and y components scale by 2|a||b|, z by
|a|^2, and the correlation matrix entries by the product of the per-axis
factors.  ``full_unitary_oracle`` rebuilds the same output from the explicit
six-qubit pure state and serves as the independent check on that map.

The non-local Buzek-Hillery cloner treats the pair as a single 4-level
system; its clone reduction is the depolarizing map 0.6 rho + 0.1 I.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import fidelity_pure, partial_trace, validate_density
from .states import BlochForm, PureSchmidtState, bloch_compose, bloch_decompose, pure_to_density

COEFF_NORM_TOL = 1e-12

SQRT79 = math.sqrt(79.0)


class UnknownMachineError(ValueError):
    """A machine name not present in the preset registry."""

    def __init__(self, name: str, valid: tuple[str, ...]):
        self.name = name
        self.valid_names = valid
        super().__init__(f"unknown machine {name!r}; valid machines: {', '.join(valid)}")


@dataclass(frozen=True)
class MachineCoefficients:
    """Amplitudes (|a|, |b|, |c|) plus the ancilla-overlap parameter mu.

    Normalization |a|^2 + 2|b|^2 + |c|^2 = 1 is enforced; every preset has
    c = 0, mu = 4.
    """

    a_abs: float
    b_abs: float
    c_abs: float = 0.0
    mu: float = 4.0

    def __post_init__(self):
        for label, val in (("a", self.a_abs), ("b", self.b_abs), ("c", self.c_abs)):
            if not 0.0 <= val <= 1.0:
                raise ValueError(f"|{label}| must lie in [0, 1], got {val}")
        if not 0.0 <= self.mu <= 4.0:
            raise ValueError(f"mu must lie in [0, 4], got {self.mu}")
        norm = self.a_abs**2 + 2 * self.b_abs**2 + self.c_abs**2
        if abs(norm - 1.0) > COEFF_NORM_TOL:
            raise ValueError(f"|a|^2 + 2|b|^2 + |c|^2 = {norm!r} != 1")

    @classmethod
    def from_b_sq(cls, b_sq: float) -> "MachineCoefficients":
        """c = 0 machine with the given |b|^2 (so |a|^2 = 1 - 2|b|^2)."""
        if not 0.0 <= b_sq <= 0.5:
            raise ValueError(f"|b|^2 must lie in [0, 1/2], got {b_sq}")
        return cls(math.sqrt(1.0 - 2.0 * b_sq), math.sqrt(b_sq))


@dataclass(frozen=True)
class NonLocalBHSpec:
    """Coefficients of the M-dimensional Buzek-Hillery transformation."""

    m_dim: int = 4
    c_coef: float = field(init=False)
    d_coef: float = field(init=False)

    def __post_init__(self):
        if self.m_dim < 2:
            raise ValueError(f"Hilbert-space dimension must be >= 2, got {self.m_dim}")
        object.__setattr__(self, "c_coef", math.sqrt(2.0 / (self.m_dim + 1)))
        object.__setattr__(self, "d_coef", math.sqrt(1.0 / (2.0 * (self.m_dim + 1))))

    @property
    def bloch_shrink(self) -> float:
        """Uniform Bloch-vector scale of the clone reduction, (M+2)/(2(M+1))."""
        return (self.m_dim + 2) / (2.0 * (self.m_dim + 1))


@dataclass(frozen=True)
class MachinePreset:
    """Named machine: either local coefficients or a depolarizing shrink."""

    name: str
    coefficients: MachineCoefficients | None = None
    depolarizing_shrink: float | None = None

    def __post_init__(self):
        if (self.coefficients is None) == (self.depolarizing_shrink is None):
            raise ValueError("exactly one of coefficients / depolarizing_shrink must be set")

    @property
    def is_local(self) -> bool:
        return self.coefficients is not None


LOCAL_BH = MachineCoefficients(math.sqrt(2.0 / 3.0), math.sqrt(1.0 / 6.0))
UNIVERSAL = MachineCoefficients(1.0 / math.sqrt(2.0), 0.5)
ONE_PAULI_LIKE = MachineCoefficients(1.0, 0.0)
TWO_PAULI_LIKE = MachineCoefficients(
    math.sqrt((4.0 + SQRT79) / 21.0), math.sqrt((17.0 - SQRT79) / 42.0)
)
NONLOCAL_BH = NonLocalBHSpec(m_dim=4)

PRESETS: dict[str, MachinePreset] = {
    "local-bh": MachinePreset("local-bh", coefficients=LOCAL_BH),
    "universal": MachinePreset("universal", coefficients=UNIVERSAL),
    "one-pauli-like": MachinePreset("one-pauli-like", coefficients=ONE_PAULI_LIKE),
    "two-pauli-like": MachinePreset("two-pauli-like", coefficients=TWO_PAULI_LIKE),
    "nonlocal-bh": MachinePreset("nonlocal-bh", depolarizing_shrink=NONLOCAL_BH.bloch_shrink),
}

MACHINE_NAMES = tuple(PRESETS)


def resolve_machine(machine) -> MachinePreset:
    """Accept a preset name, a MachinePreset, or bare MachineCoefficients."""
    if isinstance(machine, MachinePreset):
        return machine
    if isinstance(machine, MachineCoefficients):
        return MachinePreset("custom", coefficients=machine)
    if isinstance(machine, str):
        try:
            return PRESETS[machine]
        except KeyError:
            raise UnknownMachineError(machine, MACHINE_NAMES) from None
    raise TypeError(f"cannot interpret {machine!r} as a cloning machine")


def _require_c_zero(m: MachineCoefficients) -> None:
    if m.c_abs > COEFF_NORM_TOL:
        raise ValueError(f"operation requires c = 0, got |c| = {m.c_abs}")


def single_qubit_shrink(m: MachineCoefficients) -> tuple[float, float]:
    """Bloch scale factors (lambda_xy, lambda_z) = (2|a||b|, |a|^2) of one side."""
    _require_c_zero(m)
    return 2.0 * m.a_abs * m.b_abs, m.a_abs**2


def apply_single_qubit(m: MachineCoefficients, rho: np.ndarray) -> np.ndarray:
    """Clone reduction of the machine acting on a single qubit state."""
    rho = validate_density(rho)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a qubit (2x2) operator, got shape {rho.shape}")
    lam_xy, lam_z = single_qubit_shrink(m)
    bloch = np.array(
        [
            (rho[0, 1] + rho[1, 0]).real,
            (1j * (rho[0, 1] - rho[1, 0])).real,
            (rho[0, 0] - rho[1, 1]).real,
        ]
    )
    bloch *= np.array([lam_xy, lam_xy, lam_z])
    out = np.array(
        [
            [1.0 + bloch[2], bloch[0] - 1j * bloch[1]],
            [bloch[0] + 1j * bloch[1], 1.0 - bloch[2]],
        ],
        dtype=complex,
    )
    return out / 2.0


def apply_local_cloner(m: MachineCoefficients, rho_in: np.ndarray) -> np.ndarray:
    """Reduced clone-pair state of both parties cloning locally.

    Routes through Bloch space: per-axis factors lambda = (2ab, 2ab, a^2)
    scale the local vectors, and t'_ij = lambda_i lambda_j t_ij.
    """
    _require_c_zero(m)
    form = bloch_decompose(rho_in)
    lam = np.array([2.0 * m.a_abs * m.b_abs, 2.0 * m.a_abs * m.b_abs, m.a_abs**2])
    scaled = BlochForm(lam * form.x_vec, lam * form.y_vec, np.outer(lam, lam) * form.t)
    # Valid coefficients always produce a physical state; bloch_compose
    # re-checks and would surface any internal inconsistency.
    return bloch_compose(scaled)


def apply_nonlocal_bh(rho_in: np.ndarray) -> np.ndarray:
    """Clone reduction of the M=4 Buzek-Hillery machine: 0.6 rho + 0.1 I."""
    rho_in = validate_density(rho_in)
    if rho_in.shape != (4, 4):
        raise ValueError(f"expected a two-qubit (4x4) operator, got shape {rho_in.shape}")
    eta = NONLOCAL_BH.bloch_shrink
    return eta * rho_in + (1.0 - eta) / 4.0 * np.eye(4, dtype=complex)


def apply_machine(machine, rho_in: np.ndarray) -> np.ndarray:
    """Apply a preset (or coefficients) to a two-qubit state."""
    preset = resolve_machine(machine)
    if preset.is_local:
        return apply_local_cloner(preset.coefficients, rho_in)
    return apply_nonlocal_bh(rho_in)


def _clone_isometry(m: MachineCoefficients) -> np.ndarray:
    """8x2 isometry of one side: input qubit -> (clone1, clone2, ancilla).

    Ancilla basis |A> = |0>, |A_perp> = |1> with |B> = |A'> = |A_perp> and
    |B'> = |A>; this is the identification that saturates mu = 4.
    """
    v = np.zeros((8, 2), dtype=complex)
    a, b = m.a_abs, m.b_abs
    v[0b000, 0] = a  # |00>|A>
    v[0b011, 0] = b  # |01>|A_perp>
    v[0b101, 0] = b  # |10>|A_perp>
    v[0b111, 1] = a  # |11>|A_perp>
    v[0b100, 1] = b  # |10>|A>
    v[0b010, 1] = b  # |01>|A>
    return v


def full_unitary_oracle(
    m: MachineCoefficients, state: PureSchmidtState, pair: int = 1
) -> np.ndarray:
    """Clone-pair state computed from the explicit six-qubit pure state.

    Builds (input + blank + ancilla) per side, applies the transformation on
    each side, and traces out both ancillas and the other clone pair.  Used
    as the independent oracle for ``apply_local_cloner``.
    """
    _require_c_zero(m)
    if abs(m.mu - 4.0) > COEFF_NORM_TOL:
        raise ValueError(f"the oracle's ancilla basis realizes mu = 4, got mu = {m.mu}")
    if pair not in (1, 2):
        raise ValueError(f"pair must be 1 or 2, got {pair}")
    v = _clone_isometry(m)
    # Qubit order: [a1, a2, machine_A, b1, b2, machine_B].
    psi = state.alpha * np.kron(v[:, 0], v[:, 0]) + state.beta * np.kron(v[:, 1], v[:, 1])
    rho_full = np.outer(psi, psi.conj())
    keep = [0, 3] if pair == 1 else [1, 4]
    return partial_trace(rho_full, [2] * 6, keep)


def machine_fidelity(machine, state: PureSchmidtState) -> float:
    """Overlap of the pure input with the machine's clone-pair output."""
    rho_out = apply_machine(machine, pure_to_density(state))
    return fidelity_pure(state.amplitudes(), rho_out)


def _adaptive_simpson(f, a, fa, b, fb, c, fc, whole, tol, depth):
    d = (a + c) / 2.0
    e = (c + b) / 2.0
    fd, fe = f(d), f(e)
    left = (c - a) / 6.0 * (fa + 4.0 * fd + fc)
    right = (b - c) / 6.0 * (fc + 4.0 * fe + fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
        return left + right + (left + right - whole) / 15.0
    return _adaptive_simpson(f, a, fa, c, fc, d, fd, left, tol / 2.0, depth - 1) + _adaptive_simpson(
        f, c, fc, b, fb, e, fe, right, tol / 2.0, depth - 1
    )


def average_fidelity(machine, tol: float = 1e-8) -> float:
    """Fidelity averaged over alpha^2 in [0, 1] by adaptive Simpson."""
    preset = resolve_machine(machine)

    def f(u: float) -> float:
        return machine_fidelity(preset, PureSchmidtState.from_alpha_sq(u))

    fa, fb = f(0.0), f(1.0)
    fc = f(0.5)
    whole = (fa + 4.0 * fc + fb) / 6.0
    return _adaptive_simpson(f, 0.0, fa, 1.0, fb, 0.5, fc, whole, tol, depth=30)
