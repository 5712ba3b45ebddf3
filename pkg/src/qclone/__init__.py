"""Two-qubit cloning machines, Pauli channels and correlation broadcasting."""

from .channels import PauliChannelParams, apply_pauli_channel, channel_fidelity, one_pauli, two_pauli
from .cloners import (
    LOCAL_BH,
    MACHINE_NAMES,
    ONE_PAULI_LIKE,
    PRESETS,
    TWO_PAULI_LIKE,
    UNIVERSAL,
    MachineCoefficients,
    MachinePreset,
    NonLocalBHSpec,
    UnknownMachineError,
    apply_local_cloner,
    apply_machine,
    apply_nonlocal_bh,
    apply_single_qubit,
    average_fidelity,
    full_unitary_oracle,
    machine_fidelity,
    resolve_machine,
    single_qubit_shrink,
)
from .correlations import (
    CorrelationReport,
    DiscordIntermediates,
    bell_diag_concurrence_closed,
    bell_diag_discord_closed,
    concurrence_wootters,
    concurrence_x,
    discord_oracle,
    discord_x,
    eof,
    report,
    werner_concurrence_closed,
    werner_discord_closed,
)
from .linalg import (
    InvalidStateError,
    eig_hermitian,
    fidelity_pure,
    partial_trace,
    tensor,
    validate_density,
    von_neumann_entropy,
)
from .states import (
    BlochForm,
    NotXStateError,
    PureSchmidtState,
    UnphysicalStateError,
    WernerState,
    XState,
    as_x_state,
    bloch_compose,
    bloch_decompose,
    pure_to_density,
    werner_to_density,
)
from .sweep import CurveRow, SweepConfig, curve_row, sweep_rows

__version__ = "0.1.0"
