"""Parameter sweeps producing the correlation-broadcasting curve data.

A sweep drives one machine over a one-parameter input family (Schmidt-form
pure states over alpha^2, or Werner states over x) and records fidelity,
concurrence, EoF and discord per grid point.  The CSV output is the figure
artifact: identical configs produce byte-identical files.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cloners import apply_machine, resolve_machine
from .correlations import report
from .states import PureSchmidtState, WernerState, as_x_state, pure_to_density, werner_to_density

FAMILIES = ("pure", "werner")
CSV_HEADER = "parameter,fidelity,concurrence,eof,discord,discord_branch"


@dataclass(frozen=True)
class SweepConfig:
    machine: str
    input_family: str = "pure"
    grid_points: int = 201
    output_path: str = "-"
    fmt: str = "csv"

    def __post_init__(self):
        if self.input_family not in FAMILIES:
            raise ValueError(f"input family must be one of {FAMILIES}, got {self.input_family!r}")
        if self.grid_points < 2:
            raise ValueError(f"grid_points must be >= 2, got {self.grid_points}")
        if self.fmt != "csv":
            raise ValueError(f"unsupported output format {self.fmt!r}")


@dataclass(frozen=True)
class CurveRow:
    parameter: float
    fidelity: float
    concurrence: float
    eof: float
    discord: float
    discord_branch: str


def family_grid(family: str, points: int) -> np.ndarray:
    if family == "pure":
        return np.linspace(0.0, 1.0, points)
    return np.linspace(-1.0, 1.0, points)


def input_density(family: str, parameter: float) -> np.ndarray:
    if family == "pure":
        return pure_to_density(PureSchmidtState.from_alpha_sq(parameter))
    return werner_to_density(WernerState(parameter))


def curve_row(machine, family: str, parameter: float) -> CurveRow:
    rho_in = input_density(family, parameter)
    rho_out = apply_machine(machine, rho_in)
    fidelity = float(np.trace(rho_in @ rho_out).real)
    rep = report(as_x_state(rho_out))
    return CurveRow(parameter, fidelity, rep.concurrence, rep.eof, rep.discord, rep.branch)


def sweep_rows(config: SweepConfig) -> list[CurveRow]:
    preset = resolve_machine(config.machine)
    return [
        curve_row(preset, config.input_family, float(p))
        for p in family_grid(config.input_family, config.grid_points)
    ]


def _fmt(value: float) -> str:
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return f"{value:.9g}"


def format_rows(rows: list[CurveRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    _fmt(r.parameter),
                    _fmt(r.fidelity),
                    _fmt(r.concurrence),
                    _fmt(r.eof),
                    _fmt(r.discord),
                    r.discord_branch,
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_csv(rows: list[CurveRow], path: str, stream=None) -> None:
    """Write formatted rows to ``path``, or to ``stream`` when path is '-'."""
    text = format_rows(rows)
    if path == "-":
        if stream is None:
            raise ValueError("path '-' requires an output stream")
        stream.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
