"""Verification suites: constants, oracle cross-checks, optimizer results.

Each check compares a computed value against its expected value at a fixed
tolerance and reports PASS or FAIL.  Checks whose expected value is a
published rounded constant known to be inconsistent with the exact
computation report FLAG instead: the exact/oracle value is authoritative
and the discrepancy is recorded in the report rather than silently hidden.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import channels, cloners, correlations, optimize
from .cloners import (
    LOCAL_BH,
    MACHINE_NAMES,
    SQRT79,
    TWO_PAULI_LIKE,
    apply_local_cloner,
    apply_machine,
    apply_single_qubit,
    average_fidelity,
    full_unitary_oracle,
    machine_fidelity,
)
from .linalg import InvalidStateError, fidelity_pure, validate_density
from .states import (
    NotXStateError,
    PureSchmidtState,
    WernerState,
    XState,
    as_x_state,
    pure_to_density,
    werner_to_density,
)

# Exact closed forms for the average fidelities.
LOCAL_BH_AVG = 67.0 / 108.0
ONE_PAULI_AVG = 2.0 / 3.0
TWO_PAULI_AVG = (844.0 + 85.0 * SQRT79) / 2646.0
TWO_PAULI_S = (17.0 + 20.0 * SQRT79) / 441.0

SUITE_NAMES = ("constants", "oracles", "optima", "all")


@dataclass
class CheckResult:
    suite: str
    name: str
    expected: float
    actual: float
    tol: float
    status: str
    note: str = ""


def _check(
    suite: str,
    name: str,
    expected: float,
    actual: float,
    tol: float,
    flag_note: str | None = None,
) -> CheckResult:
    if abs(expected - actual) <= tol:
        return CheckResult(suite, name, expected, actual, tol, "PASS")
    if flag_note is not None:
        return CheckResult(suite, name, expected, actual, tol, "FLAG", flag_note)
    return CheckResult(suite, name, expected, actual, tol, "FAIL")


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Ginibre-sampled density matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_x_state(rng: np.random.Generator) -> XState:
    diag = rng.dirichlet(np.ones(4))
    r14 = rng.uniform(-1.0, 1.0) * math.sqrt(diag[0] * diag[3])
    r23 = rng.uniform(-1.0, 1.0) * math.sqrt(diag[1] * diag[2])
    return XState(diag[0], diag[1], diag[2], diag[3], r14, r23)


def random_pure_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return v / np.linalg.norm(v)


def random_coefficients(rng: np.random.Generator) -> cloners.MachineCoefficients:
    return cloners.MachineCoefficients.from_b_sq(rng.uniform(0.0, 0.5))


def constants_checks() -> list[CheckResult]:
    out: list[CheckResult] = []
    suite = "constants"
    rng = np.random.default_rng(20240817)

    # Single-qubit Buzek-Hillery fidelity is 5/6 for every input.
    fids = []
    for _ in range(200):
        psi = random_pure_qubit(rng)
        rho_out = apply_single_qubit(LOCAL_BH, np.outer(psi, psi.conj()))
        fids.append(fidelity_pure(psi, rho_out))
    fids = np.asarray(fids)
    out.append(_check(suite, "single-qubit-bh-fidelity", 5.0 / 6.0, float(fids.mean()), 1e-9))
    out.append(
        _check(suite, "single-qubit-bh-universality", 0.0, float(np.ptp(fids)), 1e-10)
    )

    # Average fidelities: exact closed forms, then the published roundings.
    avg_local = average_fidelity("local-bh")
    out.append(_check(suite, "local-bh-average-fidelity", LOCAL_BH_AVG, avg_local, 1e-9))
    out.append(_check(suite, "local-bh-average-vs-published-0.62", 0.62, avg_local, 5e-3))

    avg_one = average_fidelity("one-pauli-like")
    out.append(_check(suite, "one-pauli-like-average-fidelity", ONE_PAULI_AVG, avg_one, 1e-9))
    out.append(
        _check(
            suite,
            "one-pauli-like-average-vs-published-0.66",
            0.66,
            avg_one,
            5e-3,
            flag_note=(
                "published value 0.66 is a two-decimal truncation of the exact 2/3 "
                "= 0.6667; the 5e-3 comparison cannot hold. Exact value accepted."
            ),
        )
    )

    avg_two = average_fidelity("two-pauli-like")
    out.append(_check(suite, "two-pauli-like-average-fidelity", TWO_PAULI_AVG, avg_two, 1e-9))
    out.append(_check(suite, "two-pauli-like-average-vs-published-0.604", 0.604, avg_two, 5e-3))

    out.append(
        _check(suite, "universal-average-fidelity", 9.0 / 16.0, average_fidelity("universal"), 1e-9)
    )

    # Constant-fidelity machines over a 101-point alpha^2 grid.
    grid = np.linspace(0.0, 1.0, 101)
    f_nl = np.array(
        [machine_fidelity("nonlocal-bh", PureSchmidtState.from_alpha_sq(u)) for u in grid]
    )
    out.append(
        _check(suite, "nonlocal-bh-fidelity-0.7-grid", 0.0, float(np.max(np.abs(f_nl - 0.7))), 1e-9)
    )
    f_uni = np.array(
        [machine_fidelity("universal", PureSchmidtState.from_alpha_sq(u)) for u in grid]
    )
    out.append(_check(suite, "universal-fidelity-value", 9.0 / 16.0, float(f_uni.mean()), 1e-9))
    out.append(_check(suite, "universal-fidelity-variance", 0.0, float(f_uni.var()), 1e-20))

    # Spot fidelities.
    out.append(
        _check(
            suite,
            "local-bh-fidelity-at-half",
            21.0 / 36.0,
            machine_fidelity("local-bh", PureSchmidtState.from_alpha_sq(0.5)),
            1e-9,
        )
    )
    out.append(
        _check(
            suite,
            "one-pauli-like-fidelity-at-half",
            0.5,
            machine_fidelity("one-pauli-like", PureSchmidtState.from_alpha_sq(0.5)),
            1e-9,
        )
    )
    f2p0 = machine_fidelity("two-pauli-like", PureSchmidtState.from_alpha_sq(0.0))
    out.append(
        _check(suite, "two-pauli-like-fidelity-at-0", (25.0 + SQRT79) ** 2 / 1764.0, f2p0, 1e-9)
    )
    out.append(_check(suite, "two-pauli-like-fidelity-vs-published-5.205/8", 5.205 / 8.0, f2p0, 5e-3))

    # Two-Pauli-like output-state coefficients from the exact machine.
    rho_a1 = apply_local_cloner(TWO_PAULI_LIKE, pure_to_density(PureSchmidtState.from_alpha_sq(1.0)))
    rho_half = apply_local_cloner(
        TWO_PAULI_LIKE, pure_to_density(PureSchmidtState.from_alpha_sq(0.5))
    )
    out.append(_check(suite, "two-pauli-output-coef-|00>", 0.6510, rho_a1[0, 0].real, 5e-4))
    out.append(_check(suite, "two-pauli-output-coef-|01>", 0.1558, rho_a1[1, 1].real, 5e-4))
    out.append(
        _check(suite, "two-pauli-output-coef-offdiag", 0.4741, 2.0 * rho_half[0, 3].real, 5e-4)
    )
    out.append(
        _check(
            suite,
            "two-pauli-output-coef-|11>",
            0.0337,
            rho_a1[3, 3].real,
            5e-4,
            flag_note=(
                "published entry 0.0337 is inconsistent: the four published entries "
                "sum to 0.9963, not 1, and the exact coefficients force |b|^4 = 0.0373. "
                "Exact value accepted."
            ),
        )
    )
    out.append(
        _check(suite, "two-pauli-output-trace", 1.0, float(np.trace(rho_a1).real), 1e-12)
    )
    return out


def optima_checks() -> list[CheckResult]:
    out: list[CheckResult] = []
    suite = "optima"

    prob_f = optimize.OptimizationProblem("fidelity_sq", mu=4.0)
    res_f = optimize.solve_constrained(prob_f)
    out.append(_check(suite, "universal-optimum-u", 0.5, res_f.u_star, 1e-9))
    out.append(_check(suite, "universal-optimum-v", 0.25, res_f.v_star, 1e-9))
    out.append(_check(suite, "universal-optimum-value", 9.0 / 16.0, res_f.objective_value, 1e-9))
    out.append(
        _check(
            suite,
            "universal-optimum-residual",
            0.0,
            float(np.max(np.abs(res_f.constraint_residuals))),
            1e-12,
        )
    )

    prob_s = optimize.OptimizationProblem("s_param", mu=4.0)
    res_s = optimize.solve_constrained(prob_s)
    out.append(_check(suite, "two-pauli-optimum-u", (4.0 + SQRT79) / 21.0, res_s.u_star, 1e-9))
    out.append(_check(suite, "two-pauli-optimum-v", (17.0 - SQRT79) / 42.0, res_s.v_star, 1e-9))
    out.append(_check(suite, "two-pauli-optimum-s", TWO_PAULI_S, res_s.objective_value, 1e-9))
    out.append(
        _check(suite, "two-pauli-optimum-3+5s-vs-published", 5.205, 3.0 + 5.0 * res_s.objective_value, 5e-3)
    )
    out.append(
        _check(suite, "two-pauli-optimum-4(1-s)-vs-published", 2.236, 4.0 * (1.0 - res_s.objective_value), 5e-3)
    )

    # Grid search agrees with the exact roots.
    for name, prob, res in (("universal", prob_f, res_f), ("two-pauli", prob_s, res_s)):
        gu, gv, gobj = optimize.grid_search(prob)
        out.append(_check(suite, f"{name}-grid-agreement-v", res.v_star, gv, 1e-4))
        out.append(_check(suite, f"{name}-grid-agreement-objective", res.objective_value, gobj, 1e-3))

    # The maximum sits on the c = 0 face of the simplex.
    for name, prob in (("universal", prob_f), ("two-pauli", prob_s)):
        on_face, _ = optimize.verify_c_zero(prob)
        out.append(_check(suite, f"{name}-c-zero-face", 1.0, 1.0 if on_face else 0.0, 0.0))

    # mu = 0 collapses the universal problem to F = 1/4.
    res_mu0 = optimize.solve_constrained(optimize.OptimizationProblem("fidelity_sq", mu=0.0))
    out.append(_check(suite, "universal-mu0-objective", 0.25, res_mu0.objective_value, 1e-12))

    # Cross-module consistency with the presets.
    out.append(
        _check(suite, "two-pauli-preset-matches-optimum-u", TWO_PAULI_LIKE.a_abs**2, res_s.u_star, 1e-12)
    )
    out.append(
        _check(
            suite,
            "universal-preset-fidelity-matches-optimum",
            machine_fidelity("universal", PureSchmidtState.from_alpha_sq(0.3)),
            res_f.objective_value,
            1e-12,
        )
    )
    return out


def _literal_form_note(form: str) -> str:
    return (
        f"literal closed form '{form}' disagrees with the Wootters oracle; "
        "the oracle value is authoritative and this discrepancy is recorded."
    )


def oracle_checks(
    n_unitary_pairs: int = 100,
    n_concurrence: int = 500,
    n_discord: int = 60,
    sweep_points: int = 41,
    n_physical: int = 1000,
) -> list[CheckResult]:
    out: list[CheckResult] = []
    suite = "oracles"
    rng = np.random.default_rng(911003)

    # Bloch-map cloner vs full six-qubit unitary simulation.
    dev = 0.0
    sym_dev = 0.0
    for _ in range(n_unitary_pairs):
        m = random_coefficients(rng)
        s = PureSchmidtState.from_alpha_sq(rng.uniform(0.0, 1.0))
        via_map = apply_local_cloner(m, pure_to_density(s))
        via_oracle = full_unitary_oracle(m, s)
        dev = max(dev, float(np.max(np.abs(via_map - via_oracle))))
        pair2 = full_unitary_oracle(m, s, pair=2)
        sym_dev = max(sym_dev, float(np.max(np.abs(via_oracle - pair2))))
    out.append(_check(suite, "bloch-map-vs-unitary-oracle", 0.0, dev, 1e-10))
    out.append(_check(suite, "clone-pair-symmetry", 0.0, sym_dev, 1e-12))

    # X-state concurrence closed form vs the Wootters eigenvalue method.
    dev = 0.0
    for _ in range(n_concurrence):
        x = random_x_state(rng)
        dev = max(
            dev, abs(correlations.concurrence_x(x) - correlations.concurrence_wootters(x.to_density()))
        )
    out.append(_check(suite, "concurrence-x-vs-wootters", 0.0, dev, 1e-10))

    # X-state discord closed form vs measurement-minimization oracle.
    dev = 0.0
    for _ in range(n_discord):
        x = random_x_state(rng)
        dev = max(
            dev, abs(correlations.discord_x(x)[0] - correlations.discord_oracle(x.to_density()))
        )
    out.append(_check(suite, "discord-x-vs-oracle-random", 0.0, dev, 1e-5))

    dev = 0.0
    for machine in MACHINE_NAMES:
        for u in np.linspace(0.0, 1.0, sweep_points):
            rho = apply_machine(machine, pure_to_density(PureSchmidtState.from_alpha_sq(u)))
            x = as_x_state(rho)
            dev = max(
                dev, abs(correlations.discord_x(x)[0] - correlations.discord_oracle(rho))
            )
        for w in np.linspace(-1.0, 1.0, sweep_points):
            rho = apply_machine(machine, werner_to_density(WernerState(w)))
            x = as_x_state(rho)
            dev = max(
                dev, abs(correlations.discord_x(x)[0] - correlations.discord_oracle(rho))
            )
    out.append(_check(suite, "discord-x-vs-oracle-sweeps", 0.0, dev, 1e-5))

    # Literal Werner/Bell-diagonal closed forms vs the oracles (flagged,
    # never silently accepted, if they disagree).
    xs = np.linspace(-1.0, 1.0, 81)
    dev_wc = 0.0
    dev_wd = 0.0
    for w in xs:
        t_in = (2.0 * w - 1.0) / 3.0
        for factor in (4.0 / 9.0, 0.6):
            t = factor * t_in
            x = as_x_state(_bell_diag_density(t, t))
            dev_wc = max(
                dev_wc,
                abs(
                    correlations.werner_concurrence_closed(t)
                    - correlations.concurrence_wootters(x.to_density())
                ),
            )
            dev_wd = max(
                dev_wd, abs(correlations.werner_discord_closed(t) - correlations.discord_x(x)[0])
            )
    out.append(
        _check(
            suite,
            "werner-concurrence-literal-vs-wootters",
            0.0,
            dev_wc,
            1e-10,
            flag_note=_literal_form_note("werner_concurrence_closed"),
        )
    )
    out.append(_check(suite, "werner-discord-closed-vs-x-formula", 0.0, dev_wd, 1e-10))

    dev_bc = 0.0
    dev_bd = 0.0
    tp_xy = (2.0 * TWO_PAULI_LIKE.a_abs * TWO_PAULI_LIKE.b_abs) ** 2
    tp_z = TWO_PAULI_LIKE.a_abs**4
    for w in xs:
        t_in = (2.0 * w - 1.0) / 3.0
        for lam_xy, lam_z in ((0.5, 0.25), (tp_xy, tp_z)):
            t1, t3 = lam_xy * t_in, lam_z * t_in
            rho = _bell_diag_density(t1, t3)
            dev_bc = max(
                dev_bc,
                abs(
                    correlations.bell_diag_concurrence_closed(t1, t3)
                    - correlations.concurrence_wootters(rho)
                ),
            )
            dev_bd = max(
                dev_bd,
                abs(
                    correlations.bell_diag_discord_closed(t1, t3)
                    - correlations.discord_x(as_x_state(rho))[0]
                ),
            )
    out.append(
        _check(
            suite,
            "bell-diag-concurrence-literal-vs-wootters",
            0.0,
            dev_bc,
            1e-10,
            flag_note=_literal_form_note("bell_diag_concurrence_closed"),
        )
    )
    out.append(_check(suite, "bell-diag-discord-closed-vs-x-formula", 0.0, dev_bd, 1e-10))

    # Physicality: machines and channels on random valid inputs.
    violations = 0
    x_violations = 0
    s_grid = (0.0, 0.25, 1.0 / 3.0, 0.75, 1.0)
    for i in range(n_physical):
        rho = random_density(rng)
        outputs = [apply_machine(name, rho) for name in MACHINE_NAMES]
        outputs.append(channels.apply_pauli_channel(channels.one_pauli(s_grid[i % 5]), rho))
        outputs.append(channels.apply_pauli_channel(channels.two_pauli(s_grid[(i + 2) % 5]), rho))
        for rho_out in outputs:
            try:
                validate_density(rho_out)
            except InvalidStateError:
                violations += 1
        x_in = random_x_state(rng).to_density()
        for name in MACHINE_NAMES:
            try:
                as_x_state(apply_machine(name, x_in))
            except NotXStateError:
                x_violations += 1
    out.append(_check(suite, "machine-channel-output-physicality", 0.0, float(violations), 0.0))
    out.append(_check(suite, "machines-preserve-x-shape", 0.0, float(x_violations), 0.0))
    return out


def _bell_diag_density(t1: float, t3: float) -> np.ndarray:
    """Bell-diagonal state with correlations (t1, t1, t3)."""
    rho = np.eye(4, dtype=complex) / 4.0
    rho += t3 / 4.0 * np.diag([1.0, -1.0, -1.0, 1.0])
    rho[1, 2] += t1 / 2.0
    rho[2, 1] += t1 / 2.0
    return rho


SUITES = {
    "constants": (constants_checks,),
    "oracles": (oracle_checks,),
    "optima": (optima_checks,),
    "all": (constants_checks, oracle_checks, optima_checks),
}


def run_suite(suite: str) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; valid suites: {', '.join(SUITE_NAMES)}")
    results: list[CheckResult] = []
    for fn in SUITES[suite]:
        results.extend(fn())
    return results


def suite_passed(results: list[CheckResult]) -> bool:
    return all(r.status != "FAIL" for r in results)


def format_report(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        lines.append(
            f"[{r.status}] {r.suite}/{r.name}: expected={r.expected:.10g} "
            f"actual={r.actual:.10g} tol={r.tol:.1g}"
        )
        if r.note:
            lines.append(f"       note: {r.note}")
    n_pass = sum(r.status == "PASS" for r in results)
    n_flag = sum(r.status == "FLAG" for r in results)
    n_fail = sum(r.status == "FAIL" for r in results)
    lines.append(f"{n_pass} passed, {n_flag} flagged, {n_fail} failed")
    return "\n".join(lines)
