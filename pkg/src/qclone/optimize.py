"""Numerical verification of the constrained machine optimizations.

Two problems over u = |a|^2, v = |b|^2 with the normalization
u + 2v + c^2 = 1 and a coupling constraint parameterized by the overlap
parameter mu (maximal feasible value 4):

* ``fidelity_sq``: maximize F = (u + v)^2 with coupling
  2(u + v) - 1 = u v mu; the maximizer is the universal machine.
* ``s_param``: maximize s = (8 (u + v)^2 - 3)/5 with coupling
  (8 (u + v)^2 - 28)/5 + 8(u + v) = 4 u v mu; the maximizer is the
  two-Pauli-like machine.

With c = 0 and u = 1 - 2v substituted, each coupling becomes a quadratic in
v which is solved exactly; a dense grid search over the feasible set and a
simplex scan confirming the optimum sits on the c = 0 face provide the
independent checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

OBJECTIVES = ("fidelity_sq", "s_param")

_ROOT_RANGE_SLACK = 1e-12


class InfeasibleProblemError(ValueError):
    """No feasible root of the coupling constraint exists."""


@dataclass(frozen=True)
class OptimizationProblem:
    objective: str = "fidelity_sq"
    mu: float = 4.0

    def __post_init__(self):
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")
        if not 0.0 <= self.mu <= 4.0:
            raise ValueError(f"mu must lie in [0, 4], got {self.mu}")


@dataclass(frozen=True)
class OptimizationResult:
    u_star: float
    v_star: float
    c_star: float
    objective_value: float
    constraint_residuals: tuple[float, float]


def objective_value(problem: OptimizationProblem, u, v):
    w = u + v
    if problem.objective == "fidelity_sq":
        return w * w
    return (8.0 * w * w - 3.0) / 5.0


def coupling_residual(problem: OptimizationProblem, u, v):
    """Residual of the mu-coupling constraint at (u, v); zero when feasible."""
    w = u + v
    if problem.objective == "fidelity_sq":
        return 2.0 * w - 1.0 - u * v * problem.mu
    return (8.0 * w * w - 28.0) / 5.0 + 8.0 * w - 4.0 * u * v * problem.mu


def _coupling_quadratic(problem: OptimizationProblem) -> tuple[float, float, float]:
    """Coefficients (A, B, C) of the coupling in v after u = 1 - 2v, c = 0."""
    mu = problem.mu
    if problem.objective == "fidelity_sq":
        return 2.0 * mu, -(mu + 2.0), 1.0
    return 2.0 + 10.0 * mu, -(14.0 + 5.0 * mu), 5.0


def _real_roots(a: float, b: float, c: float) -> list[float]:
    if abs(a) < 1e-15:
        return [] if abs(b) < 1e-15 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    rad = math.sqrt(disc)
    return [(-b - rad) / (2.0 * a), (-b + rad) / (2.0 * a)]


def solve_constrained(problem: OptimizationProblem) -> OptimizationResult:
    """Exact maximizer over the c = 0, u = 1 - 2v feasible roots in [0, 1/2]."""
    candidates = []
    for v in _real_roots(*_coupling_quadratic(problem)):
        if -_ROOT_RANGE_SLACK <= v <= 0.5 + _ROOT_RANGE_SLACK:
            v = min(max(v, 0.0), 0.5)
            candidates.append((v, 1.0 - 2.0 * v))
    if not candidates:
        raise InfeasibleProblemError(
            f"coupling constraint has no root with v in [0, 1/2] for {problem}"
        )
    # Maximize the objective; among equal objectives the smallest v wins.
    best_v, best_u = min(
        candidates, key=lambda uv: (-objective_value(problem, uv[1], uv[0]), uv[0])
    )
    residuals = (
        best_u + 2.0 * best_v - 1.0,
        float(coupling_residual(problem, best_u, best_v)),
    )
    return OptimizationResult(
        u_star=best_u,
        v_star=best_v,
        c_star=0.0,
        objective_value=objective_value(problem, best_u, best_v),
        constraint_residuals=residuals,
    )


def grid_search(
    problem: OptimizationProblem, step: float = 1e-4, constraint_tol: float = 1e-6
) -> tuple[float, float, float]:
    """Best (u, v, objective) over a dense v-grid of the c = 0 feasible set.

    Grid points bracket sign changes of the coupling residual; each bracket
    is refined by bisection until the residual is within constraint_tol.
    """
    vs = np.arange(0.0, 0.5 + step / 2.0, step)
    res = np.asarray(coupling_residual(problem, 1.0 - 2.0 * vs, vs))

    roots = []
    for i in range(len(vs) - 1):
        if res[i] == 0.0:
            roots.append(vs[i])
        elif res[i] * res[i + 1] < 0.0:
            lo, hi = vs[i], vs[i + 1]
            flo = res[i]
            for _ in range(200):
                mid = (lo + hi) / 2.0
                fmid = float(coupling_residual(problem, 1.0 - 2.0 * mid, mid))
                if abs(fmid) <= constraint_tol:
                    break
                if flo * fmid < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fmid
            roots.append((lo + hi) / 2.0)
    if res[-1] == 0.0:
        roots.append(vs[-1])
    if not roots:
        raise InfeasibleProblemError(f"no feasible grid point for {problem}")

    best_v = min(roots, key=lambda v: (-objective_value(problem, 1.0 - 2.0 * v, v), v))
    return 1.0 - 2.0 * best_v, best_v, objective_value(problem, 1.0 - 2.0 * best_v, best_v)


def verify_c_zero(
    problem: OptimizationProblem, step: float = 5e-3, band: float | None = None
) -> tuple[bool, dict]:
    """Scan the full simplex u + 2v + c^2 = 1 for the objective maximum.

    The coupling cannot be met exactly on a coarse grid, so points within
    ``band`` of it count as feasible (default 10 * step, matching the
    residual's O(1..10) gradient).  Returns whether the best feasible point
    sits on the c = 0 face, plus diagnostics.
    """
    if band is None:
        band = 10.0 * step
    us, vs = np.meshgrid(
        np.arange(0.0, 1.0 + step / 2.0, step),
        np.arange(0.0, 0.5 + step / 2.0, step),
        indexing="ij",
    )
    cc = 1.0 - us - 2.0 * vs
    on_simplex = cc >= -1e-12
    feasible = on_simplex & (np.abs(coupling_residual(problem, us, vs)) <= band)
    if not feasible.any():
        raise InfeasibleProblemError(f"no grid point within {band} of the coupling for {problem}")
    obj = np.where(feasible, objective_value(problem, us, vs), -np.inf)
    idx = np.unravel_index(int(np.argmax(obj)), obj.shape)
    u_best, v_best, cc_best = float(us[idx]), float(vs[idx]), max(float(cc[idx]), 0.0)
    diagnostics = {
        "max_objective": objective_value(problem, u_best, v_best),
        "u": u_best,
        "v": v_best,
        "c_sq": cc_best,
        "residual": float(coupling_residual(problem, u_best, v_best)),
        "band": band,
        "feasible_points": int(feasible.sum()),
    }
    return cc_best <= 2.0 * step, diagnostics
