"""Quantum-correlation measures for two-qubit states.

Concurrence (Wootters eigenvalue form and the X-state closed form),
entanglement of formation, X-state quantum discord via the C1/C2 branch
formulas, a projective-measurement minimization oracle for discord, and the
closed forms for Werner and Bell-diagonal cloner outputs.

Conventions: all entropies and discord values are in bits (base-2 logs);
discord measurements act on subsystem B (the second qubit).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .linalg import SIGMA_Y, partial_trace, tensor, validate_density, von_neumann_entropy
from .states import XState, bloch_decompose

# Discord values this close to zero (or below) are treated as exact zeros;
# anything more negative signals a bug rather than roundoff.
_NEG_TOL = 1e-9


@dataclass(frozen=True)
class DiscordIntermediates:
    """Pieces of the X-state discord formula, kept for reporting."""

    s_rho: float
    s_rho_b: float
    c1: float
    c2: float
    upsilon: float


@dataclass(frozen=True)
class CorrelationReport:
    """Concurrence, EoF and discord of one state, with the discord branch."""

    concurrence: float
    eof: float
    discord: float
    branch: str


def binary_entropy(p: float) -> float:
    """Shannon entropy of (p, 1-p) in bits, with 0 log 0 := 0."""
    if p < -1e-12 or p > 1.0 + 1e-12:
        raise ValueError(f"probability out of range: {p}")
    p = min(max(p, 0.0), 1.0)
    h = 0.0
    if p > 0.0:
        h -= p * math.log2(p)
    if p < 1.0:
        h -= (1.0 - p) * math.log2(1.0 - p)
    return h


def _clamped_negative(value: float, label: str) -> float:
    if value < -_NEG_TOL:
        raise ArithmeticError(f"{label} = {value!r} is negative beyond roundoff")
    return max(value, 0.0)


def concurrence_wootters(rho: np.ndarray) -> float:
    """Wootters concurrence via the spin-flipped eigenvalue construction.

    C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of
    the eigenvalues of rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y);
    computed through the Hermitian product sqrt(rho) rho~ sqrt(rho) for
    numerical stability.
    """
    rho = validate_density(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a two-qubit (4x4) operator, got shape {rho.shape}")
    yy = tensor(SIGMA_Y, SIGMA_Y)
    rho_tilde = yy @ rho.conj() @ yy
    w, v = np.linalg.eigh((rho + rho.conj().T) / 2)
    sqrt_rho = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    herm = sqrt_rho @ rho_tilde @ sqrt_rho
    lams = np.sqrt(np.clip(np.linalg.eigvalsh((herm + herm.conj().T) / 2), 0.0, None))[::-1]
    return min(max(lams[0] - lams[1] - lams[2] - lams[3], 0.0), 1.0)


def concurrence_x(x: XState) -> float:
    """X-state concurrence: max(0, 2 max(mu_i) - sum(mu_i)) with
    mu_{1,2} = sqrt(r11 r44) +/- |r14| and mu_{3,4} = sqrt(r22 r33) +/- |r23|.
    """
    g1 = math.sqrt(max(x.r11 * x.r44, 0.0))
    g2 = math.sqrt(max(x.r22 * x.r33, 0.0))
    mus = (g1 + abs(x.r14), g1 - abs(x.r14), g2 + abs(x.r23), g2 - abs(x.r23))
    return min(max(2.0 * max(mus) - sum(mus), 0.0), 1.0)


def eof(concurrence: float) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2))/2) in bits."""
    if not 0.0 <= concurrence <= 1.0:
        raise ValueError(f"concurrence must lie in [0, 1], got {concurrence}")
    return binary_entropy(0.5 + 0.5 * math.sqrt(1.0 - concurrence**2))


def _x_state_entropy(x: XState) -> float:
    """Entropy from the two 2x2 blocks of an X matrix."""
    eigs = []
    for d1, d2, off in ((x.r11, x.r44, x.r14), (x.r22, x.r33, x.r23)):
        half = (d1 + d2) / 2.0
        rad = math.sqrt(((d1 - d2) / 2.0) ** 2 + off**2)
        eigs.extend((half + rad, half - rad))
    s = 0.0
    for lam in eigs:
        if lam > 0.0:
            s -= lam * math.log2(lam)
    return max(s, 0.0)


def discord_x(x: XState) -> tuple[float, DiscordIntermediates]:
    """Quantum discord of an X-state with real off-diagonals.

    D_B = S(rho_B) - S(rho) + min(C1, C2), where C1 is the conditional
    entropy after measuring B in the computational basis and
    C2 = h((1 + Upsilon)/2) with
    Upsilon = sqrt((r11 + r22 - r33 - r44)^2 + 4(|r14| + |r23|)^2).
    Terms with a vanishing probability contribute 0.
    """
    p0 = x.r11 + x.r33
    p1 = x.r22 + x.r44
    s_rho_b = binary_entropy(min(max(p0, 0.0), 1.0))
    s_rho = _x_state_entropy(x)

    c1 = 0.0
    for num, den in ((x.r11, p0), (x.r33, p0), (x.r22, p1), (x.r44, p1)):
        if num > 0.0 and den > 0.0:
            c1 -= num * math.log2(num / den)

    upsilon = math.sqrt(
        (x.r11 + x.r22 - x.r33 - x.r44) ** 2 + 4.0 * (abs(x.r14) + abs(x.r23)) ** 2
    )
    upsilon = min(upsilon, 1.0)
    c2 = binary_entropy(0.5 + 0.5 * upsilon)

    value = _clamped_negative(s_rho_b - s_rho + min(c1, c2), "discord")
    return value, DiscordIntermediates(s_rho, s_rho_b, c1, c2, upsilon)


def discord_branch(inter: DiscordIntermediates) -> str:
    """Which branch attains the minimum (ties go to C1)."""
    return "C1" if inter.c1 <= inter.c2 else "C2"


def _conditional_entropy_grid(x_vec, y_vec, t, nhat):
    """Measured conditional entropy for an array of B-side directions.

    nhat has shape (k, 3).  Uses the Bloch form of the post-measurement
    states: branch probabilities (1 +/- y.n)/2 and branch Bloch vectors
    (x +/- T n)/(1 +/- y.n).
    """
    ydot = nhat @ y_vec
    tn = nhat @ t.T
    total = np.zeros(nhat.shape[0])
    for sign in (1.0, -1.0):
        p = (1.0 + sign * ydot) / 2.0
        r = np.linalg.norm(x_vec + sign * tn, axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            lam = np.where(p > 1e-15, r / np.maximum(2.0 * p, 1e-300), 0.0)
        lam = np.clip(lam, 0.0, 1.0)
        hi = 0.5 + 0.5 * lam
        lo = 1.0 - hi
        ent = np.zeros_like(hi)
        mask = hi < 1.0
        ent[mask] = -hi[mask] * np.log2(hi[mask]) - lo[mask] * np.log2(lo[mask])
        total += p * ent
    return total


def discord_oracle(
    rho: np.ndarray,
    theta_points: int = 65,
    phi_points: int = 128,
    refine_tol: float = 1e-7,
) -> float:
    """Discord by direct minimization over projective measurements on B.

    Dense (theta, phi) grid followed by Nelder-Mead refinement of the best
    grid point.  Independent of the X-state closed form.
    """
    rho = validate_density(rho)
    form = bloch_decompose(rho)
    s_rho = von_neumann_entropy(rho)
    s_rho_b = von_neumann_entropy(partial_trace(rho, [2, 2], keep=[1]))

    thetas = np.linspace(0.0, np.pi, theta_points)
    phis = np.linspace(0.0, 2.0 * np.pi, phi_points, endpoint=False)
    tg, pg = np.meshgrid(thetas, phis, indexing="ij")
    nhat = np.stack(
        [np.sin(tg) * np.cos(pg), np.sin(tg) * np.sin(pg), np.cos(tg)], axis=-1
    ).reshape(-1, 3)
    cond = _conditional_entropy_grid(form.x_vec, form.y_vec, form.t, nhat)
    best = int(np.argmin(cond))

    def objective(angles):
        th, ph = angles
        direction = np.array(
            [[np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)]]
        )
        return _conditional_entropy_grid(form.x_vec, form.y_vec, form.t, direction)[0]

    x0 = np.array([tg.reshape(-1)[best], pg.reshape(-1)[best]])
    res = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        options={"xatol": refine_tol * 1e-1, "fatol": refine_tol * 1e-3, "maxiter": 400},
    )
    cond_min = min(float(cond[best]), float(res.fun))
    return _clamped_negative(s_rho_b - s_rho + cond_min, "discord")


def _xlog2(z: float) -> float:
    return z * math.log2(z) if z > 0.0 else 0.0


def werner_discord_closed(t: float) -> float:
    """Discord of a Werner-form output with t1 = t2 = t3 = t, t in [-1, 1/3].

    ((1+t)/4) log(1+t) + ((1-3t)/4) log(1-3t) - ((1-t)/2) log(1-t), base 2.
    """
    if t < -1.0 - 1e-12 or t > 1.0 / 3.0 + 1e-12:
        raise ValueError(f"Werner correlation must lie in [-1, 1/3], got {t}")
    return (
        _xlog2(1.0 + t) / 4.0 + _xlog2(1.0 - 3.0 * t) / 4.0 - _xlog2(1.0 - t) / 2.0
    )


def _require_bell_diag_physical(t1: float, t3: float) -> None:
    # Spectrum of (1/4)(I + t1 s1s1 + t1 s2s2 + t3 s3s3): (1 + t3)/4 twice
    # plus (1 +/- 2 t1 - t3)/4.
    lams = (
        (1.0 + t3) / 4.0,
        (1.0 + 2.0 * t1 - t3) / 4.0,
        (1.0 - 2.0 * t1 - t3) / 4.0,
    )
    if min(lams) < -1e-12:
        raise ValueError(
            f"(t1, t3) = ({t1}, {t3}) is unphysical: eigenvalue {min(lams):.3e}"
        )


def bell_diag_discord_closed(t1: float, t3: float) -> float:
    """Discord of a Bell-diagonal output with t'_1 = t'_2 = t1 and t'_3 = t3.

    ((1 + 2 t1 - t3)/4) log(1 + 2 t1 - t3) + ((1 - 2 t1 - t3)/4) log(1 - 2 t1 - t3)
    + ((1 + t3)/2) log(1 + t3) - ((1 + t1)/2) log(1 + t1) - ((1 - t1)/2) log(1 - t1).
    """
    _require_bell_diag_physical(t1, t3)
    return (
        _xlog2(1.0 + 2.0 * t1 - t3) / 4.0
        + _xlog2(1.0 - 2.0 * t1 - t3) / 4.0
        + _xlog2(1.0 + t3) / 2.0
        - _xlog2(1.0 + t1) / 2.0
        - _xlog2(1.0 - t1) / 2.0
    )


def werner_concurrence_closed(t: float) -> float:
    """Concurrence of a Werner-form output, t in [-1, 1/3].

    Literal form max(0, (sqrt((3t - 1)^2) - 3 sqrt((t + 1)^2))/4); the
    Wootters oracle cross-checks it in the verification suites.
    """
    if t < -1.0 - 1e-12 or t > 1.0 / 3.0 + 1e-12:
        raise ValueError(f"Werner correlation must lie in [-1, 1/3], got {t}")
    return max(0.0, (abs(3.0 * t - 1.0) - 3.0 * abs(t + 1.0)) / 4.0)


def bell_diag_concurrence_closed(t1: float, t3: float) -> float:
    """Concurrence of a Bell-diagonal output with |t'_1| = |t'_2|.

    Literal form max(0, (sqrt((2 t1 + t3 - 1)^2) - sqrt((2 t1 + t3 + 1)^2)
    - 2 sqrt((t3 + 1)^2))/4); cross-checked against the Wootters oracle.
    """
    _require_bell_diag_physical(t1, t3)
    val = (
        abs(2.0 * t1 + t3 - 1.0) - abs(2.0 * t1 + t3 + 1.0) - 2.0 * abs(t3 + 1.0)
    ) / 4.0
    return max(0.0, val)


def report(x: XState) -> CorrelationReport:
    """Concurrence, EoF and discord of one X-state."""
    c = concurrence_x(x)
    d, inter = discord_x(x)
    return CorrelationReport(c, eof(c), d, discord_branch(inter))
