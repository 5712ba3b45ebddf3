"""Shared generators and brute-force oracles used across the test modules."""
from __future__ import annotations

import itertools

import numpy as np

from qclone.states import XState


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_x_state(rng: np.random.Generator) -> XState:
    diag = rng.dirichlet(np.ones(4))
    r14 = rng.uniform(-1.0, 1.0) * np.sqrt(diag[0] * diag[3])
    r23 = rng.uniform(-1.0, 1.0) * np.sqrt(diag[1] * diag[2])
    return XState(diag[0], diag[1], diag[2], diag[3], r14, r23)


def kron_oracle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product by explicit index arithmetic."""
    ar, ac = a.shape
    br, bc = b.shape
    out = np.zeros((ar * br, ac * bc), dtype=complex)
    for i, k in itertools.product(range(ar), range(ac)):
        for j, l in itertools.product(range(br), range(bc)):
            out[i * br + j, k * bc + l] = a[i, k] * b[j, l]
    return out


def partial_trace_oracle(rho: np.ndarray, dims: list[int], keep: list[int]) -> np.ndarray:
    """Reduced matrix by brute-force summation over traced multi-indices."""
    keep = sorted(keep)
    traced = [i for i in range(len(dims)) if i not in keep]
    d_keep = int(np.prod([dims[i] for i in keep]))
    out = np.zeros((d_keep, d_keep), dtype=complex)

    def flat(multi):
        idx = 0
        for dim, m in zip(dims, multi):
            idx = idx * dim + m
        return idx

    kept_ranges = [range(dims[i]) for i in keep]
    traced_ranges = [range(dims[i]) for i in traced]
    for row_kept in itertools.product(*kept_ranges):
        for col_kept in itertools.product(*kept_ranges):
            total = 0.0 + 0.0j
            for tr in itertools.product(*traced_ranges):
                row = [0] * len(dims)
                col = [0] * len(dims)
                for pos, val in zip(keep, row_kept):
                    row[pos] = val
                for pos, val in zip(keep, col_kept):
                    col[pos] = val
                for pos, val in zip(traced, tr):
                    row[pos] = val
                    col[pos] = val
                total += rho[flat(row), flat(col)]
            r = 0
            for dim_idx, val in zip(keep, row_kept):
                r = r * dims[dim_idx] + val
            c = 0
            for dim_idx, val in zip(keep, col_kept):
                c = c * dims[dim_idx] + val
            out[r, c] = total
    return out
