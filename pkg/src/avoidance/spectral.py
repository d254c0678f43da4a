"""Avoidability exponent of a doubled pattern via the between-occurrence
count matrix and its Perron root.

For a doubled pattern of length 2v (every variable exactly twice), M[i][j]
counts occurrences of X_i strictly inside the span of the two X_j; with
beta the largest eigenvalue of M, AE(p) = 1 + 1/(beta + 1). The matrix
orientation is fixed by the ABACDCBD reference matrix
[[0,1,0,0],[1,0,0,1],[0,2,0,1],[0,1,1,0]]; its transpose has the same
spectrum, so beta and AE are unaffected either way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .patterns import Pattern

RAYLEIGH_TOL = 1e-12
MAX_ITER = 10000


@dataclass(frozen=True)
class AEMatrix:
    size: int
    entries: np.ndarray  # (size, size) non-negative ints

    def __post_init__(self) -> None:
        try:
            arr = np.asarray(self.entries, dtype=np.int64)
        except ValueError as exc:
            raise ValueError(f"entries are not a square integer array: {exc}")
        if arr.shape != (self.size, self.size):
            raise ValueError("entries shape does not match size")
        if (arr < 0).any():
            raise ValueError("entries must be non-negative")
        object.__setattr__(self, "entries", arr)


@dataclass(frozen=True)
class AEResult:
    pattern: Pattern
    matrix: AEMatrix
    beta: float
    ae: float
    iterations: int


class PowerIterationError(RuntimeError):
    def __init__(self, message: str, last_estimate: float):
        super().__init__(message)
        self.last_estimate = last_estimate


def ae_matrix(p: str) -> AEMatrix:
    """Between-occurrence count matrix of a doubled pattern of length 2v."""
    pat = Pattern(p)
    order = sorted(set(pat), key=pat.index)
    spans = {}
    for v in order:
        if pat.count(v) != 2:
            raise ValueError(f"variable {v} must occur exactly twice in {pat}")
        first = pat.index(v)
        spans[v] = (first, pat.index(v, first + 1))
    v_count = len(order)
    m = np.zeros((v_count, v_count), dtype=int)
    for j, vj in enumerate(order):
        lo, hi = spans[vj]
        between = pat[lo + 1:hi]
        for i, vi in enumerate(order):
            m[i, j] = between.count(vi)
    return AEMatrix(v_count, m)


def _power_iteration(mat: AEMatrix) -> tuple[float, int]:
    a = mat.entries.astype(float) + np.eye(mat.size)
    x = np.ones(mat.size) / np.sqrt(mat.size)
    prev = float("inf")
    for it in range(1, MAX_ITER + 1):
        y = a @ x
        rayleigh = float(x @ y)
        if abs(rayleigh - prev) < RAYLEIGH_TOL:
            return rayleigh - 1.0, it
        x = y / float(np.linalg.norm(y))
        prev = rayleigh
    raise PowerIterationError(
        f"no convergence within {MAX_ITER} iterations", prev - 1.0)


def perron_root(mat: AEMatrix) -> float:
    """Spectral radius of a non-negative matrix by power iteration.

    Iterates on M + I: the shift makes the dominant eigenvalue strictly
    maximal in modulus (no complex partner of equal size survives adding 1
    to every eigenvalue of a matrix with real spectral radius), so the
    Rayleigh quotient converges; 1 is subtracted at the end.
    """
    return _power_iteration(mat)[0]


def avoidability_exponent(p: str) -> AEResult:
    """AE(p) = 1 + 1/(beta + 1) with beta the Perron root of ae_matrix(p)."""
    mat = ae_matrix(p)
    beta, iters = _power_iteration(mat)
    return AEResult(Pattern(p), mat, beta, 1.0 + 1.0 / (beta + 1.0), iters)
