"""Dense GF(2) linear algebra on numpy uint8 arrays.

Matrices are ordinary numpy arrays with entries 0/1 and dtype uint8.  All
target codes here have at most a few hundred columns, so dense storage is
fine and keeps every kernel a couple of numpy calls.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, SingularMatrixError


def asbits(a) -> np.ndarray:
    """Coerce to a uint8 array of 0/1 values."""
    m = np.asarray(a, dtype=np.uint8) & 1
    return m


def mat2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(2).  Promotes to int to avoid uint8 overflow."""
    return (a.astype(np.int64) @ b.astype(np.int64) % 2).astype(np.uint8)


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int], np.ndarray]:
    """Reduced row echelon form over GF(2).

    Returns (r, pivots, rowops) with rowops @ m == r (mod 2).  Pivots are
    chosen left to right; among candidate rows the topmost is used, so the
    result is deterministic.
    """
    m = asbits(m)
    nrows, ncols = m.shape
    r = m.copy()
    ops = np.eye(nrows, dtype=np.uint8)
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        rows = np.nonzero(r[rank:, col])[0]
        if rows.size == 0:
            continue
        pivot = rank + int(rows[0])
        if pivot != rank:
            r[[rank, pivot]] = r[[pivot, rank]]
            ops[[rank, pivot]] = ops[[pivot, rank]]
        hit = np.nonzero(r[:, col])[0]
        hit = hit[hit != rank]
        if hit.size:
            r[hit] ^= r[rank]
            ops[hit] ^= ops[rank]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return r, pivots, ops


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def invert(m: np.ndarray) -> np.ndarray:
    """Inverse over GF(2); raises SingularMatrixError if rank deficient."""
    m = asbits(m)
    n, nc = m.shape
    if n != nc:
        raise DimensionError(f"cannot invert {n}x{nc} matrix")
    r, pivots, ops = rref(m)
    if len(pivots) != n:
        raise SingularMatrixError(f"rank {len(pivots)} < {n}")
    return ops


def solve_in_span(m: np.ndarray, v: np.ndarray) -> np.ndarray | None:
    """Solve g @ m == v over GF(2); returns g or None if v is not in the span."""
    m = asbits(m)
    v = asbits(v)
    if v.shape != (m.shape[1],):
        raise DimensionError(f"vector length {v.shape} vs {m.shape[1]} columns")
    r, pivots, ops = rref(m)
    y = v.copy()
    coeff = np.zeros(m.shape[0], dtype=np.uint8)
    for i, p in enumerate(pivots):
        if y[p]:
            coeff[i] = 1
            y ^= r[i]
    if y.any():
        return None
    return mat2(coeff[None, :], ops)[0]


def span_rows(m: np.ndarray, cap: int | None = None) -> np.ndarray:
    """All vectors in the row span of m (2**rank rows, includes zero).

    Raises DimensionError when 2**rank would exceed cap.
    """
    m = asbits(m)
    r, pivots, _ = rref(m)
    k = len(pivots)
    if cap is not None and 2**k > cap:
        raise DimensionError(f"2**{k} codewords exceed cap {cap}")
    basis = r[:k]
    combos = (np.arange(2**k, dtype=np.int64)[:, None] >> np.arange(k)) & 1
    return mat2(combos.astype(np.uint8), basis)


def symplectic_form(n: int) -> np.ndarray:
    """The 2n x 2n form [[0, I], [I, 0]]."""
    omega = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    omega[:n, n:] = np.eye(n, dtype=np.uint8)
    omega[n:, :n] = np.eye(n, dtype=np.uint8)
    return omega


def is_symplectic(u: np.ndarray) -> bool:
    """True iff u @ omega @ u.T == omega over GF(2)."""
    u = asbits(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1] or u.shape[0] % 2:
        raise DimensionError(f"expected even square matrix, got {u.shape}")
    omega = symplectic_form(u.shape[0] // 2)
    return bool(np.array_equal(mat2(mat2(u, omega), u.T), omega))


def symplectic_inverse(u: np.ndarray) -> np.ndarray:
    """Inverse of a symplectic matrix: omega @ u.T @ omega."""
    u = asbits(u)
    omega = symplectic_form(u.shape[0] // 2)
    return mat2(mat2(omega, u.T), omega)
