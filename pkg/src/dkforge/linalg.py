"""Exact integer linear algebra.

An *IntMatrix* here is simply a 2-d numpy array holding integers, either
``int64`` (fast path) or ``object`` (Python ints, arbitrary precision).  Every
routine in this module is exact: int64 arithmetic is only used after a
magnitude bound shows it cannot overflow, otherwise the computation runs on
Python ints.  Results are demoted back to int64 whenever they fit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from ._config import backend

_INT64_SAFE = 1 << 62


def _fits(bound: int) -> bool:
    return bound < _INT64_SAFE


def tidy(M: np.ndarray) -> np.ndarray:
    """Demote an object array to int64 when every entry fits."""
    if M.dtype == object:
        if M.size == 0 or _fits(int(np.abs(M).max())):
            return M.astype(np.int64)
    return M


def imat(data, rows: Optional[int] = None, cols: Optional[int] = None) -> np.ndarray:
    """Coerce ``data`` into an IntMatrix of the given shape.

    Accepts nested lists, numpy arrays or an empty list (with explicit shape).
    """
    if isinstance(data, np.ndarray) and data.ndim == 2 and data.dtype in (np.int64, object):
        M = data
    else:
        seq = data.tolist() if isinstance(data, np.ndarray) else data
        flat = []
        _flatten(seq, flat)
        if any(not isinstance(x, (int, np.integer)) or isinstance(x, bool) for x in flat):
            raise TypeError("IntMatrix entries must be integers")
        big = any(abs(int(x)) >= _INT64_SAFE for x in flat)
        M = np.array(seq, dtype=object if big else np.int64)
        if big:
            M = np.vectorize(int, otypes=[object])(M) if M.size else M
    if M.ndim == 1 and M.size == 0:
        M = M.reshape(0, 0)
    if rows is not None and cols is not None:
        if M.size == 0:
            M = M.reshape(rows, cols) if rows * cols == 0 else M
        if M.shape != (rows, cols):
            raise ValueError(f"matrix has shape {M.shape}, expected {(rows, cols)}")
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got {M.ndim} dimensions")
    return tidy(M)


def _flatten(seq, out):
    if isinstance(seq, (list, tuple)):
        for s in seq:
            _flatten(s, out)
    else:
        out.append(seq)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def vec(data) -> np.ndarray:
    """Column vector (n x 1) from a flat sequence."""
    v = imat([[int(x)] for x in data]) if len(data) else zeros(0, 1)
    return v


def _bound(M: np.ndarray) -> int:
    return int(np.abs(M).max()) if M.size else 0


def mm(*mats: np.ndarray) -> np.ndarray:
    """Exact product of a chain of IntMatrices."""
    out = mats[0]
    for B in mats[1:]:
        A = out
        if A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
        if A.dtype != object and B.dtype != object and _fits(_bound(A) * _bound(B) * max(A.shape[1], 1)):
            out = A @ B
        else:
            out = tidy(A.astype(object).dot(B.astype(object)) if A.shape[1] else zeros(A.shape[0], B.shape[1]))
    return out


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.dtype != object and B.dtype != object and _fits(_bound(A) * _bound(B)):
        return np.kron(A, B)
    return tidy(np.kron(A.astype(object), B.astype(object)))


def add(A: np.ndarray, B: np.ndarray, sign: int = 1) -> np.ndarray:
    if A.dtype != object and B.dtype != object and _fits(_bound(A) + _bound(B)):
        return A + sign * B
    return tidy(A.astype(object) + sign * B.astype(object))


def scale(A: np.ndarray, c: int) -> np.ndarray:
    if A.dtype != object and _fits(_bound(A) * abs(c)):
        return A * c
    return tidy(A.astype(object) * c)


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    obj = any(b.dtype == object for b in blocks)
    out = np.zeros((rows, cols), dtype=object if obj else np.int64)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return tidy(out)


def hstack(blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
    blocks = [b for b in blocks]
    if not blocks:
        return zeros(rows, 0)
    obj = any(b.dtype == object for b in blocks)
    return tidy(np.hstack([b.astype(object) if obj else b for b in blocks]))


def vstack(blocks: Sequence[np.ndarray], cols: int) -> np.ndarray:
    if not blocks:
        return zeros(0, cols)
    obj = any(b.dtype == object for b in blocks)
    return tidy(np.vstack([b.astype(object) if obj else b for b in blocks]))


def is_zero(M: np.ndarray) -> bool:
    return not M.any() if M.size else True


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool((A == B).all()) if A.size else A.shape == B.shape


def det(M: np.ndarray) -> int:
    """Exact determinant (Bareiss fraction-free elimination)."""
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    a = [[int(x) for x in row] for row in M.tolist()]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


# ------------------------------------------------------------- decompositions


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D in Smith normal form."""

    D: np.ndarray
    U: np.ndarray
    V: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class CokernelData:
    free_rank: int
    torsion: list[int] = field(default_factory=list)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def snf(A: np.ndarray) -> SmithDecomposition:
    A = imat(A)
    m, n = A.shape
    if backend() == "numba" and A.dtype == np.int64:
        D, U, V = A.copy(), eye(m), eye(n)
        if _kernels.snf_nb(D, U, V):
            return SmithDecomposition(D, U, V)
    D, U, V = _kernels.snf_np(A.copy(), eye(m), eye(n))
    return SmithDecomposition(tidy(D), tidy(U), tidy(V))


class ColumnEchelon:
    """Column echelon form ``A @ V = H`` with V unimodular.

    The first ``rank`` columns of H are in echelon form with positive pivots
    in strictly increasing rows; the remaining columns are zero, so
    ``V[:, rank:]`` is a basis of the integer kernel.
    """

    def __init__(self, A: np.ndarray):
        A = imat(A)
        self.A = A
        m, n = A.shape
        done = False
        if backend() == "numba" and A.dtype == np.int64:
            H, V, r = A.copy(), eye(n), np.zeros(1, dtype=np.int64)
            if _kernels.col_echelon_nb(H, V, r):
                self.H, self.V, self.rank = H, V, int(r[0])
                done = True
        if not done:
            H, V, r = _kernels.col_echelon_np(A.copy(), eye(n))
            self.H, self.V, self.rank = tidy(H), tidy(V), r
        self.pivot_rows = []
        for c in range(self.rank):
            nz = np.nonzero(self.H[:, c])[0]
            self.pivot_rows.append(int(nz[0]))

    def kernel(self) -> np.ndarray:
        return self.V[:, self.rank:]

    def image(self) -> np.ndarray:
        return self.H[:, :self.rank]

    def solve(self, B: np.ndarray):
        """Integer X with A X = B, or None when some column has no solution."""
        B = imat(B)
        if B.shape[0] != self.A.shape[0]:
            raise ValueError("right-hand side has the wrong number of rows")
        k = B.shape[1]
        H = self.H.astype(object)
        R = B.astype(object).copy()
        Y = np.zeros((self.A.shape[1], k), dtype=object)
        for c in range(self.rank):
            row = self.pivot_rows[c]
            p = H[row, c]
            q = R[row] // p
            if k and (R[row] - q * p).any():
                return None
            Y[c] = q
            if k:
                R -= np.outer(H[:, c], q)
        if k and R.any():
            return None
        return mm(self.V, tidy(Y))


def rref(A: np.ndarray):
    """Fraction-free reduced row echelon form ``(R, pivots)``.

    All pivot entries of R are equal (to the last pivot); the row space and
    hence the kernel are those of A.
    """
    A = imat(A)
    m, n = A.shape
    if backend() == "numba" and A.dtype == np.int64:
        R = A.copy()
        piv = np.zeros(min(m, n), dtype=np.int64)
        r = _kernels.rref_nb(R, piv)
        if r >= 0:
            return R, [int(c) for c in piv[:r]]
    R, piv = _kernels.rref_np(A)
    return tidy(R), piv


class EchelonBasis:
    """Columns B with ``B[rows] == I``: coordinates are read off those rows."""

    def __init__(self, B: np.ndarray, rows: Sequence[int]):
        self.B = B
        self.rows = list(rows)

    def solve(self, X: np.ndarray):
        X = imat(X)
        Y = X[self.rows] if self.rows else zeros(0, X.shape[1])
        return Y if equal(mm(self.B, Y), X) else None


def kernel_with_rows(A: np.ndarray):
    """Kernel basis K plus rows where K is the identity (None if there are none)."""
    A = imat(A)
    n = A.shape[1]
    R, piv = rref(A)
    free = [j for j in range(n) if j not in set(piv)]
    if not free:
        return zeros(n, 0), []
    D = int(R[0, piv[0]]) if piv else 1
    K = np.zeros((n, len(free)), dtype=object)
    for t, j in enumerate(free):
        K[j, t] = D
        for i, p in enumerate(piv):
            K[p, t] = -R[i, j]
    if not any(int(x) % D for x in K.flat):
        return tidy(K // D), free
    dec = snf(tidy(K))
    return inverse(dec.U)[:, :len(free)], None


def kernel_basis(A: np.ndarray) -> np.ndarray:
    """Columns form a basis of the (saturated) integer kernel of A."""
    return kernel_with_rows(A)[0]


def basis_solver(B: np.ndarray, rows=None):
    """Coordinate solver for a basis matrix, fast when identity rows are known."""
    return EchelonBasis(B, rows) if rows is not None else ColumnEchelon(B)


def image_basis(A: np.ndarray) -> np.ndarray:
    """Columns form a basis of the column lattice of A (not saturated)."""
    return ColumnEchelon(A).image()


def rank(A: np.ndarray) -> int:
    return len(rref(A)[1])


def solve(A: np.ndarray, b: np.ndarray):
    """Integer solution x of A x = b (b a column or matrix), or None."""
    if np.ndim(b) == 1:
        b = vec(list(b))
    return ColumnEchelon(A).solve(imat(b))


def cokernel(A: np.ndarray, target_rank: Optional[int] = None) -> CokernelData:
    A = imat(A)
    if target_rank is not None and A.shape[0] != target_rank:
        raise ValueError("target rank does not match the matrix")
    dec = snf(A)
    diag = [d for d in dec.diagonal if d != 0]
    return CokernelData(A.shape[0] - len(diag), [d for d in diag if d > 1])


def left_inverse(B: np.ndarray) -> np.ndarray:
    """L with L @ B = I, for B whose columns span a saturated sublattice."""
    B = imat(B)
    m, k = B.shape
    dec = snf(B)
    if dec.diagonal[:k] != [1] * k:
        raise ValueError("columns do not span a saturated sublattice")
    sel = np.hstack([eye(k), zeros(k, m - k)])
    return mm(dec.V, sel, dec.U)


def is_unimodular(M: np.ndarray) -> bool:
    return M.shape[0] == M.shape[1] and abs(det(M)) == 1


def inverse(M: np.ndarray) -> np.ndarray:
    """Inverse of a unimodular matrix (raises otherwise)."""
    n = M.shape[0]
    X = ColumnEchelon(M).solve(eye(n))
    if M.shape != (n, n) or X is None:
        raise ValueError("matrix is not invertible over the integers")
    return X
