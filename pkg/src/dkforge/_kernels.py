"""Integer elimination kernels.

Two implementations of each kernel live here:

* ``*_nb``: scalar loops compiled with ``numba.njit`` on int64 arrays.  Every
  update is bounds-checked and the kernel returns ``False`` as soon as an entry
  would leave ``[-LIMIT, LIMIT]``; the caller then reruns the numpy path.
* ``*_np``: vectorized numpy.  Starts on int64 and upgrades the working arrays
  to ``dtype=object`` (Python ints) the moment a row/column update could
  overflow, so it is always exact.

All kernels work in place on arrays that the caller owns.
"""

import numpy as np

from ._config import HAVE_NUMBA

LIMIT = 1 << 61

if HAVE_NUMBA:
    from numba import njit
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


# ---------------------------------------------------------------- numba path


@njit(cache=True)
def _rowop_nb(A, dst, src, q):
    # A[dst] -= q * A[src]
    for k in range(A.shape[1]):
        v = A[src, k]
        if v != 0:
            if abs(q) > LIMIT // abs(v):
                return False
            nv = A[dst, k] - q * v
            if nv > LIMIT or nv < -LIMIT:
                return False
            A[dst, k] = nv
    return True


@njit(cache=True)
def _colop_nb(A, dst, src, q):
    # A[:, dst] -= q * A[:, src]
    for k in range(A.shape[0]):
        v = A[k, src]
        if v != 0:
            if abs(q) > LIMIT // abs(v):
                return False
            nv = A[k, dst] - q * v
            if nv > LIMIT or nv < -LIMIT:
                return False
            A[k, dst] = nv
    return True


@njit(cache=True)
def _swap_rows_nb(A, i, j):
    if i != j:
        for k in range(A.shape[1]):
            tmp = A[i, k]
            A[i, k] = A[j, k]
            A[j, k] = tmp


@njit(cache=True)
def _swap_cols_nb(A, i, j):
    if i != j:
        for k in range(A.shape[0]):
            tmp = A[k, i]
            A[k, i] = A[k, j]
            A[k, j] = tmp


@njit(cache=True)
def snf_nb(A, U, V):
    """Reduce A to Smith form in place, U and V accumulate the row/column ops."""
    m, n = A.shape
    t = 0
    while t < m and t < n:
        best = 0
        bi = -1
        bj = -1
        for i in range(t, m):
            for j in range(t, n):
                a = abs(A[i, j])
                if a != 0 and (best == 0 or a < best):
                    best = a
                    bi = i
                    bj = j
        if bi < 0:
            break
        _swap_rows_nb(A, t, bi)
        _swap_rows_nb(U, t, bi)
        _swap_cols_nb(A, t, bj)
        _swap_cols_nb(V, t, bj)
        while True:
            p = A[t, t]
            clean = True
            for i in range(t + 1, m):
                if A[i, t] != 0:
                    q = A[i, t] // p
                    if q != 0:
                        if not _rowop_nb(A, i, t, q) or not _rowop_nb(U, i, t, q):
                            return False
                    if A[i, t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if A[t, j] != 0:
                    q = A[t, j] // p
                    if q != 0:
                        if not _colop_nb(A, j, t, q) or not _colop_nb(V, j, t, q):
                            return False
                    if A[t, j] != 0:
                        clean = False
            if not clean:
                best = abs(p)
                bi = t
                bj = t
                for i in range(t + 1, m):
                    a = abs(A[i, t])
                    if a != 0 and a < best:
                        best = a
                        bi = i
                        bj = t
                for j in range(t + 1, n):
                    a = abs(A[t, j])
                    if a != 0 and a < best:
                        best = a
                        bi = t
                        bj = j
                _swap_rows_nb(A, t, bi)
                _swap_rows_nb(U, t, bi)
                _swap_cols_nb(A, t, bj)
                _swap_cols_nb(V, t, bj)
                continue
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i, j] % p != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad >= 0:
                if not _rowop_nb(A, t, bad, -1) or not _rowop_nb(U, t, bad, -1):
                    return False
                continue
            break
        if A[t, t] < 0:
            for k in range(n):
                A[t, k] = -A[t, k]
            for k in range(m):
                U[t, k] = -U[t, k]
        t += 1
    return True


@njit(cache=True)
def col_echelon_nb(A, V, out_rank):
    """Column-echelon A in place (A V = H); pivots positive, rank in out_rank[0]."""
    m, n = A.shape
    r = 0
    for i in range(m):
        if r == n:
            break
        found = False
        while True:
            best = 0
            bj = -1
            for j in range(r, n):
                a = abs(A[i, j])
                if a != 0 and (best == 0 or a < best):
                    best = a
                    bj = j
            if bj < 0:
                break
            found = True
            _swap_cols_nb(A, r, bj)
            _swap_cols_nb(V, r, bj)
            p = A[i, r]
            done = True
            for j in range(r + 1, n):
                if A[i, j] != 0:
                    q = A[i, j] // p
                    if not _colop_nb(A, j, r, q) or not _colop_nb(V, j, r, q):
                        return False
                    if A[i, j] != 0:
                        done = False
            if done:
                break
        if found:
            if A[i, r] < 0:
                for k in range(m):
                    A[k, r] = -A[k, r]
                for k in range(n):
                    V[k, r] = -V[k, r]
            r += 1
    out_rank[0] = r
    return True


# ---------------------------------------------------------------- numpy path


def _bound(x) -> int:
    return int(np.abs(x).max()) if x.size else 0


def _upgrade(*arrays):
    return tuple(a.astype(object) for a in arrays)


def _masked_argmin(block):
    """(i, j) of the smallest nonzero |entry| of block, or None."""
    mag = np.abs(block)
    nz = mag != 0
    if not nz.any():
        return None
    if mag.dtype == object:
        fill = max(mag[nz]) + 1
    else:
        fill = np.iinfo(np.int64).max
    flat = int(np.argmin(np.where(nz, mag, fill)))
    return np.unravel_index(flat, block.shape)


def snf_np(A, U, V):
    """Vectorized Smith reduction; returns the (possibly upgraded) arrays."""
    m, n = A.shape
    if A.dtype == object:
        A, U, V = _upgrade(A, U, V)
    t = 0
    while t < m and t < n:
        loc = _masked_argmin(A[t:, t:])
        if loc is None:
            break
        bi, bj = t + int(loc[0]), t + int(loc[1])
        A[[t, bi]] = A[[bi, t]]
        U[[t, bi]] = U[[bi, t]]
        A[:, [t, bj]] = A[:, [bj, t]]
        V[:, [t, bj]] = V[:, [bj, t]]
        while True:
            p = A[t, t]
            q = A[t + 1:, t] // p
            if q.any():
                if A.dtype != object and _bound(q) * max(_bound(A[t]), _bound(U[t])) + max(
                    _bound(A), _bound(U)
                ) > LIMIT:
                    A, U, V = _upgrade(A, U, V)
                    q = q.astype(object)
                A[t + 1:] -= np.outer(q, A[t])
                U[t + 1:] -= np.outer(q, U[t])
            q = A[t, t + 1:] // p
            if q.any():
                if A.dtype != object and _bound(q) * max(_bound(A[:, t]), _bound(V[:, t])) + max(
                    _bound(A), _bound(V)
                ) > LIMIT:
                    A, U, V = _upgrade(A, U, V)
                    q = q.astype(object)
                A[:, t + 1:] -= np.outer(A[:, t], q)
                V[:, t + 1:] -= np.outer(V[:, t], q)
            col = A[t:, t]
            row = A[t, t:]
            if col[1:].any() or row[1:].any():
                ci = int(np.argmin(np.where(col != 0, np.abs(col), _bound(col) + 1)))
                rj = int(np.argmin(np.where(row != 0, np.abs(row), _bound(row) + 1)))
                if abs(col[ci]) <= abs(row[rj]):
                    A[[t, t + ci]] = A[[t + ci, t]]
                    U[[t, t + ci]] = U[[t + ci, t]]
                else:
                    A[:, [t, t + rj]] = A[:, [t + rj, t]]
                    V[:, [t, t + rj]] = V[:, [t + rj, t]]
                continue
            rest = A[t + 1:, t + 1:]
            bad = np.nonzero((rest % p != 0).any(axis=1))[0]
            if bad.size:
                i = t + 1 + int(bad[0])
                A[t] += A[i]
                U[t] += U[i]
                continue
            break
        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
        t += 1
    return A, U, V


def col_echelon_np(A, V):
    """Vectorized column echelon; returns (H, V, rank)."""
    m, n = A.shape
    if A.dtype == object:
        A, V = _upgrade(A, V)
    r = 0
    for i in range(m):
        if r == n:
            break
        found = False
        while True:
            row = A[i, r:]
            nz = row != 0
            if not nz.any():
                break
            found = True
            mag = np.abs(row)
            j = r + int(np.argmin(np.where(nz, mag, _bound(row) + 1)))
            A[:, [r, j]] = A[:, [j, r]]
            V[:, [r, j]] = V[:, [j, r]]
            p = A[i, r]
            q = A[i, r + 1:] // p
            if not q.any():
                break
            if A.dtype != object and _bound(q) * max(_bound(A[:, r]), _bound(V[:, r])) + max(
                _bound(A), _bound(V)
            ) > LIMIT:
                A, V = _upgrade(A, V)
                q = q.astype(object)
            A[:, r + 1:] -= np.outer(A[:, r], q)
            V[:, r + 1:] -= np.outer(V[:, r], q)
            if not A[i, r + 1:].any():
                break
        if found:
            if A[i, r] < 0:
                A[:, r] = -A[:, r]
                V[:, r] = -V[:, r]
            r += 1
    return A, V, r


# ------------------------------------------------ fraction-free Gauss-Jordan


@njit(cache=True)
def rref_nb(A, pivots):
    """Fraction-free Gauss-Jordan on the rows of A in place.

    Every intermediate entry is a minor of the input.  On exit all pivot
    entries equal the last pivot; returns the rank, or -1 on overflow.
    """
    m, n = A.shape
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        bi = -1
        best = 0
        for i in range(r, m):
            a = abs(A[i, c])
            if a != 0 and (best == 0 or a < best):
                best = a
                bi = i
        if bi < 0:
            continue
        _swap_rows_nb(A, r, bi)
        p = A[r, c]
        for i in range(m):
            if i == r:
                continue
            f = A[i, c]
            for k in range(n):
                if k == c:
                    continue
                x = A[i, k]
                y = A[r, k]
                if x == 0 and (f == 0 or y == 0):
                    continue
                if (x != 0 and abs(p) > LIMIT // abs(x)) or (y != 0 and f != 0 and abs(f) > LIMIT // abs(y)):
                    return -1
                v = p * x - f * y
                if v % prev != 0:
                    return -1
                A[i, k] = v // prev
            A[i, c] = 0 if i != r else A[i, c]
        # earlier pivot rows were scaled along with everything else
        pivots[r] = c
        prev = p
        r += 1
    return r


def rref_np(A):
    """Object-arithmetic twin of :func:`rref_nb`; returns (A, pivots)."""
    A = A.astype(object)
    m, n = A.shape
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        bi = r + int(nz[np.argmin(np.abs(col[nz]))])
        A[[r, bi]] = A[[bi, r]]
        p = A[r, c]
        others = np.array([i for i in range(m) if i != r], dtype=np.int64)
        if others.size:
            f = A[others, c].copy()
            A[others] = (p * A[others] - np.outer(f, A[r])) // prev
        pivots.append(c)
        prev = p
        r += 1
    return A, pivots
