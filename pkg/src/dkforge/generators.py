"""Seeded random instances.

All randomness flows through ``numpy.random.Generator`` (PCG64) so that a seed
fully determines every instance.  Sizes are capped by ``DKFORGE_MAX_RANK``.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import chain as ch
from . import doldkan as dk
from . import linalg as la
from . import simplicial as sp
from ._config import max_rank
from .chain import ChainComplex, ChainMap
from .simplicial import SimplicialAbGroup, SimplicialMap

RNG_ALGORITHM = "numpy.random.PCG64"


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def case_rng(seed: int, *ids: int) -> np.random.Generator:
    """Independent stream for one case of one property, replayable from (seed, ids)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *ids])))


def random_matrix(g: np.random.Generator, rows: int, cols: int, lo: int = -9, hi: int = 9) -> np.ndarray:
    return g.integers(lo, hi + 1, size=(rows, cols)).astype(np.int64)


def random_unimodular(g: np.random.Generator, n: int, steps: Optional[int] = None) -> np.ndarray:
    """Product of a signed permutation and a few elementary operations."""
    U = la.eye(n)[g.permutation(n)] * g.choice([-1, 1], size=(n, 1))
    for _ in range(steps if steps is not None else n):
        if n < 2:
            break
        i, j = g.choice(n, size=2, replace=False)
        U[i] += int(g.choice([-1, 1])) * U[j]
    return la.tidy(U)


def twist_complex(g: np.random.Generator, C: ChainComplex) -> ChainComplex:
    U = [random_unimodular(g, r) for r in C.ranks]
    Ui = [la.inverse(u) for u in U]
    return ChainComplex(C.ranks, [la.mm(U[n - 1], C.d(n), Ui[n]) for n in range(1, C.T + 1)])


def random_complex(g: np.random.Generator, T: int, rank_cap: int = 3, twist: bool = True) -> ChainComplex:
    """Direct sum of spheres and disks ℤ --k--> ℤ, in a random basis.

    ``k = 1`` gives contractible pieces, ``k >= 2`` torsion in homology.
    """
    ranks = [0] * (T + 1)
    pieces = []
    for _ in range(int(g.integers(1, 2 * T + 3))):
        n = int(g.integers(0, T + 1))
        if n >= 1 and g.random() < 0.6:
            if ranks[n] < rank_cap and ranks[n - 1] < rank_cap:
                k = int(g.choice([1, 1, 2, 3, -1]))
                pieces.append(("disk", n, k))
                ranks[n] += 1
                ranks[n - 1] += 1
        elif ranks[n] < rank_cap:
            pieces.append(("sphere", n, 0))
            ranks[n] += 1
    diffs = [la.zeros(ranks[n - 1], ranks[n]) for n in range(1, T + 1)]
    pos = [0] * (T + 1)
    for kind, n, k in pieces:
        if kind == "sphere":
            pos[n] += 1
        else:
            diffs[n - 1][pos[n - 1], pos[n]] = k
            pos[n] += 1
            pos[n - 1] += 1
    C = ChainComplex(ranks, diffs)
    return twist_complex(g, C) if twist else C


def random_gamma_sized(g: np.random.Generator, T: int, rank_cap: int = 3, cap: Optional[int] = None) -> ChainComplex:
    """A random complex whose Γ has every level rank <= ``cap`` (default DKFORGE_MAX_RANK).

    Rejection sampling: complexes with ranks <= ``rank_cap`` are drawn until
    the binomial rank formula for Γ fits under the cap.
    """
    cap = cap if cap is not None else max_rank()
    for _ in range(1000):
        C = random_complex(g, T, rank_cap=rank_cap)
        if max(dk.gamma_rank(C.ranks, n) for n in range(T + 1)) <= cap and sum(C.ranks):
            return C
    return ch.sphere(0, T)


def random_free_complex_small(g: np.random.Generator, T: int, total: int = 2) -> ChainComplex:
    """Complexes of total rank <= ``total``, for expensive composite checks."""
    while True:
        C = random_complex(g, T, rank_cap=1)
        if 0 < sum(C.ranks) <= total:
            return C


def twist_simplicial(g: np.random.Generator, A: SimplicialAbGroup) -> SimplicialAbGroup:
    return sp.twist(A, [random_unimodular(g, r) for r in A.ranks])


def random_simplicial(g: np.random.Generator, T: int, rank_cap: Optional[int] = None) -> SimplicialAbGroup:
    """Γ(random complex) ⊕ (optional) ℤΔⁿ, twisted levelwise.

    Level ranks stay below ``rank_cap`` (default: DKFORGE_MAX_RANK).
    """
    cap = rank_cap if rank_cap is not None else max_rank()
    for _ in range(100):
        C = random_complex(g, T, rank_cap=1)
        A = dk.gamma(C).group
        if g.random() < 0.5:
            A = sp.direct_sum(A, sp.standard_simplex(int(g.integers(0, 2)), T))
        if max(A.ranks) <= cap and sum(A.ranks) > 0:
            return twist_simplicial(g, A)
    return twist_simplicial(g, sp.standard_simplex(0, T))


def _combination(g: np.random.Generator, K: np.ndarray) -> np.ndarray:
    if K.shape[1] == 0:
        return la.zeros(K.shape[0], 1)
    return la.mm(K, la.tidy(g.integers(-2, 3, size=(K.shape[1], 1)).astype(np.int64)))


def random_chain_map(g: np.random.Generator, C: ChainComplex, D: ChainComplex) -> ChainMap:
    """Random integer combination of a basis of all chain maps C -> D."""
    T = min(C.T, D.T)
    sizes = [D.rank(n) * C.rank(n) for n in range(T + 1)]
    offs = np.cumsum([0] + sizes)
    rows = []
    for n in range(1, T + 1):
        # f_{n-1} d_n - d_n f_n = 0, vectorized column-major
        M = np.zeros((D.rank(n - 1) * C.rank(n), int(offs[-1])), dtype=np.int64)
        M[:, offs[n - 1]:offs[n]] = la.kron(C.d(n).T.copy(), la.eye(D.rank(n - 1)))
        M[:, offs[n]:offs[n + 1]] -= la.kron(la.eye(C.rank(n)), D.d(n))
        rows.append(M)
    K = la.kernel_basis(la.vstack(rows, int(offs[-1]))) if rows else la.eye(int(offs[-1]))
    x = _combination(g, K)[:, 0]
    comps = [x[offs[n]:offs[n + 1]].reshape((D.rank(n), C.rank(n)), order="F") for n in range(T + 1)]
    return ChainMap(C, D, [la.tidy(np.asarray(c)) for c in comps])


def random_simplicial_map(g: np.random.Generator, A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialMap:
    """Random integer combination of a basis of all simplicial maps A -> B."""
    T = min(A.T, B.T)
    sizes = [B.ranks[n] * A.ranks[n] for n in range(T + 1)]
    offs = np.cumsum([0] + sizes)
    total = int(offs[-1])
    rows = []

    def block(lo, hi, left, right):
        # vec(left X right) for X the unknown at [lo:hi]
        M = np.zeros((left.shape[0] * right.shape[1], total), dtype=np.int64)
        M[:, lo:hi] = la.kron(right.T.copy(), left)
        return M

    for n in range(1, T + 1):
        for i in range(n + 1):
            rows.append(block(offs[n - 1], offs[n], la.eye(B.ranks[n - 1]), A.d(n, i))
                        - block(offs[n], offs[n + 1], B.d(n, i), la.eye(A.ranks[n])))
    for n in range(T):
        for i in range(n + 1):
            rows.append(block(offs[n + 1], offs[n + 2], la.eye(B.ranks[n + 1]), A.s(n, i))
                        - block(offs[n], offs[n + 1], B.s(n, i), la.eye(A.ranks[n])))
    K = la.kernel_basis(la.vstack(rows, total)) if rows else la.eye(total)
    x = _combination(g, K)[:, 0]
    comps = [x[offs[n]:offs[n + 1]].reshape((B.ranks[n], A.ranks[n]), order="F") for n in range(T + 1)]
    return SimplicialMap(A, B, [la.tidy(np.asarray(c)) for c in comps])
