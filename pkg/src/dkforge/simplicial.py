"""Truncated simplicial abelian groups, levelwise finitely generated free."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from . import linalg as la
from .chain import ValidationError


@lru_cache(maxsize=None)
def monotone_maps(k: int, n: int) -> tuple:
    """All nondecreasing maps [k] -> [n] as tuples, in lexicographic order."""
    return tuple(combinations_with_replacement(range(n + 1), k + 1))


def epi_mono(theta: Sequence[int]):
    """Factor a monotone map θ: [m] -> [n] as ι_S ∘ σ.

    Returns ``(S, J)``: the image S (sorted) and the repeat positions J of the
    surjection σ, i.e. the j with θ(j) == θ(j+1).
    """
    S = tuple(sorted(set(theta)))
    J = tuple(j for j in range(len(theta) - 1) if theta[j] == theta[j + 1])
    return S, J


class SimplicialAbGroup:
    """Ranks per level 0..T with face and degeneracy matrices.

    ``faces[n][i]``: d_i from level n to n-1 (n >= 1, 0 <= i <= n).
    ``degens[n][i]``: s_i from level n to n+1 (n < T, 0 <= i <= n).
    """

    def __init__(self, ranks: Sequence[int], faces: Sequence, degens: Sequence, check: bool = True):
        self.ranks = tuple(int(r) for r in ranks)
        T = self.T
        if len(faces) not in (T, T + 1) or len(degens) not in (T, T + 1):
            raise ValidationError("faces/degeneracies do not match the truncation")
        if len(faces) == T:
            faces = [[]] + list(faces)
        self.faces = tuple(
            tuple(la.imat(m, self.ranks[n - 1], self.ranks[n]) for m in faces[n]) if n else ()
            for n in range(T + 1)
        )
        self.degens = tuple(
            tuple(la.imat(m, self.ranks[n + 1], self.ranks[n]) for m in degens[n]) for n in range(T)
        )
        for n in range(1, T + 1):
            if len(self.faces[n]) != n + 1:
                raise ValidationError(f"level {n} needs {n + 1} face maps")
        for n in range(T):
            if len(self.degens[n]) != n + 1:
                raise ValidationError(f"level {n} needs {n + 1} degeneracy maps")
        self._ops = {}
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return len(self.ranks) - 1

    def d(self, n: int, i: int) -> np.ndarray:
        return self.faces[n][i]

    def s(self, n: int, i: int) -> np.ndarray:
        return self.degens[n][i]

    def validate(self) -> None:
        T = self.T
        for n in range(2, T + 1):
            for j in range(n + 1):
                for i in range(j):
                    if not la.equal(la.mm(self.d(n - 1, i), self.d(n, j)), la.mm(self.d(n - 1, j - 1), self.d(n, i))):
                        raise ValidationError(f"d_{i} d_{j} != d_{j - 1} d_{i} at level {n}")
        for n in range(T - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if not la.equal(la.mm(self.s(n + 1, i), self.s(n, j)), la.mm(self.s(n + 1, j + 1), self.s(n, i))):
                        raise ValidationError(f"s_{i} s_{j} != s_{j + 1} s_{i} at level {n}")
        for n in range(T):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = la.mm(self.d(n + 1, i), self.s(n, j))
                    if i < j:
                        rhs = la.mm(self.s(n - 1, j - 1), self.d(n, i))
                    elif i in (j, j + 1):
                        rhs = la.eye(self.ranks[n])
                    else:
                        rhs = la.mm(self.s(n - 1, j), self.d(n, i - 1))
                    if not la.equal(lhs, rhs):
                        raise ValidationError(f"d_{i} s_{j} identity fails (i={i}, j={j}, level {n})")

    def face(self, n: int, S: Sequence[int]) -> np.ndarray:
        """ι_S^*: A_n -> A_{|S|-1} for a sorted subset S of [n]."""
        key = ("face", n, tuple(S))
        if key not in self._ops:
            M = la.eye(self.ranks[n])
            level = n
            for i in sorted(set(range(n + 1)) - set(S), reverse=True):
                M = la.mm(self.d(level, i), M)
                level -= 1
            self._ops[key] = M
        return self._ops[key]

    def degeneracy(self, k: int, J: Sequence[int]) -> np.ndarray:
        """s_{j_t} ... s_{j_1} from level k (applying s_{j_1} first)."""
        key = ("degen", k, tuple(J))
        if key not in self._ops:
            M = la.eye(self.ranks[k])
            level = k
            for j in sorted(J):
                M = la.mm(self.s(level, j), M)
                level += 1
            self._ops[key] = M
        return self._ops[key]

    def operator(self, theta: Sequence[int], n: int) -> np.ndarray:
        """θ^*: A_n -> A_m for a monotone θ: [m] -> [n]."""
        S, J = epi_mono(theta)
        return la.mm(self.degeneracy(len(S) - 1, J), self.face(n, S))

    def truncate(self, T: int) -> "SimplicialAbGroup":
        if T == self.T:
            return self
        return SimplicialAbGroup(self.ranks[:T + 1], self.faces[:T + 1], self.degens[:T], check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialAbGroup)
            and self.ranks == other.ranks
            and all(la.equal(a, b) for fa, fb in zip(self.faces, other.faces) for a, b in zip(fa, fb))
            and all(la.equal(a, b) for sa, sb in zip(self.degens, other.degens) for a, b in zip(sa, sb))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"SimplicialAbGroup(ranks={list(self.ranks)})"


class SimplicialMap:
    def __init__(self, source: SimplicialAbGroup, target: SimplicialAbGroup, components, check: bool = True):
        T = min(source.T, target.T)
        comps = list(components)[:T + 1]
        if len(comps) != T + 1:
            raise ValidationError(f"expected {T + 1} components, got {len(comps)}")
        self.source = source
        self.target = target
        self.components = tuple(la.imat(f, target.ranks[n], source.ranks[n]) for n, f in enumerate(comps))
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, n: int) -> np.ndarray:
        return self.components[n]

    def validate(self) -> None:
        A, B = self.source, self.target
        for n in range(1, self.T + 1):
            for i in range(n + 1):
                if not la.equal(la.mm(self[n - 1], A.d(n, i)), la.mm(B.d(n, i), self[n])):
                    raise ValidationError(f"map does not commute with d_{i} at level {n}")
        for n in range(self.T):
            for i in range(n + 1):
                if not la.equal(la.mm(self[n + 1], A.s(n, i)), la.mm(B.s(n, i), self[n])):
                    raise ValidationError(f"map does not commute with s_{i} at level {n}")

    def __matmul__(self, other: "SimplicialMap") -> "SimplicialMap":
        T = min(self.T, other.T)
        return SimplicialMap(other.source, self.target, [la.mm(self[n], other[n]) for n in range(T + 1)], check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialMap) and len(self.components) == len(other.components) and all(
            la.equal(a, b) for a, b in zip(self.components, other.components)
        )

    __hash__ = None


def identity(A: SimplicialAbGroup) -> SimplicialMap:
    return SimplicialMap(A, A, [la.eye(r) for r in A.ranks], check=False)


# ----------------------------------------------------------------- builders


def from_operators(ranks: Sequence[int], op) -> SimplicialAbGroup:
    """Build from a callable ``op(theta, n)`` giving θ^* for cofaces/codegeneracies."""
    T = len(ranks) - 1
    faces = [[]] + [[op(_coface(i, n), n) for i in range(n + 1)] for n in range(1, T + 1)]
    degens = [[op(_codegeneracy(i, n), n) for i in range(n + 1)] for n in range(T)]
    return SimplicialAbGroup(ranks, faces, degens, check=False)


def _coface(i: int, n: int) -> tuple:
    """δ_i: [n-1] -> [n] skipping i."""
    return tuple(j for j in range(n + 1) if j != i)


def _codegeneracy(i: int, n: int) -> tuple:
    """σ_i: [n+1] -> [n] hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def standard_simplex(n: int, T: int) -> SimplicialAbGroup:
    """ℤΔⁿ: level k has basis the monotone maps [k] -> [n]."""
    ranks = [len(monotone_maps(k, n)) for k in range(T + 1)]
    index = [{a: i for i, a in enumerate(monotone_maps(k, n))} for k in range(T + 1)]

    def precompose(theta, src_level, dst_level):
        M = la.zeros(ranks[dst_level], ranks[src_level])
        for col, alpha in enumerate(monotone_maps(src_level, n)):
            M[index[dst_level][tuple(alpha[t] for t in theta)], col] = 1
        return M

    faces = [[]] + [[precompose(_coface(i, k), k, k - 1) for i in range(k + 1)] for k in range(1, T + 1)]
    degens = [[precompose(_codegeneracy(i, k), k, k + 1) for i in range(k + 1)] for k in range(T)]
    return SimplicialAbGroup(ranks, faces, degens, check=False)


def constant(T: int, rank: int = 1) -> SimplicialAbGroup:
    """The constant simplicial group ℤ^rank (all structure maps identities)."""
    I = la.eye(rank)
    return SimplicialAbGroup(
        [rank] * (T + 1),
        [[]] + [[I] * (n + 1) for n in range(1, T + 1)],
        [[I] * (n + 1) for n in range(T)],
        check=False,
    )


def tensor(A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialAbGroup:
    """Levelwise tensor product; structure maps act diagonally (Kronecker)."""
    T = min(A.T, B.T)
    return SimplicialAbGroup(
        [A.ranks[n] * B.ranks[n] for n in range(T + 1)],
        [[]] + [[la.kron(A.d(n, i), B.d(n, i)) for i in range(n + 1)] for n in range(1, T + 1)],
        [[la.kron(A.s(n, i), B.s(n, i)) for i in range(n + 1)] for n in range(T)],
        check=False,
    )


def tensor_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    T = min(f.T, g.T)
    return SimplicialMap(
        tensor(f.source, g.source), tensor(f.target, g.target),
        [la.kron(f[n], g[n]) for n in range(T + 1)], check=False,
    )


def symmetry(A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialMap:
    """a ⊗ b ↦ b ⊗ a levelwise."""
    T = min(A.T, B.T)
    comps = []
    for n in range(T + 1):
        ra, rb = A.ranks[n], B.ranks[n]
        M = la.zeros(ra * rb, ra * rb)
        for i in range(ra):
            for j in range(rb):
                M[j * ra + i, i * rb + j] = 1
        comps.append(M)
    return SimplicialMap(tensor(A, B), tensor(B, A), comps, check=False)


def direct_sum(A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialAbGroup:
    T = min(A.T, B.T)
    return SimplicialAbGroup(
        [A.ranks[n] + B.ranks[n] for n in range(T + 1)],
        [[]] + [[la.block_diag([A.d(n, i), B.d(n, i)]) for i in range(n + 1)] for n in range(1, T + 1)],
        [[la.block_diag([A.s(n, i), B.s(n, i)]) for i in range(n + 1)] for n in range(T)],
        check=False,
    )


def twist(A: SimplicialAbGroup, U: Sequence[np.ndarray]) -> SimplicialAbGroup:
    """Change basis levelwise by unimodular U[n]: x ↦ U[n] x."""
    Uinv = [la.inverse(u) for u in U]
    T = A.T
    return SimplicialAbGroup(
        A.ranks,
        [[]] + [[la.mm(U[n - 1], A.d(n, i), Uinv[n]) for i in range(n + 1)] for n in range(1, T + 1)],
        [[la.mm(U[n + 1], A.s(n, i), Uinv[n]) for i in range(n + 1)] for n in range(T)],
        check=False,
    )


def zero_map(A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialMap:
    T = min(A.T, B.T)
    return SimplicialMap(A, B, [la.zeros(B.ranks[n], A.ranks[n]) for n in range(T + 1)], check=False)


def zero_group(T: int) -> SimplicialAbGroup:
    return constant(T, 0)


def is_fibration(f: SimplicialMap) -> bool:
    """Kan fibration test via surjectivity of N(f) in degrees 1..T."""
    from .doldkan import normalize_map

    Nf = normalize_map(f)
    return all(la.cokernel(Nf[n]).is_zero for n in range(1, Nf.T + 1))
