"""Connective chain complexes of finitely generated free abelian groups.

Complexes are stored up to a truncation degree ``T``: ranks ``C_0 .. C_T`` and
differentials ``d_n: C_n -> C_{n-1}`` for ``1 <= n <= T``.  Everything built
here is degreewise local, so outputs are exact up to ``T`` and homology is
reported for degrees ``<= T - 1`` only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import linalg as la
from .linalg import CokernelData


class ValidationError(ValueError):
    """A structure violates one of its defining identities."""


@dataclass(frozen=True)
class TensorLayout:
    """Summand bookkeeping for a tensor product of complexes.

    ``blocks[n]`` lists ``(p, q, offset, size)`` in lexicographic order of p.
    """

    left_ranks: tuple
    right_ranks: tuple
    blocks: tuple

    def block(self, n: int, p: int):
        for bp, bq, off, size in self.blocks[n]:
            if bp == p:
                return off, size
        raise KeyError((n, p))


class ChainComplex:
    """Degreewise free connective complex truncated at degree ``T``."""

    def __init__(self, ranks: Sequence[int], diffs: Sequence, layout: Optional[TensorLayout] = None,
                 check: bool = True):
        ranks = tuple(int(r) for r in ranks)
        if not ranks:
            raise ValidationError("a complex needs at least degree 0")
        if len(diffs) != len(ranks) - 1:
            raise ValidationError(f"expected {len(ranks) - 1} differentials, got {len(diffs)}")
        self.ranks = ranks
        self.diffs = tuple(la.imat(d, ranks[n - 1], ranks[n]) for n, d in enumerate(diffs, start=1))
        self.layout = layout
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return len(self.ranks) - 1

    def rank(self, n: int) -> int:
        return self.ranks[n] if 0 <= n <= self.T else 0

    def d(self, n: int) -> np.ndarray:
        """d_n: C_n -> C_{n-1}; d_0 is the zero map to the zero group."""
        if n == 0:
            return la.zeros(0, self.ranks[0])
        return self.diffs[n - 1]

    def validate(self) -> None:
        for n in range(1, self.T):
            if not la.is_zero(la.mm(self.d(n), self.d(n + 1))):
                raise ValidationError(f"d∘d != 0 in degree {n + 1}")

    def truncate(self, T: int) -> "ChainComplex":
        if T > self.T:
            raise ValueError(f"cannot extend truncation {self.T} to {T}")
        if T == self.T:
            return self
        return ChainComplex(self.ranks[:T + 1], self.diffs[:T], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex) or self.ranks != other.ranks:
            return False
        return all(la.equal(a, b) for a, b in zip(self.diffs, other.diffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ChainComplex(ranks={list(self.ranks)})"


class PresentedComplex(ChainComplex):
    """A complex of finitely generated groups F_n / K_n.

    Only relative tensor products and extensions of scalars produce these; the
    relation lattices ``relations[n]`` (columns) must be preserved by d.
    """

    def __init__(self, ranks, diffs, relations, check: bool = True):
        super().__init__(ranks, diffs, check=False)
        if len(relations) != len(self.ranks):
            raise ValidationError("one relation matrix per degree is required")
        self.relations = tuple(
            la.imat(K) if np.size(K) else la.zeros(self.ranks[n], 0) for n, K in enumerate(relations)
        )
        if check:
            self.validate()

    def validate(self) -> None:
        for n in range(1, self.T + 1):
            below = la.ColumnEchelon(self.relations[n - 1])
            if below.solve(la.mm(self.d(n), self.relations[n])) is None:
                raise ValidationError(f"differential does not preserve relations in degree {n}")
            if n < self.T and below.solve(la.mm(self.d(n), self.d(n + 1))) is None:
                raise ValidationError(f"d∘d != 0 modulo relations in degree {n + 1}")

    def truncate(self, T: int) -> "PresentedComplex":
        if T > self.T:
            raise ValueError(f"cannot extend truncation {self.T} to {T}")
        if T == self.T:
            return self
        return PresentedComplex(self.ranks[:T + 1], self.diffs[:T], self.relations[:T + 1], check=False)

    def group(self, n: int) -> CokernelData:
        return la.cokernel(self.relations[n], self.ranks[n])

    def free_quotient(self):
        """``(Q, proj, lift)`` when every F_n / K_n is free, else None.

        ``proj[n]`` maps F_n onto Q_n and ``lift[n]`` is a section of it.
        """
        proj, lift, ranks = [], [], []
        for n in range(self.T + 1):
            dec = la.snf(self.relations[n])
            k = dec.rank
            if any(x != 1 for x in dec.diagonal[:k]):
                return None
            proj.append(dec.U[k:])
            lift.append(la.inverse(dec.U)[:, k:])
            ranks.append(self.ranks[n] - k)
        diffs = [la.mm(proj[n - 1], self.d(n), lift[n]) for n in range(1, self.T + 1)]
        return ChainComplex(ranks, diffs), proj, lift


def relations_of(C: ChainComplex, n: int) -> np.ndarray:
    if isinstance(C, PresentedComplex):
        return C.relations[n]
    return la.zeros(C.rank(n), 0)


# ----------------------------------------------------------------- builders


def sphere(m: int, T: int) -> ChainComplex:
    """ℤ[m]: a single generator in degree m."""
    ranks = [1 if n == m else 0 for n in range(T + 1)]
    return ChainComplex(ranks, [la.zeros(ranks[n - 1], ranks[n]) for n in range(1, T + 1)])


def zero_complex(T: int) -> ChainComplex:
    return ChainComplex([0] * (T + 1), [la.zeros(0, 0)] * T)


def direct_sum(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    T = min(C.T, D.T)
    return ChainComplex(
        [C.rank(n) + D.rank(n) for n in range(T + 1)],
        [la.block_diag([C.d(n), D.d(n)]) for n in range(1, T + 1)],
    )


class ChainMap:
    """Degreewise matrices ``f_n: C_n -> D_n`` for n <= min(T_C, T_D)."""

    def __init__(self, source: ChainComplex, target: ChainComplex, components, check: bool = True):
        T = min(source.T, target.T)
        comps = list(components)[:T + 1]
        if len(comps) != T + 1:
            raise ValidationError(f"expected {T + 1} components, got {len(comps)}")
        self.source = source
        self.target = target
        self.components = tuple(la.imat(f, target.rank(n), source.rank(n)) for n, f in enumerate(comps))
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, n: int) -> np.ndarray:
        return self.components[n]

    def __iter__(self):
        return iter(self.components)

    def validate(self) -> None:
        for n in range(1, self.T + 1):
            diff = la.add(la.mm(self[n - 1], self.source.d(n)), la.mm(self.target.d(n), self[n]), -1)
            K = relations_of(self.target, n - 1)
            if la.is_zero(diff):
                continue
            if K.shape[1] == 0 or la.ColumnEchelon(K).solve(diff) is None:
                raise ValidationError(f"chain map condition fails in degree {n}")

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        return compose(self, other)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target, [la.add(a, b, -1) for a, b in zip(self, other)], check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainMap) and len(self.components) == len(other.components) and all(
            la.equal(a, b) for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ChainMap({list(self.source.ranks)} -> {list(self.target.ranks)})"


def identity_map(C: ChainComplex) -> ChainMap:
    return ChainMap(C, C, [la.eye(r) for r in C.ranks], check=False)


def zero_map(C: ChainComplex, D: ChainComplex) -> ChainMap:
    T = min(C.T, D.T)
    return ChainMap(C, D, [la.zeros(D.rank(n), C.rank(n)) for n in range(T + 1)], check=False)


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g ∘ f."""
    T = min(f.T, g.T)
    return ChainMap(f.source, g.target, [la.mm(g[n], f[n]) for n in range(T + 1)], check=False)


# ------------------------------------------------------------------ tensor


def tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """C ⊗ D with the Koszul sign, summands ordered lexicographically by p."""
    T = min(C.T, D.T)
    blocks = []
    ranks = []
    for n in range(T + 1):
        off = 0
        row = []
        for p in range(n + 1):
            size = C.rank(p) * D.rank(n - p)
            row.append((p, n - p, off, size))
            off += size
        blocks.append(tuple(row))
        ranks.append(off)
    layout = TensorLayout(tuple(C.ranks[:T + 1]), tuple(D.ranks[:T + 1]), tuple(blocks))
    diffs = []
    for n in range(1, T + 1):
        M = np.zeros((ranks[n - 1], ranks[n]), dtype=np.int64)
        for p, q, off, size in blocks[n]:
            if size == 0:
                continue
            if p >= 1:
                o2, s2 = layout.block(n - 1, p - 1)
                M = _put(M, o2, off, la.kron(C.d(p), la.eye(D.rank(q))))
            if q >= 1:
                o2, s2 = layout.block(n - 1, p)
                M = _put(M, o2, off, la.scale(la.kron(la.eye(C.rank(p)), D.d(q)), (-1) ** p))
        diffs.append(M)
    return ChainComplex(ranks, diffs, layout=layout)


def _put(M, r, c, B):
    if B.size == 0:
        return M
    if B.dtype == object and M.dtype != object:
        M = M.astype(object)
    M[r:r + B.shape[0], c:c + B.shape[1]] += B
    return M


def tensor_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """f ⊗ g between the tensor complexes (no sign: maps have degree 0)."""
    S = tensor(f.source, g.source)
    Tt = tensor(f.target, g.target)
    comps = []
    for n in range(S.T + 1):
        M = np.zeros((Tt.rank(n), S.rank(n)), dtype=np.int64)
        for p, q, off, size in S.layout.blocks[n]:
            o2, _ = Tt.layout.block(n, p)
            M = _put(M, o2, off, la.kron(f[p], g[q]))
        comps.append(la.tidy(M))
    return ChainMap(S, Tt, comps, check=False)


def symmetry(C: ChainComplex, D: ChainComplex) -> ChainMap:
    """τ: C ⊗ D -> D ⊗ C, x ⊗ y ↦ (-1)^{|x||y|} y ⊗ x."""
    S = tensor(C, D)
    Tt = tensor(D, C)
    comps = []
    for n in range(S.T + 1):
        M = la.zeros(Tt.rank(n), S.rank(n))
        for p, q, off, size in S.layout.blocks[n]:
            o2, _ = Tt.layout.block(n, q)
            rp, rq = C.rank(p), D.rank(q)
            sign = (-1) ** (p * q)
            for i in range(rp):
                for j in range(rq):
                    M[o2 + j * rp + i, off + i * rq + j] = sign
        comps.append(M)
    return ChainMap(S, Tt, comps, check=False)


# ---------------------------------------------------------------- homology


@dataclass(frozen=True)
class _DegreePresentation:
    cycles: np.ndarray  # basis of (relative) cycles, columns
    solver: object  # expresses cycles in that basis (ColumnEchelon or EchelonBasis)
    smith: la.SmithDecomposition  # of boundaries+relations in cycle coordinates
    group: CokernelData


@dataclass(frozen=True)
class HomologyTable:
    groups: tuple
    presentations: tuple = field(default=(), repr=False, compare=False)

    def __getitem__(self, n: int) -> CokernelData:
        return self.groups[n]

    def __len__(self) -> int:
        return len(self.groups)

    def lines(self) -> list[str]:
        return [f"H_{n} = {g}" for n, g in enumerate(self.groups)]


def _present_degree(C: ChainComplex, n: int) -> _DegreePresentation:
    dn = C.d(n)
    K_below = relations_of(C, n - 1) if n >= 1 else la.zeros(0, 0)
    r = C.rank(n)
    if n >= 1 and K_below.shape[1]:
        big = la.ColumnEchelon(np.hstack([dn.astype(object), K_below.astype(object)]))
        Z = la.image_basis(big.kernel()[:r]) if big.kernel().shape[1] else la.zeros(r, 0)
        solver = la.ColumnEchelon(Z)
    else:
        Z, rows = la.kernel_with_rows(dn)
        solver = la.basis_solver(Z, rows)
    gens = la.hstack([C.d(n + 1), relations_of(C, n)], r)
    B = solver.solve(gens)
    if B is None:
        raise ValidationError(f"boundaries are not cycles in degree {n}")
    dec = la.snf(B)
    diag = [x for x in dec.diagonal if x]
    group = CokernelData(Z.shape[1] - len(diag), [x for x in diag if x > 1])
    return _DegreePresentation(Z, solver, dec, group)


def homology(C: ChainComplex) -> HomologyTable:
    """H_n(C) for 0 <= n <= T-1."""
    pres = tuple(_present_degree(C, n) for n in range(C.T))
    return HomologyTable(tuple(p.group for p in pres), pres)


def induced_map(f: ChainMap, n: int, src: _DegreePresentation, tgt: _DegreePresentation) -> np.ndarray:
    """Images of the source cycle basis in the target's Smith coordinates."""
    img = la.mm(f[n], src.cycles)
    Y = tgt.solver.solve(img)
    if Y is None:
        raise ValidationError(f"map does not send cycles to cycles in degree {n}")
    return la.mm(tgt.smith.U, Y)


def is_quasi_iso(f: ChainMap, hs: Optional[HomologyTable] = None, ht: Optional[HomologyTable] = None) -> bool:
    T = f.T
    hs = hs or homology(f.source.truncate(T) if f.source.T > T else f.source)
    ht = ht or homology(f.target.truncate(T) if f.target.T > T else f.target)
    for n in range(T):
        a, b = hs.presentations[n], ht.presentations[n]
        if a.group != b.group:
            return False
        M = induced_map(f, n, a, b)
        if not la.cokernel(la.hstack([M, b.smith.D], M.shape[0])).is_zero:
            return False
    return True


@dataclass(frozen=True)
class ModelPredicates:
    is_fibration: bool
    is_cofibration: bool
    is_weak_equivalence: bool


def model_predicates(f: ChainMap) -> ModelPredicates:
    fib = all(la.cokernel(f[n]).is_zero for n in range(1, f.T + 1))
    cof = True
    for n in range(f.T + 1):
        dec = la.snf(f[n])
        if dec.rank != f[n].shape[1] or any(x != 1 for x in dec.diagonal if x):
            cof = False
            break
    return ModelPredicates(fib, cof, is_quasi_iso(f))


# ------------------------------------------------------------- homotopies


@dataclass(frozen=True)
class ChainHomotopy:
    """H_n: C_n -> D_{n+1} for 0 <= n <= T-1."""

    components: tuple

    def check(self, f: ChainMap, g: ChainMap) -> bool:
        """d H + H d == f - g in degrees <= T-1."""
        D, C = f.target, f.source
        for n in range(len(self.components)):
            lhs = la.mm(D.d(n + 1), self.components[n])
            if n >= 1:
                lhs = la.add(lhs, la.mm(self.components[n - 1], C.d(n)))
            if not la.equal(lhs, la.add(f[n], g[n], -1)):
                return False
        return True


def homotopy_solve(f: ChainMap, g: ChainMap) -> Optional[ChainHomotopy]:
    """Integer chain homotopy between parallel maps, or None if none exists.

    Solved degree by degree.  When the right-hand side in degree n is not a
    boundary, the previous component is corrected by a cycle-valued map (which
    leaves the earlier equation intact) chosen in Smith coordinates of H_n.
    Only if that fails too is the whole window solved as one linear system.
    """
    C, D = f.source, f.target
    T = min(f.T, g.T)
    H = []
    for n in range(T):
        rhs = la.add(f[n], g[n], -1)
        if n >= 1:
            rhs = la.add(rhs, la.mm(H[n - 1], C.d(n)), -1)
        solver = la.ColumnEchelon(D.d(n + 1))
        X = solver.solve(rhs)
        if X is None and n >= 1:
            K = _cycle_correction(D, n, rhs, C.d(n))
            if K is not None:
                H[n - 1] = la.add(H[n - 1], K)
                X = solver.solve(la.add(rhs, la.mm(K, C.d(n)), -1))
        if X is None:
            return _homotopy_global(f, g, T)
        H.append(X)
    return ChainHomotopy(tuple(H))


def _cycle_correction(D: ChainComplex, n: int, R: np.ndarray, dn: np.ndarray) -> Optional[np.ndarray]:
    """K: C_{n-1} -> Z_n(D) with R - K d_n a matrix of boundaries, or None."""
    p = _present_degree(D, n)
    Rz = p.solver.solve(R)
    if Rz is None:
        return None
    dec = p.smith
    y = la.mm(dec.U, Rz)
    z = p.cycles.shape[1]
    W = np.zeros((z, dn.shape[0]), dtype=object)
    diag = dec.diagonal
    for i in range(z):
        e = diag[i] if i < len(diag) else 0
        if e == 1 or not y[i].any():
            continue
        # w d_n = y_i  (mod e)
        A = dn.T.copy() if e == 0 else la.hstack([dn.T.copy(), la.scale(la.eye(dn.shape[1]), e)], dn.shape[1])
        x = la.solve(A, y[i].reshape(-1, 1))
        if x is None:
            return None
        W[i] = x[:dn.shape[0], 0]
    return la.mm(p.cycles, la.inverse(dec.U), la.tidy(W))


_GLOBAL_LIMIT = 4000


def _homotopy_global(f: ChainMap, g: ChainMap, T: int) -> Optional[ChainHomotopy]:
    C, D = f.source, f.target
    sizes = [D.rank(n + 1) * C.rank(n) for n in range(T)]
    if sum(sizes) > _GLOBAL_LIMIT:
        return None
    offs = np.cumsum([0] + sizes)
    rows = [D.rank(n) * C.rank(n) for n in range(T)]
    roffs = np.cumsum([0] + rows)
    A = np.zeros((int(roffs[-1]), int(offs[-1])), dtype=object)
    b = np.zeros((int(roffs[-1]), 1), dtype=object)
    for n in range(T):
        r0 = int(roffs[n])
        blk = la.kron(la.eye(C.rank(n)), D.d(n + 1))
        A[r0:r0 + rows[n], int(offs[n]):int(offs[n + 1])] = blk
        if n >= 1:
            blk = la.kron(C.d(n).T.copy(), la.eye(D.rank(n)))
            A[r0:r0 + rows[n], int(offs[n - 1]):int(offs[n])] = blk
        b[r0:r0 + rows[n], 0] = la.add(f[n], g[n], -1).flatten(order="F")
    x = la.ColumnEchelon(la.tidy(A)).solve(la.tidy(b))
    if x is None:
        return None
    H = []
    for n in range(T):
        H.append(la.tidy(x[int(offs[n]):int(offs[n + 1]), 0].reshape((D.rank(n + 1), C.rank(n)), order="F")))
    return ChainHomotopy(tuple(H))
