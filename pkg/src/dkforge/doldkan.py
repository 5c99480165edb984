"""Normalization N, its inverse Γ, the unit and counit, and the Eilenberg–Zilber maps.

Conventions used throughout:

* ``N`` is realized by the Moore complex ``NA_n = ∩_{i>=1} ker d_i`` with
  differential ``d_0``, together with an explicit projection ``π: A_n -> NA_n``
  whose kernel is the degenerate part ``DA_n``.
* An element of ``(ΓC)_n`` is a chain map ``NΔⁿ -> C``, i.e. an assignment
  ``S ↦ x_S ∈ C_{|S|-1}`` over nonempty subsets ``S ⊆ [n]``.  The assignment
  is determined by its values on the subsets containing 0 (the *free*
  coordinates); the remaining values are forced by the chain-map equations.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from . import chain as ch
from . import linalg as la
from . import simplicial as sp
from .chain import ChainComplex, ChainMap, ValidationError
from .simplicial import SimplicialAbGroup, SimplicialMap


def _cache(obj) -> dict:
    return obj.__dict__.setdefault("_dk_cache", {})


# ------------------------------------------------------------ C, D and N


def unnormalized(A: SimplicialAbGroup) -> ChainComplex:
    """CA: the alternating face sum complex."""
    c = _cache(A)
    if "C" not in c:
        diffs = []
        for n in range(1, A.T + 1):
            M = A.d(n, 0)
            for i in range(1, n + 1):
                M = la.add(M, A.d(n, i), (-1) ** i)
            diffs.append(M)
        c["C"] = ChainComplex(A.ranks, diffs)
    return c["C"]


def degenerate_subcomplex(A: SimplicialAbGroup) -> list:
    """Per degree, a basis (columns) of DA_n, the span of all degeneracies."""
    out = [la.zeros(A.ranks[0], 0)]
    for n in range(1, A.T + 1):
        out.append(la.image_basis(la.hstack([A.s(n - 1, i) for i in range(n)], A.ranks[n])))
    return out


def moore_projector(A: SimplicialAbGroup, n: int, X: np.ndarray) -> np.ndarray:
    """Apply P = (1 - s_0 d_1)(1 - s_1 d_2) ... (1 - s_{n-1} d_n) to the columns of X.

    P is idempotent, fixes Moore chains and kills degenerate chains; the
    rightmost factor acts first.
    """
    for j in range(n, 0, -1):
        X = la.add(X, la.mm(A.s(n - 1, j - 1), la.mm(A.d(n, j), X)), -1)
    return X


class NormalizationData:
    """NA with Moore inclusion ``iota[n]`` and projection ``pi[n]``."""

    def __init__(self, A: SimplicialAbGroup, verify: bool = True):
        self.A = A
        self.iota = [la.eye(A.ranks[0])]
        self._solvers = [la.basis_solver(self.iota[0], range(A.ranks[0]))]
        for n in range(1, A.T + 1):
            K, rows = la.kernel_with_rows(la.vstack([A.d(n, i) for i in range(1, n + 1)], A.ranks[n]))
            self.iota.append(K)
            self._solvers.append(la.basis_solver(K, rows))
        diffs = []
        for n in range(1, A.T + 1):
            Y = self._solvers[n - 1].solve(la.mm(A.d(n, 0), self.iota[n]))
            if Y is None:
                raise ValidationError(f"d_0 does not preserve Moore chains in degree {n}")
            diffs.append(Y)
        self.complex = ChainComplex([B.shape[1] for B in self.iota], diffs)
        self._pi = {}
        if verify:
            self.verify()

    @property
    def T(self) -> int:
        return self.A.T

    def project(self, n: int, X: np.ndarray) -> np.ndarray:
        """Coordinates in NA_n of π applied to the columns of X."""
        Y = self._solvers[n].solve(moore_projector(self.A, n, X))
        if Y is None:
            raise ValidationError(f"Moore projection leaves the normalized part in degree {n}")
        return Y

    def pi(self, n: int) -> np.ndarray:
        if n not in self._pi:
            self._pi[n] = self.project(n, la.eye(self.A.ranks[n]))
        return self._pi[n]

    def verify(self) -> None:
        """π ∘ ι = 1, π kills degeneracies and NA ⊕ DA = A in every degree."""
        A = self.A
        for n in range(A.T + 1):
            r = self.iota[n].shape[1]
            if not la.equal(self.project(n, self.iota[n]), la.eye(r)):
                raise ValidationError(f"π ∘ ι is not the identity in degree {n}")
            if n == 0:
                continue
            for i in range(n):
                if not la.is_zero(self.project(n, A.s(n - 1, i))):
                    raise ValidationError(f"π does not kill s_{i} in degree {n}")
            # I - P expands into terms that each start with a degeneracy, so
            # A = NA + DA holds by construction; the rank count makes it direct.
            if la.rank(la.hstack([A.s(n - 1, i) for i in range(n)], A.ranks[n])) + r != A.ranks[n]:
                raise ValidationError(f"rank NA + rank DA != rank A in degree {n}")

    def inclusion(self) -> ChainMap:
        """ι as a chain map NA -> CA."""
        return ChainMap(self.complex, unnormalized(self.A), self.iota, check=False)

    def projection(self) -> ChainMap:
        """π as a chain map CA -> NA."""
        return ChainMap(unnormalized(self.A), self.complex, [self.pi(n) for n in range(self.T + 1)], check=False)


def normalize(A: SimplicialAbGroup) -> NormalizationData:
    c = _cache(A)
    if "N" not in c:
        c["N"] = NormalizationData(A)
    return c["N"]


def normalize_map(f: SimplicialMap) -> ChainMap:
    """N(f) = π ∘ f ∘ ι."""
    NA, NB = normalize(f.source), normalize(f.target)
    comps = [NB.project(n, la.mm(f[n], NA.iota[n])) for n in range(f.T + 1)]
    return ChainMap(NA.complex, NB.complex, comps, check=False)


def unnormalized_map(f: SimplicialMap) -> ChainMap:
    return ChainMap(unnormalized(f.source), unnormalized(f.target), f.components, check=False)


# ----------------------------------------------------------------------- Γ


@lru_cache(maxsize=None)
def subsets(n: int) -> tuple:
    """Nonempty subsets of [n], ordered by size and then lexicographically."""
    return tuple(S for k in range(n + 1) for S in combinations(range(n + 1), k + 1))


@lru_cache(maxsize=None)
def free_subsets(n: int) -> tuple:
    """The subsets of [n] containing 0: the free coordinates of a level-n element."""
    return tuple(S for S in subsets(n) if S[0] == 0)


def gamma_rank(ranks: Sequence[int], n: int) -> int:
    """Σ_k binom(n, k) rank C_k (one summand per surjection [n] ↠ [k])."""
    return sum(comb(n, k) * ranks[k] for k in range(min(n, len(ranks) - 1) + 1))


class GammaData:
    """ΓC together with the coordinate bookkeeping of its levels.

    ``expand[n]`` maps free coordinates of a level-n element to its full
    assignment over ``subsets(n)``; its columns are the basis chain maps.
    """

    def __init__(self, C: ChainComplex, T: Optional[int] = None):
        T = C.T if T is None else T
        if T > C.T:
            raise ValueError(f"Γ needs C up to degree {T}, it is truncated at {C.T}")
        self.C = C
        self.free_offsets = []
        self.full_offsets = []
        self.expand = []
        for n in range(T + 1):
            off, fo = 0, {}
            for S in free_subsets(n):
                fo[S] = off
                off += C.rank(len(S) - 1)
            full, fu = 0, {}
            for S in subsets(n):
                fu[S] = full
                full += C.rank(len(S) - 1)
            self.free_offsets.append(fo)
            self.full_offsets.append(fu)
            self.expand.append(self._expansion(n, off, full, fo, fu))
        ranks = [E.shape[1] for E in self.expand]
        self.group = sp.from_operators(ranks, self.operator)

    @property
    def T(self) -> int:
        return len(self.expand) - 1

    def _expansion(self, n, rank, full, fo, fu) -> np.ndarray:
        C = self.C
        E = np.zeros((full, rank), dtype=object)
        for S, o in fo.items():
            r = C.rank(len(S) - 1)
            E[fu[S]:fu[S] + r, o:o + r] = la.eye(r)
        # x_T = d x_{0∪T} - Σ_{i>=1} (-1)^i x_{(0∪T) minus its i-th element}
        for T_ in subsets(n):
            if T_[0] == 0:
                continue
            S = (0,) + T_
            k = len(T_) - 1
            row = la.mm(C.d(k + 1), la.tidy(E[fu[S]:fu[S] + C.rank(k + 1)]))
            for i in range(1, len(S)):
                face = S[:i] + S[i + 1:]
                blk = E[fu[face]:fu[face] + C.rank(k)]
                row = la.add(row, la.tidy(blk), -((-1) ** i))
            E[fu[T_]:fu[T_] + C.rank(k)] = row
        return la.tidy(E)

    def rows(self, n: int, S: Sequence[int]) -> np.ndarray:
        """Rows of ``expand[n]`` giving the value on subset S."""
        o = self.full_offsets[n][tuple(S)]
        return self.expand[n][o:o + self.C.rank(len(S) - 1)]

    def operator(self, theta: Sequence[int], n: int) -> np.ndarray:
        """θ^*: (ΓC)_n -> (ΓC)_m, (θ^*x)_S = x_{θ(S)} if θ is injective on S, else 0."""
        m = len(theta) - 1
        blocks = []
        for S in free_subsets(m):
            image = tuple(sorted({theta[s] for s in S}))
            if len(image) == len(S):
                blocks.append(self.rows(n, image))
            else:
                blocks.append(la.zeros(self.C.rank(len(S) - 1), self.expand[n].shape[1]))
        return la.vstack(blocks, self.expand[n].shape[1])

    def value(self, n: int, x: np.ndarray, S: Sequence[int]) -> np.ndarray:
        """The component x_S of a level-n element given in free coordinates."""
        return la.mm(self.rows(n, S), x)

    def assignment(self, n: int, col: int) -> dict:
        """The basis chain map number ``col`` at level n, as {subset: vector}."""
        return {S: [int(v) for v in self.rows(n, S)[:, col]] for S in subsets(n)}

    def select(self, n: int, S: Sequence[int]) -> np.ndarray:
        """Projection of free coordinates onto the block of a subset S ∋ 0."""
        o = self.free_offsets[n][tuple(S)]
        r = self.C.rank(len(S) - 1)
        M = la.zeros(r, self.expand[n].shape[1])
        M[:, o:o + r] = la.eye(r)
        return M


def chain_map_constraints(C: ChainComplex, n: int) -> np.ndarray:
    """The linear system whose integer kernel is ch⁺(NΔⁿ, C).

    Unknowns are the values x_S over ``subsets(n)``; one block row per S with
    ``d x_S - Σ_i (-1)^i x_{S minus s_i} = 0``.
    """
    offs, total = {}, 0
    for S in subsets(n):
        offs[S] = total
        total += C.rank(len(S) - 1)
    rows = []
    for S in subsets(n):
        k = len(S) - 1
        if k == 0:
            continue
        M = np.zeros((C.rank(k - 1), total), dtype=np.int64)
        M[:, offs[S]:offs[S] + C.rank(k)] += C.d(k)
        for i in range(k + 1):
            F = S[:i] + S[i + 1:]
            M[:, offs[F]:offs[F] + C.rank(k - 1)] -= (-1) ** i * la.eye(C.rank(k - 1))
        rows.append(M)
    return la.vstack(rows, total)


def gamma(C: ChainComplex, T: Optional[int] = None) -> GammaData:
    c = _cache(C)
    key = ("Γ", C.T if T is None else T)
    if key not in c:
        c[key] = GammaData(C, T)
    return c[key]


def gamma_map(f: ChainMap, source: Optional[GammaData] = None, target: Optional[GammaData] = None) -> SimplicialMap:
    """Γ(f): post-composition, block diagonal over the free subsets."""
    GS = source or gamma(f.source, f.T)
    GT = target or gamma(f.target, f.T)
    T = min(GS.T, GT.T)
    comps = [la.block_diag([f[len(S) - 1] for S in free_subsets(n)]) for n in range(T + 1)]
    return SimplicialMap(GS.group, GT.group, comps, check=False)


# ----------------------------------------------------------- unit, counit


def unit(A: SimplicialAbGroup) -> SimplicialMap:
    """η_A: A -> ΓNA, a ↦ (S ↦ π(S^* a))."""
    NA = normalize(A)
    G = gamma(NA.complex)
    comps = []
    for n in range(A.T + 1):
        blocks = [NA.project(len(S) - 1, A.face(n, S)) for S in free_subsets(n)]
        comps.append(la.vstack(blocks, A.ranks[n]))
    return SimplicialMap(A, G.group, comps, check=False)


def counit(C: ChainComplex) -> ChainMap:
    """ε_C: NΓC -> C, evaluation of a Moore element at the top cell."""
    G = gamma(C)
    N = normalize(G.group)
    comps = [la.mm(G.select(n, tuple(range(n + 1))), N.iota[n]) for n in range(C.T + 1)]
    return ChainMap(N.complex, C, comps, check=False)


def levelwise_inverse(f: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(f.target, f.source, [la.inverse(m) for m in f.components], check=False)


def degreewise_inverse(f: ChainMap) -> ChainMap:
    return ChainMap(f.target, f.source, [la.inverse(m) for m in f.components], check=False)


# ------------------------------------------------------ shuffle and AW


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple:
    """All (p,q)-shuffles as ``(mu, nu, sign)`` with sign the parity of (mu, nu)."""
    out = []
    for mu in combinations(range(p + q), p):
        nu = tuple(i for i in range(p + q) if i not in mu)
        word = mu + nu
        inv = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
        out.append((mu, nu, -1 if inv % 2 else 1))
    return tuple(out)


def shuffle_block(A: SimplicialAbGroup, B: SimplicialAbGroup, p: int, q: int) -> np.ndarray:
    """The (p,q) component of ∇: A_p ⊗ B_q -> A_{p+q} ⊗ B_{p+q}."""
    blk = la.zeros(A.ranks[p + q] * B.ranks[p + q], A.ranks[p] * B.ranks[q])
    for mu, nu, sign in shuffles(p, q):
        blk = la.add(blk, la.kron(A.degeneracy(p, nu), B.degeneracy(q, mu)), sign)
    return blk


def shuffle(A: SimplicialAbGroup, B: SimplicialAbGroup) -> ChainMap:
    """∇: CA ⊗ CB -> C(A⊗B), a⊗b ↦ Σ sign(μ,ν) s_ν a ⊗ s_μ b."""
    S = ch.tensor(unnormalized(A), unnormalized(B))
    AB = _tensor_of(A, B)
    comps = []
    for n in range(S.T + 1):
        blocks = [shuffle_block(A, B, p, q) for p, q, off, size in S.layout.blocks[n]]
        comps.append(la.hstack(blocks, AB.ranks[n]))
    return ChainMap(S, unnormalized(AB), comps, check=False)


def alexander_whitney(A: SimplicialAbGroup, B: SimplicialAbGroup) -> ChainMap:
    """AW: C(A⊗B) -> CA ⊗ CB, a⊗b ↦ Σ_p (front p-face of a) ⊗ (back q-face of b)."""
    S = ch.tensor(unnormalized(A), unnormalized(B))
    AB = _tensor_of(A, B)
    comps = []
    for n in range(S.T + 1):
        blocks = [
            la.kron(A.face(n, tuple(range(p + 1))), B.face(n, tuple(range(p, n + 1))))
            for p, q, off, size in S.layout.blocks[n]
        ]
        comps.append(la.vstack(blocks, AB.ranks[n]))
    return ChainMap(unnormalized(AB), S, comps, check=False)


def _tensor_of(A: SimplicialAbGroup, B: SimplicialAbGroup) -> SimplicialAbGroup:
    """A⊗B, cached on A so repeated calls share one normalization."""
    c = _cache(A)
    key = ("⊗", id(B))
    if key not in c or c[key][0] is not B:
        c[key] = (B, sp.tensor(A, B))
    return c[key][1]


def normalized_shuffle(A: SimplicialAbGroup, B: SimplicialAbGroup) -> ChainMap:
    """π ∘ ∇ ∘ (ι ⊗ ι): NA ⊗ NB -> N(A⊗B)."""
    NA, NB = normalize(A), normalize(B)
    AB = _tensor_of(A, B)
    NAB = normalize(AB)
    src = ch.tensor(NA.complex, NB.complex)
    ii = ch.tensor_maps(NA.inclusion(), NB.inclusion())
    nab = shuffle(A, B)
    comps = [NAB.project(n, la.mm(nab[n], ii[n])) for n in range(src.T + 1)]
    return ChainMap(src, NAB.complex, comps, check=False)


def normalized_aw(A: SimplicialAbGroup, B: SimplicialAbGroup) -> ChainMap:
    """(π ⊗ π) ∘ AW ∘ ι: N(A⊗B) -> NA ⊗ NB."""
    NA, NB = normalize(A), normalize(B)
    NAB = normalize(_tensor_of(A, B))
    pp = ch.tensor_maps(NA.projection(), NB.projection())
    aw = alexander_whitney(A, B)
    comps = [la.mm(pp[n], aw[n], NAB.iota[n]) for n in range(NAB.T + 1)]
    return ChainMap(NAB.complex, pp.target, comps, check=False)


# ------------------------------------------------- (co)monoidal structure on Γ


def gamma_monoidal(C: ChainComplex, D: ChainComplex) -> SimplicialMap:
    """φ_{C,D}: ΓC ⊗ ΓD -> Γ(C⊗D), (x⊗y)_S = Σ_p x_{s_0..s_p} ⊗ y_{s_p..s_k}."""
    T = min(C.T, D.T)
    GC, GD = gamma(C, T), gamma(D, T)
    CD = ch.tensor(C.truncate(T), D.truncate(T))
    GCD = gamma(CD)
    comps = []
    for n in range(T + 1):
        cols = GC.group.ranks[n] * GD.group.ranks[n]
        blocks = []
        for S in free_subsets(n):
            k = len(S) - 1
            parts = [la.kron(GC.rows(n, S[:p + 1]), GD.rows(n, S[p:])) for p in range(k + 1)]
            blocks.append(la.vstack(parts, cols))
        comps.append(la.vstack(blocks, cols))
    return SimplicialMap(_tensor_of(GC.group, GD.group), GCD.group, comps, check=False)


def gamma_monoidal_composite(C: ChainComplex, D: ChainComplex) -> SimplicialMap:
    """φ_{C,D} assembled literally as Γ(ε⊗ε) ∘ Γ(AW) ∘ η_{ΓC⊗ΓD}."""
    T = min(C.T, D.T)
    GC, GD = gamma(C, T), gamma(D, T)
    X = _tensor_of(GC.group, GD.group)
    eta = unit(X)
    aw = normalized_aw(GC.group, GD.group)
    ee = ch.tensor_maps(counit(C.truncate(T)), counit(D.truncate(T)))
    g_aw = gamma_map(aw, source=gamma(aw.source))
    g_ee = gamma_map(ee, source=gamma(ee.source), target=gamma(ee.target))
    return g_ee @ g_aw @ eta


def gamma_comonoidal(C: ChainComplex, D: ChainComplex) -> SimplicialMap:
    """∇̃_{C,D}: Γ(C⊗D) -> ΓC ⊗ ΓD, the mate η⁻¹ ∘ Γ(∇) ∘ Γ(ε⁻¹ ⊗ ε⁻¹)."""
    T = min(C.T, D.T)
    C, D = C.truncate(T), D.truncate(T)
    GC, GD = gamma(C), gamma(D)
    X = _tensor_of(GC.group, GD.group)
    eta_inv = levelwise_inverse(unit(X))
    nab = normalized_shuffle(GC.group, GD.group)
    ee_inv = ch.tensor_maps(degreewise_inverse(counit(C)), degreewise_inverse(counit(D)))
    CD = ch.tensor(C, D)
    g_ee = gamma_map(ee_inv, source=gamma(CD), target=gamma(ee_inv.target))
    g_nab = gamma_map(nab, source=gamma(nab.source), target=gamma(nab.target))
    return eta_inv @ g_nab @ g_ee
