"""Modules over DGAs and simplicial rings, relative tensor products, and ∇^A.

Modules are right modules.  A left module over R is stored as a right module
over ``opposite(R)``; the Koszul sign for that swap lives in ``left_action``
and ``left_module`` and nowhere else.

Relative tensor products over ℤ can have torsion, so they come back as
:class:`~dkforge.chain.PresentedComplex` objects: generators are the Kronecker
basis of M ⊗ L and the relation columns span the image of
``act ⊗ 1 - 1 ⊗ act``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import algebra as al
from . import chain as ch
from . import doldkan as dk
from . import linalg as la
from . import simplicial as sp
from .algebra import CheckReport, DGAlgebra, SimplicialRing, bilinear_pull, swap_matrix
from .chain import ChainComplex, ChainMap, PresentedComplex, ValidationError, relations_of
from .simplicial import SimplicialAbGroup, SimplicialMap


def _congruent(A: np.ndarray, B: np.ndarray, K: np.ndarray) -> bool:
    """A == B modulo the column span of K."""
    diff = la.add(A, B, -1)
    if la.is_zero(diff):
        return True
    return K.shape[1] > 0 and la.ColumnEchelon(K).solve(diff) is not None


# ------------------------------------------------------------- DG modules


class DGModule:
    """Right module over a DGA: ``act[(p, q)]: M_p ⊗ R_q -> M_{p+q}``."""

    def __init__(self, ring: DGAlgebra, complex: ChainComplex, act: dict, check: bool = True):
        self.ring = ring
        self.complex = complex
        T = min(complex.T, ring.T)
        self.act = {}
        for p in range(T + 1):
            for q in range(T + 1 - p):
                a = act.get((p, q))
                shape = (complex.rank(p + q), complex.rank(p) * ring.rank(q))
                self.act[(p, q)] = la.zeros(*shape) if a is None else la.imat(a, *shape)
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return min(self.complex.T, self.ring.T)

    def rank(self, n: int) -> int:
        return self.complex.rank(n)

    def validate(self) -> None:
        M, R, T = self.complex, self.ring, self.T
        I = la.eye
        for p in range(T + 1):
            for q in range(T + 1 - p):
                n = p + q
                moved = la.mm(self.act[(p, q)], la.kron(relations_of(M, p), I(R.rank(q))))
                if moved.shape[1] and not _congruent(moved, la.zeros(*moved.shape), relations_of(M, n)):
                    raise ValidationError(f"action does not preserve relations in degrees ({p},{q})")
                if n >= 1:
                    lhs = la.mm(M.d(n), self.act[(p, q)])
                    rhs = la.zeros(M.rank(n - 1), M.rank(p) * R.rank(q))
                    if p >= 1:
                        rhs = la.add(rhs, la.mm(self.act[(p - 1, q)], la.kron(M.d(p), I(R.rank(q)))))
                    if q >= 1:
                        rhs = la.add(rhs, la.mm(self.act[(p, q - 1)], la.kron(I(M.rank(p)), R.complex.d(q))), (-1) ** p)
                    if not _congruent(lhs, rhs, relations_of(M, n - 1)):
                        raise ValidationError(f"Leibniz rule for the action fails in degrees ({p},{q})")
                for r in range(T + 1 - n):
                    lhs = la.mm(self.act[(n, r)], la.kron(self.act[(p, q)], I(R.rank(r))))
                    rhs = la.mm(self.act[(p, q + r)], la.kron(I(M.rank(p)), R.mu(q, r)))
                    if not _congruent(lhs, rhs, relations_of(M, n + r)):
                        raise ValidationError(f"action is not associative in degrees ({p},{q},{r})")
            if not _congruent(la.mm(self.act[(p, 0)], la.kron(I(M.rank(p)), R.unit)), I(M.rank(p)), relations_of(M, p)):
                raise ValidationError(f"unit does not act trivially in degree {p}")

    def __repr__(self) -> str:
        return f"DGModule(ranks={list(self.complex.ranks)})"


def regular_module(R: DGAlgebra) -> DGModule:
    """R as a right module over itself."""
    return DGModule(R, R.complex, dict(R.mult), check=False)


def free_dg_module(R: DGAlgebra, X: ChainComplex) -> DGModule:
    """X ⊗ R with (x ⊗ r) s = x ⊗ rs."""
    X = X.truncate(min(X.T, R.T))
    C = ch.tensor(X, R.complex)
    act = {}
    for p in range(C.T + 1):
        for q in range(C.T + 1 - p):
            M = la.zeros(C.rank(p + q), C.rank(p) * R.rank(q))
            for i, j, off, size in C.layout.blocks[p]:
                if size == 0:
                    continue
                o2, _ = C.layout.block(p + q, i)
                # (x ⊗ r) ⊗ s occupies columns off*R_q .. (off+size)*R_q in Kronecker order
                M = ch._put(M, o2, off * R.rank(q), la.kron(la.eye(X.rank(i)), R.mu(j, q)))
            act[(p, q)] = la.tidy(M)
    return DGModule(R, C, act)


def left_action(R: DGAlgebra, L: DGModule, b: int, c: int) -> np.ndarray:
    """r · l for L stored as a right R^op-module: r·l = (-1)^{|r||l|} l *_op r."""
    return la.scale(la.mm(L.act[(c, b)], swap_matrix(R.rank(b), L.rank(c))), (-1) ** (b * c))


def left_module(R: DGAlgebra, complex: ChainComplex, left_act: dict, check: bool = True) -> DGModule:
    """Wrap a left action ``left_act[(q, p)]: R_q ⊗ L_p -> L_{p+q}`` as a right R^op-module."""
    act = {}
    for (q, p), m in left_act.items():
        m = la.imat(m, complex.rank(p + q), R.rank(q) * complex.rank(p))
        act[(p, q)] = la.scale(la.mm(m, swap_matrix(complex.rank(p), R.rank(q))), (-1) ** (p * q))
    return DGModule(al.opposite(R), complex, act, check=check)


def regular_left_module(R: DGAlgebra) -> DGModule:
    return left_module(R, R.complex, dict(R.mult))


def free_left_module(R: DGAlgebra, X: ChainComplex) -> DGModule:
    """R ⊗ X with s (r ⊗ x) = sr ⊗ x."""
    X = X.truncate(min(X.T, R.T))
    C = ch.tensor(R.complex, X)
    left = {}
    for q in range(C.T + 1):
        for p in range(C.T + 1 - q):
            M = la.zeros(C.rank(p + q), R.rank(q) * C.rank(p))
            for j, i, off, size in C.layout.blocks[p]:
                if size == 0:
                    continue
                o2, _ = C.layout.block(p + q, j + q)
                # s ⊗ (r ⊗ x) -> (s r) ⊗ x; kron order on columns is s, r, x
                blk = la.kron(R.mu(q, j), la.eye(X.rank(i)))
                for s_ in range(R.rank(q)):
                    M = ch._put(M, o2, s_ * C.rank(p) + off, blk[:, s_ * size:(s_ + 1) * size])
            left[(q, p)] = la.tidy(M)
    return left_module(R, C, left)


def _pair_ring(M: DGModule, L: DGModule) -> DGAlgebra:
    R = M.ring
    if not L.ring == al.opposite(R):
        raise ValidationError("the second factor must be a left module over the same DGA")
    return R


def relative_tensor_dg(M: DGModule, L: DGModule) -> PresentedComplex:
    """M ⊗_R L as generators M ⊗ L modulo (m r) ⊗ l - m ⊗ (r l)."""
    R = _pair_ring(M, L)
    T = min(M.T, L.T)
    Mc, Lc = M.complex.truncate(T), L.complex.truncate(T)
    C = ch.tensor(Mc, Lc)
    relations = []
    for n in range(T + 1):
        cols = []
        for a, c, off, size in C.layout.blocks[n]:
            # relations already present in the factors
            KM, KL = relations_of(Mc, a), relations_of(Lc, c)
            for K in (la.kron(KM, la.eye(Lc.rank(c))), la.kron(la.eye(Mc.rank(a)), KL)):
                if K.shape[1]:
                    blk = la.zeros(C.rank(n), K.shape[1])
                    blk = ch._put(blk, off, 0, K)
                    cols.append(blk)
        for a in range(n + 1):
            for b in range(n + 1 - a):
                c = n - a - b
                width = Mc.rank(a) * R.rank(b) * Lc.rank(c)
                if width == 0:
                    continue
                blk = la.zeros(C.rank(n), width)
                o1, _ = C.layout.block(n, a + b)
                blk = ch._put(blk, o1, 0, la.kron(M.act[(a, b)], la.eye(Lc.rank(c))))
                o2, _ = C.layout.block(n, a)
                blk = ch._put(blk, o2, 0, la.scale(la.kron(la.eye(Mc.rank(a)), left_action(R, L, b, c)), -1))
                cols.append(la.tidy(blk))
        relations.append(la.hstack(cols, C.rank(n)) if cols else la.zeros(C.rank(n), 0))
    P = PresentedComplex(C.ranks, C.diffs, relations)
    P.layout = C.layout
    return P


def is_iso_onto_quotient(f: np.ndarray, K: np.ndarray) -> bool:
    """f: ℤ^a -> F induces an isomorphism onto F / span(K)."""
    F, a = f.shape
    big = la.hstack([f, K], F)
    if not la.cokernel(big, F).is_zero:
        return False
    ker = la.kernel_basis(big)
    return la.is_zero(ker[:a]) if ker.shape[1] else True


def presented_iso(f: ChainMap) -> bool:
    """Degreewise test that a map from a free complex onto a presented one is an iso."""
    return all(is_iso_onto_quotient(f[n], relations_of(f.target, n)) for n in range(f.T + 1))


# ---------------------------------------------------- scalar change


def restrict_scalars(f: ChainMap, N: DGModule, R: DGAlgebra) -> DGModule:
    """N over S viewed over R through the DGA map f: R -> S."""
    if not al.is_dga_map(f, R, N.ring):
        raise ValidationError("restriction needs a DGA homomorphism")
    act = {(p, q): la.mm(a, la.kron(la.eye(N.rank(p)), f[q])) for (p, q), a in N.act.items() if q <= f.T}
    return DGModule(R, N.complex, act)


def _ring_as_left_module(f: ChainMap, R: DGAlgebra, S: DGAlgebra) -> DGModule:
    """S with r·s = f(r) s."""
    left = {}
    for q in range(S.T + 1):
        for p in range(S.T + 1 - q):
            left[(q, p)] = la.mm(S.mu(q, p), la.kron(f[q], la.eye(S.rank(p))))
    return left_module(R, S.complex, left)


def extend_scalars(f: ChainMap, M: DGModule, S: DGAlgebra) -> DGModule:
    """M ⊗_R S over S, with (m ⊗ s) s' = m ⊗ ss'."""
    R = M.ring
    if not al.is_dga_map(f, R, S):
        raise ValidationError("extension needs a DGA homomorphism")
    P = relative_tensor_dg(M, _ring_as_left_module(f, R, S))
    act = {}
    for n in range(P.T + 1):
        for q in range(P.T + 1 - n):
            A = la.zeros(P.rank(n + q), P.rank(n) * S.rank(q))
            for a, c, off, size in P.layout.blocks[n]:
                if size == 0:
                    continue
                o2, _ = P.layout.block(n + q, a)
                blk = la.kron(la.eye(M.rank(a)), S.mu(c, q))
                A = ch._put(A, o2, off * S.rank(q), blk)
            act[(n, q)] = A
    return DGModule(S, P, act)


def extension_unit(f: ChainMap, M: DGModule, E: DGModule) -> ChainMap:
    """m ↦ m ⊗ 1 from M to E = extend_scalars(f, M, S)."""
    S = E.ring
    P = E.complex
    comps = []
    for n in range(P.T + 1):
        X = la.zeros(P.rank(n), M.rank(n))
        o, _ = P.layout.block(n, n)
        X = ch._put(X, o, 0, la.kron(la.eye(M.rank(n)), S.unit))
        comps.append(X)
    return ChainMap(M.complex.truncate(P.T), P, comps)


def extension_counit(f: ChainMap, N: DGModule, E: DGModule) -> ChainMap:
    """n ⊗ s ↦ n s from E = extend_scalars(f, restrict(N)) back to N."""
    P = E.complex
    comps = []
    for n in range(P.T + 1):
        blocks = [N.act[(a, c)] for a, c, _, _ in P.layout.blocks[n]]
        comps.append(la.hstack(blocks, N.rank(n)))
    return ChainMap(P, N.complex, comps, check=False)


def maps_congruent(f: ChainMap, g: ChainMap) -> bool:
    return all(_congruent(f[n], g[n], relations_of(f.target, n)) for n in range(min(f.T, g.T) + 1))


def triangle_identities(f: ChainMap, M: DGModule, N: DGModule) -> tuple:
    """Both adjunction triangles, for M over R and N over S.

    Returns ``(ok_restrict_side, ok_extend_side)``:
    ``res N -> res ext res N -> res N`` and ``ext M -> ext res ext M -> ext M``.
    """
    R, S = M.ring, N.ring
    resN = restrict_scalars(f, N, R)
    E1 = extend_scalars(f, resN, S)
    first = ch.compose(extension_counit(f, N, E1), extension_unit(f, resN, E1))
    ok1 = maps_congruent(first, ch.identity_map(N.complex.truncate(first.T)))
    E = extend_scalars(f, M, S)
    resE = restrict_scalars(f, E, R)
    E2 = extend_scalars(f, resE, S)
    eta = extension_unit(f, M, E)
    # ext(η): m ⊗ s ↦ (m ⊗ 1) ⊗ s on generators
    P, Q = E.complex, E2.complex
    comps = []
    for n in range(P.T + 1):
        X = la.zeros(Q.rank(n), P.rank(n))
        for a, c, off, size in P.layout.blocks[n]:
            o, _ = Q.layout.block(n, a)
            X = ch._put(X, o, off, la.kron(eta[a], la.eye(S.rank(c))))
        comps.append(X)
    ext_eta = ChainMap(P, Q, comps, check=False)
    second = ch.compose(extension_counit(f, E, E2), ext_eta)
    ok2 = maps_congruent(second, ch.identity_map(P))
    return ok1, ok2


def quillen_invariance_spot_check(f: ChainMap, samples: Sequence[DGModule], S: DGAlgebra) -> CheckReport:
    """For a quasi-isomorphism f: R -> S, each M -> M ⊗_R S is a quasi-isomorphism."""
    if not ch.is_quasi_iso(f):
        return CheckReport("quillen-invariance", False, "f is not a quasi-isomorphism")
    bad = []
    for k, M in enumerate(samples):
        E = extend_scalars(f, M, S)
        if not ch.is_quasi_iso(extension_unit(f, M, E)):
            bad.append(k)
    return CheckReport("quillen-invariance", not bad, f"failing samples {bad}" if bad else "", {"samples": len(samples)})


# ------------------------------------------------------ simplicial modules


def opposite_ring(A: SimplicialRing) -> SimplicialRing:
    """A^op levelwise: a * b = ba (levels are ungraded, so no sign)."""
    mults = [la.mm(m, swap_matrix(r, r)) for m, r in zip(A.mult, A.group.ranks)]
    return SimplicialRing(A.group, mults, A.unit, check=False)


class SimplicialModule:
    """Right module over a simplicial ring: ``act[n]: M_n ⊗ A_n -> M_n``."""

    def __init__(self, ring: SimplicialRing, group: SimplicialAbGroup, act: Sequence, check: bool = True):
        self.ring = ring
        self.group = group
        T = min(group.T, ring.T)
        self.act = tuple(la.imat(act[n], group.ranks[n], group.ranks[n] * ring.group.ranks[n]) for n in range(T + 1))
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return len(self.act) - 1

    def validate(self) -> None:
        A, M = self.ring, self.group
        for n in range(self.T + 1):
            m, a = M.ranks[n], A.group.ranks[n]
            act = self.act[n]
            lhs = bilinear_pull(act, act, la.eye(a))
            rhs = bilinear_pull(act, la.eye(m), A.mult[n]) if m else lhs
            if not la.equal(lhs, rhs):
                raise ValidationError(f"action is not associative at level {n}")
            if not la.equal(bilinear_pull(act, la.eye(m), A.unit[n]), la.eye(m)):
                raise ValidationError(f"unit does not act trivially at level {n}")
            if n >= 1:
                for i in range(n + 1):
                    if not la.equal(la.mm(M.d(n, i), act), bilinear_pull(self.act[n - 1], M.d(n, i), A.group.d(n, i))):
                        raise ValidationError(f"d_{i} is not equivariant at level {n}")
            if n < self.T:
                for i in range(n + 1):
                    if not la.equal(la.mm(M.s(n, i), act), bilinear_pull(self.act[n + 1], M.s(n, i), A.group.s(n, i))):
                        raise ValidationError(f"s_{i} is not equivariant at level {n}")

    def __repr__(self) -> str:
        return f"SimplicialModule(ranks={list(self.group.ranks)})"


def regular_simplicial(A: SimplicialRing) -> SimplicialModule:
    return SimplicialModule(A, A.group, A.mult, check=False)


def free_simplicial_module(A: SimplicialRing, X: SimplicialAbGroup) -> SimplicialModule:
    """X ⊗ A with (x ⊗ a) b = x ⊗ ab."""
    G = sp.tensor(X, A.group)
    return SimplicialModule(A, G, [la.kron(la.eye(X.ranks[n]), A.mult[n]) for n in range(G.T + 1)])


def left_simplicial(A: SimplicialRing, group: SimplicialAbGroup, left_act: Sequence) -> SimplicialModule:
    """A left action ``A_n ⊗ L_n -> L_n`` stored as a right A^op-module."""
    act = [la.mm(la.imat(m), swap_matrix(group.ranks[n], A.group.ranks[n])) for n, m in enumerate(left_act)]
    return SimplicialModule(opposite_ring(A), group, act)


def free_left_simplicial(A: SimplicialRing, Y: SimplicialAbGroup) -> SimplicialModule:
    """A ⊗ Y with b (a ⊗ y) = ba ⊗ y."""
    G = sp.tensor(A.group, Y)
    return left_simplicial(A, G, [la.kron(A.mult[n], la.eye(Y.ranks[n])) for n in range(G.T + 1)])


def _simplicial_left_action(L: SimplicialModule, n: int) -> np.ndarray:
    a, l = L.ring.group.ranks[n], L.group.ranks[n]
    return la.mm(L.act[n], swap_matrix(a, l))


def _same_ring(A: SimplicialRing, B: SimplicialRing) -> bool:
    return A.group == B.group and all(la.equal(x, y) for x, y in zip(A.mult, B.mult))


@dataclass
class SimplicialRelativeTensor:
    """M ⊗_A L levelwise: relations on M_n ⊗ L_n and, when free, a basis of the quotient."""

    relations: tuple
    generators: SimplicialAbGroup
    group: Optional[SimplicialAbGroup] = None
    quotient: Optional[SimplicialMap] = None
    torsion: dict = field(default_factory=dict)


def relative_tensor_simplicial(M: SimplicialModule, L: SimplicialModule) -> SimplicialRelativeTensor:
    A = M.ring
    if not _same_ring(L.ring, opposite_ring(A)):
        raise ValidationError("the second factor must be a left module over the same simplicial ring")
    G = dk._tensor_of(M.group, L.group)
    rels = []
    for n in range(G.T + 1):
        m, l = M.group.ranks[n], L.group.ranks[n]
        R1 = la.kron(M.act[n], la.eye(l))
        R2 = la.kron(la.eye(m), _simplicial_left_action(L, n))
        rels.append(la.add(R1, R2, -1))
    out = SimplicialRelativeTensor(tuple(rels), G)
    proj, lift, ranks = [], [], []
    for n, K in enumerate(rels):
        dec = la.snf(K)
        k = dec.rank
        tors = [int(x) for x in dec.diagonal[:k] if x != 1]
        if tors:
            out.torsion[n] = tors
        proj.append(dec.U[k:])
        lift.append(la.inverse(dec.U)[:, k:])
        ranks.append(G.ranks[n] - k)
    if out.torsion:
        return out
    faces = [[]] + [[la.mm(proj[n - 1], G.d(n, i), lift[n]) for i in range(n + 1)] for n in range(1, G.T + 1)]
    degens = [[la.mm(proj[n + 1], G.s(n, i), lift[n]) for i in range(n + 1)] for n in range(G.T)]
    Q = SimplicialAbGroup(ranks, faces, degens)
    out.group = Q
    out.quotient = SimplicialMap(G, Q, proj)
    return out


def normalize_module(M: SimplicialModule, NA: Optional[DGAlgebra] = None) -> DGModule:
    """N(M) over N(A): action N(act) ∘ ∇ on Moore chains."""
    A = M.ring
    NA = NA if NA is not None else al.normalize_ring(A)
    NM = dk.normalize(M.group)
    NR = dk.normalize(A.group)
    act = {}
    for p in range(M.T + 1):
        for q in range(M.T + 1 - p):
            n = p + q
            nab = dk.shuffle_block(M.group, A.group, p, q)
            act[(p, q)] = NM.project(n, la.mm(M.act[n], nab, la.kron(NM.iota[p], NR.iota[q])))
    return DGModule(NA, NM.complex, act)


@dataclass
class NablaA:
    map: ChainMap  # NM ⊗_{NA} NL -> N(M ⊗_A L) on generators
    source: PresentedComplex
    square_ok: bool
    descends: bool


def nabla_A(M: SimplicialModule, L: SimplicialModule) -> NablaA:
    """∇^A: NM ⊗_{NA} NL -> N(M ⊗_A L), induced by the normalized shuffle.

    On generators it is N(q) ∘ ∇, so the square with the quotient maps
    commutes by construction; the content is that this kills the relations.
    """
    A = M.ring
    NA = al.normalize_ring(A)
    NAop = al.normalize_ring(L.ring)
    NM = normalize_module(M, NA)
    NL = normalize_module(L, NAop)
    src = relative_tensor_dg(NM, NL)
    rel = relative_tensor_simplicial(M, L)
    if rel.quotient is None:
        raise ValidationError(f"M ⊗_A L has torsion in levels {sorted(rel.torsion)}; N is taken of free groups only")
    nab = dk.normalized_shuffle(M.group, L.group)
    Nq = dk.normalize_map(rel.quotient)
    comps = [la.mm(Nq[n], nab[n]) for n in range(src.T + 1)]
    descends = all(la.is_zero(la.mm(comps[n], src.relations[n])) for n in range(src.T + 1))
    if not descends:
        raise ValidationError("the normalized shuffle does not descend to the relative tensor product")
    f = ChainMap(src, Nq.target, comps)
    # the defining square, evaluated on the generators of NM ⊗ NL
    square = ch.compose(Nq, nab)
    square_ok = all(la.equal(square[n], f[n]) for n in range(f.T + 1))
    return NablaA(f, src, square_ok, descends)
