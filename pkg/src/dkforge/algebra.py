"""Differential graded algebras, simplicial rings, and N and Γ on them.

A DGA stores one matrix ``mult[(p, q)]: R_p ⊗ R_q -> R_{p+q}`` per degree pair
(acting on Kronecker bases) and a unit vector in ``R_0``.  A simplicial ring
stores one matrix ``mult[n]: A_n ⊗ A_n -> A_n`` per level and units per level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import chain as ch
from . import doldkan as dk
from . import linalg as la
from . import simplicial as sp
from .chain import ChainComplex, ChainMap, ValidationError
from .simplicial import SimplicialAbGroup


def swap_matrix(a: int, b: int) -> np.ndarray:
    """x ⊗ y ↦ y ⊗ x from ℤ^a ⊗ ℤ^b to ℤ^b ⊗ ℤ^a (no sign)."""
    M = la.zeros(a * b, a * b)
    for i in range(a):
        for j in range(b):
            M[j * a + i, i * b + j] = 1
    return M


class DGAlgebra:
    def __init__(self, complex: ChainComplex, mult: dict, unit, check: bool = True):
        self.complex = complex
        R = complex
        self.mult = {}
        for p in range(R.T + 1):
            for q in range(R.T + 1 - p):
                m = mult.get((p, q))
                if m is None:
                    m = la.zeros(R.rank(p + q), R.rank(p) * R.rank(q))
                self.mult[(p, q)] = la.imat(m, R.rank(p + q), R.rank(p) * R.rank(q))
        self.unit = la.imat(unit, R.rank(0), 1) if R.rank(0) else la.zeros(0, 1)
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return self.complex.T

    def rank(self, n: int) -> int:
        return self.complex.rank(n)

    def mu(self, p: int, q: int) -> np.ndarray:
        return self.mult[(p, q)]

    def multiply(self, x: np.ndarray, p: int, y: np.ndarray, q: int) -> np.ndarray:
        """Product of column vectors x ∈ R_p and y ∈ R_q."""
        return la.mm(self.mu(p, q), la.kron(la.imat(x), la.imat(y)))

    def validate(self) -> None:
        R, T = self.complex, self.T
        I = la.eye
        for p in range(T + 1):
            for q in range(T + 1 - p):
                n = p + q
                if n >= 1:
                    lhs = la.mm(R.d(n), self.mu(p, q))
                    rhs = la.zeros(R.rank(n - 1), R.rank(p) * R.rank(q))
                    if p >= 1:
                        rhs = la.add(rhs, la.mm(self.mu(p - 1, q), la.kron(R.d(p), I(R.rank(q)))))
                    if q >= 1:
                        rhs = la.add(rhs, la.mm(self.mu(p, q - 1), la.kron(I(R.rank(p)), R.d(q))), (-1) ** p)
                    if not la.equal(lhs, rhs):
                        raise ValidationError(f"Leibniz rule fails for degrees ({p},{q})")
                for r in range(T + 1 - n):
                    lhs = la.mm(self.mu(n, r), la.kron(self.mu(p, q), I(R.rank(r))))
                    rhs = la.mm(self.mu(p, q + r), la.kron(I(R.rank(p)), self.mu(q, r)))
                    if not la.equal(lhs, rhs):
                        raise ValidationError(f"associativity fails for degrees ({p},{q},{r})")
        for q in range(T + 1):
            if not la.equal(la.mm(self.mu(0, q), la.kron(self.unit, I(R.rank(q)))), I(R.rank(q))):
                raise ValidationError(f"left unit law fails in degree {q}")
            if not la.equal(la.mm(self.mu(q, 0), la.kron(I(R.rank(q)), self.unit)), I(R.rank(q))):
                raise ValidationError(f"right unit law fails in degree {q}")

    def mult_map(self) -> ChainMap:
        """μ as a chain map R ⊗ R -> R."""
        RR = ch.tensor(self.complex, self.complex)
        comps = [
            la.hstack([self.mu(p, q) for p, q, _, _ in RR.layout.blocks[n]], self.rank(n)) for n in range(self.T + 1)
        ]
        return ChainMap(RR, self.complex, comps, check=False)

    def truncate(self, T: int) -> "DGAlgebra":
        return DGAlgebra(self.complex.truncate(T), {k: v for k, v in self.mult.items() if sum(k) <= T},
                         self.unit, check=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DGAlgebra)
            and self.complex == other.complex
            and la.equal(self.unit, other.unit)
            and all(la.equal(self.mult[k], other.mult[k]) for k in self.mult)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"DGAlgebra(ranks={list(self.complex.ranks)})"


def opposite(R: DGAlgebra) -> DGAlgebra:
    """R^op with x·y = (-1)^{|x||y|} y x; this is the one place that sign lives."""
    mult = {}
    for (p, q) in R.mult:
        mult[(p, q)] = la.scale(la.mm(R.mu(q, p), swap_matrix(R.rank(p), R.rank(q))), (-1) ** (p * q))
    return DGAlgebra(R.complex, mult, R.unit, check=False)


def is_graded_commutative(R: DGAlgebra) -> bool:
    return opposite(R) == R


def is_dga_map(f: ChainMap, R: DGAlgebra, S: DGAlgebra) -> bool:
    """f multiplicative and unital (f is assumed to be a chain map R -> S)."""
    if not la.equal(la.mm(f[0], R.unit), S.unit):
        return False
    for (p, q) in R.mult:
        if p + q > f.T:
            continue
        if not la.equal(la.mm(f[p + q], R.mu(p, q)), la.mm(S.mu(p, q), la.kron(f[p], f[q]))):
            return False
    return True


# --------------------------------------------------------- simplicial rings


class SimplicialRing:
    def __init__(self, group: SimplicialAbGroup, mult: Sequence, unit: Sequence, check: bool = True):
        self.group = group
        A = group
        self.mult = tuple(la.imat(m, A.ranks[n], A.ranks[n] ** 2) for n, m in enumerate(mult))
        self.unit = tuple(la.imat(u, A.ranks[n], 1) for n, u in enumerate(unit))
        if len(self.mult) != A.T + 1 or len(self.unit) != A.T + 1:
            raise ValidationError("one multiplication and one unit per level are required")
        if check:
            self.validate()

    @property
    def T(self) -> int:
        return self.group.T

    def validate(self) -> None:
        A = self.group
        for n in range(A.T + 1):
            r, m, u = A.ranks[n], self.mult[n], self.unit[n]
            I = la.eye(r)
            if not _associative(m, r):
                raise ValidationError(f"multiplication is not associative at level {n}")
            if not (la.equal(la.mm(m, la.kron(u, I)), I) and la.equal(la.mm(m, la.kron(I, u)), I)):
                raise ValidationError(f"unit law fails at level {n}")
        for n in range(1, A.T + 1):
            for i in range(n + 1):
                d = A.d(n, i)
                if not la.equal(la.mm(d, self.mult[n]), bilinear_pull(self.mult[n - 1], d, d)):
                    raise ValidationError(f"d_{i} is not multiplicative at level {n}")
                if not la.equal(la.mm(d, self.unit[n]), self.unit[n - 1]):
                    raise ValidationError(f"d_{i} does not preserve the unit at level {n}")
        for n in range(A.T):
            for i in range(n + 1):
                s = A.s(n, i)
                if not la.equal(la.mm(s, self.mult[n]), bilinear_pull(self.mult[n + 1], s, s)):
                    raise ValidationError(f"s_{i} is not multiplicative at level {n}")
                if not la.equal(la.mm(s, self.unit[n]), self.unit[n + 1]):
                    raise ValidationError(f"s_{i} does not preserve the unit at level {n}")

    def is_commutative(self) -> bool:
        return all(
            np.array_equal(m.reshape(r, r, r), m.reshape(r, r, r).transpose(0, 2, 1))
            for m, r in zip(self.mult, self.group.ranks)
        )

    def __repr__(self) -> str:
        return f"SimplicialRing(ranks={list(self.group.ranks)})"


def bilinear_pull(m: np.ndarray, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """m ∘ (f ⊗ g) for m: ℤ^a ⊗ ℤ^b -> ℤ^e, contracted one factor at a time."""
    e, a, b = m.shape[0], f.shape[0], g.shape[0]
    A, B = f.shape[1], g.shape[1]
    M3 = m.reshape(e, a, b)
    Y = la.mm(la.tidy(np.ascontiguousarray(M3.transpose(0, 2, 1)).reshape(e * b, a)), f)  # [(e,b),A]
    Y = np.ascontiguousarray(Y.reshape(e, b, A).transpose(0, 2, 1)).reshape(e * A, b)
    Z = la.mm(la.tidy(Y), g)  # [(e,A),B]
    return la.tidy(Z.reshape(e, A * B))


def _associative(m: np.ndarray, r: int) -> bool:
    """m(m ⊗ 1) == m(1 ⊗ m) without forming the r^3-column Kronecker products."""
    if r == 0:
        return True
    M3 = m.reshape(r, r, r)
    # (ab)c: sum_d M[e,d,c] M[d,a,b], laid out as [(e,c),(a,b)]
    left = la.mm(la.tidy(np.ascontiguousarray(M3.transpose(0, 2, 1)).reshape(r * r, r)), m)
    # a(bc): sum_d M[e,a,d] M[d,b,c], laid out as [(e,a),(b,c)]
    right = la.mm(la.tidy(M3.reshape(r * r, r)), m)
    left = left.reshape(r, r, r, r).transpose(0, 2, 3, 1)
    return bool(np.array_equal(left, right.reshape(r, r, r, r)))


def constant_ring(T: int, k: int = 1) -> SimplicialRing:
    """The constant simplicial ring ℤ^k with componentwise product."""
    m = la.zeros(k, k * k)
    for i in range(k):
        m[i, i * k + i] = 1
    u = la.imat([[1]] * k) if k else la.zeros(0, 1)
    return SimplicialRing(sp.constant(T, k), [m] * (T + 1), [u] * (T + 1))


def function_ring(m: int, T: int) -> SimplicialRing:
    """Level n: integer functions on monotone maps [m] -> [n], pointwise product.

    θ: [k] -> [n] acts by f ↦ f(θ ∘ -), which is a ring map, so this is a
    commutative simplicial ring.
    """
    ranks = [len(sp.monotone_maps(m, n)) for n in range(T + 1)]
    index = [{a: i for i, a in enumerate(sp.monotone_maps(m, n))} for n in range(T + 1)]

    def pullback(theta, n):
        k = len(theta) - 1
        M = la.zeros(ranks[k], ranks[n])
        for row, alpha in enumerate(sp.monotone_maps(m, k)):
            M[row, index[n][tuple(theta[a] for a in alpha)]] = 1
        return M

    group = sp.from_operators(ranks, pullback)
    mults, units = [], []
    for r in ranks:
        mm_ = la.zeros(r, r * r)
        for i in range(r):
            mm_[i, i * r + i] = 1
        mults.append(mm_)
        units.append(la.imat([[1]] * r))
    return SimplicialRing(group, mults, units)


def tensor_rings(A: SimplicialRing, B: SimplicialRing) -> SimplicialRing:
    """Levelwise tensor product with (a⊗b)(a'⊗b') = aa' ⊗ bb'."""
    G = sp.tensor(A.group, B.group)
    mults, units = [], []
    for n in range(G.T + 1):
        ra, rb = A.group.ranks[n], B.group.ranks[n]
        # entry [(e,f), (a,b), (a',b')] = μ_A[e, a, a'] μ_B[f, b, b']
        MA, MB = A.mult[n].reshape(ra, ra, ra), B.mult[n].reshape(rb, rb, rb)
        if MA.dtype == object or MB.dtype == object or not la._fits(la._bound(MA) * la._bound(MB)):
            MA, MB = MA.astype(object), MB.astype(object)
        m = np.einsum("eac,fbd->efabcd", MA, MB).reshape(ra * rb, (ra * rb) ** 2)
        mults.append(la.tidy(m))
        units.append(la.kron(A.unit[n], B.unit[n]))
    return SimplicialRing(G, mults, units)


def twist_ring(A: SimplicialRing, U: Sequence[np.ndarray]) -> SimplicialRing:
    """Transport the ring structure along a levelwise unimodular change of basis."""
    G = sp.twist(A.group, U)
    Ui = [la.inverse(u) for u in U]
    mults = [la.mm(U[n], A.mult[n], la.kron(Ui[n], Ui[n])) for n in range(A.T + 1)]
    units = [la.mm(U[n], A.unit[n]) for n in range(A.T + 1)]
    return SimplicialRing(G, mults, units)


# ------------------------------------------------------------- N and Γ


def normalize_ring(A: SimplicialRing) -> DGAlgebra:
    """N(A) with product N(μ) ∘ ∇ restricted to Moore chains.

    Computed as π ∘ μ ∘ ∇ ∘ (ι ⊗ ι); this equals N(μ) ∘ π ∘ ∇ ∘ (ι ⊗ ι) because μ
    is simplicial and so carries degenerate chains to degenerate chains.
    """
    G = A.group
    N = dk.normalize(G)
    mult = {}
    for p in range(G.T + 1):
        for q in range(G.T + 1 - p):
            n = p + q
            nab = dk.shuffle_block(G, G, p, q)
            mult[(p, q)] = N.project(n, la.mm(A.mult[n], nab, la.kron(N.iota[p], N.iota[q])))
    return DGAlgebra(N.complex, mult, N.project(0, A.unit[0]))


def gamma_ring(R: DGAlgebra, check: bool = True) -> SimplicialRing:
    """ΓR with product Γ(μ) ∘ φ_{R,R}; unit x_{0} = 1 and all other values 0."""
    G = dk.gamma(R.complex)
    phi = dk.gamma_monoidal(R.complex, R.complex)
    mu = R.mult_map()
    mults, units = [], []
    for n in range(G.T + 1):
        g_mu = la.block_diag([mu[len(S) - 1] for S in dk.free_subsets(n)])
        mults.append(la.mm(g_mu, phi[n]))
        u = la.zeros(G.group.ranks[n], 1)
        o = G.free_offsets[n][(0,)]
        u[o:o + R.rank(0)] = R.unit
        units.append(u)
    return SimplicialRing(G.group, mults, units, check=check)


def kappa(R: DGAlgebra, r) -> np.ndarray:
    """κr ∈ (ΓR)_1: the chain map NΔ¹ -> R with [0] ↦ 0, [ι] ↦ r (so [1] ↦ dr)."""
    G = dk.gamma(R.complex)
    r = la.imat(r) if np.ndim(r) == 2 else la.vec(list(r))
    if r.shape != (R.rank(1), 1):
        raise ValidationError(f"κ needs an element of R_1 (rank {R.rank(1)}), got shape {r.shape}")
    x = la.zeros(G.group.ranks[1], 1)
    o = G.free_offsets[1][(0, 1)]
    x[o:o + R.rank(1)] = r
    return x


def ring_product(A: SimplicialRing, n: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return la.mm(A.mult[n], la.kron(x, y))


# -------------------------------------------------------- library of DGAs


def integers(T: int) -> DGAlgebra:
    R = ch.sphere(0, T)
    return DGAlgebra(R, {(0, 0): [[1]]}, [[1]])


def square_zero(C: ChainComplex) -> DGAlgebra:
    """ℤ ⊕ C with (a, x)(b, y) = (ab, ay + bx); all products inside C vanish."""
    T = C.T
    ranks = [1 + C.rank(0)] + [C.rank(n) for n in range(1, T + 1)]
    diffs = []
    for n in range(1, T + 1):
        d = C.d(n)
        diffs.append(la.vstack([la.zeros(1, C.rank(1)), d], C.rank(1)) if n == 1 else d)
    R = ChainComplex(ranks, diffs)
    mult = {}
    r0 = ranks[0]
    for p in range(T + 1):
        for q in range(T + 1 - p):
            M = la.zeros(ranks[p + q], ranks[p] * ranks[q])
            if p == 0:
                # a·y from the ℤ-coordinate of the left factor
                for j in range(ranks[q]):
                    M[j, 0 * ranks[q] + j] += 1
            if q == 0:
                for i in range(ranks[p]):
                    M[i, i * r0 + 0] += 1
            if p == 0 and q == 0:
                M[0, 0] = 1
            mult[(p, q)] = M
    return DGAlgebra(R, mult, la.vec([1] + [0] * C.rank(0)))


def _words(C: ChainComplex, T: int, max_length: Optional[int]):
    letters = [(p, a) for p in range(T + 1) for a in range(C.rank(p))]
    by_degree = [[] for _ in range(T + 1)]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            deg = sum(l[0] for l in w)
            by_degree[deg].append(w)
            if max_length is not None and len(w) >= max_length:
                continue
            for l in letters:
                if deg + l[0] <= T:
                    nxt.append(w + (l,))
        frontier = nxt
    return [sorted(ws, key=lambda w: (len(w), w)) for ws in by_degree]


def tensor_algebra(C: ChainComplex, T: Optional[int] = None, max_length: Optional[int] = None) -> DGAlgebra:
    """T(C) = ⊕_k C^{⊗k} with concatenation, optionally cut at word length.

    Without ``max_length`` C_0 must vanish so that each degree is finite.
    Words longer than ``max_length`` span a differential two-sided ideal, so
    the truncated quotient is again a DGA (used when C_0 != 0).
    """
    T = C.T if T is None else T
    if max_length is None and C.rank(0):
        raise ValidationError("the tensor algebra needs C_0 = 0 (or a word-length bound)")
    words = _words(C, T, max_length)
    index = [{w: i for i, w in enumerate(ws)} for ws in words]
    ranks = [len(ws) for ws in words]
    diffs = []
    for n in range(1, T + 1):
        M = la.zeros(ranks[n - 1], ranks[n])
        for col, w in enumerate(words[n]):
            sign = 1
            for pos, (p, a) in enumerate(w):
                if p >= 1:
                    d = C.d(p)
                    for b in range(C.rank(p - 1)):
                        c = int(d[b, a])
                        if c:
                            M[index[n - 1][w[:pos] + ((p - 1, b),) + w[pos + 1:]], col] += sign * c
                if p % 2:
                    sign = -sign
        diffs.append(M)
    R = ChainComplex(ranks, diffs)
    mult = {}
    for p in range(T + 1):
        for q in range(T + 1 - p):
            M = la.zeros(ranks[p + q], ranks[p] * ranks[q])
            for i, w in enumerate(words[p]):
                for j, v in enumerate(words[q]):
                    wv = w + v
                    if max_length is None or len(wv) <= max_length:
                        M[index[p + q][wv], i * ranks[q] + j] = 1
            mult[(p, q)] = M
    alg = DGAlgebra(R, mult, la.vec([1 if w == () else 0 for w in words[0]]))
    alg.words = words
    return alg


def tensor_algebra_rank(ranks: Sequence[int], n: int) -> int:
    """Σ over compositions (n_1, ..., n_k) of n of Π rank C_{n_i} (C_0 = 0)."""
    if n == 0:
        return 1
    return sum(ranks[k] * tensor_algebra_rank(ranks, n - k) for k in range(1, n + 1) if k < len(ranks))


def free_word_generators(T: int = 3) -> ChainComplex:
    """x, y in degree 1 with dx = u, dy = v in degree 0."""
    return ChainComplex([2, 2] + [0] * (T - 1), [la.eye(2)] + [la.zeros(2 if n == 2 else 0, 0) for n in range(2, T + 1)])


def library(T: int = 3) -> dict:
    """Named DGAs used by the ring suites."""
    disk = ChainComplex([1, 1] + [0] * (T - 1), [[[1]]] + [la.zeros(1 if n == 2 else 0, 0) for n in range(2, T + 1)])
    torsion = ChainComplex([1, 1] + [0] * (T - 1), [[[2]]] + [la.zeros(1 if n == 2 else 0, 0) for n in range(2, T + 1)])
    return {
        "Z": integers(T),
        "sqz-disk": square_zero(disk),
        "sqz-torsion": square_zero(torsion),
        "sqz-sphere1": square_zero(ch.sphere(1, T)),
        "tensor-sphere1": tensor_algebra(ch.sphere(1, T)),
        "tensor-disk12": tensor_algebra(
            ChainComplex([0, 1, 1] + [0] * (T - 2), [la.zeros(0, 1), [[1]]] + [la.zeros(1 if n == 3 else 0, 0) for n in range(3, T + 1)])
        ),
        "tensor-xy": tensor_algebra(free_word_generators(T), T, max_length=2),
    }


# --------------------------------------------------------------- checks


@dataclass
class CheckReport:
    name: str
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)


def counit_square_lhs(C: ChainComplex, D: ChainComplex) -> ChainMap:
    """ε_{C⊗D} ∘ N(φ_{C,D}) ∘ ∇ on NΓC ⊗ NΓD.

    Top-cell evaluation vanishes on degenerate elements of Γ(C⊗D) and φ is
    simplicial, so ε ∘ N(φ) ∘ π = top ∘ φ and the Moore projection of the big
    group ΓC ⊗ ΓD never has to be formed.
    """
    T = min(C.T, D.T)
    GC, GD = dk.gamma(C, T), dk.gamma(D, T)
    NC, ND = dk.normalize(GC.group), dk.normalize(GD.group)
    src = ch.tensor(NC.complex, ND.complex)
    CD = ch.tensor(C.truncate(T), D.truncate(T))
    comps = []
    for n in range(T + 1):
        top = tuple(range(n + 1))
        cols = GC.group.ranks[n] * GD.group.ranks[n]
        phi_top = la.vstack([la.kron(GC.rows(n, top[:p + 1]), GD.rows(n, top[p:])) for p in range(n + 1)], cols)
        blocks = [
            la.mm(phi_top, dk.shuffle_block(GC.group, GD.group, p, q), la.kron(NC.iota[p], ND.iota[q]))
            for p, q, _, _ in src.layout.blocks[n]
        ]
        comps.append(la.hstack(blocks, CD.rank(n)))
    return ChainMap(src, CD, comps, check=False)


def counit_square_literal(C: ChainComplex, D: ChainComplex) -> ChainMap:
    """The same composite built from the normalized maps themselves (small inputs)."""
    GC, GD = dk.gamma(C), dk.gamma(D)
    phi = dk.gamma_monoidal(C, D)
    return dk.counit(ch.tensor(C, D)) @ dk.normalize_map(phi) @ dk.normalized_shuffle(GC.group, GD.group)


def counit_ring_check(R: DGAlgebra) -> list:
    """The counit square for the monoidal structure, and ε: NΓR -> R as DGA iso."""
    C = R.complex
    out = []
    lhs = counit_square_lhs(C, C)
    rhs = ch.tensor_maps(dk.counit(C), dk.counit(C))
    bad = [n for n in range(lhs.T + 1) if not la.equal(lhs[n], rhs[n])]
    out.append(CheckReport("counit-monoidal", not bad, f"first failing degree {bad[0]}" if bad else ""))
    NG = normalize_ring(gamma_ring(R))
    eps = dk.counit(C)
    iso = all(la.is_unimodular(m) for m in eps.components)
    mult = is_dga_map(eps, NG, R)
    out.append(CheckReport("counit-dga-iso", iso and mult,
                           "" if iso and mult else f"bijective={iso} multiplicative={mult}"))
    return out


def eta_not_monoidal_witness(T: int = 3) -> CheckReport:
    """A = B = Γ(ℤ[1]): the composite through φ is zero in level one, η_{A⊗B} is not."""
    A = dk.gamma(ch.sphere(1, T)).group
    AB = dk._tensor_of(A, A)
    eta_A = dk.unit(A)
    eta_AB = dk.unit(AB)
    NA = dk.normalize(A).complex
    phi = dk.gamma_monoidal(NA, NA)
    nab = dk.normalized_shuffle(A, A)
    g_nab = dk.gamma_map(nab, source=dk.gamma(nab.source), target=dk.gamma(nab.target))
    ee = sp.tensor_maps(eta_A, eta_A)
    composite = g_nab @ phi @ ee
    zero = la.is_zero(composite[1])
    injective = la.rank(eta_AB[1]) == eta_AB[1].shape[1] and eta_AB[1].shape[1] > 0
    H = ch.homotopy_solve(dk.normalize_map(composite), dk.normalize_map(eta_AB))
    ok = zero and injective and H is not None
    return CheckReport(
        "eta-not-monoidal",
        ok,
        f"level-1 composite zero={zero}, η injective={injective}, homotopic after N={H is not None}",
        {"level1_rank": int(AB.ranks[1]), "composite_level1": composite[1].tolist(), "eta_level1": eta_AB[1].tolist()},
    )
