"""Verification suites: seeded property checks grouped by theme.

Every property takes ``(seed, T, cases)`` and returns a list of
:class:`Check`.  Each random case draws from its own stream
``case_rng(seed, salt, case)``, so a failing case is replayed from the seed and
the case id recorded in its witness.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Callable, Optional

import numpy as np

from . import algebra as al
from . import chain as ch
from . import doldkan as dk
from . import enriched as en
from . import generators as gen
from . import linalg as la
from . import modules as md
from . import simplicial as sp
from ._config import backend, max_rank


@dataclass
class Check:
    id: str
    ok: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"id": self.id, "status": "pass" if self.ok else "fail"}
        if not self.ok:
            out["witness"] = self.witness
        return out


def _case(prop: str, k: int, ok: bool, seed: int, salt: int, **extra) -> Check:
    return Check(f"{prop}/case-{k:03d}", bool(ok), {"seed": seed, "salt": salt, "case": k, **extra})


def _first_bad(f: ch.ChainMap, g: ch.ChainMap) -> Optional[int]:
    for n in range(min(f.T, g.T) + 1):
        if not la.equal(f[n], g[n]):
            return n
    return None


# ------------------------------------------------------------ Eilenberg–Zilber


def aw_nabla_identity(seed: int, T: int = 4, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 1, k)
        A, B = gen.random_simplicial(g, T), gen.random_simplicial(g, T)
        comp = dk.normalized_aw(A, B) @ dk.normalized_shuffle(A, B)
        bad = _first_bad(comp, ch.identity_map(comp.source))
        out.append(_case("aw-nabla-identity", k, bad is None, seed, 1, degree=bad, ranks=[A.ranks, B.ranks]))
    return out


def nabla_aw_homotopy(seed: int, T: int = 4, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 2, k)
        A, B = gen.random_simplicial(g, T), gen.random_simplicial(g, T)
        f = dk.normalized_shuffle(A, B) @ dk.normalized_aw(A, B)
        idm = ch.identity_map(f.source)
        H = ch.homotopy_solve(f, idm)
        ok_h = H is not None and H.check(f, idm)
        ok_q = ch.is_quasi_iso(f)
        out.append(_case("nabla-aw-homotopy", k, ok_h and ok_q, seed, 2, homotopy=ok_h, quasi_iso=ok_q))
    return out


def shuffle_symmetry(seed: int, T: int = 4, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 3, k)
        A, B = gen.random_simplicial(g, T), gen.random_simplicial(g, T)
        tau = ch.symmetry(dk.unnormalized(A), dk.unnormalized(B))
        Ct = dk.unnormalized_map(sp.symmetry(A, B))
        bad = _first_bad(dk.shuffle(B, A) @ tau, Ct @ dk.shuffle(A, B))
        out.append(_case("shuffle-symmetry", k, bad is None, seed, 3, degree=bad))
    return out


def aw_asymmetry_witness(T: int = 2) -> Check:
    """A = B = ℤΔ¹: AW ∘ C(τ) and τ ∘ AW differ."""
    A = sp.standard_simplex(1, T)
    Ct = dk.unnormalized_map(sp.symmetry(A, A))
    tau = ch.symmetry(dk.unnormalized(A), dk.unnormalized(A))
    lhs = dk.alexander_whitney(A, A) @ Ct
    rhs = tau @ dk.alexander_whitney(A, A)
    bad = _first_bad(lhs, rhs)
    return Check("aw-asymmetry-witness", bad is not None, {"degree": bad})


def weak_equivalences(seed: int, T: int = 4, cases: int = 50) -> list:
    """∇̃_{C,D} (after N) and the normalized AW are quasi-isomorphisms."""
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 4, k)
        C, D = gen.random_gamma_sized(g, T), gen.random_gamma_sized(g, T)
        nt = dk.gamma_comonoidal(C, D)
        q1 = ch.is_quasi_iso(dk.normalize_map(nt))
        GC, GD = dk.gamma(C), dk.gamma(D)
        q2 = ch.is_quasi_iso(dk.normalized_aw(GC.group, GD.group))
        out.append(_case("weak-equivalences", k, q1 and q2, seed, 4, comonoidal=q1, aw=q2,
                         ranks=[list(C.ranks), list(D.ranks)]))
    return out


# ------------------------------------------------------------------ Dold–Kan


def dold_kan_isos(seed: int, T: int = 4, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 5, k)
        C = gen.random_complex(g, T)
        A = gen.random_simplicial(g, T)
        G = dk.gamma(C)
        ranks_ok = all(
            G.group.ranks[n] == sum(comb(n, j) * C.rank(j) for j in range(n + 1)) for n in range(T + 1)
        )
        eta_A = dk.unit(A)
        eta_ok = all(la.is_unimodular(m) for m in eta_A.components)
        eps = dk.counit(C)
        eps_ok = all(la.is_unimodular(m) for m in eps.components)
        tri = dk.gamma_map(eps, source=dk.gamma(eps.source)) @ dk.unit(G.group)
        tri_ok = tri == sp.identity(G.group)
        out.append(_case("dold-kan-isos", k, ranks_ok and eta_ok and eps_ok and tri_ok, seed, 5,
                         rank_oracle=ranks_ok, eta=eta_ok, eps=eps_ok, triangle=tri_ok, ranks=list(C.ranks)))
    return out


def counit_monoidal(seed: int, T: int = 4, cases: int = 50) -> list:
    """ε_{C⊗D} ∘ N(φ) ∘ ∇ = ε_C ⊗ ε_D, built literally from the normalized maps."""
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 6, k)
        C, D = gen.random_gamma_sized(g, T), gen.random_gamma_sized(g, T)
        lhs = al.counit_square_literal(C, D)
        rhs = ch.tensor_maps(dk.counit(C), dk.counit(D))
        bad = _first_bad(lhs, rhs)
        out.append(_case("counit-monoidal", k, bad is None, seed, 6, degree=bad, ranks=[list(C.ranks), list(D.ranks)]))
    return out


# ------------------------------------------------------------------- rings


def _random_square_zero(g: np.random.Generator, T: int) -> al.DGAlgebra:
    while True:
        C = gen.random_complex(g, T, rank_cap=2)
        if max(dk.gamma_rank([1 + C.rank(0)] + list(C.ranks[1:]), n) for n in range(T + 1)) <= 16:
            return al.square_zero(C)


def ring_library(T: int) -> dict:
    return al.library(T)


def kappa_products(T: int = 3) -> list:
    out = []
    for name, R in sorted(ring_library(T).items()):
        G = al.gamma_ring(R)
        bad = None
        for a in range(R.rank(1)):
            for b in range(R.rank(1)):
                r, s = la.zeros(R.rank(1), 1), la.zeros(R.rank(1), 1)
                r[a, 0], s[b, 0] = 1, 1
                lhs = al.ring_product(G, 1, al.kappa(R, r), al.kappa(R, s))
                rhs = al.kappa(R, R.multiply(r, 1, la.mm(R.complex.d(1), s), 0))
                if not la.equal(lhs, rhs):
                    bad = (a, b)
        out.append(Check(f"kappa-product/{name}", bad is None, {"pair": bad}))
    return out


def noncommutativity_witness(T: int = 3) -> Check:
    """In Γ of the tensor algebra on x, y (dx = u, dy = v): κx·κy != κy·κx."""
    R = ring_library(T)["tensor-xy"]
    G = al.gamma_ring(R)
    words = R.words[1]
    x = la.vec([1 if w == ((1, 0),) else 0 for w in words])
    y = la.vec([1 if w == ((1, 1),) else 0 for w in words])
    xy = al.ring_product(G, 1, al.kappa(R, x), al.kappa(R, y))
    yx = al.ring_product(G, 1, al.kappa(R, y), al.kappa(R, x))
    # κx·κy = κ(x·v) and κy·κx = κ(y·u): two different words of length two
    xv = al.kappa(R, la.vec([1 if w == ((1, 0), (0, 1)) else 0 for w in words]))
    yu = al.kappa(R, la.vec([1 if w == ((1, 1), (0, 0)) else 0 for w in words]))
    ok = not la.equal(xy, yx) and la.equal(xy, xv) and la.equal(yx, yu)
    return Check("noncommutativity-witness", ok, {"xy": xy.ravel().tolist(), "yx": yx.ravel().tolist()})


def counit_dga_isos(seed: int, T: int = 3, cases: int = 10) -> list:
    out = []
    for name, R in sorted(ring_library(T).items()):
        reps = al.counit_ring_check(R)
        out.append(Check(f"counit-dga-iso/{name}", all(r.ok for r in reps), {r.name: r.detail for r in reps}))
    for k in range(cases):
        g = gen.case_rng(seed, 7, k)
        R = _random_square_zero(g, T)
        reps = al.counit_ring_check(R)
        out.append(_case("counit-dga-iso/square-zero", k, all(r.ok for r in reps), seed, 7,
                         detail={r.name: r.detail for r in reps}))
    return out


def commutative_rings(seed: int, T: int = 3) -> dict:
    g = gen.case_rng(seed, 8, 0)
    rings = {
        "constant-1": al.constant_ring(T),
        "constant-2": al.constant_ring(T, 2),
        "functions-0": al.function_ring(0, T),
        "functions-1": al.function_ring(1, T),
        "functions-2": al.function_ring(2, T),
    }
    rings["functions-0x1"] = al.tensor_rings(rings["functions-0"], rings["functions-1"])
    for name in ("functions-1", "functions-2"):
        A = rings[name]
        rings[name + "-twisted"] = al.twist_ring(A, [gen.random_unimodular(g, r) for r in A.group.ranks])
    return rings


def graded_commutativity(seed: int, T: int = 3) -> list:
    out = []
    for name, A in sorted(commutative_rings(seed, T).items()):
        N = al.normalize_ring(A)
        out.append(Check(f"graded-commutative/{name}", A.is_commutative() and al.is_graded_commutative(N),
                         {"ranks": list(N.complex.ranks)}))
    return out


def eta_not_monoidal() -> Check:
    rep = al.eta_not_monoidal_witness()
    return Check("eta-not-monoidal", rep.ok, {"detail": rep.detail})


# ----------------------------------------------------------------- modules


def _random_module_pair(g: np.random.Generator, T: int):
    rings = [al.constant_ring(T), al.function_ring(0, T), al.function_ring(1, T)]
    shapes = [sp.constant(T, 1), sp.standard_simplex(0, T), sp.standard_simplex(1, T), sp.constant(T, 2)]
    while True:
        A = rings[int(g.integers(0, len(rings)))]
        X = shapes[int(g.integers(0, len(shapes)))]
        Y = shapes[int(g.integers(0, 2))]
        # keep the top level of M ⊗ L within a few hundred generators
        if X.ranks[T] * Y.ranks[T] * A.group.ranks[T] ** 2 <= 8 * max_rank():
            break
    if g.random() < 0.5:
        A = al.twist_ring(A, [gen.random_unimodular(g, r) for r in A.group.ranks])
    M = md.free_simplicial_module(A, X)
    L = md.free_left_simplicial(A, Y)
    return A, M, L


def nabla_A_square(seed: int, T: int = 3, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 9, k)
        A, M, L = _random_module_pair(g, T)
        try:
            res = md.nabla_A(M, L)
            ok, info = res.square_ok and res.descends, {}
        except ch.ValidationError as exc:
            ok, info = False, {"error": str(exc)}
        out.append(_case("nabla-A-square", k, ok, seed, 9, ranks=[list(M.group.ranks), list(L.group.ranks)], **info))
    return out


def relative_tensor_checks(T: int = 3) -> list:
    out = []
    for name, R in sorted(ring_library(T).items()):
        if name == "tensor-xy":
            continue
        P = md.relative_tensor_dg(md.regular_module(R), md.regular_left_module(R))
        f = ch.ChainMap(R.complex, P, [_unit_right(R, n, P) for n in range(P.T + 1)])
        out.append(Check(f"M⊗R=M/{name}", md.presented_iso(f)))
        X = ch.sphere(1, T)
        F = md.free_dg_module(R, X)
        P2 = md.relative_tensor_dg(F, md.regular_left_module(R))
        XR = F.complex
        g = ch.ChainMap(XR, P2, [_unit_right(R, n, P2, XR) for n in range(P2.T + 1)])
        out.append(Check(f"free-relative/{name}", md.presented_iso(g)))
    return out


def _unit_right(R: al.DGAlgebra, n: int, P, M=None) -> np.ndarray:
    """m ↦ m ⊗ 1 from M_n into the generators of M ⊗_R R (M = R by default)."""
    M = M if M is not None else R.complex
    X = la.zeros(P.rank(n), M.rank(n))
    o, _ = P.layout.block(n, n)
    return ch._put(X, o, 0, la.kron(la.eye(M.rank(n)), R.unit))


def _collapse(R: al.DGAlgebra, Z: al.DGAlgebra) -> ch.ChainMap:
    """The DGA map T(C) -> ℤ sending every nonempty word to 0."""
    first = la.imat([[1 if w == () else 0 for w in R.words[0]]])
    return ch.ChainMap(R.complex, Z.complex, [first] + [la.zeros(Z.rank(n), R.rank(n)) for n in range(1, Z.T + 1)])


def acyclic_tensor_algebra(T: int = 3) -> al.DGAlgebra:
    """T(C) for C = (ℤ --1--> ℤ) in degrees 2 -> 1: homology ℤ in degree 0."""
    return ring_library(T)["tensor-disk12"]


def quillen_checks(T: int = 3) -> list:
    R = acyclic_tensor_algebra(T)
    Z = al.integers(T)
    f = _collapse(R, Z)
    samples = [md.regular_module(R), md.free_dg_module(R, ch.sphere(1, T)), md.free_dg_module(R, ch.sphere(0, T))]
    rep = md.quillen_invariance_spot_check(f, samples, Z)
    out = [Check("quillen-invariance/collapse", rep.ok, {"detail": rep.detail})]
    R2 = ring_library(T)["sqz-disk"]
    NG = al.normalize_ring(al.gamma_ring(R2))
    rep = md.quillen_invariance_spot_check(dk.counit(R2.complex), [md.regular_module(NG)], R2)
    out.append(Check("quillen-invariance/counit", rep.ok, {"detail": rep.detail}))
    ok = all(md.triangle_identities(ch.identity_map(R2.complex), md.free_dg_module(R2, ch.sphere(0, T)),
                                    md.regular_module(R2)))
    out.append(Check("triangle-identities/identity", ok))
    ok = all(md.triangle_identities(f, md.regular_module(R), md.regular_module(Z)))
    out.append(Check("triangle-identities/collapse", ok))
    return out


def normalize_module_checks(T: int = 3) -> list:
    out = []
    for name, A in sorted(commutative_rings(0, T).items()):
        NA = al.normalize_ring(A)
        NM = md.normalize_module(md.regular_simplicial(A), NA)
        out.append(Check(f"normalize-regular/{name}", all(la.equal(NM.act[k], NA.mult[k]) for k in NA.mult)))
    return out


# ---------------------------------------------------------------- enriched


def _random_graph(g: np.random.Generator, objects, T: int, rank_cap: int = 2, tag: str = "G") -> en.IGraph:
    entries = {(i, j): gen.random_complex(g, T, rank_cap=rank_cap) for i in objects for j in objects}
    G = en.IGraph(objects, entries)
    G.labels = en._base_labels(G, tag)
    return G


def graph_tensor_laws(seed: int, T: int = 3, cases: int = 50) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 10, k)
        size = 1 + k % 3
        objects = [f"o{i}" for i in range(size)]
        G = _random_graph(g, objects, T, tag="G")
        U = en.unit_graph(objects, T)
        UG, GU = en.graph_tensor(U, G), en.graph_tensor(G, U)
        unit_ok = en.is_graph_iso(UG, G, en.reindexing(UG, G)) and en.is_graph_iso(GU, G, en.reindexing(GU, G))
        assoc_ok = True
        if size <= 2:
            H = _random_graph(g, objects, T, tag="H")
            K = _random_graph(g, objects, T, tag="K")
            L = en.graph_tensor(en.graph_tensor(G, H), K)
            R = en.graph_tensor(G, en.graph_tensor(H, K))
            assoc_ok = en.is_graph_iso(L, R, en.reindexing(L, R))
        single_ok = True
        if size == 1:
            H = _random_graph(g, objects, T, tag="H")
            o = objects[0]
            single_ok = en.graph_tensor(G, H)[(o, o)] == ch.tensor(G[(o, o)], H[(o, o)])
        out.append(_case("graph-tensor-laws", k, unit_ok and assoc_ok and single_ok, seed, 10,
                         objects=size, unit=unit_ok, assoc=assoc_ok, singleton=single_ok))
    return out


def scalar_extension_checks(T: int = 3) -> list:
    out = []
    R = acyclic_tensor_algebra(T)
    Z = al.integers(T)
    f = _collapse(R, Z)
    for objects in (["a"], ["a", "b"], ["a", "b", "c"]):
        O = en.preorder_category(R, objects)
        OZ = en.preorder_category(Z, objects)
        Psi = en.entrywise_map(O, OZ, f)
        tag = f"I={len(objects)}"
        out.append(Check(f"pointwise-quasi-iso/{tag}", Psi.is_pointwise_quasi_iso()))
        for j in objects:
            out.append(Check(f"extend-representable/{tag}/{j}", en.representable_comparison(Psi, j).ok))
            out.append(Check(f"unit-quasi-iso/{tag}/{j}", en.unit_is_pointwise_quasi_iso(Psi, en.free_module(O, j)).ok))
        ok = all(all(en.triangle_identities(Psi, j)) for j in objects)
        out.append(Check(f"triangle-identities/{tag}", ok))
        ok = all(en.yoneda_check(O, j, en.free_module(O, i)).ok for i in objects for j in objects)
        out.append(Check(f"yoneda/{tag}", ok))
    O1 = en.category_from_monoid(R)
    out.append(Check("monoid-roundtrip", en.monoid_from_category(O1) == R))
    return out


# --------------------------------------------------------- model predicates


def model_predicate_checks() -> list:
    T = 3
    out = []

    def disk(n):
        ranks = [1 if m in (n - 1, n) else 0 for m in range(T + 1)]
        diffs = [la.imat([[1]]) if m == n else la.zeros(ranks[m - 1], ranks[m]) for m in range(1, T + 1)]
        return ch.ChainComplex(ranks, diffs)

    def expect(name, f, fib, cof, we):
        p = ch.model_predicates(f)
        got = (p.is_fibration, p.is_cofibration, p.is_weak_equivalence)
        out.append(Check(f"chain/{name}", got == (fib, cof, we), {"got": got, "expected": (fib, cof, we)}))

    Z0, Z1 = ch.sphere(0, T), ch.sphere(1, T)
    D2 = disk(2)
    zero = ch.zero_complex(T)
    expect("disk-to-zero", ch.zero_map(D2, zero), True, False, True)
    expect("zero-to-disk", ch.zero_map(zero, D2), False, True, True)
    expect("times-2-degree-0", ch.ChainMap(Z0, Z0, [[[2]], la.zeros(0, 0), la.zeros(0, 0), la.zeros(0, 0)]), True, False, False)
    expect("times-2-degree-1", ch.ChainMap(Z1, Z1, [la.zeros(0, 0), [[2]], la.zeros(0, 0), la.zeros(0, 0)]), False, False, False)
    incl = ch.ChainMap(Z1, D2, [la.zeros(0, 0), [[1]], la.zeros(1, 0), la.zeros(0, 0)])
    expect("sphere-into-disk", incl, False, True, False)
    # a chain map D(1) -> ℤ[0] must vanish on the boundary x_0, so it is zero
    expect("disk-to-sphere", ch.zero_map(disk(1), Z0), True, False, False)
    expect("identity", ch.identity_map(D2), True, True, True)

    D1, D0 = sp.standard_simplex(1, T), sp.standard_simplex(0, T)
    collapse = sp.SimplicialMap(D1, D0, [la.imat([[1] * D1.ranks[n]]) for n in range(T + 1)])
    out.append(Check("simplicial/collapse-is-fibration", sp.is_fibration(collapse)))
    vertex = sp.SimplicialMap(D0, D1, [_vertex_column(D1, n) for n in range(T + 1)])
    out.append(Check("simplicial/vertex-is-not-fibration", not sp.is_fibration(vertex)))
    out.append(Check("simplicial/collapse-is-weak-equivalence", ch.is_quasi_iso(dk.normalize_map(collapse))))
    return out


def _vertex_column(D1: sp.SimplicialAbGroup, n: int) -> np.ndarray:
    """The constant map at vertex 0, as the basis element of [n] -> [1] with value 0."""
    maps = sp.monotone_maps(n, 1)
    col = la.zeros(D1.ranks[n], 1)
    col[maps.index(tuple([0] * (n + 1))), 0] = 1
    return col


# ------------------------------------------------------------------ linalg


def _determinantal_divisors(A: np.ndarray) -> list:
    """gcd of all k x k minors, k = 1..min(m, n), by floating determinants (small, exact after rounding)."""
    m, n = A.shape
    out = []
    for k in range(1, min(m, n) + 1):
        rows = list(combinations(range(m), k))
        cols = list(combinations(range(n), k))
        minors = np.array([[A[np.ix_(r, c)] for c in cols] for r in rows], dtype=float).reshape(-1, k, k)
        dets = np.rint(np.linalg.det(minors)).astype(np.int64)
        d = 0
        for x in dets:
            d = gcd(d, int(x))
        out.append(d)
    return out


def snf_invariants(seed: int, cases: int = 500) -> list:
    out = []
    for k in range(cases):
        g = gen.case_rng(seed, 11, k)
        m, n = int(g.integers(1, 7)), int(g.integers(1, 7))
        A = gen.random_matrix(g, m, n, -9, 9)
        dec = la.snf(A)
        diag = dec.diagonal
        r = dec.rank
        ok_eq = la.equal(la.mm(dec.U, A, dec.V), dec.D)
        ok_uni = la.is_unimodular(dec.U) and la.is_unimodular(dec.V)
        off = dec.D.copy()
        for i in range(min(m, n)):
            off[i, i] = 0
        ok_diag = la.is_zero(off) and all(d > 0 for d in diag[:r]) and all(d == 0 for d in diag[r:])
        ok_div = all(diag[i + 1] % diag[i] == 0 for i in range(r - 1))
        dd = _determinantal_divisors(A)
        prods, p = [], 1
        for d in diag:
            p *= d
            prods.append(p)
        ok_oracle = prods == dd
        ok = ok_eq and ok_uni and ok_diag and ok_div and ok_oracle
        out.append(_case("snf-invariants", k, ok, seed, 11, matrix=A.tolist(), diagonal=diag))
    return out


# ------------------------------------------------------------------- suites


def _suite_ez(seed, T, cases):
    return (aw_nabla_identity(seed, T, cases) + nabla_aw_homotopy(seed, T, cases)
            + shuffle_symmetry(seed, T, cases) + weak_equivalences(seed, T, cases))


def _suite_dk(seed, T, cases):
    return dold_kan_isos(seed, T, cases) + counit_monoidal(seed, T, cases)


def _suite_rings(seed, T, cases):
    # the named DGA library stays at T <= 3 (see DGA_T in the acceptance tests)
    Tr = min(T, 3)
    return kappa_products(Tr) + counit_dga_isos(seed, Tr, max(1, cases // 5)) + graded_commutativity(seed, T)


def _suite_counter(seed, T, cases):
    Tr = min(T, 3)
    return [aw_asymmetry_witness(), noncommutativity_witness(Tr), eta_not_monoidal()] + [
        c for c in kappa_products(Tr) if c.id.endswith("tensor-xy")
    ]


def _suite_modules(seed, T, cases):
    Tr = min(T, 3)
    return nabla_A_square(seed, T, cases) + relative_tensor_checks(Tr) + quillen_checks(Tr) + normalize_module_checks(Tr)


def _suite_enriched(seed, T, cases):
    return graph_tensor_laws(seed, T, cases) + scalar_extension_checks(T)


def _suite_model(seed, T, cases):
    return model_predicate_checks()


def _suite_linalg(seed, T, cases):
    return snf_invariants(seed, 10 * cases)


SUITES: dict[str, Callable] = {
    "eilenberg-zilber": _suite_ez,
    "doldkan-iso": _suite_dk,
    "ring-identities": _suite_rings,
    "counterexamples": _suite_counter,
    "modules": _suite_modules,
    "enriched": _suite_enriched,
    "model-predicates": _suite_model,
    "linalg": _suite_linalg,
}


def run_suite(name: str, seed: int = 0, T: int = 4, cases: int = 50, timings: Optional[bool] = None) -> dict:
    """Run one suite and return its report; ``passed`` is true iff every check passed."""
    if name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    checks = sorted(SUITES[name](seed, T, cases), key=lambda c: c.id)
    report = {
        "suite": name,
        "seed": seed,
        "truncation": T,
        "cases": cases,
        "rng": gen.RNG_ALGORITHM,
        "passed": all(c.ok for c in checks),
        "checks": [c.to_dict() for c in checks],
    }
    if timings if timings is not None else os.getenv("DKFORGE_TIMINGS") == "1":
        report["timings"] = {"seconds": round(time.perf_counter() - start, 3), "backend": backend()}
    return report
