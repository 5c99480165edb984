from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import chain as ch
from dkforge import doldkan as dk
from dkforge import generators as gen
from dkforge import linalg as la
from dkforge import simplicial as sp

seeds = st.integers(0, 2**32 - 1)


def float_rank(M):
    return int(np.linalg.matrix_rank(M.astype(float))) if M.size else 0


def test_normalized_simplex():
    N = dk.normalize(sp.standard_simplex(1, 1)).complex
    assert N.ranks == (2, 1)
    # basis of level 0 is the vertices [0], [1]; d[ι] = [1] - [0]
    assert la.equal(N.d(1), la.imat([[-1], [1]]))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_simplex_is_contractible(n):
    H = ch.homology(dk.normalize(sp.standard_simplex(n, 4)).complex)
    assert str(H[0]) == "Z" and all(g.is_zero for g in list(H)[1:])


def test_gamma_of_sphere():
    G = dk.gamma(ch.sphere(1, 3)).group
    assert G.ranks == (0, 1, 2, 3)


@given(seed=seeds)
def test_normalized_rank_is_complement_of_degenerates(seed):
    A = gen.random_simplicial(gen.rng(seed), 4)
    N = dk.normalize(A).complex
    for n in range(1, 5):
        degenerate = np.hstack([A.s(n - 1, i).astype(float) for i in range(n)])
        assert N.rank(n) == A.ranks[n] - float_rank(degenerate)
    assert N.rank(0) == A.ranks[0]


@given(seed=seeds)
def test_normalization_preserves_homology(seed):
    A = gen.random_simplicial(gen.rng(seed), 4)
    N = dk.normalize(A)
    assert ch.homology(N.complex) == ch.homology(dk.unnormalized(A))
    assert (N.projection() @ N.inclusion()) == ch.identity_map(N.complex)


@given(seed=seeds)
def test_gamma_ranks_and_roundtrip(seed):
    C = gen.random_complex(gen.rng(seed), 4)
    G = dk.gamma(C)
    assert G.group.ranks == tuple(sum(comb(n, k) * C.rank(k) for k in range(n + 1)) for n in range(5))
    NG = dk.normalize(G.group).complex
    assert NG.ranks == C.ranks
    assert ch.homology(NG) == ch.homology(C)


@given(seed=seeds)
def test_unit_and_counit_are_isomorphisms(seed):
    g = gen.rng(seed)
    A, C = gen.random_simplicial(g, 4), gen.random_complex(g, 4)
    eta = dk.unit(A)
    eta.validate()
    assert all(la.is_unimodular(m) for m in eta.components)
    inv = dk.levelwise_inverse(eta)
    inv.validate()
    eps = dk.counit(C)
    eps.validate()
    assert (eps @ dk.degreewise_inverse(eps)) == ch.identity_map(C)


@given(seed=seeds)
def test_gamma_is_functorial(seed):
    g = gen.rng(seed)
    C, D, E = (gen.random_complex(g, 3, rank_cap=2) for _ in range(3))
    f, h = gen.random_chain_map(g, C, D), gen.random_chain_map(g, D, E)
    GC, GD, GE = dk.gamma(C), dk.gamma(D), dk.gamma(E)
    lhs = dk.gamma_map(h @ f, GC, GE)
    rhs = dk.gamma_map(h, GD, GE) @ dk.gamma_map(f, GC, GD)
    assert lhs == rhs
    lhs.validate()


def test_shuffle_on_two_intervals():
    A = sp.standard_simplex(1, 2)
    nab = dk.normalized_shuffle(A, A)
    # N(Δ¹)⊗N(Δ¹) has one generator in degree 2; its image is the signed sum of the two 2-simplices
    col = nab[2]
    assert col.shape[1] == 1 and sorted(abs(int(x)) for x in col.ravel() if x) == [1, 1]


@given(seed=seeds)
def test_eilenberg_zilber_pair(seed):
    g = gen.rng(seed)
    A, B = gen.random_simplicial(g, 3), gen.random_simplicial(g, 3)
    nab, aw = dk.normalized_shuffle(A, B), dk.normalized_aw(A, B)
    assert (aw @ nab) == ch.identity_map(nab.source)
    # Künneth: both sides have the same homology
    assert ch.homology(nab.source) == ch.homology(nab.target)


def _index(E, n, p, i, j, right_rank):
    off, _ = E.layout.block(n, p)
    return off + i * right_rank + j


@given(seed=seeds)
def test_shuffle_is_associative(seed):
    g = gen.rng(seed)
    A, B, C = (gen.random_simplicial(g, 2, rank_cap=4) for _ in range(3))
    CA, CB, CC = dk.unnormalized(A), dk.unnormalized(B), dk.unnormalized(C)
    AB, BC = sp.tensor(A, B), sp.tensor(B, C)
    lhs = dk.shuffle(AB, C) @ ch.tensor_maps(dk.shuffle(A, B), ch.identity_map(CC))
    rhs = dk.shuffle(A, BC) @ ch.tensor_maps(ch.identity_map(CA), dk.shuffle(B, C))
    L, R = lhs.source, rhs.source
    LAB, RBC = ch.tensor(CA, CB), ch.tensor(CB, CC)
    for p in range(3):
        for q in range(3 - p):
            for r in range(3 - p - q):
                n = p + q + r
                for a in range(CA.rank(p)):
                    for b in range(CB.rank(q)):
                        for c in range(CC.rank(r)):
                            ab = _index(LAB, p + q, p, a, b, CB.rank(q))
                            bc = _index(RBC, q + r, q, b, c, CC.rank(r))
                            col_l = _index(L, n, p + q, ab, c, CC.rank(r))
                            col_r = _index(R, n, p, a, bc, RBC.rank(q + r))
                            assert la.equal(lhs[n][:, col_l], rhs[n][:, col_r])


def test_monoidal_structure_maps():
    C = ch.ChainComplex([1, 1, 1], [[[0]], [[0]]])
    D = ch.sphere(1, 2)
    phi = dk.gamma_monoidal(C, D)
    assert phi == dk.gamma_monoidal_composite(C, D)
    nt = dk.gamma_comonoidal(C, D)
    assert (phi @ nt) == sp.identity(phi.target)


@given(seed=seeds)
def test_explicit_phi_matches_composite(seed):
    g = gen.rng(seed)
    C, D = gen.random_gamma_sized(g, 3, rank_cap=2), gen.random_gamma_sized(g, 3, rank_cap=2)
    assert dk.gamma_monoidal(C, D) == dk.gamma_monoidal_composite(C, D)
