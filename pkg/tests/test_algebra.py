from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import algebra as al
from dkforge import chain as ch
from dkforge import doldkan as dk
from dkforge import generators as gen
from dkforge import linalg as la

seeds = st.integers(0, 2**32 - 1)
LIB = al.library(3)


@pytest.mark.parametrize("name", sorted(LIB))
def test_library_validates(name):
    R = LIB[name]
    R.validate()
    R.mult_map().validate()
    assert al.opposite(al.opposite(R)) == R


def compositions(n, ranks):
    """Number of words of total degree n in letters of positive degree (brute force)."""
    if n == 0:
        return 1
    return sum(ranks[k] * compositions(n - k, ranks) for k in range(1, n + 1) if k < len(ranks))


def test_tensor_algebra_ranks():
    for C in (ch.sphere(1, 4), ch.sphere(2, 4), ch.ChainComplex([0, 2, 1, 0, 0], [la.zeros(0, 2), la.zeros(2, 1), la.zeros(1, 0), la.zeros(0, 0)])):
        R = al.tensor_algebra(C)
        assert list(R.complex.ranks) == [compositions(n, list(C.ranks)) for n in range(5)]
    assert al.tensor_algebra(ch.sphere(1, 4)).complex.ranks == (1, 1, 1, 1, 1)


def test_tensor_algebra_needs_word_bound_when_degree_zero_present():
    with pytest.raises(ch.ValidationError):
        al.tensor_algebra(al.free_word_generators(3))
    assert al.tensor_algebra(al.free_word_generators(3), 3, max_length=2).complex.ranks == (7, 10, 4, 0)


def test_leibniz_violation_is_reported():
    C = ch.ChainComplex([1, 1], [[[1]]])
    # ℤ ⊕ ℤe with e·e undefined (degree 2 > T) but e·1 = 2e breaks the unit law
    with pytest.raises(ch.ValidationError):
        al.DGAlgebra(C, {(0, 0): [[1]], (0, 1): [[1]], (1, 0): [[2]]}, [[1]])


def test_graded_commutativity_examples():
    assert al.is_graded_commutative(LIB["sqz-sphere1"])
    assert not al.is_graded_commutative(LIB["tensor-sphere1"])


@pytest.mark.parametrize("m", [0, 1, 2])
def test_function_rings_normalize_to_commutative_dgas(m):
    A = al.function_ring(m, 3)
    assert A.is_commutative()
    N = al.normalize_ring(A)
    N.validate()
    assert al.is_graded_commutative(N)


def test_normalized_constant_ring_is_integers():
    N = al.normalize_ring(al.constant_ring(3))
    assert N.complex.ranks == (1, 0, 0, 0)
    assert N == al.integers(3)


@given(seed=seeds)
def test_twisted_and_tensor_rings(seed):
    g = gen.rng(seed)
    A = al.function_ring(1, 3)
    B = al.twist_ring(A, [gen.random_unimodular(g, r) for r in A.group.ranks])
    B.validate()
    AB = al.tensor_rings(al.function_ring(0, 3), B)
    assert AB.is_commutative()
    assert al.is_graded_commutative(al.normalize_ring(AB))


def test_tensor_ring_product_matches_kronecker_formula():
    A, B = al.function_ring(0, 2), al.twist_ring(al.function_ring(0, 2), [la.eye(1), la.imat([[1, 1], [0, 1]]), la.eye(3)])
    AB = al.tensor_rings(A, B)
    for n in range(3):
        ra, rb = A.group.ranks[n], B.group.ranks[n]
        mid = la.kron(la.kron(la.eye(ra), al.swap_matrix(rb, ra)), la.eye(rb))
        assert la.equal(AB.mult[n], la.mm(la.kron(A.mult[n], B.mult[n]), mid))


def test_noncommutative_ring_detected():
    R = al.gamma_ring(LIB["tensor-xy"].truncate(1))
    assert not R.is_commutative()


@pytest.mark.parametrize("name", ["Z", "sqz-disk", "sqz-torsion", "tensor-disk12"])
def test_gamma_ring_level_zero_is_ring(name):
    R = LIB[name]
    G = al.gamma_ring(R)
    # (ΓR)_0 = R_0 as a ring
    assert la.equal(G.mult[0], R.mu(0, 0))


@pytest.mark.parametrize("name", sorted(LIB))
def test_kappa_products(name):
    R = LIB[name]
    G = al.gamma_ring(R)
    for a, b in product(range(R.rank(1)), repeat=2):
        r, s = la.zeros(R.rank(1), 1), la.zeros(R.rank(1), 1)
        r[a, 0], s[b, 0] = 1, 1
        lhs = al.ring_product(G, 1, al.kappa(R, r), al.kappa(R, s))
        assert la.equal(lhs, al.kappa(R, R.multiply(r, 1, la.mm(R.complex.d(1), s), 0)))


def test_kappa_rejects_wrong_shape():
    with pytest.raises(ch.ValidationError, match="R_1"):
        al.kappa(LIB["tensor-xy"], [1, 0])


@given(seed=seeds)
def test_counit_square_shortcut_matches_literal(seed):
    g = gen.rng(seed)
    C, D = gen.random_gamma_sized(g, 3, rank_cap=2), gen.random_gamma_sized(g, 3, rank_cap=2)
    assert al.counit_square_lhs(C, D) == al.counit_square_literal(C, D)


@pytest.mark.parametrize("name", ["Z", "sqz-disk", "sqz-torsion", "sqz-sphere1", "tensor-sphere1"])
def test_counit_is_dga_isomorphism(name):
    reps = al.counit_ring_check(LIB[name])
    assert all(r.ok for r in reps), [r.detail for r in reps]


def test_counit_is_dga_map_into_ring():
    R = LIB["sqz-disk"]
    NG = al.normalize_ring(al.gamma_ring(R))
    assert al.is_dga_map(dk.counit(R.complex), NG, R)
    assert not al.is_dga_map(ch.zero_map(NG.complex, R.complex), NG, R)


def test_eta_not_monoidal_witness():
    rep = al.eta_not_monoidal_witness()
    assert rep.ok, rep.detail
    assert rep.data["level1_rank"] > 0
