import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import algebra as al
from dkforge import chain as ch
from dkforge import doldkan as dk
from dkforge import generators as gen
from dkforge import linalg as la
from dkforge import modules as md
from dkforge import simplicial as sp

seeds = st.integers(0, 2**32 - 1)
LIB = al.library(3)
SMALL = ["Z", "sqz-disk", "sqz-torsion", "sqz-sphere1", "tensor-sphere1", "tensor-disk12"]


def groups(P):
    return [str(P.group(n)) for n in range(P.T + 1)]


@pytest.mark.parametrize("name", SMALL)
def test_regular_and_free_modules_validate(name):
    R = LIB[name]
    md.regular_module(R).validate()
    md.regular_left_module(R).validate()
    md.free_dg_module(R, ch.sphere(1, 3)).validate()
    md.free_left_module(R, ch.sphere(0, 3)).validate()


def test_module_axiom_violation_is_reported():
    R = LIB["sqz-disk"]
    M = md.regular_module(R)
    act = dict(M.act)
    act[(0, 0)] = la.scale(act[(0, 0)], 2)
    with pytest.raises(ch.ValidationError):
        md.DGModule(R, R.complex, act)


@pytest.mark.parametrize("name", SMALL)
def test_ring_over_itself(name):
    R = LIB[name]
    P = md.relative_tensor_dg(md.regular_module(R), md.regular_left_module(R))
    # R ⊗_R R ≅ R, so the presented groups are the free groups of R
    assert groups(P) == [str(la.cokernel(la.zeros(R.rank(n), 0))) for n in range(R.T + 1)]


def test_free_over_free():
    R = LIB["sqz-torsion"]
    X, Y = ch.sphere(1, 3), ch.sphere(0, 3)
    P = md.relative_tensor_dg(md.free_dg_module(R, X), md.free_left_module(R, Y))
    # (X ⊗ R) ⊗_R (R ⊗ Y) ≅ X ⊗ R ⊗ Y
    XRY = ch.tensor(ch.tensor(X, R.complex), Y)
    assert groups(P) == [str(la.cokernel(la.zeros(XRY.rank(n), 0))) for n in range(4)]
    assert ch.homology(P) == ch.homology(XRY)


def test_relative_tensor_requires_matching_rings():
    with pytest.raises(ch.ValidationError):
        md.relative_tensor_dg(md.regular_module(LIB["sqz-disk"]), md.regular_left_module(LIB["sqz-torsion"]))


@pytest.mark.parametrize("name", SMALL)
def test_triangle_identities_for_identity(name):
    R = LIB[name]
    f = ch.identity_map(R.complex)
    assert md.triangle_identities(f, md.free_dg_module(R, ch.sphere(0, 3)), md.regular_module(R)) == (True, True)


def collapse(R, Z):
    first = la.imat([[1 if w == () else 0 for w in R.words[0]]])
    return ch.ChainMap(R.complex, Z.complex, [first] + [la.zeros(Z.rank(n), R.rank(n)) for n in range(1, 4)])


def test_extension_along_quasi_iso():
    R, Z = LIB["tensor-disk12"], al.integers(3)
    f = collapse(R, Z)
    assert al.is_dga_map(f, R, Z) and ch.is_quasi_iso(f)
    rep = md.quillen_invariance_spot_check(f, [md.regular_module(R), md.free_dg_module(R, ch.sphere(1, 3))], Z)
    assert rep.ok, rep.detail
    assert md.triangle_identities(f, md.regular_module(R), md.regular_module(Z)) == (True, True)


def test_restriction_needs_dga_map():
    R = LIB["sqz-disk"]
    with pytest.raises(ch.ValidationError):
        md.restrict_scalars(ch.zero_map(R.complex, R.complex), md.regular_module(R), R)


def test_extension_along_counit_recovers_ring():
    R = LIB["sqz-disk"]
    NG = al.normalize_ring(al.gamma_ring(R))
    E = md.extend_scalars(dk.counit(R.complex), md.regular_module(NG), R)
    assert groups(E.complex) == [str(la.cokernel(la.zeros(R.rank(n), 0))) for n in range(4)]


@given(seed=seeds)
def test_simplicial_modules_validate(seed):
    g = gen.rng(seed)
    A = al.twist_ring(al.function_ring(0, 3), [gen.random_unimodular(g, r) for r in al.function_ring(0, 3).group.ranks])
    md.regular_simplicial(A).validate()
    md.free_simplicial_module(A, sp.standard_simplex(1, 3)).validate()
    md.free_left_simplicial(A, sp.constant(3, 2)).validate()


def test_nabla_over_constant_integers_is_the_shuffle():
    A = al.constant_ring(3)
    X, Y = sp.standard_simplex(1, 3), sp.standard_simplex(0, 3)
    M, L = md.free_simplicial_module(A, X), md.free_left_simplicial(A, Y)
    rel = md.relative_tensor_simplicial(M, L)
    assert all(la.is_zero(K) for K in rel.relations)
    res = md.nabla_A(M, L)
    assert res.square_ok and res.descends
    Nq = dk.normalize_map(rel.quotient)
    assert all(la.is_unimodular(m) for m in Nq.components)
    nab = dk.normalized_shuffle(X, Y)
    assert all(la.equal(res.map[n], la.mm(Nq[n], nab[n])) for n in range(4))


@given(seed=seeds)
def test_nabla_square_commutes(seed):
    g = gen.rng(seed)
    A = al.function_ring(int(g.integers(0, 2)), 3)
    if g.random() < 0.5:
        A = al.twist_ring(A, [gen.random_unimodular(g, r) for r in A.group.ranks])
    X = [sp.constant(3, 1), sp.standard_simplex(0, 3), sp.constant(3, 2)][int(g.integers(0, 3))]
    res = md.nabla_A(md.free_simplicial_module(A, X), md.free_left_simplicial(A, sp.constant(3, 1)))
    assert res.square_ok and res.descends
    res.map.validate()


def test_normalized_regular_module_is_normalized_ring():
    A = al.function_ring(1, 3)
    NA = al.normalize_ring(A)
    NM = md.normalize_module(md.regular_simplicial(A), NA)
    assert all(la.equal(NM.act[k], NA.mult[k]) for k in NA.mult)
