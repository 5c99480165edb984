from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import generators as gen
from dkforge import linalg as la
from dkforge import simplicial as sp
from dkforge.chain import ValidationError

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_standard_simplex_ranks(n):
    A = sp.standard_simplex(n, 4)
    # monotone maps [k] -> [n] are multisets of size k+1 from n+1 values
    assert A.ranks == tuple(comb(n + k + 1, k + 1) for k in range(5))
    A.validate()


def test_face_identity_violation_names_indices():
    A = sp.standard_simplex(1, 2)
    faces = [list(level) for level in A.faces]
    faces[2][0], faces[2][1] = faces[2][1], faces[2][0]
    with pytest.raises(ValidationError, match=r"d_\d d_\d .*level 2"):
        sp.SimplicialAbGroup(A.ranks, faces, A.degens)


def test_mixed_identity_violation_names_indices():
    A = sp.standard_simplex(1, 2)
    degens = [list(level) for level in A.degens]
    degens[0][0] = la.scale(degens[0][0], 2)
    with pytest.raises(ValidationError, match=r"i=\d, j=\d, level \d"):
        sp.SimplicialAbGroup(A.ranks, A.faces, degens)


def test_constant_has_identity_operators():
    A = sp.constant(3, 2)
    assert all(la.equal(A.d(n, i), la.eye(2)) for n in range(1, 4) for i in range(n + 1))


@given(seed=seeds)
def test_operator_composition_is_functorial(seed):
    g = gen.rng(seed)
    A = gen.random_simplicial(g, 3)
    # θ = s_0 then d_1 at level 1 -> 1 is the identity; d_0 d_2 = d_1 d_0 on level 2
    for n in range(1, 3):
        assert la.equal(la.mm(A.d(n + 1, n), A.s(n, n)), la.eye(A.ranks[n]))
    assert la.equal(A.operator((0, 1), 1), la.eye(A.ranks[1]))
    assert la.equal(A.face(2, (0, 2)), A.d(2, 1))


@given(seed=seeds)
def test_tensor_symmetry_involution(seed):
    g = gen.rng(seed)
    A, B = gen.random_simplicial(g, 3, rank_cap=6), gen.random_simplicial(g, 3, rank_cap=6)
    AB = sp.tensor(A, B)
    assert AB.ranks == tuple(a * b for a, b in zip(A.ranks, B.ranks))
    assert sp.symmetry(B, A) @ sp.symmetry(A, B) == sp.identity(AB)


@given(seed=seeds)
def test_random_maps_commute_with_operators(seed):
    g = gen.rng(seed)
    A, B = gen.random_simplicial(g, 3, rank_cap=6), gen.random_simplicial(g, 3, rank_cap=6)
    f = gen.random_simplicial_map(g, A, B)
    for n in range(1, 4):
        for i in range(n + 1):
            assert la.equal(la.mm(f[n - 1], A.d(n, i)), la.mm(B.d(n, i), f[n]))


def test_truncate_and_equality():
    A = sp.standard_simplex(2, 4)
    assert A.truncate(2) == sp.standard_simplex(2, 2)
    assert not (A.truncate(2) == sp.standard_simplex(1, 2))


def test_fibration_examples():
    D1, D0 = sp.standard_simplex(1, 3), sp.standard_simplex(0, 3)
    collapse = sp.SimplicialMap(D1, D0, [la.imat([[1] * D1.ranks[n]]) for n in range(4)])
    assert sp.is_fibration(collapse)
    col = lambda n: la.imat([[1 if a == (0,) * (n + 1) else 0] for a in sp.monotone_maps(n, 1)])
    vertex = sp.SimplicialMap(D0, D1, [col(n) for n in range(4)])
    assert not sp.is_fibration(vertex)
    assert sp.is_fibration(sp.zero_map(D1, sp.zero_group(3)))
