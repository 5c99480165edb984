import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import algebra as al
from dkforge import chain as ch
from dkforge import enriched as en
from dkforge import generators as gen
from dkforge import linalg as la

seeds = st.integers(0, 2**32 - 1)
T = 3
LIB = al.library(T)


def random_graph(g, objects, tag):
    G = en.IGraph(objects, {(i, j): gen.random_complex(g, T, rank_cap=2) for i in objects for j in objects})
    G.labels = en._base_labels(G, tag)
    return G


@given(seed=seeds, size=st.integers(1, 3))
def test_graph_tensor_unit(seed, size):
    g = gen.rng(seed)
    objects = [f"o{k}" for k in range(size)]
    G = random_graph(g, objects, "G")
    U = en.unit_graph(objects, T)
    for X in (en.graph_tensor(U, G), en.graph_tensor(G, U)):
        assert en.is_graph_iso(X, G, en.reindexing(X, G))


@given(seed=seeds, size=st.integers(1, 2))
def test_graph_tensor_associative(seed, size):
    g = gen.rng(seed)
    objects = [f"o{k}" for k in range(size)]
    G, H, K = (random_graph(g, objects, t) for t in "GHK")
    L = en.graph_tensor(en.graph_tensor(G, H), K)
    R = en.graph_tensor(G, en.graph_tensor(H, K))
    assert en.is_graph_iso(L, R, en.reindexing(L, R))


def test_graph_tensor_entry_ranks():
    g = gen.rng(7)
    objects = ["a", "b"]
    G, H = random_graph(g, objects, "G"), random_graph(g, objects, "H")
    GH = en.graph_tensor(G, H)
    for i in objects:
        for j in objects:
            for n in range(T + 1):
                expected = sum(G[(k, j)].rank(p) * H[(i, k)].rank(n - p) for k in objects for p in range(n + 1))
                assert GH[(i, j)].rank(n) == expected


def test_graph_requires_all_entries():
    with pytest.raises(ch.ValidationError, match="missing"):
        en.IGraph(["a", "b"], {("a", "a"): ch.sphere(0, 2)})


def test_reindexing_rejects_different_graphs():
    G = en.IGraph(["a"], {("a", "a"): ch.sphere(0, 2)})
    H = en.IGraph(["a"], {("a", "a"): ch.sphere(1, 2)})
    with pytest.raises(ch.ValidationError):
        en.reindexing(G, H)


@pytest.mark.parametrize("name", ["Z", "sqz-disk", "tensor-disk12"])
def test_single_object_category_is_monoid(name):
    R = LIB[name]
    O = en.category_from_monoid(R)
    assert all(r.ok for r in en.validate_category(O))
    assert en.monoid_from_category(O) == R


@pytest.mark.parametrize("objects", [["a"], ["a", "b"], ["a", "b", "c"]])
def test_preorder_category_and_yoneda(objects):
    O = en.preorder_category(LIB["tensor-disk12"], objects)
    assert all(r.ok for r in en.validate_category(O))
    for i in objects:
        for j in objects:
            rep = en.yoneda_check(O, j, en.free_module(O, i))
            assert rep.ok, rep.detail


def test_preorder_must_be_transitive():
    with pytest.raises(ch.ValidationError, match="transitive"):
        en.preorder_category(LIB["Z"], ["a", "b", "c"], {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")})


def test_broken_composition_is_reported():
    R = LIB["sqz-disk"]
    mult = dict(R.mult)
    mult[(0, 1)] = la.scale(mult[(0, 1)], 2)
    O = en.ICategory(en.IGraph(["*"], {("*", "*"): R.complex}), {("*", "*", "*"): mult}, {"*": R.unit}, check=False)
    assert not all(r.ok for r in en.validate_category(O))


def collapse_functor(objects):
    R, Z = LIB["tensor-disk12"], al.integers(T)
    first = la.imat([[1 if w == () else 0 for w in R.words[0]]])
    f = ch.ChainMap(R.complex, Z.complex, [first] + [la.zeros(Z.rank(n), R.rank(n)) for n in range(1, T + 1)])
    return en.entrywise_map(en.preorder_category(R, objects), en.preorder_category(Z, objects), f)


@pytest.mark.parametrize("objects", [["a"], ["a", "b"], ["a", "b", "c"]])
def test_scalar_extension_along_collapse(objects):
    Psi = collapse_functor(objects)
    assert Psi.is_pointwise_quasi_iso()
    for j in objects:
        assert en.representable_comparison(Psi, j).ok
        assert en.unit_is_pointwise_quasi_iso(Psi, en.free_module(Psi.source, j)).ok
        assert en.triangle_identities(Psi, j) == (True, True)


def test_extension_along_identity():
    O = en.preorder_category(LIB["sqz-torsion"], ["a", "b"])
    Id = en.entrywise_map(O, O, ch.identity_map(LIB["sqz-torsion"].complex))
    for j in O.objects:
        assert en.representable_comparison(Id, j).ok
        M = en.free_module(O, j)
        E = en.extend(Id, M)
        for i in O.objects:
            assert ch.homology(E[i]) == ch.homology(M[i])


def test_restricted_module_validates():
    Psi = collapse_functor(["a", "b"])
    N = en.free_module(Psi.target, "b")
    en.restrict(Psi, N).validate()
