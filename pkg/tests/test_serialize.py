import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkforge import algebra as al
from dkforge import chain as ch
from dkforge import enriched as en
from dkforge import generators as gen
from dkforge import modules as md
from dkforge import serialize as io
from dkforge import simplicial as sp

seeds = st.integers(0, 2**32 - 1)


def roundtrip(obj, rings=None):
    text = io.dumps(obj)
    back = io.loads(text, rings)
    assert io.dumps(back) == text
    return back


@given(seed=seeds)
def test_complex_and_simplicial_roundtrip(seed):
    g = gen.rng(seed)
    C = gen.random_complex(g, 3)
    assert roundtrip(C) == C
    A = gen.random_simplicial(g, 3)
    assert roundtrip(A) == A
    f = gen.random_chain_map(g, C, gen.random_complex(g, 3))
    assert roundtrip(f) == f


def test_serialize_of_parse_is_canonical():
    text = '{ "truncation": 1, "diffs": [[[1]]],\n  "ranks": [1, 1] }'
    assert io.dumps(io.loads(text)) == io.canonicalize(text)
    assert io.canonicalize(text) == '{"diffs":[[[1]]],"ranks":[1,1],"truncation":1}'


@pytest.mark.parametrize("name", ["Z", "sqz-torsion", "tensor-xy"])
def test_dga_roundtrip(name):
    R = al.library(3)[name]
    assert roundtrip(R) == R


def test_simplicial_ring_and_module_roundtrip():
    A = al.function_ring(1, 2)
    B = roundtrip(A)
    assert io.kind(io.to_payload(B)) == "simplicial-ring"
    M = md.free_simplicial_module(A, sp.standard_simplex(1, 2))
    rings = {io.content_hash(io.to_payload(A)): A}
    roundtrip(M, rings)


def test_dg_module_and_presented_roundtrip():
    R = al.library(2)["sqz-torsion"]
    rings = {io.content_hash(io.to_payload(R)): R}
    roundtrip(md.free_dg_module(R, ch.sphere(1, 2)), rings)
    P = md.relative_tensor_dg(md.regular_module(R), md.regular_left_module(R))
    back = roundtrip(P)
    assert isinstance(back, ch.PresentedComplex)


def test_module_without_ring_is_rejected():
    R = al.library(2)["sqz-disk"]
    text = io.dumps(md.regular_module(R))
    with pytest.raises(io.SchemaError, match="ring"):
        io.loads(text)


def test_graph_and_category_roundtrip():
    O = en.preorder_category(al.library(2)["sqz-disk"], ["a", "b"])
    back = roundtrip(O)
    assert isinstance(back, en.ICategory)
    G = roundtrip(O.graph)
    assert G.ranks() == O.graph.ranks()


def test_rejects_nonzero_square_naming_degree():
    text = json.dumps({"ranks": [1, 1, 1], "diffs": [[[1]], [[1]]]})
    with pytest.raises(ch.ValidationError, match="degree 2"):
        io.loads(text)


def test_rejects_simplicial_identity_naming_indices():
    payload = io.to_payload(sp.standard_simplex(1, 2))
    payload["faces"][2][0], payload["faces"][2][1] = payload["faces"][2][1], payload["faces"][2][0]
    with pytest.raises(ch.ValidationError, match=r"d_0 d_2 != d_1 d_0 at level 2|d_\d d_\d .* level 2"):
        io.from_payload(payload)


@pytest.mark.parametrize(
    "text, message",
    [
        ("[1, 2]", "JSON object"),
        ('{"foo": 1}', "unrecognized"),
        ("not json", "not JSON"),
        ('{"ranks": [1], "diffs": [], "truncation": 3}', "truncation"),
        ('{"ranks": [1, 1], "diffs": [[[1, 2]]]}', "shape|rows|columns|expected"),
    ],
)
def test_schema_errors(text, message):
    with pytest.raises((io.SchemaError, ch.ValidationError, ValueError), match=message):
        io.loads(text)


def test_content_hash_is_stable():
    R = al.library(2)["Z"]
    h = io.content_hash(io.to_payload(R))
    assert h == io.content_hash(json.loads(io.dumps(R)))
    assert len(h) == 64
