import json
import subprocess
import sys

import pytest

from dkforge import algebra as al
from dkforge import chain as ch
from dkforge import enriched as en
from dkforge import serialize as io
from dkforge import simplicial as sp
from dkforge.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else io.dumps(obj))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_of_sphere(write, capsys):
    code, out, _ = run(capsys, "homology", "--in", write("z1.json", ch.sphere(1, 3)))
    assert code == 0
    assert "H_1 = Z" in out.splitlines()


def test_homology_of_simplicial_input_uses_normalization(write, capsys):
    code, out, _ = run(capsys, "homology", "--in", write("d2.json", sp.standard_simplex(2, 3)))
    assert code == 0 and out.splitlines() == ["H_0 = Z", "H_1 = 0", "H_2 = 0"]


def test_normalize_interval(write, capsys):
    code, out, _ = run(capsys, "normalize", "--in", write("d1.json", sp.standard_simplex(1, 3)), "--truncation", "1")
    assert code == 0
    d = json.loads(out)
    assert d["ranks"] == [2, 1] and d["diffs"] == [[[-1], [1]]]


def test_gamma_of_sphere(write, capsys, tmp_path):
    out_path = tmp_path / "g.json"
    code, _, _ = run(capsys, "gamma", "--in", write("z1.json", ch.sphere(1, 3)), "--out", str(out_path))
    assert code == 0
    G = io.loads(out_path.read_text())
    assert G.ranks == (0, 1, 2, 3)


def test_shuffle_aw_tensor(write, capsys):
    a = write("a.json", sp.standard_simplex(1, 2))
    for verb, kind in (("shuffle", "chain-map"), ("aw", "chain-map"), ("tensor", "simplicial")):
        code, out, _ = run(capsys, verb, "--in", a, "--in", a)
        assert code == 0 and io.kind(json.loads(out)) == kind
    z = write("z.json", ch.sphere(1, 2))
    code, out, _ = run(capsys, "tensor", "--in", z, "--in", z)
    assert code == 0 and json.loads(out)["ranks"] == [0, 0, 1]


def test_ring_verbs_roundtrip(write, capsys, tmp_path):
    R = al.library(2)["sqz-disk"]
    code, out, _ = run(capsys, "gamma-ring", "--in", write("r.json", R))
    assert code == 0 and io.kind(json.loads(out)) == "simplicial-ring"
    code, out, _ = run(capsys, "normalize-ring", "--in", write("g.json", out))
    assert code == 0
    assert io.loads(out).complex.ranks == R.complex.ranks


def test_graph_tensor_verb(write, capsys):
    G = en.IGraph(["a", "b"], {(i, j): ch.sphere(0, 2) for i in "ab" for j in "ab"})
    code, out, _ = run(capsys, "graph-tensor", "--in", write("g.json", G), "--in", write("h.json", G))
    assert code == 0
    assert json.loads(out)["entries"]["a,b"]["ranks"] == [2, 0, 0]


def test_invalid_input_exits_2(write, capsys):
    bad = write("bad.json", '{"ranks":[1,1,1],"diffs":[[[1]],[[1]]]}')
    code, _, err = run(capsys, "homology", "--in", bad)
    assert code == 2 and "degree 2" in err


def test_wrong_arity_and_type_exit_2(write, capsys):
    z = write("z.json", ch.sphere(1, 2))
    assert run(capsys, "shuffle", "--in", z)[0] == 2
    assert run(capsys, "normalize", "--in", z)[0] == 2
    assert run(capsys, "homology", "--in", z, "--truncation", "9")[0] == 2
    assert run(capsys, "homology", "--in", "/nonexistent.json")[0] == 2


def test_unknown_suite_exits_2(capsys):
    code, _, err = run(capsys, "check", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_unknown_verb_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_check_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "check", "--suite", "model-predicates", "--seed", "3")
    code2, out2, _ = run(capsys, "check", "--suite", "model-predicates", "--seed", "3")
    assert code1 == 0 and out1 == out2
    report = json.loads(out1)
    assert report["passed"] and report["rng"] and report["seed"] == 3


def test_console_script_entry_point(tmp_path):
    path = tmp_path / "z.json"
    path.write_text(io.dumps(ch.sphere(0, 2)))
    res = subprocess.run([sys.executable, "-m", "dkforge.cli", "homology", "--in", str(path)], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "H_0 = Z"
