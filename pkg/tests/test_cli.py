import json

import pytest

from cnarg.cli import main

ADF = 'arg(a). arg(b). arg(c). arg(d). ac(a,"T"). ac(b,"b"). ac(c,"a & b"). ac(d,"~b").\n'


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_extensions_self_attack_both(write, capsys):
    path = write("self.tgf", "x\n#\nx x\n")
    code, out, _ = run(capsys, "extensions", "-i", path, "-e", "both", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["extensions"] == [[]] and report["divergences"] == []
    assert report["labellings"] == [{"x": "und"}]


def test_extensions_stable_mutual(write, capsys):
    path = write("m.apx", "arg(a). arg(b). att(a,b). att(b,a).")
    code, out, _ = run(capsys, "extensions", "-i", path, "-s", "stable", "--json")
    assert code == 0 and json.loads(out)["extensions"] == [["a"], ["b"]]


def test_extensions_grounded_chain(write, capsys):
    path = write("c.tgf", "a\nb\nc\n#\na b\nb c\n")
    code, out, _ = run(capsys, "extensions", "-i", path, "-s", "grounded", "-e", "both", "--json")
    assert code == 0 and json.loads(out)["extensions"] == [["a", "c"]]


def test_extensions_human_output(write, capsys):
    path = write("c.tgf", "a\nb\n#\na b\n")
    code, out, _ = run(capsys, "extensions", "-i", path)
    assert code == 0 and "in: a | out: b | und: -" in out


def test_models_adf(write, capsys):
    code, out, _ = run(capsys, "models", "-i", write("adf.apx", ADF), "--json")
    models = [m["model"] for m in json.loads(out)]
    assert code == 0
    assert {"a": "in", "b": "in", "c": "in", "d": "out"} in models


@pytest.mark.parametrize("tgf", ["x\ny\nz\n#\nx y\n", "x\ny\nz\n#\nx y\ny z\n",
                                 "x\ny\nz\n#\nx y\ny z\nz y\n"])
def test_models_three_networks_one_model(write, capsys, tgf):
    code, out, _ = run(capsys, "models", "-i", write("n.tgf", tgf), "--json")
    assert json.loads(out) == [{"model": {"x": "in", "y": "out", "z": "in"}}]


def test_models_single_argument(write, capsys):
    code, out, _ = run(capsys, "models", "-i", write("s.apx", "arg(a)."), "--json")
    assert json.loads(out) == [{"model": {"a": "in"}}]


def test_reduce_joint_with_provenance(write, capsys, tmp_path):
    path = write("j.apx", "arg(a). arg(b). arg(x). jatt([a,b],x).")
    side = tmp_path / "prov.json"
    code, out, _ = run(capsys, "reduce", "-i", path, "--kind", "joint", "--provenance", str(side))
    assert code == 0
    assert "att(x__G1,x)." in out and "att(a,e__x__G1__a)." in out
    assert json.loads(side.read_text())["fresh"]["x__G1"]["group"] == ["a", "b"]


def test_reduce_higher(write, capsys):
    path = write("h.apx", "arg(z). arg(x). arg(y). natt(al,z,x). hatt(be,y,al).")
    code, out, _ = run(capsys, "reduce", "-i", path, "--kind", "higher")
    assert "jatt([z,al],x)." in out and "jatt([y,be],al)." in out


def test_reduce_identity(write, capsys):
    path = write("i.apx", "arg(a). arg(b).")
    code, out, _ = run(capsys, "reduce", "-i", path, "--kind", "joint")
    assert out == "arg(a).\narg(b).\n"


def test_cnn_actions(capsys):
    assert run(capsys, "cnn", "N (N p) <-> p")[1].strip() == "valid"
    code, out, _ = run(capsys, "cnn", "p | (~p & N p)", "--action", "countermodel",
                       "--mode", "world1", "--json")
    assert json.loads(out) == {"countermodel": {"p": [0, 1]}, "world": 1}
    assert run(capsys, "cnn", "N(a & b)", "--action", "normalize")[1].strip() == "(N a | N b)"


def test_entails(write, capsys):
    chain = write("c.tgf", "x\ny\nz\n#\nx y\ny z\n")
    assert json.loads(run(capsys, "entails", "-i", chain, "x <-> z", "--json")[1])["entails"]
    mutual = write("m.apx", "arg(a). arg(b). att(a,b). att(b,a).")
    res = json.loads(run(capsys, "entails", "-i", mutual, "a", "--json")[1])
    assert res == {"entails": False, "countermodel": {"a": "out", "b": "in"}}
    assert json.loads(run(capsys, "entails", "-i", mutual, "T", "--json")[1])["entails"]


def test_fuzz_deterministic(capsys):
    code, out1, _ = run(capsys, "fuzz", "--seed", "3", "--count", "30", "--json")
    _, out2, _ = run(capsys, "fuzz", "--seed", "3", "--count", "30", "--json")
    a, b = json.loads(out1), json.loads(out2)
    assert code == 0 and a["divergences"] == [] and a["divergences"] == b["divergences"]


def test_exit_codes(write, capsys):
    assert run(capsys, "models", "-i", write("bad.apx", "arg(a). att(a,b)."))[0] == 2
    assert run(capsys, "models", "-i", "/does/not/exist.apx")[0] == 2
    assert run(capsys, "cnn", "a &")[0] == 2
    big = write("big.apx", "".join(f"arg(a{i}). " for i in range(25)))
    assert run(capsys, "models", "-i", big)[0] == 3
    assert run(capsys, "models", "-i", big, "--max-atoms", "30")[0] == 0
    assert run(capsys, "extensions", "-i", write("adf.apx", ADF), "-e", "oracle")[0] == 2
