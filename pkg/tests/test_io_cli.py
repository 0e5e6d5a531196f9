import json
import os
import subprocess
import sys

import numpy as np
import pytest

from catkit import cli, io, models
from catkit.category import check_category
from catkit.errors import InputError
from catkit.monoidal import check_smcc

PULLBACK_GOLDEN = """\
      1 -- p0=11 --> 3
      |              |
p1=12 |              | f=16
      v              v
      4 -- g=17 ---> 5
"""


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def p(corpus, name):
    return os.path.join(corpus, name)


@pytest.fixture(scope="module")
def finset_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "finset4.json"
    assert cli.main(["gen", "finset", "--max", "4", "-o", str(path)]) == 0
    return str(path)


def test_category_round_trip(div12, tmp_path):
    path = tmp_path / "c.json"
    io.write_json(io.category_to_dict(div12), path)
    back = io.load_category(path)
    assert back.same_tables(div12)


def test_smcc_round_trip(bool_smcc, tmp_path):
    path = tmp_path / "s.json"
    io.write_json(io.smcc_to_dict(bool_smcc), path)
    back = io.load_smcc(path)
    assert np.array_equal(back.monoidal.tensor, bool_smcc.monoidal.tensor)
    assert back.closed.phi == bool_smcc.closed.phi and back.braiding.gamma == bool_smcc.braiding.gamma
    assert check_smcc(back).verdict


def test_unknown_and_missing_keys(z2):
    d = io.category_to_dict(z2)
    with pytest.raises(InputError, match="unknown keys"):
        io.category_from_dict({**d, "labels": []})
    d.pop("comp")
    with pytest.raises(InputError, match="missing keys"):
        io.category_from_dict(d)
    with pytest.raises(InputError):
        io.environment_from_dict({"atoms": {"a": 0}, "bottom": "a", "extra": 1})
    with pytest.raises(InputError):
        io.witness_from_dict({"pullback": {"p0": 1}})


def test_functor_and_nattrans_files(z2, tmp_path):
    io.write_json(io.category_to_dict(z2), tmp_path / "z2.json")
    io.write_json({"source": "z2.json", "target": "z2.json", "map": [0, 1, 2]}, tmp_path / "id.json")
    io.write_json({"F": "id.json", "G": "id.json", "components": {"0": 1}}, tmp_path / "t.json")
    io.write_json({"F": "id.json", "G": "id.json", "eta": [1, 0, 2]}, tmp_path / "t2.json")
    t = io.load_nattrans(tmp_path / "t.json")
    assert list(t.eta) == [1, 0, 2]
    assert list(io.load_nattrans(tmp_path / "t2.json").eta) == [1, 0, 2]


def test_check_exit_codes(capsys, corpus, tmp_path):
    assert run(capsys, "check", "category", p(corpus, "z2.json"))[0] == 0
    assert run(capsys, "check", "smcc", p(corpus, "bool4.json"))[0] == 0
    assert run(capsys, "check", "smcc", p(corpus, "z3.json"))[0] == 0
    assert run(capsys, "check", "monoidal", p(corpus, "bool4.json"))[0] == 0
    assert run(capsys, "check", "monoidal", p(corpus, "div12.json"))[0] == 2
    code, out, _ = run(capsys, "check", "category", p(corpus, "broken.json"))
    assert code == 1 and "S3 violated at (1,1)" in out
    code, _, err = run(capsys, "check", "category", p(corpus, "missing.json"))
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "check", "category", bad)[0] == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["check", "category"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["check", "category", "--bogus", p(corpus, "z2.json")])


def test_check_functor_cli(capsys, z2, tmp_path):
    io.write_json(io.category_to_dict(z2), tmp_path / "z2.json")
    io.write_json({"source": "z2.json", "target": "z2.json", "map": [2, 1, 2]}, tmp_path / "bad.json")
    code, out, _ = run(capsys, "check", "functor", tmp_path / "bad.json")
    assert code == 1 and "F1 violated at (0)" in out


def test_json_output(capsys, corpus):
    code, out, _ = run(capsys, "--json", "check", "category", p(corpus, "broken.json"))
    data = json.loads(out)
    assert code == 1 and data["verdict"] is False
    assert data["violations"] == [{"name": "S3", "witness": [1, 1], "detail": data["violations"][0]["detail"]}]
    code, out, _ = run(capsys, "--json", "analyze", p(corpus, "trivial.json"), "--ladder")
    assert json.loads(out)["ladder"]["is_topos"] is True


def test_analyze(capsys, corpus, finset_file):
    code, out, _ = run(capsys, "analyze", p(corpus, "trivial.json"), "--ladder")
    assert code == 0 and "is_topos: true" in out
    code, out, _ = run(capsys, "analyze", finset_file, "--ladder")
    assert "terminal: true (object 1)" in out
    assert "binary_products: false (failing pair (2,3))" in out
    assert "subobject_classifier: true (Ω = object 2)" in out
    assert "is_topos: false" in out
    code, out, _ = run(capsys, "analyze", finset_file, "--monos-equalizers")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("all ") and first.endswith(" monos are equalizers")
    code, out, _ = run(capsys, "analyze", p(corpus, "broken.json"))
    assert code == 1


def test_imll_cli(capsys, corpus):
    code, out, _ = run(capsys, "imll", "compile", p(corpus, "dneg.proof"))
    assert code == 0 and "term: (curry " in out
    code, out, _ = run(capsys, "imll", "eval", p(corpus, "dneg.proof"), "--model", p(corpus, "bool4.json"),
                       "--env", p(corpus, "env_bool4.json"))
    assert code == 0 and "dom_cod_check: OK" in out
    code, out, _ = run(capsys, "imll", "eval", p(corpus, "ax.proof"), "--model", p(corpus, "z3.json"),
                       "--env", p(corpus, "env_z3.json"), "--expect", 1)
    assert code == 0 and "expect 1: match" in out
    code, out, _ = run(capsys, "imll", "eval", p(corpus, "ax.proof"), "--model", p(corpus, "z3.json"),
                       "--env", p(corpus, "env_z3.json"), "--expect", 2)
    assert code == 1
    assert run(capsys, "imll", "eval", p(corpus, "ax.proof"))[0] == 2


def test_imll_cli_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.proof"
    bad.write_text("(ax a")
    code, _, err = run(capsys, "imll", "compile", bad)
    assert code == 2 and "line 1" in err


def test_render(capsys, corpus):
    code, out, _ = run(capsys, "render", p(corpus, "pullback_div12.json"))
    assert code == 0 and out == PULLBACK_GOLDEN
    again = run(capsys, "render", p(corpus, "pullback_div12.json"))[1]
    assert again == out
    code, out, _ = run(capsys, "render", p(corpus, "product_div12.json"), "--kind", "product")
    assert code == 0 and "proj1=11" in out and "proj2=12" in out
    code, out, _ = run(capsys, "render", p(corpus, "pullback_bare.json"))
    assert "P -- p0=11 --> X" in out
    assert run(capsys, "render", p(corpus, "pullback_div12.json"), "--kind", "product")[0] == 2


def test_render_byte_identical_across_processes(corpus):
    cmd = [sys.executable, "-m", "catkit", "render", p(corpus, "pullback_div12.json")]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert outs == {PULLBACK_GOLDEN.encode()}


def test_gen(capsys, tmp_path):
    for argv, checker in [(["gen", "poset", "--divisors", "12"], "category"),
                          (["gen", "heyting", "--bool", "2"], "smcc"),
                          (["gen", "group", "--n", "3"], "smcc"),
                          (["gen", "finset", "--max", "2"], "category")]:
        path = tmp_path / f"{argv[1]}.json"
        assert cli.main(argv + ["-o", str(path)]) == 0
        assert cli.main(["check", checker, str(path)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "gen", "poset", "--divisors", "6")
    assert check_category(io.category_from_dict(json.loads(out))).verdict


def test_size_guard(capsys, finset_file, monkeypatch):
    code, _, err = run(capsys, "--max-size", "100", "analyze", finset_file)
    assert code == 2 and "limit is 100" in err
    monkeypatch.setenv("CATKIT_MAX_SIZE", "50")
    code, _, err = run(capsys, "gen", "finset", "--max", "3")
    assert code == 2 and "limit is 50" in err
    assert run(capsys, "--max-size", "0", "gen", "group")[0] == 2
