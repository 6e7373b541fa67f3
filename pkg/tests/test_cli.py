import json
from importlib import resources

import pytest

from effectalg.cli import main
from effectalg.efaformat import load


@pytest.fixture
def data(tmp_path):
    for name in ("r6", "l18", "gen18", "chain2", "boolean2"):
        src = resources.files("effectalg").joinpath("data", f"{name}.efa")
        (tmp_path / f"{name}.efa").write_text(src.read_text(encoding="utf-8"), encoding="utf-8")
    return tmp_path


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_ok_and_invalid(data, capsys):
    assert run(capsys, "check", data / "r6.efa")[0] == 0
    bad = data / "bad.efa"
    bad.write_text("efa 1\nelements 0 a 1\nzero 0\none 1\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 1 and "E3" in err


def test_classify_r6(data, capsys):
    code, out, _ = run(capsys, "classify", data / "r6.efa", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["flags"]["compatible"] and not rep["flags"]["rdp"] and not rep["flags"]["homogeneous"]
    code, out, _ = run(capsys, "classify", data / "r6.efa")
    assert "homogeneous: false" in out


def test_blocks_l18(data, capsys):
    code, out, _ = run(capsys, "blocks", data / "l18.efa", "--json")
    blocks = [set(b) for b in json.loads(out)]
    assert code == 0 and len(blocks) == 2
    assert {"a", "b", "a+c"} <= blocks[0] and {"d", "e", "c+d"} <= blocks[1]


def test_sharp_gen18(data, capsys):
    code, out, _ = run(capsys, "sharp", data / "gen18.efa")
    assert code == 0 and len(out.split()) == 14


def test_center_and_kcenter(data, capsys):
    _, out, _ = run(capsys, "center", data / "l18.efa", "--json")
    assert json.loads(out) == ["0", "c+c", "(c+c)'", "1"]
    _, out, _ = run(capsys, "kcenter", data / "l18.efa")
    assert out.split() == ["0", "c", "c+c", "(c+c)'", "c'", "1"]


def test_closure_and_cover(data, capsys):
    _, out, _ = run(capsys, "closure", data / "l18.efa", "--set", "c+c", "--json")
    assert "c+c" in json.loads(out)
    code, out, _ = run(capsys, "cover", data / "r6.efa", "--set", "a,b", "--within", "a,b", "--json")
    cert = json.loads(out)
    assert code == 0 and cert["family"] == ["a", "b", "b"] and cert["assignment"] == {"a": [0], "b": [1]}
    _, out, _ = run(capsys, "cover", data / "gen18.efa", "--set", "a,d")
    assert out.strip() == "none"


def test_constructions(data, capsys):
    out = data / "p.efa"
    assert run(capsys, "product", data / "chain2.efa", data / "boolean2.efa", "-o", out)[0] == 0
    assert len(load(out)) == 12
    assert run(capsys, "hsum", data / "boolean2.efa", data / "boolean2.efa", "-o", out)[0] == 0
    assert len(load(out)) == 6
    assert run(capsys, "interval", data / "l18.efa", "--top", "c+c", "-o", out)[0] == 0
    assert load(out).names == ("0", "c", "c+c")
    assert run(capsys, "catalog", "chain", "3", "-o", out)[0] == 0
    assert len(load(out)) == 4


def test_suite_and_question(data, capsys):
    code, out, _ = run(capsys, "suite", data / "l18.efa")
    assert code == 0 and "equiv" in out
    code, out, _ = run(capsys, "--budget", "3", "suite", data / "l18.efa", "--json")
    assert any(r["status"] == "skipped" for r in json.loads(out))
    code, out, _ = run(capsys, "question", "k-rdp", "--max-n", "4")
    assert code == 0 and json.loads(out)["outcome"] == "no counterexample up to n=4"


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--max-n", "3")
    assert code == 0 and json.loads(out)["failures"] == []


def test_export_dot(data, capsys):
    out = data / "c.dot"
    assert run(capsys, "export-dot", data / "chain2.efa", "-o", out)[0] == 0
    text = out.read_text()
    assert text.startswith("digraph") and text.count("->") == 2


def test_usage_errors(data, capsys):
    assert run(capsys, "closure", data / "r6.efa", "--set", "zz")[0] == 2
    assert run(capsys, "catalog", "nope")[0] == 2
    assert run(capsys, "interval", data / "r6.efa", "--top", "0")[0] == 2
    assert run(capsys, "question", "nope")[0] == 2
    assert run(capsys, "check", data / "missing.efa")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", str(data / "r6.efa"), "--bogus"])
    assert exc.value.code == 2


def test_budget_exceeded(data, capsys):
    code, _, err = run(capsys, "--budget", "3", "blocks", data / "l18.efa")
    assert code == 3 and "budget" in err
