import io
import json

import pytest

from sethom.catalog import build
from sethom.cli import run
from sethom.formats import FormatError, from_json, from_shd, to_dot, to_json, to_shd


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_shd_layout():
    text = to_shd(build("D(3)"))
    assert text == "SHD1 n=3\n.><\n<.>\n><.\n"


@pytest.mark.parametrize("text", ["E6", "H1", "K(2)[C(5)]", "Kbar(1)"])
def test_shd_round_trip(text):
    d = build(text)
    assert from_shd(to_shd(d)) == d


@pytest.mark.parametrize("bad", [
    "SHD1 n=2\n.>\n>.\n",      # both directions claim the arc
    "SHD1 n=2\n.~\n0.\n",      # edge against unrelated
    "SHD1 n=2\n..\n<.\n",      # diagonal misuse
    "SHD1 n=3\n.>\n<.\n",      # short rows
    "SHD n=1\n.\n",
    "SHD1 n=1\nx\n",
    "",
])
def test_shd_rejects(bad):
    with pytest.raises(FormatError):
        from_shd(bad)


def test_shd_empty_digraph():
    assert from_shd("SHD1 n=0\n").n == 0


def test_json_round_trip():
    d = build("F6")
    doc = json.loads(to_json(d))
    assert list(doc) == ["n", "arcs", "edges"]
    assert from_json(to_json(d)) == d


def test_build_then_check_hom(tmp_path):
    path = tmp_path / "d5.shd"
    code, out, _ = _run("build", "D(5)", "-o", str(path))
    assert code == 0 and out == ""
    code, out, err = _run("check", "hom", str(path))
    assert code == 3 and err == ""
    assert "U=[0, 2] V=[0, 3]" in out
    code, out, _ = _run("check", "hom", str(path), "--json")
    doc = json.loads(out)
    assert doc["witness"] == {"U": [0, 2], "V": [0, 3], "map": [[0, 0], [2, 3]]}


def test_check_set_hom_h3(tmp_path):
    path = tmp_path / "h3.shd"
    _run("build", "H3", "-o", str(path))
    code, out, _ = _run("check", "set-hom", str(path))
    assert code == 0


def test_check_k_variants():
    assert _run("check", "k-set-hom", "expr:D(5)", "-k", "2")[0] == 0
    assert _run("check", "k-hom", "expr:D(5)", "-k", "2")[0] == 3
    assert _run("check", "k-hom", "expr:D(5)", "-k", "1")[0] == 0
    assert _run("check", "k-hom", "expr:D(5)")[0] == 1
    assert _run("check", "hom", "expr:C(5)", "--max-k", "9")[0] == 1


def test_dot_export_e6():
    code, out, _ = _run("export", "--format", "dot", "expr:E6")
    assert code == 0
    lines = [l for l in out.splitlines() if "->" in l]
    assert sum("dir=none" in l for l in lines) == 3
    assert sum("dir=none" not in l for l in lines) == 6
    assert out == to_dot(build("E6"))


def test_json_export(tmp_path):
    path = tmp_path / "e7.json"
    assert _run("export", "--format", "json", "expr:E7", "-o", str(path))[0] == 0
    assert from_json(path.read_text()) == build("E7")


def test_aut_summary():
    code, out, _ = _run("aut", "expr:D(5)")
    assert code == 0
    assert out.startswith("order 5\n")
    assert "orbitals 4" in out


def test_catalog_list():
    code, out, _ = _run("catalog", "list")
    names = [l.split()[0] for l in out.splitlines()]
    assert code == 0 and {"H3", "E6", "X"} <= set(names)


def test_enumerate_commands():
    code, out, _ = _run("enumerate", "--max-n", "3", "--json")
    assert code == 0 and json.loads(out) == {"1": 1, "2": 3, "3": 16}
    code, out, _ = _run("enumerate", "--max-n", "4", "--cross-check")
    assert code == 0 and out.rstrip().endswith("cross-check: ok")
    assert _run("enumerate", "--max-n", "7")[0] == 2


def test_infinite_commands():
    code, out, _ = _run("infinite", "t4", "--size", "20", "--seed", "3", "--census", "--json")
    doc = json.loads(out)
    assert code == 0 and all(doc["census"][str(i)] == 0 for i in range(7, 15))
    code, out, _ = _run("infinite", "r2", "--size", "20", "--witness")
    assert code == 0 and out.splitlines()[-1].startswith("witness: ")
    assert _run("infinite", "t4", "--size", "61")[0] == 2
    assert _run("infinite", "r1")[0] == 1
    assert _run("infinite", "q")[0] == 1


@pytest.mark.parametrize("argv", [
    ["build", "Q(3)"],
    ["check", "set-hom", "/nonexistent/file.shd"],
    ["export", "--format", "png", "expr:E6"],
    ["frobnicate"],
    [],
])
def test_errors_exit_1(argv):
    code, out, err = _run(*argv)
    assert code == 1 and out == ""
    assert err.startswith("sethom: ") and err.count("\n") == 1


def test_bad_shd_file(tmp_path):
    path = tmp_path / "bad.shd"
    path.write_text("SHD1 n=2\n.>\n>.\n")
    code, _, err = _run("check", "set-hom", str(path))
    assert code == 1 and "sethom:" in err
