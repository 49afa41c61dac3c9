import csv
import io
import json

import pytest

from chevsuper import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_json(capsys):
    code, out, _ = run(capsys, ["roots", "B(0,1)", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    names = [r["root"] for r in data["roots"]]
    assert names == ["-2d1", "-d1", "d1", "2d1"]
    by_name = {r["root"]: r for r in data["roots"]}
    assert by_name["d1"]["parity"] == 1
    assert by_name["d1"]["isotropic"] is False
    assert by_name["d1"]["positive"] is True
    assert data["coroots"]["d1"] == [2]
    assert data["coroots"]["2d1"] == [1]
    assert data["simple"] == ["d1"]


def test_json_output_is_deterministic(capsys):
    code1, out1, _ = run(capsys, ["basis", "A(1,0)", "--format", "json"])
    code2, out2, _ = run(capsys, ["basis", "A(1,0)", "--format", "json"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_bad_family_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["roots", "Z(9,9)"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "A(1,0)", "--field", "mod:4"])
    assert exc.value.code == 2


def test_constants_csv(capsys):
    code, out, _ = run(capsys, ["constants", "A(1,0)", "--format", "csv"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert set(rows[0]) == {"alpha", "beta", "c", "r", "rule"}
    assert all(int(r["c"]) != 0 for r in rows)


def test_csv_needs_flat_table(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["basis", "A(1,0)", "--format", "csv"])
    assert exc.value.code == 2


def test_verify_all_suites(capsys):
    code, out, _ = run(capsys, ["verify", "B(0,1)", "--format", "json",
                                "--words", "6"])
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "B(0,1)"
    assert all(c["status"] == "pass" for c in data["cases"])
    ids = {c["id"] for c in data["cases"]}
    assert "osp12-half-cartan" in ids
    assert "osp12-doubled-cartan" in ids


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(cb, rng, field, words):
        return [{"id": "forced", "status": "fail", "detail": "forced failure"}]
    monkeypatch.setitem(cli._SUITE_FUNCS, "jacobi", broken)
    code, out, _ = run(capsys, ["verify", "A(1,0)", "--suite", "jacobi",
                                "--format", "json"])
    assert code == 1
    data = json.loads(out)
    assert data["cases"][0]["status"] == "fail"


def test_verify_respects_field_env(capsys, monkeypatch):
    monkeypatch.setenv("CHEVSUPER_FIELD", "mod:7")
    code, out, _ = run(capsys, ["verify", "A(1,0)", "--suite", "commutators",
                                "--format", "json"])
    assert code == 0
    assert json.loads(out)["field"] == "mod:7"


def test_normalform_roundtrip(capsys):
    word = "xo:e1-d1:th1 xo:-e1+d1:th2"
    code, out, _ = run(capsys, ["normalform", "A(1,0)", "--word", word,
                                "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert [f["root"] for f in data["neg"]] == ["-e1+d1"]
    assert [f["coeff"] for f in data["neg"]] == ["th2"]
    assert [f["root"] for f in data["pos"]] == ["e1-d1"]
    diag = [data["g0"][i][i] for i in range(3)]
    assert diag == ["1 - th1*th2", "1", "1 - th1*th2"]


def test_normalform_rejects_bad_words(capsys):
    for word in ("xo:d1:th1", "xe:e1-d1:2", "zz:e1:1", "xo:e1-d1:1"):
        with pytest.raises(SystemExit) as exc:
            cli.main(["normalform", "B(1,1)", "--word", word])
        assert exc.value.code == 2, word


def test_heisenberg_command(capsys):
    code, out, _ = run(capsys, ["heisenberg", "--n", "2", "--a", "2",
                                "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert all(r["status"] == "ok" for r in data["checks"])
    assert all(r["c"] == (-1 if r["i"] == r["j"] else 0)
               for r in data["group_commutators"])


def test_lattice_command(capsys):
    code, out, _ = run(capsys, ["lattice", "A(1,0)", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["chain"]["coroots_in_defining"] is True
    assert data["chain"]["defining_in_roots"] is True
    assert data["standard_lattice_admissible"] is True


def test_text_format_smoke(capsys):
    for argv in (["roots", "C(2)"], ["basis", "B(0,1)"],
                 ["constants", "B(0,1)"], ["heisenberg", "--n", "1"],
                 ["lattice", "B(0,1)"]):
        code, out, _ = run(capsys, argv)
        assert code == 0
        assert out.strip()
