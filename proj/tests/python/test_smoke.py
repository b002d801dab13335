import json
from pathlib import Path

import pytest

import gha

DATA = Path(__file__).resolve().parents[2] / "data"


def statuses(report):
    return {c["name"]: c["status"] for c in report["checks"]}


def test_builtin_names():
    assert gha.builtin_lie_names() == ["abelian3", "h3", "su2", "sl2", "u2"]


@pytest.mark.parametrize("name", ["abelian3", "h3", "su2", "sl2", "u2"])
def test_verify_builtins(name):
    r = gha.verify(name, trunc=2)
    assert r["schema"] == "gha.report/1"
    assert r["status"] == "pass", statuses(r)


def test_verify_accepts_dict_path_and_text():
    path = DATA / "lie" / "su2.json"
    as_dict = json.loads(path.read_text())
    reports = [gha.verify(path), gha.verify(str(path)), gha.verify(as_dict), gha.verify(path.read_text())]
    assert all(r == reports[0] for r in reports)
    assert gha.builtin_lie("su2")["basis"] == gha.builtin_lie("su2")["basis"]


def test_corrupt_algebra_fails():
    r = gha.verify(DATA / "lie" / "su2_corrupt.json")
    assert r["status"] == "fail"
    assert any("jacobi" in c.get("detail", "") for c in r["checks"])


def test_malformed_input_raises():
    with pytest.raises(gha.InputError):
        gha.verify({"name": "x", "basis": ["a"], "structure_constants": [{"a": 0, "b": 0, "c": 5, "value": 1}]})
    with pytest.raises(gha.InputError):
        gha.verify(DATA / "lie" / "missing.json")
    with pytest.raises(ValueError):
        gha.spectral("{not json")


def test_invariants_su2():
    r = gha.invariants("su2", degree=3)
    assert r["status"] == "pass"
    assert [row["invariants"] for row in r["data"]["table"]] == [1, 0, 1, 0]


def test_chern_weil_casimir():
    r = gha.chern_weil("su2", DATA / "connection" / "universal_s2.json", DATA / "connection" / "casimir_su2.json")
    assert r["status"] == "pass"
    assert r["data"]["degree"] == 4


def test_rep_verify():
    ok = gha.rep_verify(DATA / "sset" / "delta2.json", DATA / "rep" / "homotopy_delta2.json")
    bad = gha.rep_verify(DATA / "sset" / "delta2.json", DATA / "rep" / "homotopy_delta2_corrupt.json")
    assert ok["status"] == "pass"
    assert bad["status"] == "fail"


def test_spectral_and_gauss_manin():
    assert gha.spectral(DATA / "filtered" / "cone.json", pages=3)["status"] == "pass"
    gm = gha.gauss_manin("su2", trunc=3)
    assert gm["status"] == "pass"


def test_mc_check():
    assert gha.mc_check(DATA / "mc" / "square_zero_pair.json")["status"] == "pass"
    assert gha.mc_check(DATA / "mc" / "square_zero_pair_fail.json")["status"] == "fail"
    assert gha.mc_check("h3")["status"] == "pass"


def test_ainfty_check():
    assert gha.ainfty_check(DATA / "dgcat" / "arrow.json", length=3)["status"] == "pass"
