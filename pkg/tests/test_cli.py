import json
import subprocess
import sys

import pytest

from semiclassical.cli import main, parse_discrepancies


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_mv_genus_zero(capsys):
    code, out = run(capsys, "mv", "--genus", "0", "--max-n", "4")
    assert code == 0
    assert "n=3: v0,3" in out
    assert "n=4: v0,4 + 3*v0,3^2" in out


def test_mv_genus_zero_six(capsys):
    code, data = run_json(capsys, "mv", "--genus", "0", "--max-n", "6")
    assert code == 0
    last = data["rows"][-1]
    assert last["n"] == 6 and "105*v0,3^4" in last["formula"] and last["agree_printed"]


def test_mv_genus_one_first_row(capsys):
    code, out = run(capsys, "mv", "--genus", "1", "--max-n", "1")
    assert code == 0
    assert "n=1: v1,1 + 1/2*v0,3" in out


def test_mv_discrepancy_needs_acknowledgement(capsys):
    code, data = run_json(capsys, "mv", "--genus", "1", "--n", "2")
    assert code == 1
    assert data["rows"][0]["status"] == "mismatch" and data["rows"][0]["agree_oracle"]
    code, data = run_json(capsys, "mv", "--genus", "1", "--n", "2", "--expect-discrepancy", "n=2,g=1")
    assert code == 0
    assert data["rows"][0]["status"] == "documented-deviation"


def test_serre_equivariant_n4(capsys):
    code, data = run_json(capsys, "serre", "--n", "4", "--equivariant")
    assert code == 0
    by_L = {r["Lexp"]: r for r in data["rows"][0]["serre"]["by_L"]}
    assert {tuple(s["lambda"]): s["c"] for s in by_L[2]["schur"]} == {(2, 2): "2", (3, 1): "4", (4,): "7"}


def test_serre_n8_text(capsys):
    code, out = run(capsys, "serre", "--n", "8")
    assert code == 0
    assert out.startswith("n=8: 1 + 248*L + 5802*L^2 + 31072*L^3 + 52402*L^4")


def test_serre_chi(capsys):
    code, out = run(capsys, "serre", "--n", "2", "--chi")
    assert code == 0 and "chi=4" in out


def test_euler_and_gamma0(capsys):
    code, data = run_json(capsys, "euler", "--max-n", "5")
    assert [r["chi"] for r in data["rows"]] == [2, 4, 12, 49, 260]
    code, data = run_json(capsys, "gamma0", "--max-n", "5")
    assert [r["gamma0"] for r in data["rows"]] == [1, 3, 15, 111, 1104]


def test_asymp(capsys):
    code, data = run_json(capsys, "asymp", "--n", "200")
    assert code == 0 and data["ok"]
    assert data["C"].startswith("18.313988")


def test_text_and_json_agree(capsys):
    _, text = run(capsys, "euler", "--max-n", "6")
    _, data = run_json(capsys, "euler", "--max-n", "6")
    rows = [line.split() for line in text.strip().splitlines()[1:]]
    assert [[int(a), int(b), c, int(d)] for a, b, c, d in rows] == [
        [r["n"], r["chi"], r["chi_v"], r["gamma0"]] for r in data["rows"]
    ]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, out = run(capsys, "gamma0", "--max-n", "3", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["rows"][2]["gamma0"] == 15


def test_verify_only_legendre(capsys):
    code, data = run_json(capsys, "verify", "--only", "legendre")
    assert [r["criterion"] for r in data["criteria"]] == [1, 2]
    assert {m["key"] for m in data["known_misprints"]} >= {"mv:g=1,n=2", "serre:n=7,L^1"}


@pytest.mark.parametrize(
    "argv",
    [
        ["mv", "--genus", "2"],
        ["mv", "--n", "3", "--max-n", "4"],
        ["mv", "--genus", "1", "--n", "2", "--expect-discrepancy", "bogus"],
        ["serre", "--n", "0"],
        ["euler", "--n", "0"],
        ["asymp", "--n", "50"],
        ["verify", "--only", "nope"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_parse_discrepancies():
    assert parse_discrepancies(["n=2,g=1;n=3,g=1", "g=0,n=4"]) == {(1, 2), (1, 3), (0, 4)}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "semiclassical", "gamma0", "--max-n", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["n=1:", "1", "n=2:", "3"]
