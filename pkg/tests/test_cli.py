import json
import subprocess
import sys

import pytest

from alpha_ci.cli import default_workers, run
from alpha_ci.sullivan import ScanReport


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alpha_examples(capsys):
    code, out, _ = call(capsys, "alpha", "--n", "1", "--d", "2,2")
    assert code == 0
    assert out.splitlines()[0] == "alpha = 1"
    code, out, _ = call(capsys, "alpha", "--n", "5", "--d", "3,3")
    assert out.splitlines() == [
        "alpha = 0",
        "backends: sign_sum+hilbert+partition_sum+fr",
        "m = -1",
    ]


def test_alpha_all_backends(capsys):
    code, out, _ = call(capsys, "alpha", "--n", "5", "--d", "3,3", "--all-backends")
    assert code == 0
    for name in ("sign_sum", "hilbert", "partition_sum", "fr"):
        assert f"  {name}: 0" in out.splitlines()


def test_alpha_json(capsys):
    code, out, _ = call(capsys, "alpha", "--n", "9", "--d", "2,2,1", "--json", "--all-backends")
    data = json.loads(out)
    assert data["command"] == "alpha"
    assert data["alpha"] in (0, 1)
    assert set(data["backends"].values()) == {data["alpha"]}
    assert data["m"] == (-9 - 3 - 1 + 5) // 2


def test_alpha_abstract(capsys):
    code, out, _ = call(capsys, "alpha", "--abstract", "--n", "-1", "--d=3,-5")
    assert code == 0
    assert out.splitlines()[0] == "alpha = 1"
    code, out, _ = call(capsys, "alpha", "--abstract", "--n", "4", "--d", "0,3")
    assert out.splitlines()[0] == "alpha = 0"


def test_ahat(capsys):
    code, out, _ = call(capsys, "ahat", "--n", "2", "--d", "4")
    assert code == 0
    assert out.splitlines()[0] == "ahat = 2"
    code, out, _ = call(capsys, "ahat", "--n", "2", "--d", "6", "--json")
    assert json.loads(out)["ahat"] == 8


def test_spin(capsys):
    assert call(capsys, "spin", "--n", "2", "--d", "3") == (0, "not spin\n", "")
    code, out, _ = call(capsys, "spin", "--n", "3", "--d", "2,2")
    assert out == "spin, m = -1\n"


def test_profile(capsys):
    code, out, _ = call(capsys, "profile", "--n", "5", "--d", "3,3")
    assert out == "profile = 5:9:16,160\n"
    code, out, _ = call(capsys, "profile", "--n", "2", "--d", "4")
    assert "not a diffeomorphism invariant" in out
    code, out, _ = call(capsys, "profile", "--n", "2", "--d", "4", "--json")
    assert json.loads(out)["diffeomorphism_invariant"] is False


def test_euler_hilbert_fr(capsys):
    assert call(capsys, "euler", "--n", "2", "--d", "4")[1] == "euler = 24\n"
    assert call(capsys, "hilbert", "--n", "1", "--d", "2,2", "--order", "5")[1] == "1 4 8 12 16 20\n"
    assert call(capsys, "hilbert", "--n", "2", "--d", "", "--order", "2")[1] == "1 3 6\n"
    assert call(capsys, "fr", "--r", "5")[1] == "f_5 = T^4 + T^2 + 1\n"
    assert json.loads(call(capsys, "fr", "--r", "4", "--json")[1])["exponents"] == [3]


@pytest.mark.parametrize(
    "argv",
    [
        ["alpha", "--n", "5", "--d", "3,x"],
        ["alpha", "--n", "5", "--d", "0,3"],
        ["alpha", "--n", "3", "--d", "3"],
        ["alpha", "--n", "5", "--d", "2,3"],
        ["alpha", "--n", "5", "--d", "3,3", "--backends", "bogus,fr"],
        ["ahat", "--n", "3", "--d", "4"],
        ["spin", "--n", "0", "--d", "3"],
        ["hilbert", "--n", "1", "--d", "2", "--order", "-1"],
        ["fr", "--r", "-2"],
        ["scan", "--n", "3", "--max-k", "2", "--max-degree", "4"],
        ["nonsense"],
        [],
    ],
)
def test_invalid_input_exit_code(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 1
    assert len(err.strip().splitlines()) == 1
    assert err.startswith("error:")


def test_backend_disagreement_exit_code(capsys, monkeypatch):
    import importlib

    from alpha_ci.alpha import AlphaValue

    mod = importlib.import_module("alpha_ci.alpha")
    monkeypatch.setitem(mod.BACKENDS, "fr", lambda n, d: AlphaValue(1, "fr"))
    code, _, err = call(capsys, "alpha", "--n", "5", "--d", "3,3")
    assert code == 2
    assert err.startswith("internal error:")


def test_scan_writes_json_and_csv(capsys, tmp_path):
    out_json = tmp_path / "out.json"
    out_csv = tmp_path / "out.csv"
    code, out, _ = call(
        capsys,
        "scan", "--n", "5", "--max-k", "3", "--max-degree", "10",
        "--workers", "2", "--json", str(out_json), "--csv", str(out_csv),
    )
    assert code == 0
    assert "violations=0" in out
    text = out_json.read_text()
    report = ScanReport.from_json(text)
    assert report.violations == []
    assert report.to_json() == text
    assert out_csv.read_text().startswith("key,size,alpha,constant,members\n")


def test_scan_json_to_stdout_is_deterministic(capsys):
    _, first, _ = call(capsys, "scan", "--n", "1", "--max-k", "3", "--max-degree", "8",
                       "--group-by", "d_tot", "--workers", "1", "--json", "-")
    _, second, _ = call(capsys, "scan", "--n", "1", "--max-k", "3", "--max-degree", "8",
                        "--group-by", "d_tot", "--workers", "2", "--json", "-")
    a, b = json.loads(first), json.loads(second)
    a.pop("timing"), b.pop("timing")
    assert a == b
    assert a["group_by"] == "d_tot"


def test_workers_default_from_environment(monkeypatch):
    monkeypatch.setenv("ALPHA_CI_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("ALPHA_CI_WORKERS")
    assert default_workers() >= 1


def test_bad_workers_environment(capsys, monkeypatch):
    monkeypatch.setenv("ALPHA_CI_WORKERS", "many")
    code, _, err = call(capsys, "scan", "--n", "5", "--max-k", "1", "--max-degree", "3")
    assert code == 1
    assert "ALPHA_CI_WORKERS" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alpha_ci", "alpha", "--n", "1", "--d", "2,2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("alpha = 1\n")
