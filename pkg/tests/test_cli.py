import json
import subprocess
import sys

import pytest

from qgoellnitz.classical import g1_vector, p1_vector
from qgoellnitz.cli import format_table, parse_table, run, table_rows


def invoke(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_count_p1(capsys):
    assert invoke(capsys, "count", "p1", "18") == (0, "1\n", "")


def test_count_colored(capsys):
    assert invoke(capsys, "count", "p2", "3", "1", "1")[1] == "2\n"
    status, out, _ = invoke(capsys, "count", "g2", "3", "1", "0", "0", "1", "--format", "json")
    assert status == 0 and json.loads(out)["count"] == 1


def test_verify_trivial_key_identity(capsys):
    status, out, _ = invoke(capsys, "verify", "key26", "--ijkl-max", "0", "--degree", "10")
    assert status == 0 and out.startswith("key26: PASS")


def test_verify_thm1(capsys):
    status, out, _ = invoke(capsys, "verify", "thm1", "--nmax", "300", "--format", "json")
    assert status == 0
    assert json.loads(out) == {"identity": "thm1", "cells_checked": 301, "status": "pass"}


@pytest.mark.parametrize("name", ["goellnitz32", "schur33", "bounded43", "bounded44", "product41",
                                  "thm2", "thmA", "thmG", "reduction", "dilation", "order",
                                  "transport15", "transport6", "slices", "threeway", "limit",
                                  "thm1-refined"])
def test_verify_every_name_small(capsys, name):
    args = {
        "goellnitz32": ["--ijkl-max", "1", "--degree", "10"],
        "schur33": ["--ijkl-max", "2", "--degree", "10"],
        "bounded43": ["--lm-max", "3"],
        "bounded44": ["--lm-max", "2"],
        "product41": ["--degree", "8"],
        "thm2": ["--nmax", "8", "--ijkl-max", "1"],
        "thmA": ["--nmax", "8", "--ijkl-max", "1"],
        "thmG": ["--nmax", "30"],
        "reduction": ["--ijkl-max", "1", "--degree", "10"],
        "dilation": ["--degree", "40"],
        "order": ["--count", "15"],
        "transport15": ["--nmax", "40"],
        "transport6": ["--nmax", "30"],
        "slices": ["--ijkl-max", "1", "--degree", "10"],
        "threeway": ["--ijkl-max", "1", "--nmax", "10"],
        "limit": ["--lm-max", "12", "--degree", "8", "--ijkl-max", "1"],
        "thm1-refined": ["--nmax", "30"],
    }[name]
    status, out, _ = invoke(capsys, "verify", name, *args)
    assert status == 0, out


def test_usage_errors(capsys):
    assert invoke(capsys, "verify", "thm1", "--nmax", "-1")[0] == 2
    assert invoke(capsys, "count", "p1", "5", "1")[0] == 2
    assert invoke(capsys, "count", "p2", "5", "-1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_table_round_trip(capsys):
    rows = table_rows("thm1", 90)
    assert [r["P"] for r in rows] == p1_vector(90)
    assert [r["G"] for r in rows] == g1_vector(90)
    for fmt in ("csv", "json"):
        status, out, _ = invoke(capsys, "table", "thm1", "--nmax", "90", "--format", fmt)
        assert status == 0
        assert parse_table(out, fmt) == rows
    assert format_table(rows, "csv").splitlines()[0] == "n,P,G"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "table.csv"
    status, out, _ = invoke(capsys, "table", "thmG", "--nmax", "20", "--format", "csv",
                            "--out", str(path))
    assert status == 0 and out == ""
    assert parse_table(path.read_text(), "csv") == table_rows("thmG", 20)


def test_enumerate(capsys):
    status, out, _ = invoke(capsys, "enumerate", "g1", "45", "--format", "json")
    assert status == 0 and ["(45)"] == [x for x in json.loads(out) if x == "(45)"]
    status, out, _ = invoke(capsys, "enumerate", "g2", "3")
    assert "(D_2, A_1)" in out.splitlines()
    assert "(A_2, D_1)" not in out.splitlines()


def test_stable_output(capsys):
    first = invoke(capsys, "verify", "thm2", "--nmax", "10", "--ijkl-max", "1", "--format", "csv")
    second = invoke(capsys, "verify", "thm2", "--nmax", "10", "--ijkl-max", "1", "--format", "csv")
    assert first == second
    assert first[1].splitlines()[0] == "identity,cells_checked,status,counterexample"


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "qgoellnitz", "count", "g1", "18"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "1\n"


def test_mismatch_exit_status(capsys, monkeypatch):
    from functools import partial

    from qgoellnitz import identities

    mutated = partial(identities.verify_key_identity, linear_correction=False)
    monkeypatch.setattr(identities, "verify_key_identity", mutated)
    status, out, _ = invoke(capsys, "verify", "key26", "--ijkl-max", "1", "--degree", "10")
    assert status == 1
    assert "FAIL" in out and "lhs=" in out and "rhs=" in out
