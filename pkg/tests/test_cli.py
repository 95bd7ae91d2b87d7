import json

import pytest

from jm_expand.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, *argv, "--json")
    assert status == 0
    return json.loads(out)


def test_expand(capsys):
    assert run(capsys, "expand", "--family", "a", "--k", "3", "--partition", "4")[1].strip() == "5"
    assert run(capsys, "expand", "--family", "b", "--k", "2", "--partition", "3")[1].strip() == "2"
    rec = run_json(capsys, "expand", "--family", "c", "--k", "3", "--all-of-size", "3")
    assert rec["result"] == {"3": "0", "2,1": "4", "1,1,1": "0"}
    assert rec["command"] == "expand"


def test_oracle(capsys):
    rec = run_json(capsys, "oracle", "--group", "sym", "--function", "h", "--k", "2", "--n", "3")
    assert rec["result"]["coefficients"] == {"3": "2", "2,1": "0", "1,1,1": "3"}
    rec = run_json(capsys, "oracle", "--group", "hecke", "--function", "e", "--k", "1", "--n", "2")
    assert rec["result"]["coefficients"] == {"2": "1", "1,1": "0"}
    status, out, _ = run(capsys, "oracle", "--group", "partial", "--function", "h",
                         "--k", "2", "--n", "4", "--verify-recurrence")
    assert status == 0 and out.rstrip().endswith("pass")


def test_series_asymptotics_conjecture(capsys):
    rec = run_json(capsys, "series", "--which", "cycle", "--n", "4", "--order", "5")
    assert rec["result"][:4] == ["0", "0", "0", "5"]
    assert run(capsys, "asymptotics", "--which", "subleading", "--partition", "2")[1].strip() == "1"
    rec = run_json(capsys, "conjecture", "--kmax", "3", "--nmax", "4", "--alphas", "1,2")
    assert rec["result"]["failures"] == "0"
    assert all(r["pass"] for r in rec["result"]["report"])


def test_json_numbers_are_strings(capsys):
    rec = run_json(capsys, "series", "--which", "hook", "--n", "4", "--order", "6", "--kind", "c")

    def walk(x):
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert isinstance(x, (str, bool)) or x is None

    walk(rec)


def test_exit_codes(capsys):
    assert run(capsys, "oracle", "--group", "sym", "--function", "h", "--k", "1", "--n", "12")[0] == 3
    assert run(capsys, "conjecture", "--kmax", "2", "--nmax", "2", "--alphas", "0")[0] == 5
    assert run(capsys, "expand", "--family", "a", "--k", "1", "--partition", "x")[0] == 2
    assert run(capsys, "oracle", "--group", "partial", "--function", "p", "--k", "2",
               "--n", "3", "--verify-recurrence")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--family", "zz", "--k", "1", "--partition", "1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cache_file(tmp_path, capsys, monkeypatch):
    path = tmp_path / "coeffs.txt"
    monkeypatch.setenv("JM_EXPAND_CACHE", str(path))
    assert run(capsys, "expand", "--family", "c", "--k", "4", "--partition", "2,2")[0] == 0
    assert path.read_text().startswith("# jm-expand coefficient cache v1")
    assert run(capsys, "--cache", str(path), "expand", "--family", "c", "--k", "4",
               "--partition", "2,2")[1].strip() == "20"
