from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from eblocks.cli import UsageError, main, parse_indices

EX = ["system", "E8", "--I", "2-7", "--J", "3,4,5,7"]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_indices():
    assert parse_indices("2-4,7", 8) == (2, 3, 4, 7)
    assert parse_indices("all", 6) == (1, 2, 3, 4, 5, 6)
    assert parse_indices("-", 6) == () == parse_indices("none", 6) == parse_indices(None, 6)
    with pytest.raises(UsageError):
        parse_indices("9", 8)
    with pytest.raises(UsageError):
        parse_indices("a,b", 8)


def test_weights_text(capsys):
    code, out, _ = run(EX, capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 44
    assert lines[0].split(None, 1)[0] == "1"


def test_formats_agree(capsys):
    _, js, _ = run(EX + ["--emit", "blocks", "--format", "json"], capsys)
    doc = json.loads(js)
    assert set(doc) == {"kind", "I", "J", "N", "weights", "e_coords", "jantzen", "blocks"}
    assert doc["N"] == 44 and doc["I"] == [2, 3, 4, 5, 6, 7] and doc["J"] == [3, 4, 5, 7]
    assert sorted(map(len, doc["blocks"])) == [16, 28]
    _, jc, _ = run(EX + ["--emit", "jantzen", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(jc)))
    assert rows[0] == ["i", "j", "c"]
    assert [[int(v) for v in r] for r in rows[1:]] == doc["jantzen"]
    _, wc, _ = run(EX + ["--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(wc)))
    assert [r[9:] for r in rows[1:]] == doc["e_coords"]
    assert [[int(v) for v in r[1:9]] for r in rows[1:]] == doc["weights"]
    _, bc, _ = run(EX + ["--emit", "blocks", "--format", "csv"], capsys)
    labels = {}
    for k, b in list(csv.reader(io.StringIO(bc)))[1:]:
        labels.setdefault(b, []).append(int(k))
    assert sorted(labels.values()) == sorted(doc["blocks"])


def test_emits(capsys):
    _, txt, _ = run(EX + ["--emit", "blocks"], capsys)
    assert txt.startswith("2 blocks")
    _, gvm, _ = run(EX + ["--emit", "simple-gvm"], capsys)
    assert len(gvm.splitlines()) == 3
    _, dot, _ = run(EX + ["--emit", "poset", "--format", "dot"], capsys)
    assert dot.startswith("digraph")
    _, wit, _ = run(EX + ["--emit", "jantzen", "--witnesses"], capsys)
    assert "c(1," in wit


def test_out_file(tmp_path, capsys):
    out = tmp_path / "w.txt"
    code, stdout, _ = run(EX + ["--out", str(out)], capsys)
    assert code == 0 and stdout == "" and len(out.read_text().splitlines()) == 44


def test_usage_errors(capsys):
    assert run(EX + ["--format", "dot"], capsys)[0] == 2
    assert run(["system", "E6", "--I", "7"], capsys)[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["system", "F4"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["sweep", "E6", "--format", "json"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["sweep", "E6", "--min-sum", "-1"])
    assert e.value.code == 2


def test_sweep_tables(capsys):
    code, out, err = run(["sweep", "E6", "--min-sum", "6", "--strategy", "classes"], capsys)
    assert code == 0 and "110 disconnected" in err
    assert out.splitlines()[0].split() == ["Phi_I", "Phi_J", "blocks"]
    assert len(out.splitlines()) == 1 + 7
    code, out, _ = run(["sweep", "E6", "--min-sum", "10", "--table", "pairs", "--format", "csv"], capsys)
    assert code == 0 and out.splitlines()[0] == "I,J,N,blocks,status"


def test_classify(capsys):
    code, out, _ = run(["classify", "E7", "--format", "csv"], capsys)
    assert code == 0 and len(out.splitlines()) == 33
    assert "A5,'',1,\"2,4,5,6,7\"" in out


def test_check_exit_codes(capsys, monkeypatch):
    from eblocks import checks
    code, out, _ = run(["check", "e8-example"], capsys)
    assert code == 0 and out.rstrip().endswith("8/8 passed")
    monkeypatch.setitem(checks.SUITES, "e8-example", lambda kinds: [checks.CheckResult("forced", False)])
    code, out, _ = run(["check", "e8-example"], capsys)
    assert code == 1 and "FAIL  forced" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "eblocks", "system", "E6", "--I", "all"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0
    assert r.stdout == "1  (0, 1, 2, 3, 4, 4)\n"
