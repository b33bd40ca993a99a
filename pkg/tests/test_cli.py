import json

import pytest

from cftv.cli import Report, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.strip().splitlines()
    names = [line.split()[0] for line in lines]
    assert code == 0 and "check_bcft" in names
    assert names == sorted(names)
    assert any("N>=2m | N<2m<2N | m=N" in line for line in lines)


def test_verify_berezin(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "check_berezin", "--N", "4", "--n", "1", "--m", "1",
                       "--samples", "200000", "--seed", "7", "--out", str(out))
    assert code == 0, err
    doc = json.loads(out.read_text())
    assert doc["pass"] is True and doc["config"]["seed"] == 7
    entry = doc["results"][0]
    assert {"name", "regime", "lhs", "rhs", "z", "pass", "notes"} <= set(entry)
    assert {"mean_re", "mean_im", "stderr", "n", "seed"} <= set(entry["lhs"])
    again = Report.from_json(out.read_text())
    assert json.loads(again.to_json()) == doc


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "verify", "check_bcft", "--N", "2", "--m", "3", "--samples", "1000")[0] == 2
    assert run(capsys, "verify", "--samples", "0")[0] == 2
    code, out, _ = run(capsys, "verify", "check_schur_moments", "--N", "4", "--n", "2", "--m", "1",
                       "--lambda", "1", "--samples", "2000", "--z", "1e-9")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_lambda_parsing(capsys):
    code, out, _ = run(capsys, "verify", "check_schur_moments", "--N", "5", "--n", "3", "--m", "2",
                       "--lambda", "2,1", "--samples", "20000")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["lambda"] == "2,1"
    assert doc["results"][0]["rhs"] == {"exact": "2/5"}


def test_default_seed_recorded(capsys, monkeypatch):
    monkeypatch.setenv("CFTV_DEFAULT_SAMPLES", "2000")
    code, out, _ = run(capsys, "verify", "check_selberg")
    doc = json.loads(out)
    assert isinstance(doc["config"]["seed"], int) and doc["config"]["n_samples"] == 2000


def test_sample_haar_shape(capsys):
    code, out, _ = run(capsys, "sample", "haar", "--N", "2", "--count", "3", "--seed", "1")
    rows = out.strip().splitlines()
    assert code == 0 and len(rows) == 4
    assert all(len(r.split(",")) == 8 for r in rows)


def test_sample_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert main(["sample", "fermionic", "--N", "3", "--n", "2", "--m", "2", "--count", "5",
                     "--seed", "9", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sample_truncation_pinned(capsys):
    code, out, _ = run(capsys, "sample", "truncation", "--N", "3", "--n", "2", "--m", "2", "--count", "20")
    rows = [list(map(float, r.split(","))) for r in out.strip().splitlines()[1:]]
    assert code == 0 and len(rows) == 20
    assert all(sum(abs(v - 1) <= 1e-10 for v in row) == 1 for row in rows)


def test_sample_errors(capsys):
    assert run(capsys, "sample", "boundary", "--N", "4", "--m", "2")[0] == 2
    assert run(capsys, "sample", "nope", "--N", "2")[0] == 2
    assert run(capsys, "sample", "haar")[0] == 2


@pytest.mark.parametrize("argv,expected", [
    (["table", "weyl", "--lambda", "2,1", "--n", "5"], "40"),
    (["table", "exp-coeff", "--lambda", "1,1"], "1/2"),
    (["table", "selberg-b", "--lambda", "1", "--p", "1", "--q", "1", "--m", "2"], "1/6"),
    (["table", "selberg-f", "--lambda", "1", "--p", "1", "--q", "5", "--m", "2"], "1/630"),
    (["table", "hua-b", "--lambda", "1", "--a", "5/2", "--m", "2"], "5/4"),
    (["table", "hua-f", "--lambda", "3", "--a", "2", "--m", "1"], "0"),
])
def test_table(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_table_bounds(capsys):
    assert run(capsys, "table", "weyl", "--lambda", "5,4", "--n", "3")[0] == 2
    assert run(capsys, "table", "hua-b", "--lambda", "1", "--a", "1", "--m", "5")[0] == 2
    assert run(capsys, "table", "weyl", "--lambda", "1")[0] == 2
    assert run(capsys, "table", "weyl", "--lambda", "1,2", "--n", "3")[0] == 2


def test_report_version_gate():
    with pytest.raises(ValueError):
        Report.from_dict({"version": 99})
