"""Command-line interface: parsing, exit codes, report formats."""
import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from zetaomega import report as rpt
from zetaomega.cli import UsageError, format_complex, main, parse_complex, parse_grid, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text, value", [
    ("2", 2), ("-0.5", -0.5), ("1+2i", 1 + 2j), ("0.5-2i", 0.5 - 2j), ("3i", 3j),
    ("-i", -1j), ("i", 1j), ("1e-3+2.5e1i", 0.001 + 25j), (".5", 0.5),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("bad", ["", "1 + 2i", "1+2", "2i3", "abc", "1++2i", "1+2j"])
def test_parse_complex_rejects(bad):
    with pytest.raises(UsageError):
        parse_complex(bad)


@settings(max_examples=100, deadline=None)
@given(st.floats(allow_nan=False, allow_infinity=False, width=64),
       st.floats(allow_nan=False, allow_infinity=False, width=64))
def test_format_parse_round_trip(re, im):
    z = complex(re, im)
    w = parse_complex(format_complex(z, 17))
    assert w == z or (w.real == z.real and z.imag == 0)


def test_parse_grid_and_range():
    assert parse_grid("real:0.1:0.9:17").points()[0] == 0.1
    assert len(parse_grid("complex:0.1:0.9:-1:1:5:5").points()) == 25
    assert parse_grid("list:2,3,0.5+0.3i").points() == [2, 3, 0.5 + 0.3j]
    assert parse_range("1:3") == [1, 2, 3] and parse_range("2,5") == [2, 5]
    for bad in ("cube:1", "real:1:2", "list:x"):
        with pytest.raises(UsageError):
            parse_grid(bad)


def test_eval(capsys):
    assert run(capsys, "eval", "zeta", "2")[:2] == (0, "1.64493406684823\n")
    code, out, _ = run(capsys, "eval", "polygamma", "--order", "2", "0.5")
    assert code == 0 and out.startswith("-16.8287966442")
    code, _, err = run(capsys, "eval", "zeta", "1")
    assert code == 3 and "pole at s=1" in err
    code, _, err = run(capsys, "eval", "zeta", "1+")
    assert code == 2
    for args in (("hurwitz", "2", "--a", "0.5"), ("gamma", "5"), ("lngamma", "0.5+1i"),
                 ("beta", "3"), ("eta", "2"), ("logratio", "0.3"),
                 ("logratio", "0.3", "--order", "3", "--method", "contour"),
                 ("trigderiv", "0.5", "--order", "3", "--kind", "cos_half")):
        assert run(capsys, "eval", *args)[0] == 0
    assert run(capsys, "eval", "trigderiv", "0.5", "--order", "0")[0] == 2
    assert run(capsys, "eval", "logratio", "0.3", "--order", "2")[0] == 2


def test_eval_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["eval", "bessel", "1"])
    assert exc.value.code == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "I14", "--grid", "real:0.1:0.9:17",
                       "--tol", "1e-9", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["schema_version"] == "1"
    assert d["context"]["tol_abs"] == 1e-9 and d["context"]["grid"]["kind"] == "real_interval"
    assert d["summary"] == {"total": 17, "passed": 17, "failed": 0,
                            "max_residual": d["summary"]["max_residual"]}
    r = d["results"][0]
    assert set(r) == {"id", "s", "n", "mode", "lhs", "rhs", "abs_residual",
                      "rel_residual", "pass"}


def test_verify_all_defaults(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "all", "--n", "1:3")
    assert code == 0
    d = json.loads(out)
    assert len({r["id"] for r in d["results"]}) == 22
    assert d["summary"]["failed"] == 0


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--ids", "I99")
    assert code == 2 and "unknown identity" in err


def test_verify_failure_exit_code(capsys):
    # a tolerance below rounding makes some checks fail
    code, out, _ = run(capsys, "verify", "--ids", "I2", "--grid", "real:0.1:0.9:5",
                       "--tol", "1e-300", "--n", "1")
    assert code == 1 and json.loads(out)["summary"]["failed"] > 0


def test_json_round_trip_and_determinism(capsys, tmp_path):
    args = ["verify", "--ids", "I1,I2,I14", "--grid", "complex:0.1:0.9:-1:1:3:3", "--n", "1:2"]
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--out", str(p1))[0] == 0
    assert run(capsys, *args, "--out", str(p2))[0] == 0
    text = p1.read_text()
    assert text == p2.read_text()
    rep = rpt.from_json(text)
    assert rpt.to_json(rep) == text
    again = rpt.from_json(rpt.to_json(rep))
    assert again == rep


def test_csv_matches_json(capsys):
    base = ["verify", "--ids", "I3", "--grid", "list:0.3,0.7+0.2i", "--n", "1"]
    _, js, _ = run(capsys, *base, "--format", "json")
    _, cs, _ = run(capsys, *base, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    results = json.loads(js)["results"]
    assert list(rows[0]) == list(rpt.CSV_COLUMNS)
    assert len(rows) == len(results)
    for row, r in zip(rows, results):
        assert float(row["s_re"]) == r["s"]["re"] and float(row["s_im"]) == r["s"]["im"]
        assert float(row["lhs_re"]) == r["lhs"]["re"] and float(row["rhs_im"]) == r["rhs"]["im"]
        assert float(row["abs_residual"]) == r["abs_residual"]
        assert (row["pass"] == "true") == r["pass"]


def test_omega_commands(capsys):
    code, out, _ = run(capsys, "omega", "0.5", "--n", "1", "--all")
    assert code == 0
    lines = out.splitlines()
    assert all(l.split()[-1].startswith("-248.050213442") for l in lines[:4])
    assert float(lines[4].split()[1]) < 1e-8
    code, _, err = run(capsys, "omega", "0", "--n", "1")
    assert code == 3 and "pole at integer point" in err
    code, out, _ = run(capsys, "omega", "--beta", "--n", "1")
    assert code == 0 and "matched: derived" in out
    assert run(capsys, "omega", "--imaginary", "--n", "1")[0] == 0
    assert run(capsys, "omega", "0.3", "--functional")[0] == 0
    assert run(capsys, "omega", "0.3", "--golden")[0] == 0
    assert run(capsys, "omega", "--golden", "--n", "2")[0] == 0
    assert run(capsys, "omega", "0.3+0.4i", "--n", "2", "--rep", "R2")[0] == 0
    assert run(capsys, "omega", "--n", "1")[0] == 2
    code, out, _ = run(capsys, "omega", "1i", "--n", "2", "--all", "--format", "json")
    assert code == 0
    rep = rpt.from_json(out)
    assert rep.results[0].s == 1j and rpt.to_json(rep) == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zetaomega", "eval", "zeta", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1.64493406684823"
