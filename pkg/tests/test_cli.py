import json
import subprocess
import sys
from fractions import Fraction

import pytest

from cohomforms.cli import format_qexp, main, parse_factors
from oracles import BASIS_12_5


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_text_output(capsys):
    code, out, _ = run(["--level", "25", "--weight", "4", "--char", "trivial", "--prec", "10",
                        "--format", "text"], capsys)
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("q")]
    assert lines == [
        "q + q^9 + O(q^11)", "q^2 - q^7 - q^8 + O(q^11)", "q^3 + q^7 - 2*q^8 + O(q^11)",
        "q^4 - q^6 - 3*q^9 + O(q^11)", "q^5 - 4*q^10 + O(q^11)",
    ]
    assert "dimension: 5" in out and "cusps: 6" in out and "nullity: 7" in out


def test_json_output_round_trips(capsys):
    code, out, _ = run(["--level", "12", "--weight", "5", "--char", "kronecker", "--prec", "10",
                        "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["dimension"] == 5
    assert {k for k in doc} == {"level", "weight", "character", "mu", "num_cusps", "nullity",
                                "plus_dim", "dimension", "precision", "basis"}
    assert [[Fraction(x) for x in row] for row in doc["basis"]] == BASIS_12_5
    assert (doc["mu"], doc["num_cusps"], doc["nullity"], doc["plus_dim"]) == (24, 6, 8, 3)


def test_level_one_empty(capsys):
    code, out, _ = run(["--level", "1", "--weight", "4", "--char", "trivial", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["dimension"] == 0 and doc["basis"] == []


def test_csv_and_timing(capsys):
    code, out, _ = run(["-N", "11", "-k", "2", "--format", "csv", "--timing"], capsys)
    lines = out.splitlines()
    assert lines[0] == "n," + ",".join(str(i) for i in range(1, 11))
    assert lines[1] == "1,1,-2,-1,2,1,2,-2,0,-2,-2"
    assert any(l.startswith("# t_hecke_ns=") for l in lines)


def test_json_timing(capsys):
    _, out, _ = run(["-N", "11", "-k", "2", "--format", "json", "--timing"], capsys)
    assert set(json.loads(out)["timings_ns"]) == {"cosets", "relations", "nullspace", "cusps",
                                                   "hecke", "assembly"}


def test_factors_flag(capsys):
    assert parse_factors("2^2*3") == 12 and parse_factors("5^2") == 25
    code, out, _ = run(["--factors", "5^2", "--weight", "4", "--format", "json"], capsys)
    assert json.loads(out)["level"] == 25
    with pytest.raises(ValueError):
        parse_factors("4^2")


@pytest.mark.parametrize("args", [
    ["--weight", "4"],
    ["--level", "0", "--weight", "4"],
    ["--level", "5", "--weight", "1"],
    ["--level", "12", "--weight", "3", "--char", "gens:5=1/3"],
    ["--level", "12", "--factors", "2*3", "--weight", "2"],
    ["--level", "5", "--weight", "2", "--format", "xml"],
])
def test_usage_errors(args, capsys):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code != 0
    assert "usage" in capsys.readouterr().err


def test_precision_below_sturm_bound(capsys):
    code, _, err = run(["--level", "60", "--weight", "4", "--prec", "5"], capsys)
    assert code != 0 and "Sturm" in err


def test_cyclotomic_coefficients_print_exactly():
    z_row = [1, 0, Fraction(-1, 2)]
    assert format_qexp(z_row) == "q - 1/2*q^3 + O(q^4)"
    assert format_qexp([0, 0]) == "0"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "cohomforms", "-N", "11", "-k", "2", "--format", "csv"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[1].startswith("1,1,-2")
