import json
import subprocess
import sys

import pytest

from curvereg.cli import SpecError, build_curve, main, parse_spec

GIAIMO4 = '{"field":{"prime":32003},"ambient":4,"components":[{"named":{"giaimo":4}}]}'
TWISTED = '{"ambient":4,"components":[{"named":"twisted_config"}]}'


def test_valid_document_round_trips():
    doc = parse_spec(GIAIMO4)
    assert doc.prime == 32003 and doc.ambient == 4
    assert parse_spec(doc.dumps()) == doc


def test_composite_prime_is_rejected():
    with pytest.raises(SpecError, match="not prime"):
        parse_spec(GIAIMO4.replace("32003", "32004"))


def test_rnc_rows_are_located():
    bad = {"ambient": 3, "components": [{"rnc": {"degree": 2, "rows": [[1, 0, 0], [0, 1], [0, 0, 1], [1, 1, 1]]}}]}
    with pytest.raises(SpecError) as err:
        build_curve(parse_spec(json.dumps(bad)))
    assert "components[0]" in err.value.where


def test_malformed_json_reports_position():
    with pytest.raises(SpecError) as err:
        parse_spec('{"ambient": 4,, }')
    assert "line 1" in err.value.where


def test_unknown_key_is_rejected():
    with pytest.raises(SpecError):
        parse_spec('{"ambient": 4, "components": [{"cubic": 1}]}')


def test_reg_output(capsys):
    assert main(["reg", GIAIMO4]) == 0
    assert capsys.readouterr().out.strip() == "reg(I_C) = 4, Ξ = 4, maximal: yes"


def test_secant_output(capsys):
    assert main(["secant", TWISTED, "--line", "e0,e3"]) == 0
    assert capsys.readouterr().out.strip() == "degree 3, extremal: yes"


def test_spec_errors_exit_with_two(capsys):
    assert main(["reg", GIAIMO4.replace("32003", "32004")]) == 2
    assert "not prime" in capsys.readouterr().err


def test_betti_and_invariants_commands(capsys):
    assert main(["betti", TWISTED]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("total:")
    assert main(["invariants", TWISTED]) == 0
    assert "1 + 5t" in capsys.readouterr().out


def test_verify_instance_checks_emit_jsonl(capsys):
    assert main(["verify", TWISTED, "--emit", "jsonl"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines and all(json.loads(l)["verdict"] != "fail" for l in lines)


def test_verify_suites_via_console_entry():
    proc = subprocess.run([sys.executable, "-m", "curvereg.cli", "verify", "--suite", "all", "--seed", "7"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "fail" in proc.stdout.lower()  # the summary table has a fail column


def test_fuzz_is_deterministic(capsys):
    args = ["fuzz", "--seed", "2", "--count", "2", "--max-degree", "4", "--emit", "jsonl"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
