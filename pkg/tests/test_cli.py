"""Command line output formats and exit codes."""

import json

import pytest

from eqarbor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_va_line(capsys):
    code, out, _ = run(capsys, "va", "5", "6")
    assert code == 0
    assert out.strip() == "va=2 case=BIP_C3_COND b=2 c=3"


def test_va_small_graph_has_no_decomposition(capsys):
    code, out, _ = run(capsys, "va", "1", "1", "1")
    assert code == 0
    assert out.strip() == "va=2 case=TRI_SMALL"


def test_va_oracle_check(capsys):
    code, out, _ = run(capsys, "va", "7", "7", "--oracle-check")
    assert code == 0
    assert out.strip().endswith("oracle=4 MATCH")


def test_va_needs_two_or_three_parts(capsys):
    code, _, err = run(capsys, "va", "2", "2", "2", "2")
    assert code == 2
    assert "2 or 3 parts" in err


def test_va_oracle_only_takes_any_arity(capsys):
    code, out, _ = run(capsys, "va", "2", "2", "2", "2", "--oracle-only")
    assert code == 0
    assert out.startswith("va=3")


def test_va_closed_form_is_r2_only(capsys):
    code, _, err = run(capsys, "va", "5", "6", "--r", "3")
    assert code == 2


def test_p_output(capsys):
    code, out, _ = run(capsys, "p", "--q", "14", "7", "7")
    assert code == 0
    assert out.strip() == "p=8 d=2"


def test_p_infeasible_q(capsys):
    code, _, err = run(capsys, "p", "--q", "3", "7", "7")
    assert code == 1
    assert "no proper equitable" in err


def test_witness_block_walk(capsys):
    code, out, _ = run(capsys, "witness", "--q", "3", "2", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["parts"] == [2, 5]
    assert doc["r"] == 2
    assert [c["counts"] for c in doc["classes"]] == [[2, 1], [0, 2], [0, 2]]
    assert all("vertices" in c for c in doc["classes"])


def test_witness_straddle_pattern(capsys):
    code, out, _ = run(capsys, "witness", "--q", "2", "1", "2", "4")
    assert code == 0
    assert [c["counts"] for c in json.loads(out)["classes"]] == [[0, 0, 4], [1, 2, 0]]


def test_witness_nonexistent(capsys):
    code, out, _ = run(capsys, "witness", "--q", "3", "7", "7")
    assert code == 1
    assert out.strip() == "NONEXISTENT"


def test_witness_verify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "witness", "--q", "4", "3", "4", "4")
    assert code == 0
    path = tmp_path / "witness.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.strip() == "VALID"


def test_verify_invalid_coloring(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"parts": [2, 2], "r": 2, "classes": [{"counts": [2, 2]}]}))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[0] == "INVALID"
    assert lines[1].startswith("not-forest")


def test_verify_parse_errors(tmp_path, capsys):
    path = tmp_path / "trunc.json"
    path.write_text('{"parts": [2, 2]')
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2

    path = tmp_path / "unsorted.json"
    path.write_text(json.dumps({"parts": [5, 2], "r": 2, "classes": [{"counts": [5, 2]}]}))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "ascending" in err

    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2


def test_oracle_exit_codes(capsys):
    code, out, _ = run(capsys, "oracle", "--q", "2", "5", "6")
    assert code == 0
    assert out.strip() == "EXISTS"
    code, out, _ = run(capsys, "oracle", "--q", "3", "7", "7")
    assert code == 1
    assert out.strip() == "NONEXISTENT"


def test_oracle_size_bound_is_configurable(capsys):
    code, _, err = run(capsys, "oracle", "--q", "4", "20", "20")
    assert code == 2
    assert "bound" in err
    code, out, _ = run(capsys, "oracle", "--q", "4", "20", "20", "--max-n", "40")
    assert code == 0  # four independent classes of 10
    assert out.strip() == "EXISTS"


def test_sweep_rows_and_header(capsys):
    code, out, _ = run(capsys, "sweep", "--bipartite", "--max-sum", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,parts,N,b,c,va_closed,case_tag,va_oracle,match"
    assert len(lines) - 1 == 16
    assert lines[1] == "bipartite,1x1,2,0,2,1,BIP_SMALL,,"


def test_sweep_oracle_all_match(capsys):
    code, out, _ = run(capsys, "sweep", "--tripartite", "--max-sum", "9", "--oracle")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert rows
    assert all(row.endswith(",1") for row in rows)


def test_sweep_to_file(tmp_path, capsys):
    path = tmp_path / "table.csv"
    code, out, _ = run(capsys, "sweep", "--bipartite", "--max-sum", "6", "--out", str(path))
    assert code == 0
    assert out == ""
    assert path.read_text().startswith("kind,parts")


def test_sweep_range_guards(capsys):
    code, _, _ = run(capsys, "sweep", "--bipartite", "--max-sum", "1")
    assert code == 2
    code, _, err = run(capsys, "sweep", "--bipartite", "--max-sum", "40", "--oracle")
    assert code == 2
    assert "bound" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["va", "0", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--bipartite", "--tripartite", "--max-sum", "6"])
    assert exc.value.code == 2
