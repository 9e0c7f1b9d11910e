import json

import pytest

from qqueens.cli import main
from qqueens.cache import ENV_VAR


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_queen_pairs(capsys):
    code, out, _ = run_cli(capsys, "count", "--piece", "2,2", "--q", "2", "--n", "1..5")
    assert code == 0
    counts = [line.split()[1] for line in out.strip().splitlines()[1:]]
    assert counts == ["0", "0", "8", "44", "140"]


def test_count_rejects_illegal_piece(capsys):
    with pytest.raises(SystemExit):
        main(["count", "--piece", "0,0", "--q", "3", "--n", "3"])


def test_count_explicit_moves(capsys):
    code, out, _ = run_cli(capsys, "count", "--moves", "[[1,0]]", "--q", "2", "--n", "2")
    assert code == 0
    assert out.strip().splitlines()[1].split() == ["2", "4"]


def test_count_json_format(capsys):
    code, out, _ = run_cli(capsys, "count", "--piece", "1,1", "--q", "2", "--n", "2..3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"count": "3", "n": "2"}, {"count": "22", "n": "3"}]


def test_count_budget_exceeded_flags_partial(capsys):
    code, out, err = run_cli(
        capsys, "count", "--piece", "2,2", "--q", "3", "--n", "1..12", "--budget", "4000"
    )
    assert code == 3
    assert "budget" in err
    assert "partial" in out


def test_fit_queen_three_pieces_json(capsys):
    code, out, _ = run_cli(
        capsys, "fit", "--piece", "2,2", "--q", "3", "--n", "1..17", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["period"] == 2 and obj["degree"] == 6
    from qqueens.formulas import table2_row
    from qqueens.quasipoly import QuasiPolynomial

    assert QuasiPolynomial.from_json_dict(obj) == table2_row(2, 2)


def test_fit_semirook_two_pieces(capsys):
    code, out, _ = run_cli(capsys, "fit", "--piece", "1,0", "--q", "2", "--n", "1..7")
    assert code == 0
    assert "period" in out and "1" in out


def test_fit_rook_three_pieces(capsys):
    code, out, _ = run_cli(
        capsys, "fit", "--piece", "2,0", "--q", "3", "--n", "1..9", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    from qqueens.formulas import table2_row
    from qqueens.quasipoly import QuasiPolynomial

    assert QuasiPolynomial.from_json_dict(obj) == table2_row(2, 0)


def test_fit_insufficient_samples_fails(capsys):
    code, _, err = run_cli(capsys, "fit", "--piece", "2,2", "--q", "3", "--n", "1..8")
    assert code == 1
    assert "fit failed" in err or "inconsistent" in err


def test_verify_coeffs_scope(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "coeffs")
    assert code == 0
    assert "FAIL" not in out


def test_verify_tables_scope_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "tables", "--n-max", "4")
    assert code == 0
    assert "FAIL" not in out


def test_verify_gamma5_sign_scope(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "gamma5-sign")
    assert code == 0
    assert "three-piece table carries the correct sign" in out


def test_audit_report_json(capsys):
    from qqueens.audit import case_catalog

    code, out, _ = run_cli(
        capsys, "audit", "--piece", "2,2", "--n", "1..3", "--report", "json"
    )
    assert code == 0
    records = json.loads(out)
    assert all(set(r) == {"case", "h", "k", "n", "brute", "closed", "match"} for r in records)
    assert all(r["match"] for r in records)
    assert {r["case"] for r in records} == {c.name for c in case_catalog()}


def test_audit_all_pieces_small(capsys):
    code, out, _ = run_cli(capsys, "audit", "--n", "1..2", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert all(r["match"] for r in records)


def test_types_queen_q2(capsys):
    code, out, _ = run_cli(capsys, "types", "--piece", "1,2", "--q", "2", "--n", "1..7")
    assert code == 0
    assert "3" in out  # h + k = 3


def test_types_queen_q3(capsys):
    code, out, _ = run_cli(capsys, "types", "--piece", "2,2", "--q", "3", "--n", "1..17")
    assert code == 0
    assert "36" in out


def test_types_exploratory_moves(capsys):
    # a three-move rider outside the h,k family: slopes 0, +1, and 2
    code, out, _ = run_cli(
        capsys, "types", "--moves", "[[1,0],[1,1],[1,2]]", "--q", "2", "--n", "1..14"
    )
    assert code == 0
    assert "exploratory" in out


def test_types_exploratory_three_pieces_matches_conjecture(capsys):
    code, out, _ = run_cli(
        capsys, "types", "--moves", "[[1,0],[1,1],[1,2]]", "--q", "3", "--n", "1..24"
    )
    assert code == 0
    assert "exploratory" in out
    assert "17" in out and "True" in out


def test_formulas_dump(capsys):
    code, out, _ = run_cli(capsys, "formulas", "--piece", "2,2", "--q", "3", "--format", "latex")
    assert code == 0
    assert "tabular" in out and "gamma2" in out


def test_formulas_requires_piece(capsys):
    code, _, err = run_cli(capsys, "formulas", "--q", "3")
    assert code == 2


def test_cache_round_trip_and_byte_identical_reports(tmp_path, capsys):
    cache_file = tmp_path / "counts.jsonl"
    args = ["count", "--piece", "2,2", "--q", "2", "--n", "1..6", "--cache", str(cache_file), "--format", "json"]
    code1, out1, _ = run_cli(capsys, *args)
    assert code1 == 0
    assert cache_file.exists()
    first = cache_file.read_text()
    code2, out2, _ = run_cli(capsys, *args)
    assert code2 == 0
    assert out1 == out2  # warm rerun is byte-identical
    assert cache_file.read_text() == first  # nothing re-appended


def test_cache_corrupt_lines_skipped(tmp_path, capsys):
    cache_file = tmp_path / "counts.jsonl"
    cache_file.write_text(
        '{"moves": [[1, 0]], "q": 2, "n": 2, "count": "999"}\n'
        "not json at all\n"
        '{"moves": [[1, 0]], "q": 2, "count": "7"}\n'
    )
    code, out, err = run_cli(
        capsys, "count", "--moves", "[[1,0]]", "--q", "2", "--n", "2", "--cache", str(cache_file), "--format", "json"
    )
    assert code == 0
    assert "skipping corrupt cache line" in err
    # the valid (wrong) cached value is trusted over recomputation by design
    assert json.loads(out) == [{"n": "2", "count": "999"}]


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache_file = tmp_path / "env_cache.jsonl"
    monkeypatch.setenv(ENV_VAR, str(cache_file))
    code, _, _ = run_cli(capsys, "count", "--piece", "1,0", "--q", "2", "--n", "1..3")
    assert code == 0
    assert cache_file.exists()


def test_verify_exit_nonzero_on_failure(monkeypatch, capsys):
    # force one claim to fail to confirm the exit-status contract
    import qqueens.reports as reports

    real = reports.suite_coeffs

    def broken():
        claims = real()
        claims.append(reports.ClaimResult("forced failure", False))
        return claims

    monkeypatch.setattr(reports, "suite_coeffs", broken)
    code, out, _ = run_cli(capsys, "verify", "--scope", "coeffs")
    assert code == 1
    assert "FAIL" in out
