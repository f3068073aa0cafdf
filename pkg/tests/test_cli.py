import json

import pytest

from anchorperms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_auto_uses_closed_form(capsys):
    code, out, _ = run(capsys, "count", "--k", "3", "--n", "9")
    assert code == 0
    assert out.strip() == "118"


def test_count_methods_agree(capsys):
    results = []
    for method in ("brute", "dp", "closed"):
        code, out, _ = run(capsys, "count", "--k", "2", "--n", "10", "--method", method)
        assert code == 0
        results.append(out.strip())
    assert results == ["19"] * 3


def test_count_dp_handles_large_k(capsys):
    code, out, _ = run(capsys, "count", "--k", "4", "--n", "30", "--method", "dp")
    assert code == 0
    assert int(out) > 0


def test_count_closed_rejects_unsupported_combinations(capsys):
    code, _, err = run(capsys, "count", "--k", "4", "--n", "5", "--method", "closed")
    assert code == 2
    assert "closed-form" in err
    code, _, err = run(
        capsys, "count", "--k", "2", "--n", "5", "--variant", "free", "--method", "closed"
    )
    assert code == 2


def test_count_variant_endpoints(capsys):
    code, out, _ = run(
        capsys, "count", "--k", "3", "--n", "6", "--variant", "endpoints:2,6"
    )
    assert code == 0
    assert int(out) >= 1


def test_bad_variant_spec(capsys):
    code, _, err = run(capsys, "count", "--k", "2", "--n", "5", "--variant", "bogus")
    assert code == 2
    code, _, err = run(
        capsys, "count", "--k", "2", "--n", "5", "--variant", "endpoints:1"
    )
    assert code == 2


def test_enumerate_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "2", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["1,2,3,4,5", "1,2,4,3,5", "1,3,2,4,5"]


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "2", "--n", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[1, 2, 3, 4, 5], [1, 2, 4, 3, 5], [1, 3, 2, 4, 5]]


def test_table_bfile(capsys):
    code, out, _ = run(capsys, "table", "--k", "3", "--max-n", "8")
    assert code == 0
    assert out == "1 1\n2 1\n3 1\n4 2\n5 6\n6 14\n7 28\n8 56\n"


def test_table_csv_and_json(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--max-n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1,1", "2,1", "3,1", "4,2"]
    code, out, _ = run(capsys, "table", "--k", "2", "--max-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 2
    assert payload["offset"] == 1
    assert payload["terms"] == [1, 1, 1, 2]


def test_table_methods_agree(capsys):
    outs = []
    for method in ("dp", "closed", "brute"):
        code, out, _ = run(
            capsys, "table", "--k", "3", "--max-n", "10", "--method", method
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_table_max_n_zero_is_empty(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--max-n", "0")
    assert code == 0
    assert out == ""


def test_mine_k3_reports_proven_recurrence(capsys):
    code, out, _ = run(capsys, "mine", "--k", "3", "--terms", "40", "--holdout", "10")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 8
    assert payload["coefficients"] == [2, -1, 2, 1, 1, 0, -1, -1]
    assert payload["gf_denominator"] == [1, -2, 1, -2, -1, -1, 0, 1, 1]
    assert payload["holdout_match"] is True
    assert payload["state_space_size"] == 26
    assert "not a proof" in payload["note"]


def test_mine_insufficient_data_is_usage_error(capsys):
    code, _, err = run(
        capsys, "mine", "--k", "3", "--terms", "10", "--holdout", "2",
        "--max-order", "8",
    )
    assert code == 2
    assert "insufficient data" in err


def test_verify_suites_pass(capsys):
    for suite in ("lemma2", "lemma33", "fgh", "recurrences", "gf"):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--max-n", "10")
        assert code == 0, f"suite {suite} failed:\n{out}"
        lines = out.splitlines()
        assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_oeis_uses_packaged_cache(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oeis")
    assert code == 0
    assert out.startswith("PASS")


def test_verify_oeis_offline_without_cache_is_env_error(capsys, tmp_path, monkeypatch):
    import requests

    monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(
        requests, "get", lambda *a, **kw: (_ for _ in ()).throw(
            requests.ConnectionError("no route")
        )
    )
    code, _, err = run(capsys, "verify", "--suite", "oeis")
    assert code == 3
    assert "skip" in err


def test_bench_dp_csv_shape(capsys):
    code, out, _ = run(capsys, "bench", "--k", "3", "--max-n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,seconds,peak_profiles"
    assert len(lines) == 6
    assert all(len(line.split(",")) == 3 for line in lines[1:])


def test_bench_brute_csv_shape(capsys):
    code, out, _ = run(capsys, "bench", "--k", "2", "--max-n", "6", "--method", "brute")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,seconds,nodes"
    assert len(lines) == 7


def test_bench_empty_range_prints_header_only(capsys):
    code, out, _ = run(capsys, "bench", "--k", "2", "--max-n", "0")
    assert code == 0
    assert out == "n,seconds,peak_profiles\n"


def test_unknown_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 2
