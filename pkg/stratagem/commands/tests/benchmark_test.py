"""# stratagem.commands.tests.benchmark_test

Bench and report command test suite, including the full generate-select-bench-report chain.
"""

from pathlib                        import Path
from re                             import search
from typing                         import Callable, List

from pandas                         import DataFrame, read_csv

from stratagem.benchmark            import records_from_jsonl, RunRecord
from stratagem.pipeline.tests.conftest  import RESPONSES_PATH

# BENCH ============================================================================================

def test_bench_writes_runs(run: Callable, tmp_path: Path) -> None:
    """# Test Bench Appends One Record per Cell."""
    # Bench.
    code, out, _ =  run(
                        "bench", "--suite", "towers", "--systems", "tdg,blind", "--algos", "gbfs",
                        "--time-limit", "60", "--out", str(tmp_path / "bench")
                    )
    records:    List[RunRecord] =   records_from_jsonl(tmp_path / "bench" / "runs.jsonl")

    assert code == 0,                                   f"Expected exit 0, got {code}"
    assert len(records) == 4,                           f"Expected 2 problems x 2 systems, got {len(records)}"
    assert {r.system for r in records} == {"tdg", "blind"},     f"Unexpected systems: {records}"
    assert "cells=4" in out,                            f"Unexpected summary: {out}"

def test_bench_appends_to_existing_runs(run: Callable, tmp_path: Path) -> None:
    """# Test a Second Bench Into the Same Directory Appends."""
    # Bench twice.
    for _ in range(2):
        run("bench", "--suite", "towers", "--systems", "tdg", "--algos", "gbfs", "--out", str(tmp_path / "bench"))

    assert len(records_from_jsonl(tmp_path / "bench" / "runs.jsonl")) == 4,   "Runs should accumulate"

def test_bench_rejects_unknown_system(run: Callable, tmp_path: Path) -> None:
    """# Test Unknown System Exits 1 Before Any Cell Runs."""
    # Bench.
    code, _, err =  run("bench", "--suite", "towers", "--systems", "tdg,nonexistent", "--out", str(tmp_path / "bench"))

    assert code == 1,                                       f"Expected exit 1, got {code}"
    assert not (tmp_path / "bench" / "runs.jsonl").exists(),    "No cell should have run"
    assert "'nonexistent'" in err,                          f"Diagnostic should name the system: {err!r}"

def test_bench_rejects_unknown_algorithm(run: Callable, tmp_path: Path) -> None:
    """# Test Unknown Algorithm Exits 1."""
    # Bench.
    code, _, err =  run("bench", "--suite", "towers", "--algos", "gbfs,dfs", "--out", str(tmp_path / "bench"))

    assert code == 1,       f"Expected exit 1, got {code}"
    assert "dfs" in err,    f"Diagnostic should name the algorithm: {err!r}"

# REPORT ===========================================================================================

def test_report_rejects_empty_runs(run: Callable, tmp_path: Path) -> None:
    """# Test Empty Runs File Exits 1."""
    # Empty runs.
    (tmp_path / "runs.jsonl").write_text("", encoding = "utf-8")

    assert run("report", "--runs", str(tmp_path / "runs.jsonl"))[0] == 1,     "Empty runs should fail"

def test_report_defaults_next_to_runs(run: Callable, tmp_path: Path) -> None:
    """# Test Reports Land Beside the Runs File by Default."""
    # Bench, then report.
    run("bench", "--suite", "towers", "--systems", "tdg,blind", "--algos", "gbfs", "--out", str(tmp_path / "bench"))
    code, out, _ =  run("report", "--runs", str(tmp_path / "bench" / "runs.jsonl"))

    # Coverage table.
    coverage:   DataFrame = read_csv(tmp_path / "bench" / "reports" / "coverage.csv")

    assert code == 0,                                       f"Expected exit 0, got {code}"
    assert str(tmp_path / "bench" / "reports" / "coverage.csv") in out.splitlines(),  f"Written files: {out}"
    assert list(coverage.columns) == ["domain", "tdg", "blind"],    f"Unexpected columns: {list(coverage.columns)}"

# CHAIN ============================================================================================

def test_full_chain(run: Callable, tmp_path: Path) -> None:
    """# Test Generate, Select, Bench and Report on Jobs.

    The selected candidate covers at least as many problems as TDG.
    """
    # Generate and select.
    candidates: Path =  tmp_path / "candidates"
    run("generate", "--suite", "jobs", "--provider", f"mock:{RESPONSES_PATH}", "--n", "20", "--out", str(candidates))
    _, out, _ =         run("select", "--suite", "jobs", "--candidates", str(candidates), "--node-budget", "100")
    program:    str =   search(r"program=(\S+)", out).group(1)

    # Bench TDG against the selected program, then report.
    bench:      Path =  tmp_path / "bench"
    assert run("bench", "--suite", "jobs", "--systems", f"tdg,{program}", "--algos", "gbfs", "--out", str(bench))[0] == 0
    assert run("report", "--runs", str(bench / "runs.jsonl"), "--out", str(tmp_path / "reports"))[0] == 0

    # Total coverage row.
    coverage:   DataFrame = read_csv(tmp_path / "reports" / "coverage.csv").set_index("domain")

    assert list(coverage.columns) == ["tdg", "cand_00"],            f"Unexpected columns: {list(coverage.columns)}"
    assert coverage.loc["Total", "cand_00"] >= coverage.loc["Total", "tdg"], \
        f"Selected candidate should cover at least as much as TDG: {coverage.to_dict()}"
    assert coverage.loc["Total", "tdg"] == 3,                       f"TDG should solve every jobs problem: {coverage.to_dict()}"
