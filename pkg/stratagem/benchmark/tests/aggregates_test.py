"""# stratagem.benchmark.tests.aggregates_test

Aggregate computation test suite.
"""

from pathlib                import Path
from random                 import Random
from typing                 import List

from pytest                 import mark

from stratagem.benchmark    import *

def _run_(system: str, algorithm: str, problem: str, expanded: int = None, plan_length: int = 10, domain: str = "d") -> RunRecord:
    """# Record; solved when expansions are given."""
    if expanded is None: return RunRecord(domain, problem, system, algorithm, "timeout", 1000, 0, 1.0)
    return RunRecord(domain, problem, system, algorithm, "solved", expanded, plan_length, 0.1)

def _random_records_(seed: int, systems: tuple = ("a", "b"), problems: int = 12) -> List[RunRecord]:
    """# Random Matrix Outcomes."""
    rng:    Random =    Random(seed)

    return  [
                _run_(system, algorithm, f"p{i:02d}",
                      rng.randint(1, 500) if rng.random() < 0.6 else None, rng.randint(1, 30),
                      domain = "d1" if i % 2 else "d2")
                for system in systems
                for algorithm in ("astar", "gbfs", "wastar")
                for i in range(problems)
            ]

# VIRTUAL BEST =====================================================================================

def test_virtual_best_takes_fewest_expansions() -> None:
    """# Test Best Over Solving Algorithms."""
    # A* fails, GBFS and WA* solve.
    records:    list =          [_run_("h", "astar", "p"), _run_("h", "gbfs", "p", 120, 12), _run_("h", "wastar", "p", 200, 9)]
    entry:      VirtualBestEntry =  virtual_best(records, "h").entries[("d", "p")]

    assert entry.solved,                    "Problem should count as solved"
    assert entry.best_expanded == 120,      f"Expected 120 expansions, got {entry.best_expanded}"
    assert entry.best_plan_length == 9,     f"Expected shortest plan 9, got {entry.best_plan_length}"

def test_unsolved_by_every_algorithm() -> None:
    """# Test Problem Solved by No Algorithm."""
    # Every algorithm fails.
    vb: VirtualBest =   virtual_best([_run_("h", a, "p") for a in ("astar", "gbfs")], "h")

    assert not vb.entries[("d", "p")].solved and vb.coverage() == 0,    "Problem should not count as solved"

def test_virtual_best_coverage_dominates_algorithms() -> None:
    """# Test Virtual Best Covers At Least Every Algorithm."""
    # Random outcomes.
    records:    list =  _random_records_(3)

    for system in ("a", "b"):
        coverage:   int =   virtual_best(records, system).coverage()

        assert all(coverage >= algorithm_coverage(records, system, a) for a in ("astar", "gbfs", "wastar")), \
            f"Virtual best of {system} should dominate each algorithm"

# HEAD TO HEAD =====================================================================================

def test_head_to_head_example() -> None:
    """# Test One Win, One Tie, Improvement of 50%."""
    # Two shared problems.
    a:      VirtualBest =   virtual_best([_run_("a", "gbfs", "p1", 50), _run_("a", "gbfs", "p2", 70)], "a")
    b:      VirtualBest =   virtual_best([_run_("b", "gbfs", "p1", 100), _run_("b", "gbfs", "p2", 70)], "b")
    result: HeadToHead =    head_to_head(a, b)

    assert (result.wins, result.ties, result.losses) == (1, 1, 0),  f"Unexpected counts: {result}"
    assert result.mean_improvement == 50.0,                         f"Expected 50% improvement, got {result.mean_improvement}"

def test_head_to_head_disjoint() -> None:
    """# Test No Shared Solved Problem."""
    # Disjoint solved sets.
    a:      VirtualBest =   virtual_best([_run_("a", "gbfs", "p1", 5), _run_("a", "gbfs", "p2")], "a")
    b:      VirtualBest =   virtual_best([_run_("b", "gbfs", "p1"), _run_("b", "gbfs", "p2", 5)], "b")

    assert head_to_head(a, b) == HeadToHead(0, 0, 0, None), "Disjoint solved sets should not be compared"

@mark.parametrize("seed", range(4))
@mark.parametrize("metric", ["expanded", "plan_length"])
def test_head_to_head_antisymmetry(seed: int, metric: str) -> None:
    """# Test Swapping Systems Swaps Wins and Losses."""
    # Random outcomes.
    records:    list =          _random_records_(seed)
    a, b =                      virtual_best(records, "a"), virtual_best(records, "b")

    # Both directions.
    forward:    HeadToHead =    head_to_head(a, b, metric)
    backward:   HeadToHead =    head_to_head(b, a, metric)

    assert (forward.wins, forward.ties, forward.losses) == (backward.losses, backward.ties, backward.wins), \
        f"Expected swapped counts, got {forward} and {backward}"

def test_head_to_head_per_domain_sums_to_total() -> None:
    """# Test Domain Split Partitions the Comparison."""
    # Random outcomes.
    records:    list =  _random_records_(9)
    a, b =              virtual_best(records, "a"), virtual_best(records, "b")

    # Per domain.
    parts:      list =  [head_to_head(a, b, domain = domain) for domain in ("d1", "d2")]
    total:      HeadToHead =    head_to_head(a, b)

    assert sum(p.wins for p in parts) == total.wins and sum(p.losses for p in parts) == total.losses, \
        "Domain comparisons should add up to the total"

# MEDIANS ==========================================================================================

@mark.parametrize(
    "values, expected",
    [([3, 5, 7], 5), ([7, 3, 5, 9], 5), ([4], 4), ([8, 2], 2), ([], None)]
)
def test_lower_median(values: list, expected: int) -> None:
    """# Test Lower Median on Odd, Even and Empty Inputs."""
    assert lower_median(values) == expected,    f"Median of {values}: expected {expected}, got {lower_median(values)}"

def test_median_ignores_unsolved() -> None:
    """# Test Unsolved Problems Do Not Enter the Median."""
    # Solved 10, 20, 30; unsolved with huge expansions.
    records:    list =          [_run_("h", "gbfs", f"p{i}", e) for i, e in enumerate((10, 20, 30))] + \
                                [RunRecord("d", "p9", "h", "gbfs", "timeout", 10 ** 9)]
    vb:         VirtualBest =   virtual_best(records, "h")

    assert lower_median([e.best_expanded for e in vb.solved.values()]) == 20,   "Median should use solved problems only"

def test_plan_length_intersection() -> None:
    """# Test Common Solved Set and Medians."""
    # a solves p1, p2, p3; b solves p2, p3.
    a:      VirtualBest =   virtual_best([_run_("a", "gbfs", p, 1, n) for p, n in (("p1", 2), ("p2", 8), ("p3", 4))], "a")
    b:      VirtualBest =   virtual_best([_run_("b", "gbfs", "p1")] + [_run_("b", "gbfs", p, 1, n) for p, n in (("p2", 6), ("p3", 10))], "b")

    # Intersect.
    size, medians = plan_length_intersection([a, b])

    assert size == 2,                           f"Expected two common problems, got {size}"
    assert medians == {"a": 4, "b": 6},         f"Unexpected medians: {medians}"

# SERIES ===========================================================================================

@mark.parametrize("seed", range(4))
def test_cactus_endpoint_is_coverage(seed: int) -> None:
    """# Test Cactus Ends at Coverage and Is Monotone."""
    # Random outcomes.
    vb:     VirtualBest =   virtual_best(_random_records_(seed), "a")
    series: list =          cactus(vb)

    assert (series[-1][1] if series else 0) == vb.coverage(),               "Cactus should end at the coverage"
    assert all(x1 <= x2 for (x1, _), (x2, _) in zip(series, series[1:])),  "Expansions should be ascending"
    assert [y for _, y in series] == list(range(1, len(series) + 1)),       "Solved counts should step by one"

def test_scatter_marks_unsolved() -> None:
    """# Test Scatter Rows Over Both Systems' Problems."""
    # a solves p1, b solves p2 only.
    a:      VirtualBest =   virtual_best([_run_("a", "gbfs", "p1", 5), _run_("a", "gbfs", "p2")], "a")
    b:      VirtualBest =   virtual_best([_run_("b", "gbfs", "p1"), _run_("b", "gbfs", "p2", 7)], "b")

    assert scatter(a, b) == [("d", "p1", 5, None), ("d", "p2", None, 7)],   f"Unexpected scatter: {scatter(a, b)}"

def test_compute_aggregates_orders() -> None:
    """# Test First-Seen Orders of Systems, Algorithms and Domains."""
    # Mixed records.
    aggregates: Aggregates =    compute_aggregates([
                                    _run_("tdg", "gbfs", "p1", 3, domain = "towers"),
                                    _run_("blind", "astar", "p1", domain = "jobs"),
                                    _run_("tdg", "astar", "p2", 4, domain = "jobs"),
                                ])

    assert aggregates.systems == ["tdg", "blind"],          f"Unexpected systems: {aggregates.systems}"
    assert aggregates.algorithms == ["gbfs", "astar"],      f"Unexpected algorithms: {aggregates.algorithms}"
    assert aggregates.domains == ["towers", "jobs"],        f"Unexpected domains: {aggregates.domains}"
    assert aggregates.virtual_bests["tdg"].coverage() == 2, "tdg should solve both problems"

def test_appended_batch_is_counted_once(tmp_path: Path) -> None:
    """# Test Repeated Runs of the Same Cells Collapse."""
    # Append one batch twice.
    batch:      list =          [_run_("tdg", "gbfs", "p1", 3), _run_("tdg", "gbfs", "p2")]
    for _ in range(2): append_records(tmp_path / "runs.jsonl", batch)

    # Aggregate what was read back.
    aggregates: Aggregates =    compute_aggregates(records_from_jsonl(tmp_path / "runs.jsonl"))
    coverage:   int =           algorithm_coverage(aggregates.records, "tdg", "gbfs")

    assert len(aggregates.records) == 2,                            f"Expected 2 cells, got {len(aggregates.records)}"
    assert coverage == 1,                                           f"gbfs should solve one problem once, got {coverage}"
    assert coverage <= aggregates.virtual_bests["tdg"].coverage(),  "Virtual best should dominate gbfs"

def test_latest_record_of_a_cell_wins() -> None:
    """# Test Rerun Replaces the Earlier Outcome."""
    # Timeout, then a solved rerun of the same cell.
    aggregates: Aggregates =    compute_aggregates([_run_("tdg", "gbfs", "p1"), _run_("tdg", "gbfs", "p1", 9)])

    assert [r.status for r in aggregates.records] == ["solved"],    f"Unexpected records: {aggregates.records}"
    assert aggregates.virtual_bests["tdg"].entries[("d", "p1")].best_expanded == 9,   \
        "Virtual best should use the rerun"
