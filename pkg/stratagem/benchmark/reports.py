"""# stratagem.benchmark.reports

CSV reports over aggregates:

* `coverage.csv`: virtual-best coverage, one row per domain plus `Total`, one column per system;
* `coverage_by_algorithm.csv`: the same per (system, algorithm);
* `scatter_<a>_vs_<b>.csv`: expansions of two systems per problem;
* `cactus_<system>.csv`: ascending expansions against the number of problems solved;
* `head_to_head.csv`: wins, ties and losses per system pair, domain and metric;
* `medians.csv`: pooled (virtual best) and per-algorithm median expansions over solved problems;
* `plan_length_intersection.csv`: median plan length per system on the problems all systems solve.
"""

__all__ =   ["emit_reports"]

from itertools                          import combinations
from logging                            import Logger
from pathlib                            import Path
from typing                             import List, Union

from pandas                             import DataFrame

from stratagem.benchmark.aggregates     import *
from stratagem.utilities                import get_child

# Module logger.
LOGGER: Logger =    get_child("reports")

def emit_reports(
    aggregates: Aggregates,
    directory:  Union[str, Path]
) -> List[Path]:
    """# Emit Reports.

    ## Args:
        * aggregates    (Aggregates):   Aggregates computed from run records.
        * directory     (str | Path):   Output directory, created if missing.

    ## Raises:
        * OSError:  If the directory cannot be written.

    ## Returns:
        * List[Path]:   Files written.
    """
    # Ensure directory.
    directory:  Path =          Path(directory)
    directory.mkdir(parents = True, exist_ok = True)

    # Tables by file name.
    tables:     dict =          {
                                    "coverage.csv":                     _coverage_(aggregates),
                                    "coverage_by_algorithm.csv":        _algorithm_coverage_(aggregates),
                                    "head_to_head.csv":                 _head_to_head_(aggregates),
                                    "medians.csv":                      _medians_(aggregates),
                                    "plan_length_intersection.csv":     _intersection_(aggregates),
                                }

    # One scatter per system pair.
    for a, b in combinations(aggregates.systems, 2):
        tables[f"scatter_{a}_vs_{b}.csv"] = DataFrame(
                                                scatter(aggregates.virtual_bests[a], aggregates.virtual_bests[b]),
                                                columns = ["domain", "problem", f"{a}_expanded", f"{b}_expanded"]
                                            ).astype({f"{a}_expanded": "Int64", f"{b}_expanded": "Int64"})

    # One cactus per system.
    for system in aggregates.systems:
        tables[f"cactus_{system}.csv"] =    DataFrame(cactus(aggregates.virtual_bests[system]), columns = ["expanded", "solved"])

    # Write tables.
    written:    List[Path] =    []

    for name, table in tables.items():
        table.to_csv(directory / name, index = False)
        written.append(directory / name)

    # Log output.
    LOGGER.info(f"Wrote {len(written)} report(s) to {directory}")

    # Provide files.
    return written

# TABLES ===========================================================================================

def _coverage_(aggregates: Aggregates) -> DataFrame:
    """# Coverage per Domain and System, with a Total Row."""
    # Domain rows.
    rows:   list =  [
                        [domain, *(aggregates.virtual_bests[s].coverage(domain) for s in aggregates.systems)]
                        for domain in aggregates.domains
                    ]

    # Total row.
    rows.append(["Total", *(aggregates.virtual_bests[s].coverage() for s in aggregates.systems)])

    return DataFrame(rows, columns = ["domain", *aggregates.systems])

def _algorithm_coverage_(aggregates: Aggregates) -> DataFrame:
    """# Coverage per (System, Algorithm) and Domain, with a Total Column."""
    return  DataFrame(
                [
                    [
                        system, algorithm,
                        *(algorithm_coverage(aggregates.records, system, algorithm, domain) for domain in aggregates.domains),
                        algorithm_coverage(aggregates.records, system, algorithm)
                    ]
                    for system in aggregates.systems
                    for algorithm in aggregates.algorithms
                ],
                columns = ["system", "algorithm", *aggregates.domains, "Total"]
            )

def _head_to_head_(aggregates: Aggregates) -> DataFrame:
    """# Head-to-Head Rows per Ordered Pair, Metric and Domain (plus Total)."""
    # Collect rows.
    rows:   list =  []

    for a, b in combinations(aggregates.systems, 2):
        for metric in ("expanded", "plan_length"):
            for domain in [*aggregates.domains, None]:

                # Compare.
                result: HeadToHead =    head_to_head(aggregates.virtual_bests[a], aggregates.virtual_bests[b], metric, domain)

                rows.append([
                    a, b, metric, domain or "Total", result.wins, result.ties, result.losses,
                    None if result.mean_improvement is None else round(result.mean_improvement, 2)
                ])

    return  DataFrame(
                rows,
                columns = ["system_a", "system_b", "metric", "domain", "wins", "ties", "losses", "mean_improvement_pct"]
            )

def _medians_(aggregates: Aggregates) -> DataFrame:
    """# Pooled and per-Algorithm Median Expansions over Solved Problems."""
    # Collect rows.
    rows:   list =  []

    for system in aggregates.systems:

        # Pooled over the virtual best.
        pooled: list =  [entry.best_expanded for entry in aggregates.virtual_bests[system].solved.values()]
        rows.append([system, "virtual-best", len(pooled), lower_median(pooled)])

        # Per algorithm.
        for algorithm in aggregates.algorithms:

            values: list =  [
                                r.expanded for r in aggregates.records
                                if r.system == system and r.algorithm == algorithm and r.solved
                            ]
            rows.append([system, algorithm, len(values), lower_median(values)])

    return DataFrame(rows, columns = ["system", "algorithm", "solved", "median_expanded"]).astype({"median_expanded": "Int64"})

def _intersection_(aggregates: Aggregates) -> DataFrame:
    """# Plan-Length Medians on the Commonly Solved Set."""
    # Common set.
    size, medians = plan_length_intersection([aggregates.virtual_bests[s] for s in aggregates.systems])

    return  DataFrame(
                [[system, size, medians[system]] for system in aggregates.systems],
                columns = ["system", "problems", "median_plan_length"]
            ).astype({"median_plan_length": "Int64"})
