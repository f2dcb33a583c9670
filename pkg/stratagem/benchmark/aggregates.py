"""# stratagem.benchmark.aggregates

Aggregates over run records: virtual best per system, coverage, medians, head-to-head comparisons,
cactus and scatter series and plan-length medians on the commonly solved set.

A problem counts as solved by a system's virtual best if any algorithm solved it; its expansions
are those of the solving algorithm with the fewest expansions and its plan length is the shortest
among the solving algorithms. Medians of an even number of values take the lower median.
"""

__all__ =   [
                "Aggregates",
                "algorithm_coverage",
                "cactus",
                "compute_aggregates",
                "HeadToHead",
                "head_to_head",
                "lower_median",
                "plan_length_intersection",
                "scatter",
                "virtual_best",
                "VirtualBest",
                "VirtualBestEntry"
            ]

from dataclasses                    import dataclass, field
from logging                        import Logger
from typing                         import Dict, Iterable, List, Optional, Sequence, Tuple

from numpy                          import asarray, cumsum, ndarray, ones, sort

from stratagem.benchmark.records    import RunRecord
from stratagem.utilities            import get_child

# Initialize logger.
LOGGER:         Logger =    get_child("aggregates")

# (domain, problem) key.
ProblemKey =    Tuple[str, str]

@dataclass(frozen = True)
class VirtualBestEntry():
    r"""# :class:`VirtualBestEntry`

    ## Properties:
    * :param:`solved`           (bool): Some algorithm solved the problem.
    * :param:`best_expanded`    (int):  Fewest expansions among the solving algorithms.
    * :param:`best_plan_length` (int):  Shortest plan among the solving algorithms.
    """
    solved:             bool
    best_expanded:      Optional[int] = None
    best_plan_length:   Optional[int] = None


@dataclass(frozen = True)
class VirtualBest():
    r"""# :class:`VirtualBest`

    ## Properties:
    * :param:`system`   (str):                                      System label.
    * :param:`entries`  (Dict[ProblemKey, VirtualBestEntry]):       Entry per (domain, problem).
    """
    system:     str
    entries:    Dict[ProblemKey, VirtualBestEntry] =    field(default_factory = dict)

    @property
    def solved(self) -> Dict[ProblemKey, VirtualBestEntry]:
        """# Entries of Solved Problems."""
        return {key: entry for key, entry in self.entries.items() if entry.solved}

    def coverage(self,
        domain: Optional[str] = None
    ) -> int:
        """# Number of Solved Problems (of one domain, or in total)."""
        return sum(1 for (d, _) in self.solved if domain is None or d == domain)


@dataclass(frozen = True)
class HeadToHead():
    r"""# :class:`HeadToHead`

    ## Properties:
    * :param:`wins`             (int):      Shared problems where the first system is strictly
                                            better.
    * :param:`ties`             (int):      Shared problems with equal values.
    * :param:`losses`           (int):      Shared problems where the second system is strictly
                                            better.
    * :param:`mean_improvement` (float):    Mean of (loser - winner) / loser x 100 over the first
                                            system's wins, None without wins.
    """
    wins:               int =               0
    ties:               int =               0
    losses:             int =               0
    mean_improvement:   Optional[float] =   None


@dataclass(frozen = True)
class Aggregates():
    r"""# :class:`Aggregates`

    ## Properties:
    * :param:`records`          (List[RunRecord]):          Records aggregated.
    * :param:`systems`          (List[str]):                Systems, in first-seen order.
    * :param:`algorithms`       (List[str]):                Algorithms, in first-seen order.
    * :param:`domains`          (List[str]):                Domains, in first-seen order.
    * :param:`virtual_bests`    (Dict[str, VirtualBest]):   Virtual best per system.
    """
    records:        List[RunRecord]
    systems:        List[str]
    algorithms:     List[str]
    domains:        List[str]
    virtual_bests:  Dict[str, VirtualBest]


def virtual_best(
    records:    Iterable[RunRecord],
    system:     str
) -> VirtualBest:
    """# Virtual Best of One System.

    ## Args:
        * records   (Iterable[RunRecord]):  Records of any systems; only `system` is used.
        * system    (str):                  System label.

    ## Returns:
        * VirtualBest:  One entry per problem the system was run on.
    """
    # Group solving records per problem.
    problems:   Dict[ProblemKey, List[RunRecord]] = {}

    for record in records:
        if record.system == system: problems.setdefault((record.domain, record.problem), []).append(record)

    # Entry per problem.
    entries:    Dict[ProblemKey, VirtualBestEntry] =    {}

    for key, runs in problems.items():

        # Solving runs.
        solving:    List[RunRecord] =   [run for run in runs if run.solved]

        entries[key] =  VirtualBestEntry(
                            solved =            bool(solving),
                            best_expanded =     min((run.expanded for run in solving), default = None),
                            best_plan_length =  min((run.plan_length for run in solving), default = None)
                        )

    # Provide virtual best.
    return VirtualBest(system, entries)

def algorithm_coverage(
    records:    Iterable[RunRecord],
    system:     str,
    algorithm:  str,
    domain:     Optional[str] = None
) -> int:
    """# Problems Solved by One System Under One Algorithm."""
    return  sum(
                1 for record in records
                if record.system == system and record.algorithm == algorithm and record.solved
                and (domain is None or record.domain == domain)
            )

def head_to_head(
    first:  VirtualBest,
    second: VirtualBest,
    metric: str =           "expanded",
    domain: Optional[str] = None
) -> HeadToHead:
    """# Head-to-Head Comparison on the Shared Solved Set.

    ## Args:
        * first     (VirtualBest):  First system.
        * second    (VirtualBest):  Second system.
        * metric    (str):          "expanded" or "plan_length". Defaults to "expanded".
        * domain    (str):          Restrict to one domain, None for all.

    ## Returns:
        * HeadToHead:   Wins, ties and losses of the first system; lower is better.
    """
    # Shared solved problems.
    attribute:  str =           f"best_{metric}"
    shared:     List[ProblemKey] =  sorted(
                                        key for key in first.solved.keys() & second.solved.keys()
                                        if domain is None or key[0] == domain
                                    )

    # Compare.
    wins, ties, losses =        0, 0, 0
    improvements:   List[float] =   []

    for key in shared:

        # Values of both systems.
        a, b =  getattr(first.entries[key], attribute), getattr(second.entries[key], attribute)

        if a < b:
            wins += 1
            improvements.append((b - a) / b * 100)

        elif a == b:    ties += 1
        else:           losses += 1

    # Provide comparison.
    return  HeadToHead(
                wins, ties, losses,
                sum(improvements) / len(improvements) if improvements else None
            )

def lower_median(
    values: Sequence[float]
) -> Optional[float]:
    """# Lower Median (order statistic ceil(n/2)), None for no values."""
    # Nothing to summarize.
    if len(values) == 0: return None

    # Order statistic.
    return sort(asarray(values))[(len(values) - 1) // 2].item()

def cactus(
    vb: VirtualBest
) -> List[Tuple[int, int]]:
    """# Cactus Series.

    ## Returns:
        * List[Tuple[int, int]]:    (expansions, problems solved with at most that many), one pair
                                    per solved problem, expansions ascending.
    """
    # Sorted expansions.
    expanded:   ndarray =   sort(asarray([entry.best_expanded for entry in vb.solved.values()], dtype = int))

    # Pair with the running count.
    return list(zip(expanded.tolist(), cumsum(ones(len(expanded), dtype = int)).tolist()))

def scatter(
    first:  VirtualBest,
    second: VirtualBest
) -> List[Tuple[str, str, Optional[int], Optional[int]]]:
    """# Scatter Pairs.

    ## Returns:
        * List[Tuple]:  (domain, problem, first expansions, second expansions) for every problem
                        either system was run on; None where a system did not solve it.
    """
    return  [
                (
                    domain, problem,
                    first.entries.get((domain, problem), VirtualBestEntry(False)).best_expanded,
                    second.entries.get((domain, problem), VirtualBestEntry(False)).best_expanded,
                )
                for domain, problem in sorted(first.entries.keys() | second.entries.keys())
            ]

def plan_length_intersection(
    vbs:    Sequence[VirtualBest]
) -> Tuple[int, Dict[str, Optional[float]]]:
    """# Plan-Length Medians on the Problems Solved by Every System.

    ## Returns:
        * Tuple[int, Dict[str, Optional[float]]]:   Size of the common set and the lower median of
                                                    each system's plan lengths on it.
    """
    # Commonly solved problems.
    common: set =   set.intersection(*(set(vb.solved) for vb in vbs)) if vbs else set()

    # Median per system.
    return  (
                len(common),
                {vb.system: lower_median([vb.entries[key].best_plan_length for key in sorted(common)]) for vb in vbs}
            )

def compute_aggregates(
    records:    Sequence[RunRecord]
) -> Aggregates:
    """# Compute Aggregates.

    Records of the same matrix cell (runs appended more than once) collapse to the last one.

    ## Args:
        * records   (Sequence[RunRecord]):  Run records.

    ## Returns:
        * Aggregates:   Systems, algorithms and domains in first-seen order, with one virtual best
                        per system.
    """
    # Last record per cell, in first-seen cell order.
    latest:     Dict[tuple, RunRecord] =    {}
    for record in records: latest[record.key] = record

    if len(latest) < len(records): LOGGER.warning(f"Dropped {len(records) - len(latest)} superseded run records")

    # First-seen orders.
    unique:     List[RunRecord] =           list(latest.values())
    systems:    List[str] =                 list(dict.fromkeys(record.system for record in unique))

    # Provide aggregates.
    return  Aggregates(
                records =       unique,
                systems =       systems,
                algorithms =    list(dict.fromkeys(record.algorithm for record in unique)),
                domains =       list(dict.fromkeys(record.domain for record in unique)),
                virtual_bests = {system: virtual_best(unique, system) for system in systems}
            )
