"""# stratagem.commands.bench.main

Bench process: validate systems, run the matrix and append each finished record to `runs.jsonl`.
"""

__all__ = ["bench_entry_point"]

from pathlib                                import Path
from typing                                 import List, Optional, override

from stratagem.benchmark                    import *
from stratagem.commands.__base__            import CommandProcess, resolve_suite
from stratagem.commands.bench.__args__      import register_bench_parser
from stratagem.heuristics                   import load_heuristic
from stratagem.registration                 import register_command
from stratagem.search                       import ALGORITHMS, SearchConfigError
from stratagem.utilities                    import default_output

class BenchProcess(CommandProcess):
    """# Bench Process."""

    def __init__(self,
        suites:             List[str],
        systems:            str =               "tdg,blind",
        algorithms:         str =               "astar,gbfs,wastar",
        time_limit:         Optional[float] =   1800.0,
        node_budget:        Optional[int] =     None,
        memory_limit_mb:    Optional[int] =     8192,
        jobs:               int =               1,
        out:                Optional[str] =     None,
        **kwargs
    ):
        """# Configure Bench Process.

        ## Args:
            * suites            (List[str]):    Suites to run.
            * systems           (str):          Comma-separated heuristics.
            * algorithms        (str):          Comma-separated algorithms.
            * time_limit        (float):        Seconds per cell. Defaults to 1,800.
            * node_budget       (int):          Expansions per cell, None for unlimited.
            * memory_limit_mb   (int):          MiB per cell. Defaults to 8,192.
            * jobs              (int):          Worker processes. Defaults to 1.
            * out               (str):          Output directory. Defaults to a timestamped
                                                directory under "output/".
        """
        # Initialize process.
        super(BenchProcess, self).__init__(name = "bench-process")

        # Define properties.
        self._suites_:      List[str] =     suites
        self._systems_:     List[str] =     [system.strip() for system in systems.split(",") if system.strip()]
        self._algorithms_:  List[str] =     [algorithm.strip() for algorithm in algorithms.split(",") if algorithm.strip()]
        self._jobs_:        int =           jobs
        self._out_:         Path =          Path(out) if out else default_output("bench")
        self._limits_:      Limits =        Limits(
                                                time_limit =        time_limit,
                                                node_budget =       node_budget,
                                                memory_limit_mb =   memory_limit_mb
                                            )

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Validate, Run, Record."""
        # Algorithms.
        for algorithm in self._algorithms_:
            if algorithm not in ALGORITHMS:
                raise SearchConfigError("algorithm", algorithm, f"expected one of {', '.join(ALGORITHMS)}")

        # Systems resolve before any cell runs.
        if not self._systems_: raise SearchConfigError("systems", "", "at least one system is required")
        for system in self._systems_: load_heuristic(system)

        # Suites.
        suites:     List[SuiteManifest] =   [resolve_suite(suite) for suite in self._suites_]
        cells:      List[Cell] =            matrix_cells(suites, self._systems_, self._algorithms_)
        runs:       Path =                  self._out_ / "runs.jsonl"

        self.__logger__.info(
            f"Benchmarking {', '.join(s.name for s in suites)}: {len(self._systems_)} system(s), "
            f"{len(self._algorithms_)} algorithm(s), {len(cells)} cell(s) -> {runs}"
        )

        # Each finished record is appended at once.
        records:    List[RunRecord] =       run_matrix(
                                                cells,
                                                self._limits_,
                                                jobs =  self._jobs_,
                                                sink =  lambda record: append_records(runs, [record])
                                            )

        # Summary line.
        print(f"cells={len(records)} solved={sum(record.solved for record in records)} runs={runs}")

        # Benchmarked.
        return 0


@register_command(
    name =          "bench",
    parser =        register_bench_parser,
    section =       "Benchmark",
    description =   "Run the benchmark matrix"
)
def bench_entry_point(**kwargs) -> int:
    """# Execute Bench Process.

    ## Returns:
        * int:  0 once every cell is recorded, 1 on configuration errors.
    """
    return BenchProcess(**kwargs).run()
