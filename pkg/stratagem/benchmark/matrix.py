"""# stratagem.benchmark.matrix

Runs the (system x algorithm x problem) matrix under per-cell limits.

Every cell is isolated: the problem is parsed and grounded again, and the heuristic is a fresh
handle. A failing cell becomes a record; it never aborts the matrix. With more than one job, cells
run in worker processes whose address space is capped by the memory limit ("os" enforcement);
in-process runs rely on the advisory counter of the search ("advisory").
"""

__all__ =   [
                "Cell",
                "Limits",
                "matrix_cells",
                "run_cell",
                "run_matrix",
                "system_label"
            ]

from concurrent.futures                 import as_completed, Future, ProcessPoolExecutor
from concurrent.futures.process         import BrokenProcessPool
from dataclasses                        import dataclass
from itertools                          import product
from logging                            import Logger
from pathlib                            import Path
from typing                             import Callable, Dict, Iterable, List, Optional, Sequence

from tqdm                               import tqdm

from stratagem.benchmark.manifest       import SuiteManifest
from stratagem.benchmark.records        import GROUND_FAILED, RunRecord
from stratagem.grounding                import ground, GroundedModel, GroundingError, TriviallyUnsolvableError
from stratagem.hddl                     import HDDLError, LiftedDomain, read_domain, read_problem
from stratagem.heuristics               import load_heuristic
from stratagem.search                   import search, SearchConfig, SearchResult, SearchStatus
from stratagem.utilities                import get_child

try:# Address-space limits (POSIX only).
    from resource                       import RLIMIT_AS, setrlimit

# Workers fall back to the advisory counter.
except ImportError:                     setrlimit = None

# Module logger.
LOGGER:         Logger =    get_child("matrix")

# Memory enforcement of this process; workers switch it to "os".
_ENFORCEMENT_:  str =       "advisory"

@dataclass(frozen = True)
class Limits():
    r"""# :class:`Limits`

    ## Properties:
    * :param:`time_limit`       (float):    Wall-clock seconds per cell. Defaults to 1,800.
    * :param:`node_budget`      (int):      Expansions per cell, None for unlimited.
    * :param:`memory_limit_mb`  (int):      MiB per cell, None for unlimited. Defaults to 8,192.
    """
    time_limit:         Optional[float] =   1800.0
    node_budget:        Optional[int] =     None
    memory_limit_mb:    Optional[int] =     8192


@dataclass(frozen = True)
class Cell():
    r"""# :class:`Cell`

    ## Properties:
    * :param:`suite`        (SuiteManifest):    Suite of the problem.
    * :param:`problem`      (Path):             Problem file.
    * :param:`system`       (str):              Heuristic specification (name or `.hel` path).
    * :param:`algorithm`    (str):              Search algorithm.
    """
    suite:      SuiteManifest
    problem:    Path
    system:     str
    algorithm:  str


def system_label(
    system: str
) -> str:
    """# Report Label of a Heuristic Specification (`.hel` paths are labelled by file stem)."""
    return Path(system).stem if system.endswith(".hel") else system

def matrix_cells(
    suites:     Sequence[SuiteManifest],
    systems:    Sequence[str],
    algorithms: Sequence[str]
) -> List[Cell]:
    """# Enumerate Cells in Deterministic Order (suite, problem, system, algorithm)."""
    return  [
                Cell(suite, problem, system, algorithm)
                for suite in suites
                for problem, system, algorithm in product(suite.problems, systems, algorithms)
            ]

def run_cell(
    cell:       Cell,
    limits:     Limits,
    options:    Optional[Dict] =    None
) -> RunRecord:
    """# Run One Cell.

    ## Args:
        * cell      (Cell):     Cell.
        * limits    (Limits):   Per-cell limits.
        * options   (Dict):     Heuristic options passed to the loader.

    ## Returns:
        * RunRecord:    Outcome; parse and grounding errors give "ground-failed", problems proven
                        unsolvable by grounding give "exhausted", memory faults give
                        "memory-exhausted".
    """
    # Record skeleton.
    fields:     Dict =  {
                            "domain":               cell.suite.name,
                            "problem":              cell.problem.stem,
                            "system":               system_label(cell.system),
                            "algorithm":            cell.algorithm,
                            "memory_enforcement":   _ENFORCEMENT_ if limits.memory_limit_mb is not None else "none",
                        }

    try:# Parse and ground.
        domain: LiftedDomain =  read_domain(cell.suite.domain)
        model:  GroundedModel = ground(domain, read_problem(cell.problem, domain))

    # Trivially unsolvable.
    except TriviallyUnsolvableError:
        return RunRecord(**fields, status = SearchStatus.EXHAUSTED.value)

    # Parse and grounding failures.
    except (HDDLError, GroundingError) as e:
        LOGGER.warning(f"{cell.suite.name}/{cell.problem.stem}: {e}")
        return RunRecord(**fields, status = GROUND_FAILED)

    # Out of memory while grounding.
    except MemoryError:
        return RunRecord(**fields, status = SearchStatus.MEMORY.value)

    try:# Fresh handle, one search.
        result: SearchResult =  search(
                                    model,
                                    load_heuristic(cell.system, **(options or {})),
                                    SearchConfig(
                                        algorithm =         cell.algorithm,
                                        time_limit =        limits.time_limit,
                                        node_budget =       limits.node_budget,
                                        memory_limit_mb =   limits.memory_limit_mb
                                    )
                                )

    # Out of memory while searching.
    except MemoryError:
        return RunRecord(**fields, status = SearchStatus.MEMORY.value)

    # Provide record.
    return  RunRecord(
                **fields,
                status =        result.status.value,
                expanded =      result.expanded,
                plan_length =   result.plan_length,
                wall_time =     round(result.wall_time, 6)
            )

def run_matrix(
    cells:      Sequence[Cell],
    limits:     Limits,
    jobs:       int =                                   1,
    sink:       Optional[Callable[[RunRecord], None]] = None,
    options:    Optional[Dict] =                        None
) -> List[RunRecord]:
    """# Run Matrix.

    ## Args:
        * cells     (Sequence[Cell]):       Cells, see :func:`matrix_cells`.
        * limits    (Limits):               Per-cell limits.
        * jobs      (int):                  Worker processes; 1 runs in-process. Defaults to 1.
        * sink      (Callable):             Called once per finished record, always from this
                                            process, so writes through it are serialized.
        * options   (Dict):                 Heuristic options passed to the loader.

    ## Returns:
        * List[RunRecord]:  One record per cell, in cell order.
    """
    # Log matrix size.
    LOGGER.info(f"Running {len(cells)} cell(s) with {jobs} job(s)")

    # Finished records by cell index.
    finished:   Dict[int, RunRecord] =  {}

    with tqdm(total = len(cells), desc = "Running matrix", unit = "cell") as progress:

        # In-process run.
        if jobs <= 1:
            for index, cell in enumerate(cells): _finish_(finished, index, run_cell(cell, limits, options), sink, progress)

        # Worker pool.
        else:
            broken:     List[int] =             _run_pool_(cells, range(len(cells)), limits, jobs, options, finished, sink, progress)

            # A dead worker fails every pending cell; rerun those alone to find the one that killed it.
            if broken: LOGGER.warning(f"Worker pool broke; rerunning {len(broken)} cell(s) one at a time")

            for index in broken:
                if _run_pool_(cells, [index], limits, 1, options, finished, sink, progress):
                    LOGGER.warning(f"{cells[index].suite.name}/{cells[index].problem.stem}: worker died, recorded as out of memory")
                    _finish_(finished, index, _lost_record_(cells[index], limits), sink, progress)

    # Cell order.
    return [finished[index] for index in range(len(cells))]

# HELPERS ==========================================================================================

def _finish_(
    finished:   Dict[int, RunRecord],
    index:      int,
    record:     RunRecord,
    sink:       Optional[Callable[[RunRecord], None]],
    progress:   tqdm
) -> None:
    """# Store a Finished Record, Hand it to the Sink and Advance the Bar."""
    finished[index] =   record
    if sink is not None: sink(record)
    progress.update(1)

def _lost_record_(
    cell:   Cell,
    limits: Limits
) -> RunRecord:
    """# Record of a Cell whose Worker Died."""
    return  RunRecord(
                domain =                cell.suite.name,
                problem =               cell.problem.stem,
                system =                system_label(cell.system),
                algorithm =             cell.algorithm,
                status =                SearchStatus.MEMORY.value,
                memory_enforcement =    "os" if limits.memory_limit_mb is not None and setrlimit is not None else "none"
            )

def _run_pool_(
    cells:      Sequence[Cell],
    indices:    Iterable[int],
    limits:     Limits,
    jobs:       int,
    options:    Optional[Dict],
    finished:   Dict[int, RunRecord],
    sink:       Optional[Callable[[RunRecord], None]],
    progress:   tqdm
) -> List[int]:
    """# Run Cells in a Worker Pool.

    ## Args:
        * cells     (Sequence[Cell]):   Every cell of the matrix.
        * indices   (Iterable[int]):    Cells to run.
        * limits    (Limits):           Per-cell limits; the memory limit caps each worker.
        * jobs      (int):              Worker processes.
        * options   (Dict):             Heuristic options passed to the loader.
        * finished  (Dict):             Records by cell index, filled as cells complete.
        * sink      (Callable):         Record sink.
        * progress  (tqdm):             Matrix progress bar.

    ## Returns:
        * List[int]:    Cells lost to a broken pool, in cell order.
    """
    broken: List[int] = []

    with ProcessPoolExecutor(max_workers = jobs, initializer = _limit_memory_, initargs = (limits.memory_limit_mb,)) as executor:

        # Submit cells.
        futures:    Dict[Future, int] = {executor.submit(run_cell, cells[i], limits, options): i for i in indices}

        # Gather as they complete.
        for future in as_completed(futures):

            try:# Worker finished the cell.
                _finish_(finished, futures[future], future.result(), sink, progress)

            # Worker process died.
            except BrokenProcessPool: broken.append(futures[future])

    return sorted(broken)

def _limit_memory_(
    memory_limit_mb:    Optional[int]
) -> None:
    """# Cap the Address Space of a Worker Process."""
    global _ENFORCEMENT_

    # Nothing to enforce.
    if memory_limit_mb is None or setrlimit is None: return

    try:# Soft and hard cap.
        setrlimit(RLIMIT_AS, (memory_limit_mb << 20, memory_limit_mb << 20))
        _ENFORCEMENT_ = "os"

    # Platform refused; stay advisory.
    except (ValueError, OSError) as e: LOGGER.warning(f"Address-space limit unavailable ({e}); memory limit stays advisory")
