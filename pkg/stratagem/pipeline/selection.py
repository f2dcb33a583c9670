"""# stratagem.pipeline.selection

Evaluation of parsed candidates on the training problem and selection of the candidate that
minimizes expanded nodes, ties going to the shorter plan and then to the lower ordinal.
"""

__all__ =   [
                "CRITERION",
                "evaluate_candidate",
                "evaluate_candidates",
                "select",
                "SelectionConfig",
                "SelectionRecord"
            ]

from concurrent.futures             import as_completed, Future, ProcessPoolExecutor
from dataclasses                    import dataclass, replace
from logging                        import Logger
from typing                         import Any, Dict, List, Optional

from tqdm                           import tqdm

from stratagem.grounding            import GroundedModel
from stratagem.hel                  import HelHeuristic
from stratagem.pipeline.candidates  import CandidateId, CandidateRecord, CandidateStatus, status_counts
from stratagem.search               import search, SearchConfig, SearchResult, SearchStatus
from stratagem.utilities            import get_child

# Recorded selection rule.
CRITERION:  str =       "min expanded, tie -> shorter plan"

# Module logger.
LOGGER:     Logger =    get_child("selection")

@dataclass(frozen = True)
class SelectionConfig():
    r"""# :class:`SelectionConfig`

    ## Properties:
    * :param:`time_limit`       (float):    Wall-clock seconds per candidate. Defaults to 60.
    * :param:`algorithm`        (str):      Search algorithm. Defaults to "gbfs".
    * :param:`node_budget`      (int):      Expansion budget per candidate, None for unlimited.
    * :param:`memory_limit_mb`  (int):      Advisory memory limit in MiB, None for unlimited.
    * :param:`workers`          (int):      Candidates evaluated in parallel. Defaults to 1.
    """
    time_limit:         float =         60.0
    algorithm:          str =           "gbfs"
    node_budget:        Optional[int] = None
    memory_limit_mb:    Optional[int] = None
    workers:            int =           1

    @property
    def search_config(self) -> SearchConfig:
        """# Search Configuration of One Evaluation."""
        return  SearchConfig(
                    algorithm =         self.algorithm,
                    time_limit =        self.time_limit,
                    node_budget =       self.node_budget,
                    memory_limit_mb =   self.memory_limit_mb
                )


@dataclass(frozen = True)
class SelectionRecord():
    r"""# :class:`SelectionRecord`

    ## Properties:
    * :param:`domain`       (str):                      Domain name.
    * :param:`model`        (str):                      Model name.
    * :param:`selected`     (CandidateId):              Selected candidate, None if none passed.
    * :param:`candidates`   (List[CandidateRecord]):    Every candidate, in ordinal order.
    * :param:`criterion`    (str):                      Selection rule.
    """
    domain:     str
    model:      str
    selected:   Optional[CandidateId]
    candidates: List[CandidateRecord]
    criterion:  str =   CRITERION

    def to_dict(self) -> Dict[str, Any]:
        """# Serializable Form.

        Wall times and timestamps are left out, so that identical inputs give identical documents.
        """
        return  {
                    "domain":       self.domain,
                    "model":        self.model,
                    "criterion":    self.criterion,
                    "selected":     None if self.selected is None else self.selected.ordinal,
                    "counts":       status_counts(self.candidates),
                    "candidates":   [record.to_dict(timing = False) for record in self.candidates],
                }


def evaluate_candidate(
    record: CandidateRecord,
    model:  GroundedModel,
    config: Optional[SelectionConfig] = None
) -> CandidateRecord:
    """# Evaluate Candidate on the Training Problem.

    ## Args:
        * record    (CandidateRecord):  Candidate; only `parsed` candidates are run.
        * model     (GroundedModel):    Grounded training problem.
        * config    (SelectionConfig):  Selection configuration. Defaults to GBFS, 60 seconds.

    ## Returns:
        * CandidateRecord:  `ok` with training statistics, `timed-out` (time or node budget),
                            `runtime-failed` (fault, memory, no solution), or the record unchanged
                            if it was never parsed.
    """
    # Failed candidates stay as they are.
    if record.status is not CandidateStatus.PARSED: return record

    # Fresh handle, one search.
    config:     SelectionConfig =   config or SelectionConfig()
    heuristic:  HelHeuristic =      HelHeuristic(record.program)
    result:     SearchResult =      search(model, heuristic, config.search_config)
    record =                        replace(record, training_time = result.wall_time)

    # Classify outcome.
    match result.status:

        case SearchStatus.SOLVED:
            record =    replace(
                            record,
                            status =                CandidateStatus.OK,
                            training_expanded =     result.expanded,
                            training_plan_length =  result.plan_length
                        )

        case SearchStatus.TIMEOUT | SearchStatus.NODE_BUDGET:
            record =    replace(record, status = CandidateStatus.TIMED_OUT, diagnostic = f"search ended with {result.status}")

        case SearchStatus.HEURISTIC_FAILED:
            record =    replace(record, status = CandidateStatus.RUNTIME_FAILED, diagnostic = str(heuristic.failure))

        case _:
            record =    replace(record, status = CandidateStatus.RUNTIME_FAILED, diagnostic = f"search ended with {result.status}")

    # Log outcome.
    LOGGER.info(f"Candidate {record.id}: {record.status} (expanded {result.expanded})")

    # Provide record.
    return record

def evaluate_candidates(
    records:    List[CandidateRecord],
    model:      GroundedModel,
    config:     Optional[SelectionConfig] = None
) -> List[CandidateRecord]:
    """# Evaluate Candidates.

    One search per candidate, in a process pool when more than one worker is configured.

    ## Returns:
        * List[CandidateRecord]:    Evaluated records, in the input order.
    """
    # Resolve configuration.
    config:     SelectionConfig =       config or SelectionConfig()

    # Sequential evaluation.
    if config.workers <= 1:
        return [evaluate_candidate(record, model, config) for record in tqdm(records, desc = "Evaluating candidates", unit = "candidate")]

    # Pooled evaluation.
    evaluated:  Dict[int, CandidateRecord] =    {}

    with ProcessPoolExecutor(max_workers = config.workers) as executor:

        # Submit every candidate.
        futures:    Dict[Future, int] =     {
                                                executor.submit(evaluate_candidate, record, model, config): index
                                                for index, record in enumerate(records)
                                            }

        # Gather as they complete.
        for future in tqdm(as_completed(futures), total = len(futures), desc = "Evaluating candidates", unit = "candidate"):
            evaluated[futures[future]] = future.result()

    # Input order.
    return [evaluated[index] for index in range(len(records))]

def select(
    records:    List[CandidateRecord],
    domain:     str =   "",
    model:      str =   ""
) -> SelectionRecord:
    """# Select Candidate.

    ## Args:
        * records   (List[CandidateRecord]):    Evaluated candidates.
        * domain    (str):                      Domain name recorded. Defaults to that of the first
                                                record.
        * model     (str):                      Model name recorded. Defaults to that of the first
                                                record.

    ## Returns:
        * SelectionRecord:  Ok candidate with the fewest expansions, then the shortest plan, then
                            the lowest ordinal; none if no candidate is ok.
    """
    # Survivors.
    survivors:  List[CandidateRecord] = [record for record in records if record.status is CandidateStatus.OK]

    # Best survivor.
    best:       Optional[CandidateRecord] = min(
                                                survivors,
                                                key =       lambda r: (r.training_expanded, r.training_plan_length, r.id.ordinal),
                                                default =   None
                                            )

    # Log choice.
    if best is None:    LOGGER.warning(f"No candidate passed selection ({len(records)} evaluated)")
    else:               LOGGER.info(f"Selected {best.id} ({best.training_expanded} expanded, plan length {best.training_plan_length})")

    # Provide selection.
    return  SelectionRecord(
                domain =        domain or (records[0].id.domain if records else ""),
                model =         model or (records[0].id.model if records else ""),
                selected =      None if best is None else best.id,
                candidates =    sorted(records, key = lambda r: r.id.ordinal)
            )
