"""# stratagem.commands.select.main

Select process: evaluate stored candidates on the training problem, rewrite their records, write
`selection.json` and, on request, a refinement prompt.
"""

__all__ = ["select_entry_point"]

from pathlib                                import Path
from typing                                 import List, Optional, override

from stratagem.benchmark                    import RunRecord, SuiteManifest
from stratagem.commands.__base__            import CommandProcess, load_model, resolve_suite, suite_prompt_spec
from stratagem.commands.select.__args__     import register_select_parser
from stratagem.grounding                    import GroundedModel
from stratagem.heuristics                   import load_heuristic
from stratagem.pipeline                     import *
from stratagem.registration                 import register_command
from stratagem.search                       import search, SearchResult

class SelectProcess(CommandProcess):
    """# Select Process."""

    def __init__(self,
        suite:              str,
        candidates:         str,
        algorithm:          str =           "gbfs",
        time_limit:         float =         60.0,
        node_budget:        Optional[int] = None,
        memory_limit_mb:    Optional[int] = None,
        jobs:               int =           1,
        refinement:         bool =          False,
        **kwargs
    ):
        """# Configure Select Process.

        ## Args:
            * suite             (str):      Suite directory, manifest or bundled name.
            * candidates        (str):      Candidate store directory.
            * algorithm         (str):      Search algorithm. Defaults to "gbfs".
            * time_limit        (float):    Seconds per candidate. Defaults to 60.
            * node_budget       (int):      Expansions per candidate, None for unlimited.
            * memory_limit_mb   (int):      Advisory memory limit, None for unlimited.
            * jobs              (int):      Parallel evaluations. Defaults to 1.
            * refinement        (bool):     Write a refinement prompt. Defaults to False.
        """
        # Initialize process.
        super(SelectProcess, self).__init__(name = "select-process")

        # Define properties.
        self._suite_:       str =               suite
        self._store_:       CandidateStore =    CandidateStore(candidates)
        self._refinement_:  bool =              refinement
        self._config_:      SelectionConfig =   SelectionConfig(
                                                    time_limit =        time_limit,
                                                    algorithm =         algorithm,
                                                    node_budget =       node_budget,
                                                    memory_limit_mb =   memory_limit_mb,
                                                    workers =           jobs
                                                )

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Evaluate, Select, Record."""
        # Stored candidates.
        records:    List[CandidateRecord] = self._store_.records()

        if not records: raise PipelineError(f"{self._store_.directory}: no candidates to select from")

        # Training problem.
        manifest:   SuiteManifest =         resolve_suite(self._suite_)
        model:      GroundedModel =         load_model(manifest.domain, manifest.training)

        self.__logger__.info(f"Evaluating {len(records)} candidate(s) on {manifest.name}/{manifest.training.stem}")

        # Evaluate and record.
        records =                           evaluate_candidates(records, model, self._config_)
        for record in records: self._store_.write(record)

        # Select.
        selection:  SelectionRecord =       select(records, domain = manifest.name)
        path:       Path =                  self._store_.write_json("selection.json", selection.to_dict())

        self.__logger__.info(f"Wrote selection to {path}")

        # Refinement prompt.
        if self._refinement_: self._write_refinement_(manifest, model, records, selection)

        # Selection line.
        print(
            " ".join(f"{status}={count}" for status, count in status_counts(records).items()),
            "selected=none" if selection.selected is None else
            f"selected={selection.selected.ordinal} program={self._store_.directory / f'{selection.selected.stem}.hel'}"
        )

        # Candidate failures are data.
        return 0

    # HELPERS ======================================================================================

    def _write_refinement_(self,
        manifest:   SuiteManifest,
        model:      GroundedModel,
        records:    List[CandidateRecord],
        selection:  SelectionRecord
    ) -> None:
        """# Write Refinement Prompt of the Selected, or First Evaluated, Candidate."""
        # Candidate to refine.
        evaluated:  List[CandidateRecord] = [
                                                record for record in records
                                                if record.program_text is not None and record.status is not CandidateStatus.PARSED
                                            ]
        previous:   Optional[CandidateRecord] = next(
                                                    (record for record in evaluated if record.id == selection.selected),
                                                    evaluated[0] if evaluated else None
                                                )

        if previous is None:
            self.__logger__.warning("No candidate holds a program; refinement prompt skipped")
            return

        # TDG baseline under the same search settings.
        result:     SearchResult =          search(model, load_heuristic("tdg"), self._config_.search_config)
        baseline:   RunRecord =             RunRecord(
                                                domain =        manifest.name,
                                                problem =       manifest.training.stem,
                                                system =        "tdg",
                                                algorithm =     self._config_.algorithm,
                                                status =        result.status.value,
                                                expanded =      result.expanded,
                                                plan_length =   result.plan_length,
                                                wall_time =     result.wall_time
                                            )

        # Write prompt.
        path:       Path =                  self._store_.directory / "refinement.md"
        path.write_text(build_refinement_prompt(suite_prompt_spec(manifest), previous, baseline), encoding = "utf-8")

        self.__logger__.info(f"Wrote refinement prompt for {previous.id} to {path}")


@register_command(
    name =          "select",
    parser =        register_select_parser,
    section =       "Pipeline",
    description =   "Evaluate candidates and pick the best"
)
def select_entry_point(**kwargs) -> int:
    """# Execute Select Process.

    ## Returns:
        * int:  0 once selection.json is written (even if no candidate passed), 1 on input errors.
    """
    return SelectProcess(**kwargs).run()
