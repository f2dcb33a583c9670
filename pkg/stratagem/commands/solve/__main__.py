"""# stratagem.commands.solve.main

Solve process: ground one problem, search it, optionally write the plan and print the statistics
line. The exit code is that of the search status.
"""

__all__ = ["solve_entry_point"]

from typing                                 import Any, Dict, Optional, override

from stratagem.commands.__base__            import CommandProcess, load_model
from stratagem.commands.solve.__args__      import register_solve_parser
from stratagem.grounding                    import GroundedModel, GroundingOptions, TriviallyUnsolvableError
from stratagem.heuristics                   import Heuristic, load_heuristic
from stratagem.registration                 import register_command
from stratagem.search                       import format_stats, search, SearchConfig, SearchResult, SearchStatus, write_plan

class SolveProcess(CommandProcess):
    """# Solve Process."""

    def __init__(self,
        domain:             str,
        problem:            str,
        heuristic:          str =               "tdg",
        algorithm:          str =               "gbfs",
        weight:             float =             5,
        time_limit:         Optional[float] =   1800.0,
        node_budget:        Optional[int] =     None,
        memory_limit_mb:    Optional[int] =     None,
        primitive_cost:     Optional[int] =     None,
        abstract_init:      Optional[int] =     None,
        infinity_penalty:   Optional[int] =     None,
        plan:               Optional[str] =     None,
        prune_relaxed:      bool =              True,
        **kwargs
    ):
        """# Configure Solve Process.

        ## Args:
            * domain            (str):      HDDL domain file.
            * problem           (str):      HDDL problem file.
            * heuristic         (str):      Heuristic name or `.hel` path. Defaults to "tdg".
            * algorithm         (str):      Search algorithm. Defaults to "gbfs".
            * weight            (float):    Weighted A* weight. Defaults to 5.
            * time_limit        (float):    Seconds. Defaults to 1,800.
            * node_budget       (int):      Expansion budget, None for unlimited.
            * memory_limit_mb   (int):      Advisory memory limit, None for unlimited.
            * primitive_cost    (int):      TDG primitive cost override.
            * abstract_init     (int):      TDG fixpoint start value override.
            * infinity_penalty  (int):      HEL infinity stand-in.
            * plan              (str):      Plan file destination, if any.
            * prune_relaxed     (bool):     Prune by delete-relaxed reachability. Defaults to True.
        """
        # Initialize process.
        super(SolveProcess, self).__init__(name = "solve-process")

        # Define properties.
        self._domain_:      str =               domain
        self._problem_:     str =               problem
        self._heuristic_:   str =               heuristic
        self._plan_:        Optional[str] =     plan
        self._grounding_:   GroundingOptions =  GroundingOptions(prune_relaxed = prune_relaxed)

        # Only options given on the command line reach the heuristic.
        self._options_:     Dict[str, Any] =    {
                                                    key: value for key, value in {
                                                        "primitive_cost":   primitive_cost,
                                                        "abstract_init":    abstract_init,
                                                        "infinity_penalty": infinity_penalty,
                                                    }.items() if value is not None
                                                }

        # Search settings, validated on execution.
        self._search_:      Dict[str, Any] =    {
                                                    "algorithm":        algorithm,
                                                    "weight":           weight,
                                                    "time_limit":       time_limit,
                                                    "node_budget":      node_budget,
                                                    "memory_limit_mb":  memory_limit_mb,
                                                }

    # METHODS ======================================================================================

    @override
    def execute(self) -> int:
        """# Ground, Search, Report."""
        # Validate settings and resolve the heuristic before grounding.
        config:     SearchConfig =  SearchConfig(**self._search_)
        heuristic:  Heuristic =     load_heuristic(self._heuristic_, **self._options_)

        try:# Ground.
            model:  GroundedModel = load_model(self._domain_, self._problem_, self._grounding_)

            # Search.
            result: SearchResult =  search(model, heuristic, config)

        # Grounding proved the problem unsolvable.
        except TriviallyUnsolvableError as e:
            self.__logger__.info(f"Unsolvable after grounding: {e}")
            model, result = None, SearchResult(SearchStatus.EXHAUSTED)

        # Heuristic failure detail.
        if result.status is SearchStatus.HEURISTIC_FAILED: self.__logger__.error(str(heuristic.failure))

        # Plan file.
        if self._plan_ is not None and model is not None:
            self.__logger__.info(f"Wrote plan to {write_plan(self._plan_, model, result)}")

        # Statistics line comes last.
        print(format_stats(result))

        # Exit code of the status.
        return result.status.exit_code


@register_command(
    name =          "solve",
    parser =        register_solve_parser,
    section =       "Planning",
    description =   "Solve a problem with a heuristic"
)
def solve_entry_point(**kwargs) -> int:
    """# Execute Solve Process.

    ## Returns:
        * int:  0 solved, 1 heuristic failure or input error, 2 exhausted, 3 timeout, 4 node budget,
                5 memory.
    """
    return SolveProcess(**kwargs).run()
