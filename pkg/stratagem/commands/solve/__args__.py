"""# stratagem.commands.solve.args

Argument definitions for the solve command.
"""

__all__ = ["register_solve_parser"]

from argparse                 import _ArgumentGroup, ArgumentParser, _SubParsersAction

from stratagem.registration   import HEURISTIC_REGISTRY
from stratagem.search         import ALGORITHMS

def register_solve_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Solve Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "solve",
        help =          "Solve a problem.",
        description =   """Ground a problem, run progression search and print one statistics 
                        line; the exit code reflects the search status."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument("domain",  type = str, help = """HDDL domain file.""")
    _input_.add_argument("problem", type = str, help = """HDDL problem file.""")

    # SEARCH =======================================================================================
    _search_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Search")

    _search_.add_argument(
        "--heuristic",
        dest =          "heuristic",
        type =          str,
        default =       "tdg",
        help =          f"""Built-in heuristic, bundled program name or path to a .hel program. 
                        Built-ins: {HEURISTIC_REGISTRY.describe()}. Defaults to "tdg"."""
    )

    _search_.add_argument(
        "--algo",
        dest =          "algorithm",
        type =          str,
        choices =       ALGORITHMS,
        default =       "gbfs",
        help =          """Search algorithm. Defaults to "gbfs"."""
    )

    _search_.add_argument(
        "--weight",
        dest =          "weight",
        type =          float,
        default =       5,
        help =          """Heuristic weight of weighted A*. Defaults to 5."""
    )

    # LIMITS =======================================================================================
    _limits_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Limits")

    _limits_.add_argument(
        "--time-limit",
        dest =          "time_limit",
        type =          float,
        default =       1800.0,
        help =          """Wall-clock limit in seconds. Defaults to 1,800."""
    )

    _limits_.add_argument(
        "--node-budget",
        dest =          "node_budget",
        type =          int,
        default =       None,
        help =          """Maximum expansions. Defaults to None (unlimited)."""
    )

    _limits_.add_argument(
        "--memory-limit",
        dest =          "memory_limit_mb",
        type =          int,
        default =       None,
        help =          """Advisory memory limit in MiB. Defaults to None (unlimited)."""
    )

    # HEURISTIC OPTIONS ============================================================================
    _options_:      _ArgumentGroup =    _parser_.add_argument_group(title = "Heuristic Options")

    _options_.add_argument(
        "--tdg-primitive-cost",
        dest =          "primitive_cost",
        type =          int,
        default =       None,
        help =          """Cost of primitive tasks in the TDG table (0 or 1). Defaults to the 
                        operator cost."""
    )

    _options_.add_argument(
        "--tdg-abstract-init",
        dest =          "abstract_init",
        type =          int,
        default =       None,
        help =          """Start value of compound tasks in the TDG fixpoint. Defaults to 
                        infinity."""
    )

    _options_.add_argument(
        "--infinity-penalty",
        dest =          "infinity_penalty",
        type =          int,
        default =       None,
        help =          """Value of infinite cost-table entries inside HEL programs. Defaults 
                        to 10 x (facts + tasks) of the grounded model."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--plan",
        dest =          "plan",
        type =          str,
        default =       None,
        help =          """Write the plan to this file."""
    )

    _output_.add_argument(
        "--no-relaxed-pruning",
        dest =          "prune_relaxed",
        action =        "store_false",
        default =       True,
        help =          """Keep operators and methods unreachable in the delete relaxation."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
