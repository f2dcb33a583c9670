"""# stratagem.commands.bench.args

Argument definitions for the bench command.
"""

__all__ = ["register_bench_parser"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def register_bench_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Bench Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "bench",
        help =          "Run the benchmark matrix.",
        description =   """Run every (system, algorithm, problem) cell of the given suites under 
                        per-cell limits and append one record per cell to runs.jsonl."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument(
        "--suite",
        dest =          "suites",
        type =          str,
        nargs =         "+",
        action =        "extend",
        required =      True,
        help =          """Suite directories, manifest files or bundled suite names; may be 
                        repeated."""
    )

    _input_.add_argument(
        "--systems",
        dest =          "systems",
        type =          str,
        default =       "tdg,blind",
        help =          """Comma-separated heuristics (built-in names, bundled program names or 
                        .hel paths). Defaults to "tdg,blind"."""
    )

    _input_.add_argument(
        "--algos",
        dest =          "algorithms",
        type =          str,
        default =       "astar,gbfs,wastar",
        help =          """Comma-separated search algorithms. Defaults to "astar,gbfs,wastar"."""
    )

    # LIMITS =======================================================================================
    _limits_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Limits")

    _limits_.add_argument(
        "--time-limit",
        dest =          "time_limit",
        type =          float,
        default =       1800.0,
        help =          """Wall-clock seconds per cell. Defaults to 1,800."""
    )

    _limits_.add_argument(
        "--node-budget",
        dest =          "node_budget",
        type =          int,
        default =       None,
        help =          """Expansions per cell. Defaults to None (unlimited)."""
    )

    _limits_.add_argument(
        "--memory-limit",
        dest =          "memory_limit_mb",
        type =          int,
        default =       8192,
        help =          """MiB per cell; enforced by the OS in worker processes, advisory 
                        in-process. Defaults to 8,192."""
    )

    _limits_.add_argument(
        "--jobs",
        dest =          "jobs",
        type =          int,
        default =       1,
        help =          """Worker processes; 1 runs in-process. Defaults to 1."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--out",
        dest =          "out",
        type =          str,
        default =       None,
        help =          """Output directory holding runs.jsonl. Defaults to 
                        "output/bench_<timestamp>"."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
