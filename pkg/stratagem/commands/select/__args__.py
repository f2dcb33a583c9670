"""# stratagem.commands.select.args

Argument definitions for the select command.
"""

__all__ = ["register_select_parser"]

from argparse           import _ArgumentGroup, ArgumentParser, _SubParsersAction

from stratagem.search   import ALGORITHMS

def register_select_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Select Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "select",
        help =          "Select a candidate heuristic.",
        description =   """Evaluate every parsed candidate of a store on the suite's training 
                        problem and select the one with the fewest expansions (ties go to the 
                        shorter plan, then to the lower ordinal)."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument(
        "--suite",
        dest =          "suite",
        type =          str,
        required =      True,
        help =          """Suite directory, manifest file or bundled suite name."""
    )

    _input_.add_argument(
        "--candidates",
        dest =          "candidates",
        type =          str,
        required =      True,
        help =          """Candidate store directory written by generate."""
    )

    # EVALUATION ===================================================================================
    _evaluation_:   _ArgumentGroup =    _parser_.add_argument_group(title = "Evaluation")

    _evaluation_.add_argument(
        "--algo",
        dest =          "algorithm",
        type =          str,
        choices =       ALGORITHMS,
        default =       "gbfs",
        help =          """Search algorithm. Defaults to "gbfs"."""
    )

    _evaluation_.add_argument(
        "--time-limit",
        dest =          "time_limit",
        type =          float,
        default =       60.0,
        help =          """Wall-clock seconds per candidate. Defaults to 60."""
    )

    _evaluation_.add_argument(
        "--node-budget",
        dest =          "node_budget",
        type =          int,
        default =       None,
        help =          """Expansions per candidate. Defaults to None (unlimited)."""
    )

    _evaluation_.add_argument(
        "--memory-limit",
        dest =          "memory_limit_mb",
        type =          int,
        default =       None,
        help =          """Advisory memory limit in MiB. Defaults to None (unlimited)."""
    )

    _evaluation_.add_argument(
        "--jobs",
        dest =          "jobs",
        type =          int,
        default =       1,
        help =          """Candidates evaluated in parallel. Defaults to 1."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--refinement",
        dest =          "refinement",
        action =        "store_true",
        default =       False,
        help =          """Also run the TDG baseline on the training problem and write a 
                        refinement prompt for the selected (or first evaluated) candidate."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
