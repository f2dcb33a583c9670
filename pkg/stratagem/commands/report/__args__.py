"""# stratagem.commands.report.args

Argument definitions for the report command.
"""

__all__ = ["register_report_parser"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def register_report_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Report Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "report",
        help =          "Write benchmark reports.",
        description =   """Aggregate the records of a runs.jsonl file (virtual best per system) and 
                        write coverage, head-to-head, median, cactus and scatter tables as CSV."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument(
        "--runs",
        dest =          "runs",
        type =          str,
        required =      True,
        help =          """Run records (JSON Lines) written by bench."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--out",
        dest =          "out",
        type =          str,
        default =       None,
        help =          """Report directory. Defaults to "reports" next to the runs file."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
