"""# stratagem.commands.parse.args

Argument definitions for the parse command.
"""

__all__ = ["register_parse_parser"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def register_parse_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Parse Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "parse",
        help =          "Check HDDL files.",
        description =   """Parse a domain and, optionally, a problem; print a summary."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument(
        "domain",
        type =          str,
        help =          """HDDL domain file."""
    )

    _input_.add_argument(
        "problem",
        type =          str,
        nargs =         "?",
        default =       None,
        help =          """HDDL problem file, checked against the domain."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--print",
        dest =          "print_model",
        action =        "store_true",
        default =       False,
        help =          """Print the parsed files back in canonical HDDL. Defaults to False."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
