"""# stratagem.commands.generate.args

Argument definitions for the generate command.
"""

__all__ = ["register_generate_parser"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def register_generate_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Generate Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "generate",
        help =          "Generate candidate heuristics.",
        description =   """Assemble the prompt of a suite, request N candidate programs from a 
                        provider and store them with their static classification."""
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
        "--worked-example",
        dest =          "worked_example",
        type =          str,
        default =       "goal_distance",
        help =          """Program shown as the worked example (bundled name or .hel path). 
                        Defaults to "goal_distance"."""
    )

    # PROVIDER =====================================================================================
    _provider_:     _ArgumentGroup =    _parser_.add_argument_group(title = "Provider")

    _provider_.add_argument(
        "--provider",
        dest =          "provider",
        type =          str,
        required =      True,
        help =          """Provider configuration file, or "mock:<directory>" to replay canned 
                        responses."""
    )

    _provider_.add_argument(
        "--n",
        dest =          "n",
        type =          int,
        default =       20,
        help =          """Number of candidates requested. Defaults to 20."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--out",
        dest =          "out",
        type =          str,
        default =       None,
        help =          """Candidate store directory. Defaults to 
                        "output/generate_<suite>_<timestamp>"."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
