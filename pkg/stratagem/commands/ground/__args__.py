"""# stratagem.commands.ground.args

Argument definitions for the ground command.
"""

__all__ = ["register_ground_parser"]

from argparse   import _ArgumentGroup, ArgumentParser, _SubParsersAction

def register_ground_parser(
    subparser:  _SubParsersAction
) -> None:
    """# Register Ground Parser.

    ## Args:
        * subparser (_SubParsersAction):    Parent's sub-parser object.
    """
    # Initialize parser.
    _parser_:       ArgumentParser =    subparser.add_parser(
        name =          "ground",
        help =          "Ground a problem.",
        description =   """Ground a problem and print its size, or dump the grounded model."""
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    # INPUT ========================================================================================
    _input_:        _ArgumentGroup =    _parser_.add_argument_group(title = "Input")

    _input_.add_argument("domain",  type = str, help = """HDDL domain file.""")
    _input_.add_argument("problem", type = str, help = """HDDL problem file.""")

    # GROUNDING ====================================================================================
    _grounding_:    _ArgumentGroup =    _parser_.add_argument_group(title = "Grounding")

    _grounding_.add_argument(
        "--no-relaxed-pruning",
        dest =          "prune_relaxed",
        action =        "store_false",
        default =       True,
        help =          """Keep operators and methods unreachable in the delete relaxation."""
    )

    _grounding_.add_argument(
        "--instantiation-cap",
        dest =          "instantiation_cap",
        type =          int,
        default =       5_000_000,
        help =          """Maximum instantiated atoms, operators and methods. Defaults to 
                        5,000,000."""
    )

    # OUTPUT =======================================================================================
    _output_:       _ArgumentGroup =    _parser_.add_argument_group(title = "Output")

    _output_.add_argument(
        "--dump",
        dest =          "dump",
        type =          str,
        default =       None,
        help =          """Write the grounded model dump to this file ("-" for standard output)."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
