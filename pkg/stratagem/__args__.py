"""# stratagem.args

Stratagem application argument definitions and parsing.
"""

__all__ = ["parse_stratagem_arguments"]

from argparse                           import Action, ArgumentParser, _ArgumentGroup, HelpFormatter, Namespace, _SubParsersAction
from typing                             import List, Optional, Sequence, override

from stratagem._version_                import __version__
from stratagem.registration             import COMMAND_REGISTRY

def parse_stratagem_arguments(
    argv:   Optional[Sequence[str]] =   None
) -> Namespace:
    """# Parse Stratagem Arguments.
    
    This function should be called at the entry point of the Stratagem application. The name space 
    of argument keys and values that it provides is passed to the command's entry point.

    ## Args:
        * argv  (Sequence[str]):    Arguments to parse. Defaults to the process arguments.
    
    ## Returns:
        * NameSpace:    Name space of parsed arguments and their values.
    """
    # Initialize primary parser
    _parser_:       ArgumentParser =    ArgumentParser(
        prog =              "stratagem",
        description =       """Total-order HTN planning with pluggable and generated heuristics, 
                            their generate-evaluate-select pipeline and a benchmark harness.""",
        formatter_class =   CommandHelpFormatter
    )

    # Initialize sub-parser
    _subparser_:    _SubParsersAction = _parser_.add_subparsers(
        dest =              "command",
        help =              "Stratagem commands."
    )

    # +============================================================================================+
    # | BEGIN ARGUMENTS                                                                            |
    # +============================================================================================+

    _parser_.add_argument(
        "--version",
        action =            "version",
        version =           f"%(prog)s {__version__}"
    )

    # LOGGING ======================================================================================
    _logging_:      _ArgumentGroup =    _parser_.add_argument_group(
        title =             "Logging",
        description =       "Logging configuration."    
    )

    _logging_.add_argument(
        "--logging-level",
        type =              str,
        choices =           ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "NOTSET"],
        default =           "INFO",
        help =              """Minimum logging level (DEBUG < INFO < WARNING < ERROR < CRITICAL). 
                            Defaults to "INFO"."""
    )

    _logging_.add_argument(
        "--logging-path",
        type =              str,
        default =           "logs",
        help =              """Path at which logs will be written. Defaults to "./logs/"."""
    )

    # +============================================================================================+
    # | END ARGUMENTS                                                                              |
    # +============================================================================================+
    
    # Register command parsers.
    COMMAND_REGISTRY.register_parsers(subparser = _subparser_)

    # Parse arguments
    return _parser_.parse_args(argv)

class CommandHelpFormatter(HelpFormatter):
    """# Command Help Formatter.
    
    Lists sub-commands under the help section they were registered with.
    """
    
    @override
    def _format_action(self,
        action: Action
    ) -> str:
        """# Format Action.
        
        Sub-parser actions are listed by section; every other action is formatted as usual.

        ## Args:
            * action    (Action):   Action object being formatted.

        ## Returns:
            * str:  Formatted string representation of the action.
        """
        # Sub-parser actions carry a parser map.
        if hasattr(action, "choices") and hasattr(action, "_name_parser_map"):
            return self._format_sections_(action)
        
        # Otherwise, return simple command.
        return super()._format_action(action)
    
    def _format_sections_(self,
        action: Action
    ) -> str:
        """# Format Command Sections.
        
        ## Args:
            * action    (Action):   Sub-parsers action containing command choices.
            
        ## Returns:
            * str:  Command listing, one block per help section.
        """
        # Open with the sub-parser help.
        parts:      List[str] = [f"{action.help}\n"] if action.help else []

        # One block per section.
        for section, entries in COMMAND_REGISTRY.sections().items():

            # Section header.
            parts.append(f"{section}:\n{'-' * (len(section) + 1)}\n")

            # Command lines.
            for entry in entries:
                if entry.name in action.choices: parts.append(f"  {entry.name:<21} {entry.description}\n")
        
        # Provide listing.
        return "\n".join(parts)
