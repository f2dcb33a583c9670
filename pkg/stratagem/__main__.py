"""# stratagem.main

Stratagem application driver.
"""

__all__ = ["main"]

from argparse               import Namespace
from logging                import Logger
from typing                 import Optional, Sequence

from stratagem.__args__     import parse_stratagem_arguments
from stratagem.registration import COMMAND_REGISTRY
from stratagem.utilities    import BANNER, get_logger

def main(
    argv:   Optional[Sequence[str]] =   None
) -> int:
    """# Execute Application.

    ## Args:
        * argv  (Sequence[str]):    Command line. Defaults to the process arguments.

    ## Returns:
        * int:  Exit code of the command; 1 if no command was given or an unexpected error occurred.
    """
    # Parse arguments.
    _arguments_:    Namespace = parse_stratagem_arguments(argv)
    
    # Initialize logger.
    _logger_:       Logger =    get_logger(
                                    logger_name =   "stratagem",
                                    logging_level = _arguments_.logging_level,
                                    logging_path =  _arguments_.logging_path
                                )
    
    # Log arguments for debugging.
    _logger_.debug(f"Arguments: {vars(_arguments_)}")
    
    try:# Log version for debugging.
        _logger_.debug(BANNER)

        # No command.
        if _arguments_.command is None:
            _logger_.error("No command given; see `stratagem --help`")
            return 1

        # Dispatch command.
        return COMMAND_REGISTRY.dispatch(**vars(_arguments_))
    
    # Catch wildcard errors.
    except Exception as e:
        _logger_.critical(f"Unexpected error caught in main process: {e}", exc_info = True)
        return 1
    
    # Exit gracefully.
    finally:                _logger_.debug("Exiting")

if __name__ == "__main__": exit(main())
