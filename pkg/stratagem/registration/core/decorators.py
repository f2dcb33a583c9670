"""# stratagem.registration.core.decorators

Registration decorators for commands and heuristics.
"""

__all__ =   [
                "register_command",
                "register_heuristic"
            ]

from typing import Callable, List, Optional, Type

def register_command(
    name:           str,
    parser:         Callable,
    section:        str =   "Other",
    description:    str =   ""
) -> Callable:
    """# Register Command.

    ## Args:
        * name          (str):      Name of sub-command.
        * parser        (Callable): Command argument parser registration handler.
        * section       (str):      Help section the command is listed under.
        * description   (str):      One-line help listing description.

    ## Returns:
        * Callable: Registration decorator.
    """
    # Define decorator.
    def decorator(
        entry_point:    Callable
    ) -> Callable:
        """# Command Registration Decorator.

        ## Args:
            * entry_point   (Callable): Command's main process entry point.
        """
        # Load registry.
        from stratagem.registration import COMMAND_REGISTRY
        
        # Register command.
        COMMAND_REGISTRY.register(
            name =          name,
            entry_point =   entry_point,
            parser =        parser,
            section =       section,
            description =   description
        )
        
        # Return entry point.
        return entry_point
    
    # Expose decorator.
    return decorator


def register_heuristic(
    name:           str,
    tags:           Optional[List[str]] =   None,
    description:    str =                   ""
) -> Callable:
    """# Register Heuristic.

    ## Args:
        * name          (str):          Name under which the heuristic is selectable (`--heuristic`).
        * tags          (List[str]):    Tags that describe the heuristic's taxonomy.
        * description   (str):          One-line description for listings.

    ## Returns:
        * Callable: Registration decorator.
    """
    # Define decorator.
    def decorator(
        cls:    Type
    ) -> Type:
        """# Heuristic Registration Decorator

        ## Args:
            * cls   (Type): Heuristic class being registered.
        """
        # Load registry.
        from stratagem.registration import HEURISTIC_REGISTRY
        
        # Register heuristic.
        HEURISTIC_REGISTRY.register(
            cls =           cls,
            name =          name,
            tags =          tags,
            description =   description
        )
        
        # Return registered class.
        return cls
    
    # Expose decorator.
    return decorator
