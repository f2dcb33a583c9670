"""# stratagem.registration

This package defines registration systems and their utilities.
"""

__all__ =   [
                # Registry & component classes.
                "CommandEntry",
                "CommandRegistry",
                "HeuristicEntry",
                "HeuristicRegistry",
                
                # Specific registries.
                "COMMAND_REGISTRY",
                "HEURISTIC_REGISTRY",
                
                # Registration decorators.
                "register_command",
                "register_heuristic"
            ]

from stratagem.registration.core        import *
from stratagem.registration.entries     import *
from stratagem.registration.registries  import *

# Registries.
COMMAND_REGISTRY:   CommandRegistry =   CommandRegistry(name = "commands")
HEURISTIC_REGISTRY: HeuristicRegistry = HeuristicRegistry(name = "heuristics")
