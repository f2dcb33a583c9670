"""# stratagem.registration.registries

Registration registry type implementations.
"""

__all__ =   [
                "CommandRegistry",
                "HeuristicRegistry"
            ]

from stratagem.registration.registries.command_registry     import CommandRegistry
from stratagem.registration.registries.heuristic_registry   import HeuristicRegistry
