"""# stratagem.registration.entries

Registration entry type implementations.
"""

__all__ =   [
                "COMMAND_SECTIONS",
                "CommandEntry",
                "HeuristicEntry"
            ]

from stratagem.registration.entries.command_entry   import COMMAND_SECTIONS, CommandEntry
from stratagem.registration.entries.heuristic_entry import HeuristicEntry
