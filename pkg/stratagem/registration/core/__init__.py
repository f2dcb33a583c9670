"""# stratagem.registration.core

Core registration components.
"""

__all__ =   [
                # Core components.
                "Entry",
                "EntryType",
                "Registry",
                
                # Decorators.
                "register_command",
                "register_heuristic",
                
                # Exceptions.
                "DuplicateEntryError",
                "EntryNotFoundError",
                "IncompleteEntryError",
                "RegistrationError"
            ]

from stratagem.registration.core.decorators import *
from stratagem.registration.core.entry      import Entry, EntryType
from stratagem.registration.core.exceptions import *
from stratagem.registration.core.registry   import Registry
