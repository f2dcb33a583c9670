"""# stratagem.registration.registries.heuristic_registry

Defines the heuristic registry system.
"""

__all__ = ["HeuristicRegistry"]

from typing                             import Any, Dict, override, Type

from stratagem.registration.core        import Registry
from stratagem.registration.entries     import HeuristicEntry

class HeuristicRegistry(Registry):
    """# Heuristic Registry
    
    Registry of built-in heuristics with lazy loading.
    """
    
    def __init__(self,
        name:   str =   "heuristics"
    ):
        """# Instantiate Heuristic Registry.
        
        ## Args:
            * name  (str):  Name of the sub-package that the registry represents.
        """
        # Initialize registry.
        super(HeuristicRegistry, self).__init__(name = name)
        
    # PROPERTIES ===================================================================================
    
    @override
    @property
    def entries(self) -> Dict[str, HeuristicEntry]:
        """# Registry Entries."""
        return self._entries_.copy()
        
    # METHODS ======================================================================================

    def describe(self) -> str:
        """# Describe Built-in Heuristics.

        ## Returns:
            * str:  "name (description)" of every built-in, in name order, comma separated.
        """
        return ", ".join(f"{entry.name} ({entry.description})" for entry in self)
        
    def load(self,
        name:       str,
        **kwargs
    ) -> Any:
        """# Load Registered Heuristic.

        ## Args:
            * name  (str):  Heuristic registry entry name.

        ## Returns:
            * Heuristic:    Instantiated (uninitialized) heuristic.
        """
        # Extract class.
        cls:    Type =  self.get_entry(key = name).cls
        
        # Log action for debugging.
        self.__logger__.debug(f"Loading {name} with arguments: {kwargs}")
        
        # Instantiate heuristic.
        return cls(**kwargs)
        
    # HELPERS ======================================================================================
    
    @override
    def _create_entry_(self, **kwargs) -> HeuristicEntry:
        """# Create Heuristic Entry.

        ## Returns:
            * HeuristicEntry:   New heuristic entry instance.
        """
        return HeuristicEntry(**kwargs)
