"""# stratagem.registration.entries.heuristic_entry

Heuristic entry: the class behind a built-in `--heuristic` name.
"""

__all__ = ["HeuristicEntry"]

from typing                             import List, Optional, Type

from stratagem.registration.core.entry  import Entry

class HeuristicEntry(Entry):
    """# Heuristic Entry"""
    
    def __init__(self,
        cls:            Type,
        name:           str,
        tags:           Optional[List[str]] =   None,
        description:    str =                   ""
    ):
        """# Instantiate Heuristic Registration Entry.

        ## Args:
            * cls           (Type):         Heuristic class, instantiated with its options on load.
            * name          (str):          Built-in name.
            * tags          (List[str]):    Tags that describe the heuristic.
            * description   (str):          One-line description.
        """
        super(HeuristicEntry, self).__init__(name = name, description = description, tags = tags)
        
        self._cls_: Type =  cls
        
    # PROPERTIES ===================================================================================
    
    @property
    def cls(self) -> Type:
        """# Heuristic Class."""
        return self._cls_
