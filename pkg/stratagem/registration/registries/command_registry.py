"""# stratagem.registration.registries.command_registry

Sub-command registry: dispatch of parsed arguments to a command's entry point, and the sectioned
listing used by the top-level help.
"""

__all__ = ["CommandRegistry"]

from typing                             import Dict, List, override

from stratagem.registration.core        import IncompleteEntryError, Registry
from stratagem.registration.entries     import COMMAND_SECTIONS, CommandEntry

class CommandRegistry(Registry):
    """# Command Registry"""
    
    def __init__(self,
        name:   str =   "commands"
    ):
        """# Instantiate Command Registry.

        ## Args:
            * name  (str):  Name of the sub-package that holds the commands.
        """
        super(CommandRegistry, self).__init__(name = name)
        
    # PROPERTIES ===================================================================================
    
    @override
    @property
    def entries(self) -> Dict[str, CommandEntry]:
        """# Command Registry Entries"""
        return self._entries_.copy()
    
    # METHODS ======================================================================================
    
    def dispatch(self,
        command:    str,
        **kwargs
    ) -> int:
        """# Dispatch Parsed Arguments to a Command.

        ## Args:
            * command   (str):  Sub-command selected on the command line.
            
        ## Raises:
            * EntryNotFoundError:   If the command is not registered.
            * IncompleteEntryError: If the command has no entry point.

        ## Returns:
            * int:  Command exit code.
        """
        entry:  CommandEntry =  self.get_entry(key = command)
        
        if entry.entry_point is None: raise IncompleteEntryError(entry_name = command, missing = "an entry point")
        
        self.__logger__.debug(f"Dispatching to {command} with arguments: {kwargs}")
        
        return entry.entry_point(**kwargs)
    
    def sections(self) -> Dict[str, List[CommandEntry]]:
        """# Commands by Help Section.

        ## Returns:
            * Dict[str, List[CommandEntry]]:    Known sections first, in their listing order, then
                                                any other section alphabetically; commands keep
                                                their registration order within a section.
        """
        self._ensure_loaded_()

        # Group by section.
        grouped:    Dict[str, List[CommandEntry]] = {}
        for entry in self._entries_.values(): grouped.setdefault(entry.section, []).append(entry)

        # Order sections.
        order:      List[str] =                     [
                                                        *(s for s in COMMAND_SECTIONS if s in grouped),
                                                        *sorted(s for s in grouped if s not in COMMAND_SECTIONS)
                                                    ]

        return {section: grouped[section] for section in order}
        
    # HELPERS ======================================================================================
    
    @override
    def _create_entry_(self, **kwargs) -> CommandEntry:
        """# Create Command Entry."""
        return CommandEntry(**kwargs)
