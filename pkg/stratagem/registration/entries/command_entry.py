"""# stratagem.registration.entries.command_entry

Command entry: a sub-command's entry point, its argument parser handler and the help section it
is listed under.
"""

__all__ =   [
                "COMMAND_SECTIONS",
                "CommandEntry"
            ]

from typing                             import Callable, Tuple

from stratagem.registration.core.entry  import Entry

# Help sections, in listing order; commands of any other section are listed last.
COMMAND_SECTIONS:   Tuple[str, ...] =   ("Planning", "Pipeline", "Benchmark")

class CommandEntry(Entry):
    """# Command Entry"""
    
    def __init__(self,
        name:           str,
        entry_point:    Callable[..., int],
        parser:         Callable,
        section:        str =   "Other",
        description:    str =   ""
    ):
        """# Instantiate Command Registration Entry.

        ## Args:
            * name          (str):      Sub-command name.
            * entry_point   (Callable): Command process entry point; returns an exit code.
            * parser        (Callable): Argument parser registration handler.
            * section       (str):      Help section the command is listed under.
            * description   (str):      One-line help listing description.
        """
        super(CommandEntry, self).__init__(name = name, description = description, tags = [section], parser = parser)
        
        # Define properties.
        self._entry_point_: Callable[..., int] =    entry_point
        self._section_:     str =                   section
        
    # PROPERTIES ===================================================================================
    
    @property
    def entry_point(self) -> Callable[..., int]:
        """# Command Process Entry Point."""
        return self._entry_point_
    
    @property
    def section(self) -> str:
        """# Help Section."""
        return self._section_
