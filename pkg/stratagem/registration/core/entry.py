"""# stratagem.registration.core.entry

Registration entry base: a named, described, tagged record that may carry an argument parser
handler. Commands and heuristics specialize it.
"""

__all__ =   [
                "Entry",
                "EntryType"
            ]

from abc                                    import ABC
from argparse                               import _SubParsersAction
from logging                                import Logger
from typing                                 import Callable, List, Optional, TypeVar

from stratagem.registration.core.exceptions import IncompleteEntryError
from stratagem.utilities                    import get_child

class Entry(ABC):
    """# Registration Entry"""

    def __init__(self,
        name:           str,
        description:    str =                   "",
        tags:           Optional[List[str]] =   None,
        parser:         Optional[Callable] =    None
    ):
        """# Instantiate Entry.

        ## Args:
            * name          (str):              Name under which the entry is selectable.
            * description   (str):              One-line description for listings.
            * tags          (List[str]):        Tags used to filter listings.
            * parser        (Callable | None):  Argument parser registration handler.
        """
        # Initialize logger.
        self.__logger__:    Logger =                get_child(f"entry.{name}")

        # Define properties.
        self._name_:        str =                   name
        self._description_: str =                   " ".join(description.split())
        self._tags_:        List[str] =             list(tags or [])
        self._parser_:      Optional[Callable] =    parser

        self.__logger__.debug(f"Created {self!r}")

    # PROPERTIES ===================================================================================

    @property
    def description(self) -> str:
        """# One-Line Description (whitespace collapsed)."""
        return self._description_

    @property
    def name(self) -> str:
        """# Entry Name."""
        return self._name_

    @property
    def parser(self) -> Optional[Callable]:
        """# Argument Parser Handler."""
        return self._parser_

    @property
    def tags(self) -> List[str]:
        """# Listing Tags."""
        return self._tags_

    # METHODS ======================================================================================

    def has_tags(self,
        *tags:  str
    ) -> bool:
        """# Entry Carries Every Tag?

        ## Args:
            * tags  (str):  Tags required; none means any entry matches.

        ## Returns:
            * bool: True if every tag requested is carried by the entry.
        """
        return all(tag in self._tags_ for tag in tags)

    def register_parser(self,
        subparser:  _SubParsersAction
    ) -> None:
        """# Register Entry Argument Parser.

        ## Args:
            * subparser (_SubParsersAction):    Parent's sub-parser.

        ## Raises:
            * IncompleteEntryError: If the entry has no parser handler.
        """
        if self._parser_ is None: raise IncompleteEntryError(entry_name = self._name_, missing = "parser")

        self.__logger__.debug(f"Adding parser under {subparser.dest}")

        self._parser_(subparser)

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Entry Object Representation."""
        return f"<{type(self).__name__}({self._name_}{''.join(f' #{t}' for t in self._tags_)})>"


# Entry produced by a registry's factory.
EntryType = TypeVar("EntryType", bound = Entry)
