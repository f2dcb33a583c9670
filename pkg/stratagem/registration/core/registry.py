"""# stratagem.registration.core.registry

Registry base: a name-keyed collection of entries filled by decorators as the modules of one
sub-package (`stratagem.commands`, `stratagem.heuristics`) are imported. The package is walked
on first lookup.
"""

__all__ = ["Registry"]

from abc                                    import ABC, abstractmethod
from argparse                               import _SubParsersAction
from importlib                              import import_module
from logging                                import Logger
from pkgutil                                import walk_packages
from types                                  import ModuleType
from typing                                 import Dict, Iterator, List, Optional

from stratagem.registration.core.entry      import Entry, EntryType
from stratagem.registration.core.exceptions import DuplicateEntryError, EntryNotFoundError
from stratagem.utilities                    import get_child

class Registry(ABC):
    """# Registry"""

    def __init__(self,
        name:   str
    ):
        """# Instantiate Registry.

        ## Args:
            * name  (str):  Sub-package of `stratagem` whose modules register into this registry.
        """
        # Initialize logger.
        self.__logger__:    Logger =            get_child(f"{name}-registry")

        # Define properties.
        self._name_:        str =               name
        self._entries_:     Dict[str, Entry] =  {}
        self._loaded_:      bool =              False

    # PROPERTIES ===================================================================================

    @property
    def entries(self) -> Dict[str, Entry]:
        """# Registered Entries (copy)."""
        return self._entries_.copy()

    @property
    def is_loaded(self) -> bool:
        """# Sub-Package has been Walked?"""
        return self._loaded_

    @property
    def name(self) -> str:
        """# Registry Name."""
        return self._name_

    # METHODS ======================================================================================

    def get_entry(self,
        key:    str
    ) -> Entry:
        """# Get Entry.

        ## Args:
            * key   (str):  Registered name.

        ## Raises:
            * EntryNotFoundError:   If the name is not registered; the error carries the closest
                                    registered names.

        ## Returns:
            * Entry:    Entry registered under the name.
        """
        self._ensure_loaded_()

        if key not in self._entries_:
            raise EntryNotFoundError(entry_name = key, registry_name = self._name_, known = list(self._entries_))

        return self._entries_[key]

    def list(self,
        filter_by:  Optional[List[str]] =   None
    ) -> List[str]:
        """# List Entry Names.

        ## Args:
            * filter_by (List[str]):    Tags every listed entry must carry.

        ## Returns:
            * List[str]:    Sorted names.
        """
        self._ensure_loaded_()

        return sorted(name for name, entry in self._entries_.items() if entry.has_tags(*(filter_by or [])))

    def load_all(self) -> None:
        """# Walk the Sub-Package (once)."""
        if self._loaded_: return

        self._import_all_modules_()

        self.__logger__.debug(f"Loaded {len(self._entries_)} entries: {', '.join(sorted(self._entries_))}")

        self._loaded_:  bool =  True

    def register(self,
        name:   str,
        **kwargs
    ) -> None:
        """# Register Entry.

        ## Args:
            * name  (str):  Name of entry; remaining arguments go to the entry factory.

        ## Raises:
            * DuplicateEntryError:  If the name is already registered.
        """
        if name in self._entries_: raise DuplicateEntryError(entry_name = name, registry_name = self._name_)

        self._entries_[name] =  self._create_entry_(name = name, **kwargs)

    def register_parsers(self,
        subparser:  _SubParsersAction
    ) -> None:
        """# Add the Parser of Every Entry that has One.

        ## Args:
            * subparser (_SubParsersAction):    Sub-parser action of the top-level parser.
        """
        self._ensure_loaded_()

        # Name order keeps `--help` stable.
        for name in sorted(self._entries_):
            if self._entries_[name].parser is not None: self._entries_[name].register_parser(subparser = subparser)

    # HELPERS ======================================================================================

    @abstractmethod
    def _create_entry_(self, **kwargs) -> EntryType:
        """# Create Entry of this Registry's Type."""
        pass

    def _ensure_loaded_(self) -> None:
        """# Walk the Sub-Package on First Use."""
        if not self._loaded_: self.load_all()

    def _import_all_modules_(self) -> None:
        """# Import Every Non-Test Module of the Sub-Package.

        A module that fails to import is logged and skipped; whatever it would have registered is
        then reported as not registered on lookup.
        """
        try:# Locate sub-package.
            package:    ModuleType =    import_module(f"stratagem.{self._name_}")

        except ImportError as e:
            self.__logger__.warning(f"Could not import package stratagem.{self._name_}: {e}")
            return

        for _, module, _ in walk_packages(
            path =      package.__path__,
            prefix =    f"stratagem.{self._name_}.",
            onerror =   lambda _: None
        ):
            # Test suites register nothing.
            if ".tests" in module: continue

            try:# Registration happens on import.
                import_module(name = module)

            except ImportError as e:
                self.__logger__.warning(f"Error importing {module} module: {e}")

    # DUNDERS ======================================================================================

    def __contains__(self,
        key:    str
    ) -> bool:
        """# Name is Registered? (does not walk the sub-package)"""
        return key in self._entries_

    def __getitem__(self,
        key:    str
    ) -> Entry:
        """# Get Entry by Name."""
        return self.get_entry(key = key)

    def __iter__(self) -> Iterator[Entry]:
        """# Entries in Name Order."""
        self._ensure_loaded_()

        return iter([self._entries_[name] for name in sorted(self._entries_)])

    def __len__(self) -> int:
        """# Number of Registrations."""
        return len(self._entries_)

    def __repr__(self) -> str:
        """# Registry Object Representation."""
        return f"<{self._name_.capitalize()}Registry({len(self._entries_)} entries)>"
