"""# stratagem.registration.core.exceptions

Registration errors. A misspelt command or heuristic name is reported with the closest
registered names.
"""

__all__ =   [
                "DuplicateEntryError",
                "EntryNotFoundError",
                "IncompleteEntryError",
                "RegistrationError"
            ]

from difflib    import get_close_matches
from typing     import List, Optional, Sequence

class RegistrationError(Exception):
    """# Registration Error.

    Base of every registration error; carries the entry and, when known, the registry involved.
    """

    def __init__(self,
        message:        str,
        entry_name:     str,
        registry_name:  Optional[str] = None
    ):
        """# Raise Registration Error.

        ## Args:
            * message       (str):  Human-readable description.
            * entry_name    (str):  Entry involved.
            * registry_name (str):  Registry involved, if any.
        """
        super(RegistrationError, self).__init__(message)

        # Define properties.
        self.entry_name:    str =           entry_name
        self.registry_name: Optional[str] = registry_name


class DuplicateEntryError(RegistrationError):
    """# Duplicate Entry Error.

    Two modules register the same command or heuristic name.
    """

    def __init__(self,
        entry_name:     str,
        registry_name:  str
    ):
        """# Raise Duplicate Entry Error.

        ## Args:
            * entry_name    (str):  Name registered twice.
            * registry_name (str):  Registry holding the first registration.
        """
        super(DuplicateEntryError, self).__init__(
            f"{registry_name}: '{entry_name}' is already registered",
            entry_name, registry_name
        )


class EntryNotFoundError(RegistrationError):
    """# Entry Not Found Error."""

    def __init__(self,
        entry_name:     str,
        registry_name:  str,
        known:          Sequence[str] = ()
    ):
        """# Raise Entry Not Found Error.

        ## Args:
            * entry_name    (str):              Name looked up.
            * registry_name (str):              Registry searched.
            * known         (Sequence[str]):    Registered names, used for suggestions.
        """
        # Closest registered names.
        self.suggestions:   List[str] = get_close_matches(entry_name, list(known), n = 3)

        super(EntryNotFoundError, self).__init__(
            f"{registry_name}: '{entry_name}' is not registered"
            + (f" (did you mean {', '.join(self.suggestions)}?)" if self.suggestions else ""),
            entry_name, registry_name
        )


class IncompleteEntryError(RegistrationError):
    """# Incomplete Entry Error.

    An entry is asked for a handler it was registered without (its parser, or a command's entry
    point).
    """

    def __init__(self,
        entry_name: str,
        missing:    str
    ):
        """# Raise Incomplete Entry Error.

        ## Args:
            * entry_name    (str):  Entry being used.
            * missing       (str):  Handler it lacks.
        """
        super(IncompleteEntryError, self).__init__(f"'{entry_name}' was registered without {missing}", entry_name)

        self.missing:   str =   missing
