"""# stratagem.search.exceptions

Defines the errors raised while configuring a search.
"""

__all__ =   [
                "SearchConfigError",
                "SearchError"
            ]

class SearchError(Exception):
    """# Generic Search Error.
    
    Base exception class for all search errors. Search outcomes (timeouts, exhausted open lists, 
    budgets) are statuses, not errors.
    """
    
    def __init__(self,
        message:    str
    ):
        """# Raise Search Error.

        ## Args:
            * message   (str):  Human-readable description.
        """
        # Define properties.
        self.message:   str =   message
        
        # Initialize exception.
        super(SearchError, self).__init__(message)


class SearchConfigError(SearchError):
    """# Search Configuration Error.
    
    Raised when a search configuration field is out of range.
    """
    
    def __init__(self,
        field:  str,
        value:  object,
        reason: str
    ):
        """# Raise Search Configuration Error.

        ## Args:
            * field     (str):      Offending configuration field.
            * value     (object):   Value provided.
            * reason    (str):      Constraint violated.
        """
        # Define properties.
        self.field: str =       field
        self.value: object =    value
        
        # Initialize exception.
        super(SearchConfigError, self).__init__(f"invalid {field} {value!r}: {reason}")
