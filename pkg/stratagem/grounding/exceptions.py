"""# stratagem.grounding.exceptions

Defines the errors raised while instantiating a lifted problem.
"""

__all__ =   [
                "GroundingError",
                "GroundingLimitError",
                "TriviallyUnsolvableError"
            ]

class GroundingError(Exception):
    """# Generic Grounding Error.
    
    Base exception class for all grounding errors.
    """
    
    def __init__(self,
        message:    str
    ):
        """# Raise Grounding Error.

        ## Args:
            * message   (str):  Human-readable description.
        """
        # Define properties.
        self.message:   str =   message
        
        # Initialize exception.
        super(GroundingError, self).__init__(message)


class TriviallyUnsolvableError(GroundingError):
    """# Trivially Unsolvable Error.
    
    Raised when the initial task network references a task that grounding pruned (no 
    instantiation survives reachability or no finite decomposition exists).
    """
    
    def __init__(self,
        task:   str
    ):
        """# Raise Trivially Unsolvable Error.

        ## Args:
            * task  (str):  Canonical name of the pruned initial task.
        """
        # Define properties.
        self.task:  str =   task
        
        # Initialize exception.
        super(TriviallyUnsolvableError, self).__init__(
            f"trivially unsolvable: initial task '{task}' has no reachable grounding"
        )


class GroundingLimitError(GroundingError):
    """# Grounding Limit Error.
    
    Raised when the number of instantiated atoms and operators exceeds the configured cap.
    """
    
    def __init__(self,
        count:  int,
        cap:    int
    ):
        """# Raise Grounding Limit Error.

        ## Args:
            * count (int):  Instantiations produced when the cap was hit.
            * cap   (int):  Configured instantiation cap.
        """
        # Define properties.
        self.count: int =   count
        self.cap:   int =   cap
        
        # Initialize exception.
        super(GroundingLimitError, self).__init__(
            f"grounding blow-up: {count} instantiations exceed the cap of {cap}"
        )
