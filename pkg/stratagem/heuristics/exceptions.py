"""# stratagem.heuristics.exceptions

Defines the errors raised by heuristic handles and the heuristic loader.
"""

__all__ =   [
                "HeuristicError",
                "HeuristicFailure",
                "UnknownHeuristicError"
            ]

from typing import List

class HeuristicError(Exception):
    """# Generic Heuristic Error.
    
    Base exception class for all heuristic errors.
    """
    
    def __init__(self,
        message:    str
    ):
        """# Raise Heuristic Error.

        ## Args:
            * message   (str):  Human-readable description.
        """
        # Define properties.
        self.message:   str =   message
        
        # Initialize exception.
        super(HeuristicError, self).__init__(message)


class HeuristicFailure(HeuristicError):
    """# Heuristic Failure.
    
    Describes the fault that poisoned a heuristic handle.
    """
    
    def __init__(self,
        heuristic:  str,
        phase:      str,
        cause:      BaseException
    ):
        """# Raise Heuristic Failure.

        ## Args:
            * heuristic (str):              Name of the poisoned heuristic.
            * phase     (str):              "initialize" or "evaluate".
            * cause     (BaseException):    Underlying fault.
        """
        # Define properties.
        self.heuristic: str =           heuristic
        self.phase:     str =           phase
        self.cause:     BaseException = cause
        
        # Initialize exception.
        super(HeuristicFailure, self).__init__(
            f"heuristic {heuristic} failed during {phase}: {type(cause).__name__}: {cause}"
        )


class UnknownHeuristicError(HeuristicError):
    """# Unknown Heuristic Error.
    
    Raised when a heuristic specification is neither a registered name, a reference program, nor a
    readable HEL file.
    """
    
    def __init__(self,
        specification:  str,
        available:      List[str]
    ):
        """# Raise Unknown Heuristic Error.

        ## Args:
            * specification (str):          Specification provided.
            * available     (List[str]):    Registered heuristic and reference program names.
        """
        # Define properties.
        self.specification: str =       specification
        self.available:     List[str] = available
        
        # Initialize exception.
        super(UnknownHeuristicError, self).__init__(
            f"unknown heuristic '{specification}'; expected a .hel path or one of: {', '.join(available)}"
        )
