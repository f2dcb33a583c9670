"""# stratagem.hddl.exceptions

Defines the errors raised while reading HDDL domain and problem files. Every error carries the 
1-based line and column of the offending input.
"""

__all__ =   [
                "ArityError",
                "HDDLError",
                "HDDLSemanticError",
                "HDDLSyntaxError",
                "UndeclaredObjectError",
                "UndeclaredPredicateError",
                "UndeclaredTaskError",
                "UndeclaredTypeError",
                "UnknownRequirementError",
                "UnsupportedFeatureError"
            ]

from typing import Optional

class HDDLError(Exception):
    """# Generic HDDL Error.
    
    Base exception class for all HDDL errors.
    """
    
    def __init__(self,
        message:    str,
        line:       int =           1,
        column:     int =           1,
        source:     Optional[str] = None
    ):
        """# Raise HDDL Error.

        ## Args:
            * message   (str):  Human-readable description.
            * line      (int):  1-based line of the offending input.
            * column    (int):  1-based column of the offending input.
            * source    (str):  Path of the file being read, if known.
        """
        # Define properties.
        self.message:   str =           message
        self.line:      int =           line
        self.column:    int =           column
        self.source:    Optional[str] = source
        
        # Initialize exception.
        super(HDDLError, self).__init__(f"{line}:{column}: {message}")
        
    def diagnostic(self,
        source: Optional[str] = None
    ) -> str:
        """# Render Diagnostic.

        ## Args:
            * source    (str):  File name to report. Defaults to the recorded source.

        ## Returns:
            * str:  `file:line:col: message`.
        """
        return f"{source or self.source or '<input>'}:{self.line}:{self.column}: {self.message}"


class HDDLSyntaxError(HDDLError):
    """# HDDL Syntax Error.
    
    Raised on lexical errors, unbalanced parentheses, and malformed section structure.
    """
    pass


class HDDLSemanticError(HDDLError):
    """# HDDL Semantic Error.
    
    Raised when a well-formed file violates a declaration or cross-reference rule.
    """
    pass


class UnknownRequirementError(HDDLSemanticError):
    """# Unknown Requirement Error."""
    
    def __init__(self, flag: str, line: int, column: int):
        """# Raise Unknown Requirement Error.

        ## Args:
            * flag  (str):  Requirement flag as written.
        """
        super(UnknownRequirementError, self).__init__(f"unknown requirement flag '{flag}'", line, column)


class UndeclaredTaskError(HDDLSemanticError):
    """# Undeclared Task Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Undeclared Task Error.

        ## Args:
            * name  (str):  Task name referenced.
        """
        super(UndeclaredTaskError, self).__init__(f"undeclared task '{name}'", line, column)


class UndeclaredPredicateError(HDDLSemanticError):
    """# Undeclared Predicate Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Undeclared Predicate Error.

        ## Args:
            * name  (str):  Predicate name referenced.
        """
        super(UndeclaredPredicateError, self).__init__(f"undeclared predicate '{name}'", line, column)


class UndeclaredTypeError(HDDLSemanticError):
    """# Undeclared Type Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Undeclared Type Error.

        ## Args:
            * name  (str):  Type name referenced.
        """
        super(UndeclaredTypeError, self).__init__(f"undeclared type '{name}'", line, column)


class UndeclaredObjectError(HDDLSemanticError):
    """# Undeclared Object Error.
    
    Raised for unknown objects, constants, and variables.
    """
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Undeclared Object Error.

        ## Args:
            * name  (str):  Object, constant, or variable referenced.
        """
        super(UndeclaredObjectError, self).__init__(f"undeclared object or variable '{name}'", line, column)


class ArityError(HDDLSemanticError):
    """# Arity Error."""
    
    def __init__(self, name: str, expected: int, received: int, line: int, column: int):
        """# Raise Arity Error.

        ## Args:
            * name      (str):  Predicate or task name.
            * expected  (int):  Declared parameter count.
            * received  (int):  Argument count supplied.
        """
        super(ArityError, self).__init__(
            f"wrong arity for '{name}': expected {expected} argument(s), got {received}", line, column
        )


class UnsupportedFeatureError(HDDLSemanticError):
    """# Unsupported Feature Error.
    
    Raised for HDDL constructs outside the supported total-order STRIPS subset (quantifiers, 
    conditional effects, disjunction, partially ordered methods, numeric fluents).
    """
    
    def __init__(self, feature: str, line: int, column: int):
        """# Raise Unsupported Feature Error.

        ## Args:
            * feature   (str):  Construct encountered.
        """
        super(UnsupportedFeatureError, self).__init__(f"unsupported feature: {feature}", line, column)
