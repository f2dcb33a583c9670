"""# stratagem.hel.exceptions

Defines the errors raised while reading, checking and evaluating heuristic expression language
(HEL) programs. Syntax and static errors carry the 1-based line and column of the offending input.
"""

__all__ =   [
                "ArityMismatchError",
                "DuplicateSymbolError",
                "EvalBuiltinInInitError",
                "HelError",
                "HelRuntimeError",
                "HelStaticError",
                "HelSyntaxError",
                "InitBuiltinInEvalError",
                "ReservedBuiltinError",
                "UnboundSymbolError",
                "UnknownBuiltinError"
            ]

from typing import Optional

class HelError(Exception):
    """# Generic HEL Error.
    
    Base exception class for all HEL errors.
    """
    
    def __init__(self,
        message:    str,
        line:       int =           1,
        column:     int =           1,
        source:     Optional[str] = None
    ):
        """# Raise HEL Error.

        ## Args:
            * message   (str):  Human-readable description.
            * line      (int):  1-based line of the offending input.
            * column    (int):  1-based column of the offending input.
            * source    (str):  Path of the program file, if known.
        """
        # Define properties.
        self.message:   str =           message
        self.line:      int =           line
        self.column:    int =           column
        self.source:    Optional[str] = source
        
        # Initialize exception.
        super(HelError, self).__init__(f"{line}:{column}: {message}")
        
    def diagnostic(self) -> str:
        """# Render Diagnostic (`file:line:col: message`)."""
        return f"{self.source or '<program>'}:{self.line}:{self.column}: {self.message}"


class HelSyntaxError(HelError):
    """# HEL Syntax Error.
    
    Raised on unbalanced parentheses, malformed literals and a program form that does not match 
    `(heuristic "name" (init ...) (eval expr))`.
    """
    pass


class HelStaticError(HelError):
    """# HEL Static Error.
    
    Raised when a well-formed program violates a scoping, phase or arity rule.
    """
    pass


class UnknownBuiltinError(HelStaticError):
    """# Unknown Builtin Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Unknown Builtin Error.

        ## Args:
            * name  (str):  Builtin name as written.
        """
        super(UnknownBuiltinError, self).__init__(f"unknown builtin '{name}'", line, column)


class InitBuiltinInEvalError(HelStaticError):
    """# Init Builtin in Eval Position Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Init Builtin in Eval Position Error.

        ## Args:
            * name  (str):  Builtin name as written.
        """
        super(InitBuiltinInEvalError, self).__init__(
            f"'{name}' is an init builtin and cannot be used in eval; bind it with def", line, column
        )


class EvalBuiltinInInitError(HelStaticError):
    """# Eval Builtin in Init Position Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Eval Builtin in Init Position Error.

        ## Args:
            * name  (str):  Builtin name as written.
        """
        super(EvalBuiltinInInitError, self).__init__(f"'{name}' is an eval builtin and cannot be bound in init", line, column)


class UnboundSymbolError(HelStaticError):
    """# Unbound Symbol Error."""
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Unbound Symbol Error.

        ## Args:
            * name  (str):  Symbol referenced.
        """
        super(UnboundSymbolError, self).__init__(f"unbound symbol '{name}'", line, column)


class DuplicateSymbolError(HelStaticError):
    """# Duplicate Symbol Error.
    
    Raised when a symbol is defined twice or shadows a builtin.
    """
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Duplicate Symbol Error.

        ## Args:
            * name  (str):  Symbol defined.
        """
        super(DuplicateSymbolError, self).__init__(f"symbol '{name}' is already defined", line, column)


class ArityMismatchError(HelStaticError):
    """# Arity Mismatch Error."""
    
    def __init__(self, name: str, expected: str, received: int, line: int, column: int):
        """# Raise Arity Mismatch Error.

        ## Args:
            * name      (str):  Builtin name.
            * expected  (str):  Accepted argument counts, rendered.
            * received  (int):  Argument count supplied.
        """
        super(ArityMismatchError, self).__init__(
            f"wrong arity for '{name}': expected {expected} argument(s), got {received}", line, column
        )


class ReservedBuiltinError(HelStaticError):
    """# Reserved Builtin Error.
    
    Raised for builtin names reserved for a later language revision.
    """
    
    def __init__(self, name: str, line: int, column: int):
        """# Raise Reserved Builtin Error.

        ## Args:
            * name  (str):  Builtin name as written.
        """
        super(ReservedBuiltinError, self).__init__(f"builtin '{name}' is reserved and not yet available", line, column)


class HelRuntimeError(HelError):
    """# HEL Runtime Error.
    
    Raised while executing init directives or evaluating the eval expression: type faults (arithmetic 
    on a fact-set, a table where a set is expected) and division by zero.
    """
    pass
