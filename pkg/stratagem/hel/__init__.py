"""# stratagem.hel

Heuristic expression language (HEL): a closed, sandboxed s-expression language in which candidate
heuristics are written. A program preprocesses the grounded model once (`init`) and computes a
per-node estimate from pre-resolved structures (`eval`).
"""

__all__ =   [
                # Program model.
                "Call",
                "Definition",
                "Expression",
                "HelProgram",
                "Number",
                "Symbol",
                "Text",

                # Builtins.
                "Builtin",
                "BUILTINS",
                "builtin_names",
                "FactSet",
                "RESERVED",
                "TaskPattern",

                # Reading & execution.
                "hel_eval",
                "hel_init",
                "hel_parse",
                "HelHeuristic",
                "implemented_builtins",
                "read_program",

                # Errors.
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

from stratagem.hel.builtins     import *
from stratagem.hel.exceptions   import *
from stratagem.hel.interpreter  import hel_eval, hel_init, HelHeuristic, implemented_builtins
from stratagem.hel.parser       import hel_parse, read_program
from stratagem.hel.program      import *
