"""# stratagem.hddl

HDDL frontend: lifted model, parser, and printer for total-order hierarchical planning domains and
problems.
"""

__all__ =   [
                # Model.
                "Action",
                "Atom",
                "CompoundTask",
                "LiftedDomain",
                "LiftedProblem",
                "Literal",
                "Method",
                "Parameter",
                "Predicate",
                "TaskReference",
                "type_members",

                # Errors.
                "ArityError",
                "HDDLError",
                "HDDLSemanticError",
                "HDDLSyntaxError",
                "UndeclaredObjectError",
                "UndeclaredPredicateError",
                "UndeclaredTaskError",
                "UndeclaredTypeError",
                "UnknownRequirementError",
                "UnsupportedFeatureError",

                # Operations.
                "parse_domain",
                "parse_problem",
                "print_domain",
                "print_problem",
                "read_domain",
                "read_problem"
            ]

from stratagem.hddl.exceptions  import *
from stratagem.hddl.model       import *
from stratagem.hddl.parser      import parse_domain, parse_problem, read_domain, read_problem
from stratagem.hddl.printer     import print_domain, print_problem
