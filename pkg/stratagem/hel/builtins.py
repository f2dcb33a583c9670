"""# stratagem.hel.builtins

The closed builtin table of HEL and the non-numeric value kinds builtins produce.

Init builtins run once, when a program is initialized against a grounded model, and bind their
result to a symbol. Eval builtins run at every node and may only loop over structures resolved in
init (the pending network and bound fact-sets).
"""

__all__ =   [
                "Builtin",
                "BUILTINS",
                "builtin_names",
                "FactSet",
                "RESERVED",
                "TaskPattern"
            ]

from dataclasses    import dataclass
from typing         import Dict, List, Literal, Optional, Tuple

@dataclass(frozen = True)
class Builtin():
    r"""# :class:`Builtin`

    ## Properties:
    * :param:`name`         (str):  Name as written in programs.
    * :param:`phase`        (str):  "init" or "eval".
    * :param:`min_arity`    (int):  Minimum argument count.
    * :param:`max_arity`    (int):  Maximum argument count, None for variadic.
    * :param:`signature`    (str):  Argument and result kinds, for documentation and prompts.
    * :param:`description`  (str):  One-line description.
    """
    name:           str
    phase:          Literal["init", "eval"]
    min_arity:      int
    max_arity:      Optional[int]
    signature:      str
    description:    str

    def accepts(self, count: int) -> bool:
        """# Argument Count Accepted?"""
        return self.min_arity <= count and (self.max_arity is None or count <= self.max_arity)

    @property
    def arity(self) -> str:
        """# Accepted Argument Counts, Rendered."""
        if self.max_arity is None:              return f"at least {self.min_arity}"
        if self.max_arity == self.min_arity:    return str(self.min_arity)
        return f"{self.min_arity} to {self.max_arity}"


@dataclass(frozen = True)
class FactSet():
    r"""# :class:`FactSet`

    Frozen set of fact ids resolved during init.

    ## Properties:
    * :param:`ids`  (Tuple[int, ...]):  Fact ids, ascending.
    * :param:`bits` (int):              Same ids as a bitset.
    """
    ids:    Tuple[int, ...]
    bits:   int

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen = True)
class TaskPattern():
    r"""# :class:`TaskPattern`

    Case-insensitive substring matcher over task names, resolved during init.

    ## Properties:
    * :param:`substring`    (str):              Lower-cased substring.
    * :param:`matches`      (Tuple[bool, ...]): Match flag by task reference.
    """
    substring:  str
    matches:    Tuple[bool, ...]


def _table_(*builtins: Builtin) -> Dict[str, Builtin]:
    """# Index Builtins by Name."""
    return {builtin.name: builtin for builtin in builtins}

BUILTINS:   Dict[str, Builtin] =    _table_(
    # Init.
    Builtin("tdg-table",            "init", 0, 2,       "(primitive-cost, abstract-init) -> table",
            "Minimum decomposition cost of every task; omitted arguments use operator costs and an infinite start"),
    Builtin("goal-facts",           "init", 0, 1,       "(predicate) -> fact-set",
            "Goal facts of the given predicate (all goal facts without argument)"),
    Builtin("facts",                "init", 0, 1,       "(predicate) -> fact-set",
            "Facts of the given predicate (all facts without argument)"),
    Builtin("task-pattern",         "init", 1, 1,       "(substring) -> pattern",
            "Case-insensitive substring matcher over task names"),

    # Eval: state and network access.
    Builtin("network-cost",         "eval", 1, 1,       "(table) -> number",
            "Sum of the table over pending tasks; infinite entries count as the infinity penalty"),
    Builtin("pending-count",        "eval", 1, 1,       "(pattern) -> number",
            "Number of pending tasks whose name matches"),
    Builtin("count-unsatisfied",    "eval", 1, 1,       "(fact-set) -> number",
            "Number of facts of the set that do not hold in the current state"),
    Builtin("count-true",           "eval", 1, 1,       "(fact-set) -> number",
            "Number of facts of the set that hold in the current state"),
    Builtin("any-true",             "eval", 1, 1,       "(fact-set) -> number",
            "1 if some fact of the set holds in the current state, else 0"),

    # Eval: arithmetic.
    Builtin("+",                    "eval", 1, None,    "(number ...) -> number",   "Sum"),
    Builtin("-",                    "eval", 1, None,    "(number ...) -> number",
            "Negation of one argument, or the first argument minus the rest"),
    Builtin("*",                    "eval", 1, None,    "(number ...) -> number",   "Product"),
    Builtin("/",                    "eval", 2, 2,       "(number, number) -> number", "Exact quotient"),
    Builtin("max",                  "eval", 1, None,    "(number ...) -> number",   "Maximum"),
    Builtin("min",                  "eval", 1, None,    "(number ...) -> number",   "Minimum"),
    Builtin("if",                   "eval", 3, 3,       "(number, number, number) -> number",
            "Second argument if the first is nonzero, else the third"),

    # Eval: comparisons.
    Builtin("<",                    "eval", 2, 2,       "(number, number) -> number", "1 if less, else 0"),
    Builtin("<=",                   "eval", 2, 2,       "(number, number) -> number", "1 if less or equal, else 0"),
    Builtin(">",                    "eval", 2, 2,       "(number, number) -> number", "1 if greater, else 0"),
    Builtin(">=",                   "eval", 2, 2,       "(number, number) -> number", "1 if greater or equal, else 0"),
    Builtin("=",                    "eval", 2, 2,       "(number, number) -> number", "1 if equal, else 0"),
)

# Names held back for a later revision of the language.
RESERVED:   Tuple[str, ...] =       ("paired-facts",)

def builtin_names(
    phase:  Optional[str] = None
) -> List[str]:
    """# Enumerate Builtins.

    ## Args:
        * phase (str):  "init" or "eval" to filter; None for all.

    ## Returns:
        * List[str]:    Sorted builtin names.
    """
    return sorted(name for name, builtin in BUILTINS.items() if phase is None or builtin.phase == phase)
