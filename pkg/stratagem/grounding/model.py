"""# stratagem.grounding.model

Grounded, bitset-indexed planning model.

States and operator conditions are Python integers used as bit vectors: bit `i` is set iff fact
`i` holds. Task references share one id space: operators occupy `0 .. |O|-1` and compound tasks
occupy `|O| .. |O|+|C|-1`, so a task network is a tuple of plain integers.
"""

__all__ =   [
                "bits_of",
                "Fact",
                "fact_holds",
                "fact_name",
                "GroundCompoundTask",
                "GroundedModel",
                "GroundMethod",
                "GroundOperator",
                "ids_of",
                "parse_fact_name",
                "PRECONDITION_PREFIX",
                "state_explicit_repr"
            ]

from dataclasses    import dataclass
from functools      import cached_property
from typing         import Dict, Iterable, List, Optional, Sequence, Tuple

# Name prefix of compiled method-precondition operators.
PRECONDITION_PREFIX:    str =   "__mprec_"

@dataclass(frozen = True)
class Fact():
    r"""# :class:`Fact`

    ## Properties:
    * :param:`id`       (int):  Dense global id.
    * :param:`name`     (str):  Canonical name `predicate[arg1,...,argk]`.
    * :param:`positive` (bool): False for the complement fact compiled from a negative
                                precondition; it holds exactly when the atom does not.
    """
    id:         int
    name:       str
    positive:   bool =  True

    @property
    def label(self) -> str:
        """# Runtime Rendering (`+name` or `-name`)."""
        return f"{'+' if self.positive else '-'}{self.name}"


@dataclass(frozen = True)
class GroundOperator():
    r"""# :class:`GroundOperator`

    Primitive task instance.

    ## Properties:
    * :param:`id`           (int):              Global id (also its task reference).
    * :param:`name`         (str):              Canonical name `schema[arg1,...]`.
    * :param:`cost`         (int):              Non-negative cost.
    * :param:`pre`          (int):              Precondition bitset.
    * :param:`add`          (int):              Add bitset.
    * :param:`delete`       (int):              Delete bitset, disjoint from `add`.
    * :param:`schema`       (str):              Lifted action name (or the synthetic name).
    * :param:`arguments`    (Tuple[str, ...]):  Objects bound to the schema parameters.
    """
    id:         int
    name:       str
    cost:       int
    pre:        int
    add:        int
    delete:     int
    schema:     str =               ""
    arguments:  Tuple[str, ...] =   ()

    @property
    def synthetic(self) -> bool:
        """# Operator is a Compiled Method Precondition?"""
        return self.name.startswith(PRECONDITION_PREFIX)

    def applicable(self, state: int) -> bool:
        """# Precondition Satisfied in State?"""
        return self.pre & ~state == 0

    def apply(self, state: int) -> int:
        """# Successor State."""
        return (state & ~self.delete) | self.add


@dataclass(frozen = True)
class GroundCompoundTask():
    r"""# :class:`GroundCompoundTask`

    ## Properties:
    * :param:`id`           (int):              Global id (task reference).
    * :param:`name`         (str):              Canonical name `task[arg1,...]`.
    * :param:`method_ids`   (Tuple[int, ...]):  Methods decomposing this task.
    """
    id:         int
    name:       str
    method_ids: Tuple[int, ...] =   ()


@dataclass(frozen = True)
class GroundMethod():
    r"""# :class:`GroundMethod`

    ## Properties:
    * :param:`id`           (int):              Method index.
    * :param:`name`         (str):              Canonical name `method[arg1,...]`.
    * :param:`task_id`      (int):              Decomposed compound task reference.
    * :param:`subtask_ids`  (Tuple[int, ...]):  Ordered subtask references; a compiled precondition
                                                operator, when present, comes first.
    """
    id:             int
    name:           str
    task_id:        int
    subtask_ids:    Tuple[int, ...] =   ()


@dataclass(frozen = True)
class GroundedModel():
    r"""# :class:`GroundedModel`

    Immutable grounded HTN problem ⟨s0, tn_I, F, A, C, M⟩.

    ## Properties:
    * :param:`facts`            (Tuple[Fact, ...]):                 Facts, ids 0..|F|-1, in
                                                                    canonical-name order.
    * :param:`operators`        (Tuple[GroundOperator, ...]):       Operators, ids 0..|O|-1.
    * :param:`compound_tasks`   (Tuple[GroundCompoundTask, ...]):   Compound tasks, ids |O|.. .
    * :param:`methods`          (Tuple[GroundMethod, ...]):         Methods, ids 0..|M|-1.
    * :param:`initial_state`    (int):                              Initial state bitset.
    * :param:`goals`            (int):                              Goal bitset.
    * :param:`initial_network`  (Tuple[int, ...]):                  Ordered initial task network.
    * :param:`name`             (str):                              Problem name.
    """
    facts:              Tuple[Fact, ...]
    operators:          Tuple[GroundOperator, ...]
    compound_tasks:     Tuple[GroundCompoundTask, ...]
    methods:            Tuple[GroundMethod, ...]
    initial_state:      int
    goals:              int
    initial_network:    Tuple[int, ...]
    name:               str =   ""

    # PROPERTIES ===================================================================================

    @property
    def task_count(self) -> int:
        """# Number of Task References (operators plus compound tasks)."""
        return len(self.operators) + len(self.compound_tasks)

    @cached_property
    def fact_index(self) -> Dict[str, int]:
        """# Fact Id by Rendered Name (`+name` or `-name`)."""
        return {fact.label: fact.id for fact in self.facts}

    @cached_property
    def task_index(self) -> Dict[str, int]:
        """# Task Reference by Canonical Name."""
        return  {
                    **{operator.name: operator.id for operator in self.operators},
                    **{task.name: task.id for task in self.compound_tasks}
                }

    # METHODS ======================================================================================

    def is_primitive(self, ref: int) -> bool:
        """# Task Reference is an Operator?"""
        return ref < len(self.operators)

    def compound(self, ref: int) -> GroundCompoundTask:
        """# Compound Task by Reference."""
        return self.compound_tasks[ref - len(self.operators)]

    def task_name(self, ref: int) -> str:
        """# Canonical Name of any Task Reference."""
        return self.operators[ref].name if self.is_primitive(ref) else self.compound(ref).name

    def fact_id(self, name: str) -> Optional[int]:
        """# Fact Id by Name (unsigned names denote the positive fact)."""
        return self.fact_index.get(name if name[:1] in ("+", "-") else f"+{name}")

    def statistics(self) -> Dict[str, int]:
        """# Model Size Summary.

        ## Returns:
            * Dict[str, int]:   Counts of facts, operators (and synthetic ones among them),
                                compound tasks, methods, initial and goal facts, initial network
                                length.
        """
        return  {
                    "facts":            len(self.facts),
                    "operators":        len(self.operators),
                    "synthetic":        sum(1 for operator in self.operators if operator.synthetic),
                    "compound_tasks":   len(self.compound_tasks),
                    "methods":          len(self.methods),
                    "init":             self.initial_state.bit_count(),
                    "goals":            self.goals.bit_count(),
                    "network":          len(self.initial_network),
                }

    def state_explicit_repr(self, state: int) -> List[str]:
        """# Fact Names of a State (see :func:`state_explicit_repr`)."""
        return state_explicit_repr(model = self, state = state)


def bits_of(
    ids:    Iterable[int]
) -> int:
    """# Bitset of Ids."""
    # Initialize empty set.
    bitset: int =   0

    # Set each bit.
    for i in ids: bitset |= 1 << i

    # Provide bitset.
    return bitset

def ids_of(
    bitset: int
) -> List[int]:
    """# Ids Set in Bitset, Ascending."""
    # Initialize ids.
    ids:    List[int] = []

    # Peel lowest set bits.
    while bitset:

        # Isolate lowest bit.
        lowest: int =   bitset & -bitset

        # Record its index.
        ids.append(lowest.bit_length() - 1)
        bitset ^=       lowest

    # Provide ids.
    return ids

def fact_name(
    predicate:  str,
    arguments:  Sequence[str]
) -> str:
    """# Canonical Fact Name `predicate[a,b]`."""
    return f"{predicate}[{','.join(arguments)}]"

def state_explicit_repr(
    model:  GroundedModel,
    state:  int
) -> List[str]:
    """# Explicit State Representation.

    ## Args:
        * model (GroundedModel):    Model the state belongs to.
        * state (int):              State bitset.

    ## Returns:
        * List[str]:    `+`-prefixed name of every set bit of a positive fact, in id order.
                        Complement facts, which encode negative preconditions, are left out.
    """
    return [model.facts[i].label for i in ids_of(state) if model.facts[i].positive]

def fact_holds(
    state:      int,
    fact_id:    int,
    fact_count: Optional[int] = None
) -> bool:
    """# Fact Holds in State?

    ## Args:
        * state         (int):  State bitset.
        * fact_id       (int):  Fact id.
        * fact_count    (int):  Number of facts in the model, checked when given.

    ## Returns:
        * bool: True iff bit `fact_id` is set.
    """
    assert fact_id >= 0 and (fact_count is None or fact_id < fact_count), f"fact id {fact_id} out of range"
    return (state >> fact_id) & 1 == 1

def parse_fact_name(
    name:   str
) -> Tuple[Optional[str], List[str]]:
    """# Parse Rendered Fact Name.

    Accepts the `+predicate[a,b]` / `-predicate[a,b]` rendering. Anything else, including names
    without a sign, yields `(None, [])`.

    ## Args:
        * name  (str):  Rendered fact name.

    ## Returns:
        * Tuple[Optional[str], List[str]]:  Predicate and arguments.
    """
    # Normalize.
    name =  name.strip()

    # Only signed names are parsed.
    if name.startswith("+") or name.startswith("-"):

        # Strip sign.
        name =          name[1:]

        # Locate argument list.
        bracket:    int =   name.find("[")

        # Well-formed predicate with bracketed arguments.
        if bracket > 0 and name.endswith("]"):

            # Split arguments.
            arguments:  str =   name[bracket + 1:-1]

            # Provide parts.
            return name[:bracket], arguments.split(",") if arguments else []

    # Malformed.
    return None, []
