"""# stratagem.hddl.model

Lifted (parameterized) representation of HDDL domains and problems.
"""

__all__ =   [
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
                "type_members"
            ]

from dataclasses    import dataclass
from typing         import Dict, Optional, Tuple

ROOT_TYPE:  str =   "object"

def type_members(
    type_name:  str
) -> Tuple[str, ...]:
    """# Members of a Type.

    A union is kept in its written form, `(either a b)`.

    ## Args:
        * type_name (str):  Declared type or union.

    ## Returns:
        * Tuple[str, ...]:  Union members, or the type itself.
    """
    if type_name.startswith("(either ") and type_name.endswith(")"): return tuple(type_name[8:-1].split())

    return (type_name,)


@dataclass(frozen = True)
class Parameter():
    r"""# :class:`Parameter`

    Typed name: a schema parameter (`?x`), a constant, or a problem object.

    ## Properties:
    * :param:`name` (str):  Name, including the leading `?` for variables.
    * :param:`type` (str):  Declared type. Defaults to `object`.
    """
    name:   str
    type:   str =   ROOT_TYPE


@dataclass(frozen = True)
class Atom():
    r"""# :class:`Atom`

    Predicate applied to arguments (variables or object names).

    ## Properties:
    * :param:`predicate`    (str):              Predicate name; `=` denotes equality.
    * :param:`arguments`    (Tuple[str, ...]):  Arguments in order.
    """
    predicate:  str
    arguments:  Tuple[str, ...] =   ()


@dataclass(frozen = True)
class Literal():
    r"""# :class:`Literal`

    Possibly negated atom.

    ## Properties:
    * :param:`atom`     (Atom): Underlying atom.
    * :param:`positive` (bool): False for `(not ...)`.
    """
    atom:       Atom
    positive:   bool =  True


@dataclass(frozen = True)
class Predicate():
    r"""# :class:`Predicate`

    ## Properties:
    * :param:`name`         (str):                      Predicate name.
    * :param:`parameters`   (Tuple[Parameter, ...]):    Typed parameters.
    """
    name:       str
    parameters: Tuple[Parameter, ...] = ()


@dataclass(frozen = True)
class TaskReference():
    r"""# :class:`TaskReference`

    Occurrence of a primitive or compound task in a method body, a method head, or the initial
    task network.

    ## Properties:
    * :param:`name`         (str):              Task name.
    * :param:`arguments`    (Tuple[str, ...]):  Arguments (variables or objects).
    """
    name:       str
    arguments:  Tuple[str, ...] =   ()


@dataclass(frozen = True)
class Action():
    r"""# :class:`Action`

    Primitive task schema.

    ## Properties:
    * :param:`name`             (str):                      Action name.
    * :param:`parameters`       (Tuple[Parameter, ...]):    Typed parameters.
    * :param:`precondition`     (Tuple[Literal, ...]):      Conjunction of literals.
    * :param:`add_effects`      (Tuple[Atom, ...]):         Atoms made true.
    * :param:`delete_effects`   (Tuple[Atom, ...]):         Atoms made false.
    * :param:`cost`             (int):                      Operator cost. Defaults to 1.
    """
    name:           str
    parameters:     Tuple[Parameter, ...] = ()
    precondition:   Tuple[Literal, ...] =   ()
    add_effects:    Tuple[Atom, ...] =      ()
    delete_effects: Tuple[Atom, ...] =      ()
    cost:           int =                   1


@dataclass(frozen = True)
class CompoundTask():
    r"""# :class:`CompoundTask`

    ## Properties:
    * :param:`name`         (str):                      Task name.
    * :param:`parameters`   (Tuple[Parameter, ...]):    Typed parameters.
    """
    name:       str
    parameters: Tuple[Parameter, ...] = ()


@dataclass(frozen = True)
class Method():
    r"""# :class:`Method`

    Totally ordered decomposition of a compound task.

    ## Properties:
    * :param:`name`         (str):                      Method name.
    * :param:`parameters`   (Tuple[Parameter, ...]):    Typed parameters.
    * :param:`task`         (TaskReference):            Decomposed compound task.
    * :param:`precondition` (Tuple[Literal, ...]):      Conjunction of literals.
    * :param:`subtasks`     (Tuple[TaskReference, ...]):Ordered subtasks.
    """
    name:           str
    parameters:     Tuple[Parameter, ...]
    task:           TaskReference
    precondition:   Tuple[Literal, ...] =       ()
    subtasks:       Tuple[TaskReference, ...] = ()


@dataclass(frozen = True)
class LiftedDomain():
    r"""# :class:`LiftedDomain`

    ## Properties:
    * :param:`name`         (str):                          Domain name.
    * :param:`requirements` (Tuple[str, ...]):              Requirement flags as declared.
    * :param:`types`        (Tuple[Tuple[str, str], ...]):  (type, parent) pairs; `object` is
                                                            implicit.
    * :param:`constants`    (Tuple[Parameter, ...]):        Domain constants.
    * :param:`predicates`   (Tuple[Predicate, ...]):        Predicate declarations.
    * :param:`tasks`        (Tuple[CompoundTask, ...]):     Compound task declarations.
    * :param:`methods`      (Tuple[Method, ...]):           Methods.
    * :param:`actions`      (Tuple[Action, ...]):           Primitive actions.
    """
    name:           str
    requirements:   Tuple[str, ...] =               ()
    types:          Tuple[Tuple[str, str], ...] =   ()
    constants:      Tuple[Parameter, ...] =         ()
    predicates:     Tuple[Predicate, ...] =         ()
    tasks:          Tuple[CompoundTask, ...] =      ()
    methods:        Tuple[Method, ...] =            ()
    actions:        Tuple[Action, ...] =            ()

    def action(self, name: str) -> Optional[Action]:
        """# Action by Name."""
        return next((action for action in self.actions if action.name == name), None)

    def task(self, name: str) -> Optional[CompoundTask]:
        """# Compound Task by Name."""
        return next((task for task in self.tasks if task.name == name), None)

    def predicate(self, name: str) -> Optional[Predicate]:
        """# Predicate by Name."""
        return next((predicate for predicate in self.predicates if predicate.name == name), None)

    def type_parents(self) -> Dict[str, str]:
        """# Type Parent Map.

        ## Returns:
            * Dict[str, str]:   Parent of every declared type (the root maps to itself).
        """
        return {ROOT_TYPE: ROOT_TYPE, **dict(self.types)}

    def is_subtype(self, child: str, ancestor: str) -> bool:
        """# Type is Subtype?

        ## Args:
            * child     (str):  Type being tested.
            * ancestor  (str):  Candidate ancestor.

        ## Returns:
            * bool: True if `child` equals `ancestor` or descends from it.
        """
        # A union admits the subtypes of each member.
        if len(type_members(ancestor)) > 1: return any(self.is_subtype(child, member) for member in type_members(ancestor))

        # Fetch hierarchy.
        parents:    Dict[str, str] =    self.type_parents()

        # Walk up to the root, guarding against malformed cycles.
        for _ in range(len(parents) + 1):

            # Found.
            if child == ancestor:   return True

            # Reached root.
            if child == ROOT_TYPE:  return False

            # Climb.
            child = parents.get(child, ROOT_TYPE)

        # Cyclic hierarchy.
        return False


@dataclass(frozen = True)
class LiftedProblem():
    r"""# :class:`LiftedProblem`

    ## Properties:
    * :param:`name`                 (str):                          Problem name.
    * :param:`domain_name`          (str):                          Referenced domain.
    * :param:`objects`              (Tuple[Parameter, ...]):        Typed objects.
    * :param:`init`                 (Tuple[Atom, ...]):             Initial state atoms.
    * :param:`goal`                 (Tuple[Atom, ...]):             Goal atoms; may be empty.
    * :param:`initial_network`      (Tuple[TaskReference, ...]):    Ordered initial task network.
    * :param:`network_parameters`   (Tuple[Parameter, ...]):        Variables of the `:htn` block
                                                                    (partially ground networks).
    * :param:`requirements`         (Tuple[str, ...]):              Problem-level requirements.
    """
    name:               str
    domain_name:        str
    objects:            Tuple[Parameter, ...] =     ()
    init:               Tuple[Atom, ...] =          ()
    goal:               Tuple[Atom, ...] =          ()
    initial_network:    Tuple[TaskReference, ...] = ()
    network_parameters: Tuple[Parameter, ...] =     ()
    requirements:       Tuple[str, ...] =           ()
