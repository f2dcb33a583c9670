"""# stratagem.hddl.printer

Canonical HDDL rendering of lifted domains and problems. Output re-parses to an equal model.
"""

__all__ =   [
                "print_domain",
                "print_problem"
            ]

from typing                 import Iterable, List, Sequence

from stratagem.hddl.model   import *

def print_domain(
    domain: LiftedDomain
) -> str:
    """# Print Domain.

    ## Args:
        * domain    (LiftedDomain): Domain to render.

    ## Returns:
        * str:  HDDL text.
    """
    # Header.
    lines:  List[str] = [f"(define (domain {domain.name})"]

    # Declarations.
    if domain.requirements: lines.append(f"  (:requirements {' '.join(domain.requirements)})")
    if domain.types:        lines.append(f"  (:types {' '.join(f'{child} - {parent}' for child, parent in domain.types)})")
    if domain.constants:    lines.append(f"  (:constants {_typed_(domain.constants)})")
    if domain.predicates:
        lines.append(f"  (:predicates {' '.join(_reference_(p.name, [_typed_(p.parameters)]) for p in domain.predicates)})")

    # Costs need the total-cost function.
    if any(action.cost != 1 for action in domain.actions): lines.append("  (:functions (total-cost) - number)")

    # Compound tasks.
    for task in domain.tasks:   lines.append(f"  (:task {task.name} :parameters ({_typed_(task.parameters)}))")

    # Methods.
    for method in domain.methods:

        # Method header.
        lines.append(f"  (:method {method.name}")
        lines.append(f"    :parameters ({_typed_(method.parameters)})")
        lines.append(f"    :task {_reference_(method.task.name, method.task.arguments)}")

        # Precondition.
        if method.precondition: lines.append(f"    :precondition {_conjunction_(_literal_(l) for l in method.precondition)}")

        # Subtasks.
        lines.append(f"    :ordered-subtasks {_conjunction_(_reference_(t.name, t.arguments) for t in method.subtasks)})")

    # Actions.
    for action in domain.actions:

        # Effects in canonical order.
        effects:    List[str] = [_atom_(atom) for atom in action.add_effects]
        effects +=              [f"(not {_atom_(atom)})" for atom in action.delete_effects]
        if action.cost != 1:    effects.append(f"(increase (total-cost) {action.cost})")

        # Action body.
        lines.append(f"  (:action {action.name}")
        lines.append(f"    :parameters ({_typed_(action.parameters)})")
        if action.precondition: lines.append(f"    :precondition {_conjunction_(_literal_(l) for l in action.precondition)}")
        lines.append(f"    :effect {_conjunction_(effects)})")

    # Close definition.
    lines.append(")")

    # Provide text.
    return "\n".join(lines) + "\n"

def print_problem(
    problem:    LiftedProblem
) -> str:
    """# Print Problem.

    ## Args:
        * problem   (LiftedProblem):    Problem to render.

    ## Returns:
        * str:  HDDL text.
    """
    # Header.
    lines:  List[str] = [f"(define (problem {problem.name})", f"  (:domain {problem.domain_name})"]

    # Declarations.
    if problem.requirements:    lines.append(f"  (:requirements {' '.join(problem.requirements)})")
    if problem.objects:         lines.append(f"  (:objects {_typed_(problem.objects)})")

    # Initial task network.
    lines.append("  (:htn")
    if problem.network_parameters:  lines.append(f"    :parameters ({_typed_(problem.network_parameters)})")
    lines.append(f"    :ordered-subtasks {_conjunction_(_reference_(t.name, t.arguments) for t in problem.initial_network)})")

    # State and goal.
    lines.append(f"  (:init {' '.join(_atom_(atom) for atom in problem.init)})")
    if problem.goal:            lines.append(f"  (:goal {_conjunction_(_atom_(atom) for atom in problem.goal)})")

    # Close definition.
    lines.append(")")

    # Provide text.
    return "\n".join(lines) + "\n"

# HELPERS ==========================================================================================

def _typed_(parameters: Sequence[Parameter]) -> str:
    """# Render Typed List."""
    return " ".join(f"{p.name} - {p.type}" for p in parameters)

def _reference_(name: str, arguments: Iterable[str]) -> str:
    """# Render `(name args...)`."""
    return "(" + " ".join([name, *[a for a in arguments if a]]) + ")"

def _atom_(atom: Atom) -> str:
    """# Render Atom."""
    return _reference_(atom.predicate, atom.arguments)

def _literal_(literal: Literal) -> str:
    """# Render Literal."""
    return _atom_(literal.atom) if literal.positive else f"(not {_atom_(literal.atom)})"

def _conjunction_(parts: Iterable[str]) -> str:
    """# Render Conjunction."""
    items: List[str] = list(parts)
    return f"(and {' '.join(items)})" if items else "()"
