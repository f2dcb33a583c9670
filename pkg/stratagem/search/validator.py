"""# stratagem.search.validator

Replays a derivation from the initial state and task network to certify a solution.
"""

__all__ =   [
                "validate",
                "Validation"
            ]

from dataclasses                import dataclass
from typing                     import List, Optional

from stratagem.grounding        import GroundedModel, GroundMethod, GroundOperator
from stratagem.search.result    import SearchResult

@dataclass(frozen = True)
class Validation():
    r"""# :class:`Validation`

    Truthy iff the derivation is valid.

    ## Properties:
    * :param:`valid`    (bool): Derivation certified.
    * :param:`index`    (int):  Index of the first violated derivation step (the derivation length
                                for violations found after the last step), None when valid.
    * :param:`reason`   (str):  Diagnostic of the violation, empty when valid.
    """
    valid:  bool
    index:  Optional[int] = None
    reason: str =           ""

    def __bool__(self) -> bool:
        return self.valid


def validate(
    model:  GroundedModel,
    result: SearchResult
) -> Validation:
    """# Validate Search Result.

    ## Args:
        * model     (GroundedModel):    Model the result was computed on.
        * result    (SearchResult):     Solved search result.

    ## Returns:
        * Validation:   Outcome, with the first violated step on failure.
    """
    # Only solutions carry derivations.
    if not result.solved: return Validation(False, None, f"result status is {result.status}, not solved")

    # Replay from the initial search node.
    state:      int =       model.initial_state
    network:    tuple =     model.initial_network
    primitives: List[str] = []

    # Replay each step.
    for index, step in enumerate(result.derivation):

        # Nothing left to progress.
        if not network: return Validation(False, index, "task network is already empty")

        # Identify head.
        head:   int =   network[0]

        # Method application.
        if step.kind == "method":

            # Method must exist.
            if not 0 <= step.id < len(model.methods): return Validation(False, index, f"unknown method {step.id}")

            # Fetch method.
            method: GroundMethod =  model.methods[step.id]

            # Method must decompose the head.
            if method.task_id != head:
                return Validation(False, index, f"method {method.name} does not decompose head {model.task_name(head)}")

            # Decompose.
            network =   method.subtask_ids + network[1:]
            continue

        # Operator must be the head.
        if step.id != head or not model.is_primitive(head):
            return Validation(False, index, f"operator {step.id} is not the head task {model.task_name(head)}")

        # Fetch operator.
        operator:   GroundOperator =    model.operators[head]

        # Precondition must hold.
        if not operator.applicable(state):
            return Validation(False, index, f"precondition of {operator.name} violated")

        # Progress.
        state =     operator.apply(state)
        network =   network[1:]

        # Record plan step.
        if not operator.synthetic: primitives.append(operator.name)

    # Final checks.
    end:    int =   len(result.derivation)

    if network:                             return Validation(False, end, f"{len(network)} tasks remain in the network")
    if model.goals & ~state:                return Validation(False, end, "goal facts do not hold")
    if tuple(primitives) != result.plan:    return Validation(False, end, "plan does not match the derivation's primitive sequence")

    # Certified.
    return Validation(True)
