"""# stratagem.grounding.dump

Line-oriented text dump of a grounded model, stable across platforms for golden-file comparison:

    F <id> <label>
    O <id> <name> <cost> pre=<ids> add=<ids> del=<ids>
    T <id> <name>
    M <id> <name> task=<id> sub=<refs>
    INIT <ids>
    GOAL <ids>
    TN <refs>

Id lists are comma-separated and ascending (bitsets) or in network order (task references).
"""

__all__ = ["dump_model"]

from typing                         import Iterable, List

from stratagem.grounding.model      import GroundedModel, ids_of

def dump_model(
    model:  GroundedModel
) -> str:
    """# Dump Grounded Model.

    ## Args:
        * model (GroundedModel):    Model to render.

    ## Returns:
        * str:  Dump text, one record per line, newline-terminated.
    """
    # Facts.
    lines:  List[str] = [f"F {fact.id} {fact.label}" for fact in model.facts]

    # Operators.
    lines += [
        f"O {op.id} {op.name} {op.cost} pre={_join_(ids_of(op.pre))} add={_join_(ids_of(op.add))} del={_join_(ids_of(op.delete))}"
        for op in model.operators
    ]

    # Compound tasks.
    lines += [f"T {task.id} {task.name}" for task in model.compound_tasks]

    # Methods.
    lines += [f"M {m.id} {m.name} task={m.task_id} sub={_join_(m.subtask_ids)}" for m in model.methods]

    # Initial state, goals, and network.
    lines += [
        f"INIT {_join_(ids_of(model.initial_state))}".rstrip(),
        f"GOAL {_join_(ids_of(model.goals))}".rstrip(),
        f"TN {_join_(model.initial_network)}".rstrip()
    ]

    # Provide text.
    return "\n".join(lines) + "\n"

def _join_(ids: Iterable[int]) -> str:
    """# Comma-Separated Ids."""
    return ",".join(str(i) for i in ids)
