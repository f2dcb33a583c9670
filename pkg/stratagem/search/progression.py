"""# stratagem.search.progression

Successor generation of total-order progression: the head of the task network is always the task
being progressed.
"""

__all__ =   [
                "expand",
                "is_goal"
            ]

from itertools              import count
from typing                 import Iterator, List, Optional

from stratagem.grounding    import GroundedModel, GroundOperator
from stratagem.search.node  import SearchNode, Step

def expand(
    model:      GroundedModel,
    node:       SearchNode,
    counter:    Optional[Iterator[int]] =   None
) -> List[SearchNode]:
    """# Expand Node.

    A primitive head yields one child when applicable and none otherwise (dead end). A compound 
    head yields one child per method, in method order, with the head replaced by the method's 
    subtasks.

    ## Args:
        * model     (GroundedModel):    Grounded model.
        * node      (SearchNode):       Node with a nonempty network.
        * counter   (Iterator[int]):    Source of child sequence numbers. Defaults to numbering 
                                        from the parent's sequence number.

    ## Returns:
        * List[SearchNode]: Children.
    """
    assert node.network, "cannot expand a node with an empty network"

    # Number children.
    counter:    Iterator[int] = counter or count(node.seq + 1)

    # Split network.
    head, rest =                node.network[0], node.network[1:]

    # Primitive head.
    if model.is_primitive(head):

        # Fetch operator.
        operator:   GroundOperator =    model.operators[head]

        # Dead end.
        if not operator.applicable(node.state): return []

        # Progress.
        return  [
                    SearchNode(
                        state =     operator.apply(node.state),
                        network =   rest,
                        g =         node.g + operator.cost,
                        parent =    node,
                        step =      Step("operator", head),
                        seq =       next(counter),
                        streak =    0
                    )
                ]

    # Compound head: one child per method.
    return  [
                SearchNode(
                    state =     node.state,
                    network =   model.methods[method_id].subtask_ids + rest,
                    g =         node.g,
                    parent =    node,
                    step =      Step("method", method_id),
                    seq =       next(counter),
                    streak =    node.streak + 1
                )
                for method_id
                in model.compound(head).method_ids
            ]

def is_goal(
    model:  GroundedModel,
    node:   SearchNode
) -> bool:
    """# Node is a Solution?

    True iff the network is empty and every goal fact holds (empty goals hold vacuously).
    """
    return not node.network and model.goals & ~node.state == 0
