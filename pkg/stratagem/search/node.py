"""# stratagem.search.node

Search nodes of total-order progression search.
"""

__all__ =   [
                "SearchNode",
                "Step"
            ]

from dataclasses    import dataclass
from typing         import List, Literal, Optional, Tuple

@dataclass(frozen = True)
class Step():
    r"""# :class:`Step`

    One derivation step.

    ## Properties:
    * :param:`kind` (str):  "method" for a decomposition, "operator" for an operator application.
    * :param:`id`   (int):  Method index or operator id.
    """
    kind:   Literal["method", "operator"]
    id:     int


@dataclass(frozen = True, eq = False)
class SearchNode():
    r"""# :class:`SearchNode`

    Search state: the current world state paired with the remaining ordered task network.

    ## Properties:
    * :param:`state`    (int):                  State bitset.
    * :param:`network`  (Tuple[int, ...]):      Remaining task references; the head is index 0.
    * :param:`g`        (int):                  Accumulated operator cost.
    * :param:`parent`   (SearchNode):           Predecessor, None at the root.
    * :param:`step`     (Step):                 Step that produced this node, None at the root.
    * :param:`seq`      (int):                  Generation order; FIFO tie-breaker.
    * :param:`streak`   (int):                  Consecutive method applications since the last
                                                operator application.
    """
    state:      int
    network:    Tuple[int, ...]
    g:          int =                       0
    parent:     Optional["SearchNode"] =    None
    step:       Optional[Step] =            None
    seq:        int =                       0
    streak:     int =                       0

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        """# Duplicate-Detection Key (state, network)."""
        return self.state, self.network

    def derivation(self) -> List[Step]:
        """# Steps from the Root to this Node."""
        # Initialize trace.
        steps:  List[Step] =            []
        node:   Optional[SearchNode] =  self

        # Walk to the root.
        while node is not None and node.step is not None:

            # Record step.
            steps.append(node.step)
            node =  node.parent

        # Provide root-first order.
        return steps[::-1]
