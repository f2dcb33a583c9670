"""# stratagem.heuristics.blind

Blind heuristic: every node is estimated at zero.
"""

__all__ = ["BlindHeuristic"]

from stratagem.grounding            import GroundedModel
from stratagem.heuristics.__base__  import Heuristic
from stratagem.registration         import register_heuristic
from stratagem.search.node          import SearchNode

@register_heuristic(
    name =          "blind",
    tags =          ["baseline"],
    description =   "Constant zero; A* with it is uniform-cost search"
)
class BlindHeuristic(Heuristic):
    """# Blind Heuristic."""
    
    def __init__(self, **kwargs):
        """# Instantiate Blind Heuristic."""
        super(BlindHeuristic, self).__init__(name = "blind")
    
    def _initialize_(self, model: GroundedModel) -> None:
        pass
    
    def _evaluate_(self, node: SearchNode) -> int:
        return 0
