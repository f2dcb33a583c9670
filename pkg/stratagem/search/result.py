"""# stratagem.search.result

Search outcome records.
"""

__all__ =   [
                "SearchResult",
                "SearchStatus"
            ]

from dataclasses            import dataclass
from enum                   import Enum
from fractions              import Fraction
from typing                 import Optional, Tuple, Union

from stratagem.search.node  import Step

class SearchStatus(str, Enum):
    """# Terminal Search Status."""

    SOLVED =            "solved"
    EXHAUSTED =         "exhausted"
    TIMEOUT =           "timeout"
    NODE_BUDGET =       "node-budget-exhausted"
    HEURISTIC_FAILED =  "heuristic-failed"
    MEMORY =            "memory-exhausted"

    @property
    def exit_code(self) -> int:
        """# Process Exit Code of `solve`."""
        return  {
                    SearchStatus.SOLVED:            0,
                    SearchStatus.HEURISTIC_FAILED:  1,
                    SearchStatus.EXHAUSTED:         2,
                    SearchStatus.TIMEOUT:           3,
                    SearchStatus.NODE_BUDGET:       4,
                    SearchStatus.MEMORY:            5,
                }[self]

    def __str__(self) -> str:
        return self.value


@dataclass(frozen = True)
class SearchResult():
    r"""# :class:`SearchResult`

    ## Properties:
    * :param:`status`       (SearchStatus):             Terminal status.
    * :param:`plan`         (Tuple[str, ...]):          Canonical names of the non-synthetic
                                                        operators of the solution, in order.
    * :param:`derivation`   (Tuple[Step, ...]):         Every method and operator application from
                                                        the initial network to the solution.
    * :param:`expanded`     (int):                      Nodes popped and expanded (the goal pop is
                                                        not counted).
    * :param:`generated`    (int):                      Children produced.
    * :param:`evaluations`  (int):                      Heuristic evaluations, root included.
    * :param:`wall_time`    (float):                    Seconds spent searching.
    * :param:`root_h`       (Fraction):                 Heuristic value of the root node.
    * :param:`cost`         (int):                      Plan cost, None unless solved.
    """
    status:         SearchStatus
    plan:           Tuple[str, ...] =                   ()
    derivation:     Tuple[Step, ...] =                  ()
    expanded:       int =                               0
    generated:      int =                               0
    evaluations:    int =                               0
    wall_time:      float =                             0.0
    root_h:         Union[Fraction, int, float] =       0
    cost:           Optional[int] =                     None

    @property
    def plan_length(self) -> int:
        """# Number of Primitive Actions in the Plan."""
        return len(self.plan)

    @property
    def solved(self) -> bool:
        """# Search Found a Solution?"""
        return self.status is SearchStatus.SOLVED
