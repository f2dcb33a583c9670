"""# stratagem.heuristics.tdg

Task decomposition graph (TDG) heuristic.

Every task reference gets the minimum cost of fully decomposing it: a primitive task costs its
(configured) primitive cost, and a compound task costs the cheapest of its methods, where a method
costs the sum of its subtasks. The table is the least fixpoint of that recursion; it is computed
with a generalized Dijkstra pass over the AND/OR graph of tasks (OR) and methods (AND), which
finalizes tasks in order of increasing cost. A node is estimated as the sum of the table over its
pending tasks.
"""

__all__ =   [
                "bellman_sweep",
                "INF",
                "tdg_fixpoint",
                "TdgHeuristic",
                "TdgTable"
            ]

from dataclasses                    import dataclass
from heapq                          import heappop, heappush
from math                           import inf
from typing                         import Dict, Iterable, List, Optional, Tuple, Union

from stratagem.grounding            import GroundedModel
from stratagem.heuristics.__base__  import Heuristic
from stratagem.registration         import register_heuristic
from stratagem.search.node          import SearchNode

# Cost of a task without any finite decomposition.
INF:    float = inf

Cost =  Union[int, float]

@dataclass(frozen = True)
class TdgTable():
    r"""# :class:`TdgTable`

    ## Properties:
    * :param:`cost`             (Tuple[int | float, ...]):  Minimum decomposition cost by task
                                                            reference; :data:`INF` when no finite
                                                            decomposition exists.
    * :param:`method_visits`    (int):                      Method relaxations performed while
                                                            building the table.
    """
    cost:           Tuple[Cost, ...]
    method_visits:  int =   0

    def __getitem__(self, ref: int) -> Cost:
        return self.cost[ref]

    def __len__(self) -> int:
        return len(self.cost)

    def network_cost(self,
        network:    Iterable[int]
    ) -> Cost:
        """# Summed Cost of a Task Network."""
        return sum((self.cost[ref] for ref in network), 0)


def _primitive_costs_(
    model:          GroundedModel,
    primitive_cost: Optional[int]
) -> List[Cost]:
    """# Costs of Primitive Tasks (compiled precondition operators cost nothing)."""
    return  [
                0 if operator.synthetic else (operator.cost if primitive_cost is None else primitive_cost)
                for operator
                in model.operators
            ]

def tdg_fixpoint(
    model:          GroundedModel,
    primitive_cost: Optional[int] = None,
    abstract_init:  Optional[int] = None
) -> TdgTable:
    """# Compute TDG Cost Table.

    ## Args:
        * model             (GroundedModel):    Grounded model.
        * primitive_cost    (int):              Cost of every (non-synthetic) primitive task. 
                                                Defaults to each operator's own cost.
        * abstract_init     (int):              Start value of compound tasks. None starts from 
                                                infinity and yields the exact least fixpoint; a 
                                                finite start caps every finite cost at that value, 
                                                while tasks without finite decompositions stay at 
                                                infinity.

    ## Returns:
        * TdgTable: Cost table indexed by task reference.
    """
    assert primitive_cost is None or primitive_cost >= 0, "primitive cost must be non-negative"
    
    # Primitive costs are final from the start.
    primitives: List[Cost] =                _primitive_costs_(model, primitive_cost)
    cost:       List[Cost] =                primitives + [INF] * len(model.compound_tasks)
    final:      List[bool] =                [True] * len(primitives) + [False] * len(model.compound_tasks)
    
    # Per method: unfinalized compound subtask occurrences and running sum.
    missing:    List[int] =                 []
    partial:    List[Cost] =                []
    users:      Dict[int, List[int]] =      {}
    
    # Candidate queue of (cost, task).
    queue:      List[Tuple[Cost, int]] =    []
    visits:     int =                       0
    
    # Index methods.
    for method in model.methods:
        
        # Count compound subtasks, sum primitive ones.
        missing.append(sum(1 for ref in method.subtask_ids if not final[ref]))
        partial.append(sum((cost[ref] for ref in method.subtask_ids if final[ref]), 0))
        
        # Register method as a user of each compound subtask occurrence.
        for ref in method.subtask_ids:
            if not final[ref]: users.setdefault(ref, []).append(method.id)
        
        # Methods over primitives only are ready.
        if missing[-1] == 0: heappush(queue, (partial[-1], method.task_id))
    
    # Finalize tasks cheapest first.
    while queue:
        
        # Pop cheapest candidate.
        value, task =                       heappop(queue)
        
        # Already final at a lower cost.
        if final[task]: continue
        
        # Finalize.
        cost[task], final[task] =           value, True
        
        # Relax methods using this task.
        for method_id in users.get(task, ()):
            
            visits +=                       1
            missing[method_id] -=           1
            partial[method_id] +=           value
            
            # Method fully costed.
            if missing[method_id] == 0:
                heappush(queue, (partial[method_id], model.methods[method_id].task_id))
    
    # Apply a finite start value as a cap.
    if abstract_init is not None:
        
        for ref in range(len(primitives), len(cost)):
            if cost[ref] != INF: cost[ref] = min(cost[ref], abstract_init)
    
    # Provide table.
    return TdgTable(cost = tuple(cost), method_visits = visits)

def bellman_sweep(
    model:  GroundedModel,
    table:  TdgTable
) -> TdgTable:
    """# Apply One Bellman Sweep.

    Every compound task takes the minimum of its current cost and its cheapest method under the 
    current table. A converged table is unchanged by a sweep.

    ## Args:
        * model (GroundedModel):    Grounded model.
        * table (TdgTable):         Current table.

    ## Returns:
        * TdgTable: Swept table.
    """
    # Copy current costs.
    cost:   List[Cost] =    list(table.cost)
    
    # Relax every compound task against the current table.
    for task in model.compound_tasks:
        
        cost[task.id] = min(
                            [table[task.id]]
                            + [table.network_cost(model.methods[m].subtask_ids) for m in task.method_ids]
                        )
    
    # Provide swept table.
    return TdgTable(cost = tuple(cost), method_visits = table.method_visits)


@register_heuristic(
    name =          "tdg",
    tags =          ["baseline", "hierarchy"],
    description =   "Sum over pending tasks of their minimum decomposition cost"
)
class TdgHeuristic(Heuristic):
    """# TDG Heuristic.
    
    Goal-unaware, state-unaware estimate of the remaining decomposition effort.
    """
    
    def __init__(self,
        primitive_cost: Optional[int] = None,
        abstract_init:  Optional[int] = None,
        **kwargs
    ):
        """# Instantiate TDG Heuristic.

        ## Args:
            * primitive_cost    (int):  Cost of primitive tasks. Defaults to the operator's cost; 
                                        0 gives the cost-zero variant.
            * abstract_init     (int):  Start value of compound tasks. Defaults to infinity.
        """
        # Initialize heuristic.
        super(TdgHeuristic, self).__init__(name = "tdg")
        
        # Define properties.
        self._primitive_cost_:  Optional[int] =         primitive_cost
        self._abstract_init_:   Optional[int] =         abstract_init
        self._table_:           Optional[TdgTable] =    None
        
        # Debug initialization.
        self.__logger__.debug(f"TDG configured (primitive cost {primitive_cost}, abstract init {abstract_init})")
    
    # PROPERTIES ===================================================================================
    
    @property
    def table(self) -> Optional[TdgTable]:
        """# Cost Table (None before initialization)."""
        return self._table_
    
    # HELPERS ======================================================================================
    
    def _initialize_(self,
        model:  GroundedModel
    ) -> None:
        """# Build Cost Table."""
        # Compute fixpoint.
        self._table_ =  tdg_fixpoint(model, self._primitive_cost_, self._abstract_init_)
        
        # Log unreachable tasks.
        self.__logger__.debug(
            f"TDG table built: {sum(1 for c in self._table_.cost if c == INF)} tasks without finite decomposition"
        )
    
    def _evaluate_(self,
        node:   SearchNode
    ) -> Cost:
        """# Sum of Pending Task Costs."""
        return self._table_.network_cost(node.network)
