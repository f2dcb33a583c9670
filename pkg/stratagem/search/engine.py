"""# stratagem.search.engine

Best-first progression search over (state, task network) pairs.

The open list is a binary heap of `(f, h, seq, node)` entries, so ties on f are broken by the
smaller h and then first-in first-out. Duplicates are detected on the full (state, network) pair;
a pair is re-opened only when reached with a strictly smaller g, and never after it is closed.
"""

__all__ =   [
                "ProgressionSearch",
                "search"
            ]

from heapq                          import heappop, heappush
from itertools                      import count
from logging                        import Logger
from math                           import inf
from time                           import perf_counter
from typing                         import Any, Dict, Iterator, List, Optional, Set, Tuple

from psutil                         import Process

from stratagem.grounding            import GroundedModel
from stratagem.search.config        import SearchConfig
from stratagem.search.node          import SearchNode
from stratagem.search.progression   import expand, is_goal
from stratagem.search.result        import SearchResult, SearchStatus
from stratagem.utilities            import get_child

class ProgressionSearch():
    """# Progression Search.
    
    One search run over one grounded model with one heuristic handle. The handle must expose 
    `initialized`, `initialize(model, root)`, `root_h`, `evaluate(node)` and `poisoned`.
    """
    
    def __init__(self,
        model:      GroundedModel,
        heuristic:  Any,
        config:     Optional[SearchConfig] =    None
    ):
        """# Instantiate Progression Search.

        ## Args:
            * model     (GroundedModel):    Grounded model.
            * heuristic (Heuristic):        Heuristic handle confined to this search.
            * config    (SearchConfig):     Search configuration. Defaults to GBFS, no limits.
        """
        # Initialize logger.
        self.__logger__:    Logger =        get_child("search")
        
        # Define properties.
        self._model_:       GroundedModel = model
        self._heuristic_:   Any =           heuristic
        self._config_:      SearchConfig =  config or SearchConfig()
        
        # Resident memory is measured against the size at search start.
        self._process_:     Process =       Process()
        self._baseline_:    int =           0
        
        # Initialize counters.
        self._expanded_:    int =           0
        self._generated_:   int =           0
        self._evaluations_: int =           0
        
        # Debug initialization.
        self.__logger__.debug(f"Search initialized with {self._config_}")
        
    # METHODS ======================================================================================
    
    def run(self) -> SearchResult:
        """# Run Search.

        ## Returns:
            * SearchResult: Terminal status, counters and, when solved, plan and derivation.
        """
        # Start clock and take the memory baseline.
        start:      float =                 perf_counter()
        self._baseline_ =                   self._process_.memory_info().rss
        
        # Root node.
        root:       SearchNode =            SearchNode(self._model_.initial_state, self._model_.initial_network)
        
        # Evaluate root.
        root_h =                            self._root_h_(root)
        
        # Log search start.
        self.__logger__.info(
            f"Searching {self._model_.name or 'problem'} with {self._config_.algorithm} "
            f"(root h = {root_h})"
        )
        
        # Root poisoned or provably dead.
        if self._heuristic_.poisoned:   return self._finish_(SearchStatus.HEURISTIC_FAILED, start, root_h)
        if root_h == inf:               return self._finish_(SearchStatus.EXHAUSTED, start, root_h)
        
        # Initialize open list and bookkeeping.
        sequence:   Iterator[int] =         count(1)
        open_list:  List[Tuple] =           [(self._config_.priority(0, root_h), root_h, 0, root)]
        best_g:     Dict[Tuple, int] =      {root.key: 0}
        closed:     Set[Tuple] =            set()
        
        # Best-first loop.
        while open_list:
            
            # Pop best entry.
            _, _, _, node =                 heappop(open_list)
            
            # Skip stale and closed entries.
            if node.key in closed or best_g.get(node.key, inf) < node.g: continue
            
            # Goal check on pop.
            if is_goal(self._model_, node):  return self._finish_(SearchStatus.SOLVED, start, root_h, node)
            
            # Enforce limits.
            status: Optional[SearchStatus] = self._limit_(start)
            if status is not None:          return self._finish_(status, start, root_h)
            
            # Close and expand node.
            closed.add(node.key)
            self._expanded_ +=              1
            
            # Nothing to progress (goal facts unmet).
            if not node.network:            continue
            
            # Generate children.
            for child in expand(self._model_, node, sequence):
                
                # Zero-cost cycle guard.
                if child.streak > self._config_.streak_cap: continue
                
                self._generated_ +=         1
                
                # Skip duplicates not improving g.
                if child.key in closed or best_g.get(child.key, inf) <= child.g: continue
                
                # Evaluate child.
                h =                         self._evaluate_(child)
                
                # Abort on evaluation fault.
                if self._heuristic_.poisoned: return self._finish_(SearchStatus.HEURISTIC_FAILED, start, root_h)
                
                # Prune dead ends.
                if h == inf:                continue
                
                # Push child.
                best_g[child.key] =         child.g
                heappush(open_list, (self._config_.priority(child.g, h), h, child.seq, child))
        
        # Open list exhausted.
        return self._finish_(SearchStatus.EXHAUSTED, start, root_h)
        
    # HELPERS ======================================================================================
    
    def _evaluate_(self, node: SearchNode) -> Any:
        """# Evaluate Node and Count Evaluation."""
        self._evaluations_ += 1
        return self._heuristic_.evaluate(node)
    
    def _finish_(self,
        status: SearchStatus,
        start:  float,
        root_h: Any,
        goal:   Optional[SearchNode] =  None
    ) -> SearchResult:
        """# Assemble Search Result.

        ## Args:
            * status    (SearchStatus): Terminal status.
            * start     (float):        Clock reading at start.
            * root_h    (Fraction):     Root heuristic value.
            * goal      (SearchNode):   Solution node, if solved.

        ## Returns:
            * SearchResult: Result record.
        """
        # Extract solution.
        derivation: tuple =         tuple(goal.derivation()) if goal is not None else ()
        plan:       tuple =         tuple(
                                        self._model_.operators[step.id].name
                                        for step in derivation
                                        if  step.kind == "operator"
                                        and not self._model_.operators[step.id].synthetic
                                    )
        
        # Assemble result.
        result:     SearchResult =  SearchResult(
                                        status =        status,
                                        plan =          plan,
                                        derivation =    derivation,
                                        expanded =      self._expanded_,
                                        generated =     self._generated_,
                                        evaluations =   self._evaluations_,
                                        wall_time =     perf_counter() - start,
                                        root_h =        root_h,
                                        cost =          goal.g if goal is not None else None
                                    )
        
        # Log outcome.
        self.__logger__.info(
            f"Search finished: {status} after {result.expanded} expansions "
            f"({result.wall_time:.3f}s, plan length {result.plan_length})"
        )
        
        # Provide result.
        return result
    
    def _limit_(self, start: float) -> Optional[SearchStatus]:
        """# Status of an Exceeded Limit, if Any."""
        # Wall clock.
        if self._config_.time_limit is not None and perf_counter() - start > self._config_.time_limit:
            return SearchStatus.TIMEOUT
        
        # Expansion budget.
        if self._config_.node_budget is not None and self._expanded_ >= self._config_.node_budget:
            return SearchStatus.NODE_BUDGET
        
        # Advisory memory, grown since the search started.
        if  (
                self._config_.memory_limit_mb is not None
                and self._expanded_ % self._config_.memory_interval == 0
                and (self._process_.memory_info().rss - self._baseline_) // 1048576 > self._config_.memory_limit_mb
            ):
            self.__logger__.warning(f"Advisory memory limit of {self._config_.memory_limit_mb} MiB exceeded")
            return SearchStatus.MEMORY
        
        # Within limits.
        return None
    
    def _root_h_(self, root: SearchNode) -> Any:
        """# Initialize Heuristic (when needed) and Provide the Root Value."""
        # Initialize handle against this model.
        if not self._heuristic_.initialized:
            
            self._evaluations_ +=   1
            self._heuristic_.initialize(self._model_, root)
            return self._heuristic_.root_h
        
        # Evaluate root with the existing handle.
        return self._evaluate_(root)


def search(
    model:      GroundedModel,
    heuristic:  Any,
    config:     Optional[SearchConfig] =    None
) -> SearchResult:
    """# Search.

    ## Args:
        * model     (GroundedModel):    Grounded model.
        * heuristic (Heuristic):        Heuristic handle, initialized on demand.
        * config    (SearchConfig):     Search configuration.

    ## Returns:
        * SearchResult: Search outcome.
    """
    return ProgressionSearch(model = model, heuristic = heuristic, config = config).run()
