"""# stratagem.heuristics.base

This module provides the base class for all heuristics: an initialize/evaluate split in which all
preprocessing happens once, before search, and evaluation is called for every generated node.
"""

__all__ = ["Heuristic"]

from abc                                import ABC, abstractmethod
from logging                            import Logger
from math                               import inf
from time                               import perf_counter
from typing                             import Any, Dict, Optional

from stratagem.grounding                import GroundedModel
from stratagem.heuristics.exceptions    import HeuristicError, HeuristicFailure
from stratagem.search.node              import SearchNode
from stratagem.utilities                import get_child

class Heuristic(ABC):
    """# Abstract Heuristic Class
    
    A heuristic instance is a handle confined to one search: it is initialized exactly once against 
    one (model, root) pair and keeps mutable statistics.
    
    Faults raised by a concrete heuristic never escape: the handle is marked poisoned, the fault is 
    kept in :attr:`failure`, and every later evaluation returns infinity. Search reports a poisoned 
    handle with a distinct status.
    
    ## Methods:
        * _initialize_(model: GroundedModel) -> None:   Preprocess the model.
        * _evaluate_(node: SearchNode) -> Any:          Non-negative estimate of a node.
    """
    
    def __init__(self,
        name:   str
    ):
        """# Instantiate Heuristic.

        ## Args:
            * name  (str):  Name of heuristic.
        """
        # Define properties.
        self._name_:            str =                           name
        
        # Initialize logger.
        self.__logger__:        Logger =                        get_child(f"{name}-heuristic")
        
        # Initialize handle state.
        self._model_:           Optional[GroundedModel] =       None
        self._root_h_:          Any =                           None
        self._failure_:         Optional[HeuristicFailure] =    None
        
        # Initialize statistics.
        self._evaluations_:     int =                           0
        self._evaluation_time_: float =                         0.0
        self._initialize_time_: float =                         0.0
    
    # PROPERTIES ===================================================================================
    
    @property
    def failure(self) -> Optional[HeuristicFailure]:
        """# Fault that Poisoned the Handle, if Any."""
        return self._failure_
    
    @property
    def initialized(self) -> bool:
        """# Handle has been Initialized?"""
        return self._model_ is not None
    
    @property
    def model(self) -> Optional[GroundedModel]:
        """# Model the Handle was Initialized Against."""
        return self._model_
    
    @property
    def name(self) -> str:
        """# (Heuristic's) Name"""
        return self._name_
    
    @property
    def poisoned(self) -> bool:
        """# Handle Poisoned by a Fault?"""
        return self._failure_ is not None
    
    @property
    def root_h(self) -> Any:
        """# Heuristic Value of the Root Node (None before initialization)."""
        return self._root_h_
    
    @property
    def statistics(self) -> Dict[str, Any]:
        """# (Heuristic) Statistics

        Evaluation count, cumulative evaluation time and initialization time (seconds).
        """
        return  {
                    "evaluations":      self._evaluations_,
                    "evaluation_time":  self._evaluation_time_,
                    "initialize_time":  self._initialize_time_,
                    "root_h":           self._root_h_,
                    "poisoned":         self.poisoned
                }
    
    # METHODS ======================================================================================
    
    def initialize(self,
        model:  GroundedModel,
        root:   SearchNode
    ) -> Any:
        """# Initialize Heuristic.

        ## Args:
            * model (GroundedModel):    Grounded model.
            * root  (SearchNode):       Root node of the search.
            
        ## Raises:
            * HeuristicError:   If the handle was already initialized.

        ## Returns:
            * Any:  Root heuristic value (infinity if the handle is poisoned).
        """
        # Handles are single-use.
        if self.initialized: raise HeuristicError(f"heuristic {self._name_} is already initialized")
        
        # Bind model.
        self._model_ =              model
        start:          float =     perf_counter()
        
        try:# Preprocess.
            self._initialize_(model)
            
        # Poison handle on any fault.
        except Exception as e:      self._poison_(phase = "initialize", cause = e)
        
        # Record preprocessing time.
        self._initialize_time_ =    perf_counter() - start
        
        # Log initialization.
        self.__logger__.debug(f"Initialized {self._name_} in {self._initialize_time_:.3f}s")
        
        # Evaluate root.
        self._root_h_ =             self.evaluate(root)
        
        # Provide root value.
        return self._root_h_
    
    def evaluate(self,
        node:   SearchNode
    ) -> Any:
        """# Evaluate Node.

        ## Args:
            * node  (SearchNode):   Node being evaluated.

        ## Returns:
            * Any:  Non-negative estimate (int or Fraction), or infinity for a provable dead end or 
                    a poisoned handle.
        """
        assert self.initialized, f"heuristic {self._name_} evaluated before initialization"
        
        # Poisoned handles evaluate to infinity.
        if self.poisoned: return inf
        
        # Start clock.
        start:  float = perf_counter()
        
        try:# Evaluate.
            value:  Any =   self._evaluate_(node)
            
        # Poison handle on any fault.
        except Exception as e:
            
            self._poison_(phase = "evaluate", cause = e)
            value =         inf
            
        # Update statistics.
        finally:
            
            self._evaluations_ +=       1
            self._evaluation_time_ +=   perf_counter() - start
        
        assert value >= 0, f"heuristic {self._name_} produced negative value {value}"
        
        # Provide estimate.
        return value
    
    # HELPERS ======================================================================================
    
    @abstractmethod
    def _initialize_(self,
        model:  GroundedModel
    ) -> None:
        """# Preprocess Model.

        ## Args:
            * model (GroundedModel):    Grounded model.
        """
        pass
    
    @abstractmethod
    def _evaluate_(self,
        node:   SearchNode
    ) -> Any:
        """# Estimate Node.

        ## Args:
            * node  (SearchNode):   Node being evaluated.

        ## Returns:
            * Any:  Non-negative estimate.
        """
        pass
    
    def _poison_(self,
        phase:  str,
        cause:  Exception
    ) -> None:
        """# Mark Handle Poisoned."""
        # Record fault.
        self._failure_ =    HeuristicFailure(heuristic = self._name_, phase = phase, cause = cause)
        
        # Warn of complications.
        self.__logger__.warning(str(self._failure_))
    
    # DUNDERS ======================================================================================
    
    def __repr__(self) -> str:
        """# Heuristic Object Representation."""
        return f"<{type(self).__name__}({self._name_}, initialized = {self.initialized})>"
