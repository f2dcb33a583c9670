"""# stratagem.hel.interpreter

Executes HEL programs as heuristics.

Initialization runs the init directives once against the grounded model and freezes their results
(fact-sets, cost tables, task patterns). Evaluation walks the eval expression with exact rational
arithmetic; it only loops over the pending network and over fact-sets bound in init, and an
operation counter checks that bound on every evaluation when assertions are enabled.
"""

__all__ =   [
                "hel_eval",
                "hel_init",
                "HelHeuristic",
                "implemented_builtins"
            ]

from fractions                      import Fraction
from logging                        import Logger
from pathlib                        import Path
from typing                         import Any, Callable, Dict, List, Optional, Union

from stratagem.grounding            import bits_of, GroundedModel, ids_of
from stratagem.hel.builtins         import FactSet, TaskPattern
from stratagem.hel.exceptions       import HelRuntimeError
from stratagem.hel.parser           import read_program
from stratagem.hel.program          import *
from stratagem.heuristics.__base__  import Heuristic
from stratagem.heuristics.tdg       import INF, tdg_fixpoint, TdgTable
from stratagem.search.node          import SearchNode

# Builtins scanning the pending network once per application.
NETWORK_SCANS:  tuple = ("network-cost", "pending-count")

# Builtins scanning one fact-set per application.
SET_SCANS:      tuple = ("count-unsatisfied", "count-true", "any-true")

class HelHeuristic(Heuristic):
    """# HEL Heuristic.
    
    Heuristic handle executing one :class:`HelProgram`. Runtime faults (type faults, division by 
    zero) poison the handle. Negative results are clamped to zero and set the sticky 
    :attr:`warned` flag.
    """
    
    def __init__(self,
        program:            HelProgram,
        infinity_penalty:   Optional[Union[int, Fraction]] =    None,
        **kwargs
    ):
        """# Instantiate HEL Heuristic.

        ## Args:
            * program           (HelProgram):   Checked program.
            * infinity_penalty  (Fraction):     Value of an infinite cost-table entry in 
                                                `network-cost`. Defaults to 10 x (facts + tasks).
        """
        # Initialize heuristic.
        super(HelHeuristic, self).__init__(name = program.name)
        
        # Define properties.
        self._program_:         HelProgram =                program
        self._penalty_option_:  Optional[Fraction] =        None if infinity_penalty is None else Fraction(infinity_penalty)
        self._penalty_:         Fraction =                  Fraction(0)
        self._environment_:     Dict[str, Any] =            {}
        self._warned_:          bool =                      False
        self._operations_:      int =                       0
        
        # Static shape of the eval expression for the operation bound.
        self._node_count_:      int =                       _count_nodes_(program.expression)
        self._network_scans_:   int =                       sum(1 for call in program.calls() if call.name in NETWORK_SCANS)
        self._set_terms_:       List[str] =                 [
                                                                call.arguments[0].name
                                                                for call in program.calls()
                                                                if call.name in SET_SCANS and isinstance(call.arguments[0], Symbol)
                                                            ]
        
        # Dispatch tables.
        self._init_builtins_:   Dict[str, Callable] =       {
                                                                "tdg-table":            self._tdg_table_,
                                                                "goal-facts":           self._goal_facts_,
                                                                "facts":                self._facts_,
                                                                "task-pattern":         self._task_pattern_,
                                                            }
        self._eval_builtins_:   Dict[str, Callable] =       {
                                                                "network-cost":         self._network_cost_,
                                                                "pending-count":        self._pending_count_,
                                                                "count-unsatisfied":    self._count_unsatisfied_,
                                                                "count-true":           self._count_true_,
                                                                "any-true":             self._any_true_,
                                                                "+":                    lambda c, n: sum(self._numbers_(c, n), Fraction(0)),
                                                                "-":                    self._subtract_,
                                                                "*":                    self._multiply_,
                                                                "/":                    self._divide_,
                                                                "max":                  lambda c, n: max(self._numbers_(c, n)),
                                                                "min":                  lambda c, n: min(self._numbers_(c, n)),
                                                                "if":                   self._if_,
                                                                "<":                    lambda c, n: self._compare_(c, n, lambda a, b: a < b),
                                                                "<=":                   lambda c, n: self._compare_(c, n, lambda a, b: a <= b),
                                                                ">":                    lambda c, n: self._compare_(c, n, lambda a, b: a > b),
                                                                ">=":                   lambda c, n: self._compare_(c, n, lambda a, b: a >= b),
                                                                "=":                    lambda c, n: self._compare_(c, n, lambda a, b: a == b),
                                                            }
        
        # Debug initialization.
        self.__logger__.debug(f"HEL program {program.name} loaded with {len(program.definitions)} init directive(s)")
    
    # PROPERTIES ===================================================================================
    
    @property
    def environment(self) -> Dict[str, Any]:
        """# Values Bound by Init Directives."""
        return self._environment_.copy()
    
    @property
    def operations(self) -> int:
        """# Primitive Operations Performed by the Last Evaluation."""
        return self._operations_
    
    @property
    def penalty(self) -> Fraction:
        """# Value of an Infinite Cost-Table Entry."""
        return self._penalty_
    
    @property
    def program(self) -> HelProgram:
        """# Program Executed."""
        return self._program_
    
    @property
    def warned(self) -> bool:
        """# Some Evaluation was Clamped from a Negative Value?"""
        return self._warned_
    
    # METHODS ======================================================================================
    
    @classmethod
    def from_file(cls,
        path:   Union[str, Path],
        **kwargs
    ) -> "HelHeuristic":
        """# Load HEL Heuristic from File.

        ## Args:
            * path  (str | Path):   Path to a `.hel` program.

        ## Returns:
            * HelHeuristic: Uninitialized handle.
        """
        return cls(program = read_program(path), **kwargs)
    
    def operation_bound(self,
        node:   SearchNode
    ) -> int:
        """# Upper Bound on Operations of one Evaluation.

        One operation per expression node, plus the pending network once per network scan, plus 
        the size of every fact-set scanned.
        """
        return  (
                    self._node_count_
                    + self._network_scans_ * len(node.network)
                    + sum(len(self._environment_[s]) for s in self._set_terms_ if isinstance(self._environment_.get(s), FactSet))
                )
    
    # HELPERS ======================================================================================
    
    def _initialize_(self,
        model:  GroundedModel
    ) -> None:
        """# Execute Init Directives."""
        # Resolve infinity penalty.
        self._penalty_ =    self._penalty_option_ if self._penalty_option_ is not None \
                            else Fraction(10 * (len(model.facts) + model.task_count))
        
        # Execute directives in order.
        for definition in self._program_.definitions:
            
            # Evaluate builtin on literal arguments.
            self._environment_[definition.symbol] = self._init_builtins_[definition.call.name](
                                                        definition.call,
                                                        model,
                                                        *(argument.value for argument in definition.call.arguments)
                                                    )
            
            # Debug binding.
            self.__logger__.debug(f"Bound {definition.symbol} = {_kind_(self._environment_[definition.symbol])}")
    
    def _evaluate_(self,
        node:   SearchNode
    ) -> Fraction:
        """# Evaluate Eval Expression."""
        # Reset counter.
        self._operations_ =     0
        
        # Evaluate.
        value:  Any =           self._value_(self._program_.expression, node)
        
        # Result must be a number.
        if not isinstance(value, Fraction):
            raise HelRuntimeError(f"eval expression produced a {_kind_(value)}, not a number")
        
        assert self._operations_ <= self.operation_bound(node), \
            f"evaluation used {self._operations_} operations, bound is {self.operation_bound(node)}"
        
        # Clamp negative results.
        if value < 0:
            
            # Warn once.
            if not self._warned_: self.__logger__.warning(f"{self._name_} produced {value}; clamped to 0")
            
            self._warned_ = True
            value =         Fraction(0)
        
        # Provide estimate.
        return value
    
    def _value_(self, expression: Expression, node: SearchNode) -> Any:
        """# Value of an Eval Expression."""
        self._operations_ += 1
        
        match expression:
            case Number():  return expression.value
            case Text():    return expression.value
            case Symbol():  return self._environment_[expression.name]
            case _:         return self._eval_builtins_[expression.name](expression, node)
    
    def _numbers_(self, call: Call, node: SearchNode) -> List[Fraction]:
        """# Evaluate Arguments that Must be Numbers."""
        return [self._number_(call, self._value_(argument, node)) for argument in call.arguments]
    
    def _operand_(self, call: Call, node: SearchNode, kind: type) -> Any:
        """# Evaluate the Single Argument, which Must be of the Given Kind."""
        # Evaluate.
        value:  Any =   self._value_(call.arguments[0], node)
        
        # Check kind.
        if not isinstance(value, kind):
            raise HelRuntimeError(
                f"'{call.name}' expects a {_kind_name_(kind)}, got a {_kind_(value)}", call.line, call.column
            )
        
        # Provide value.
        return value
    
    @staticmethod
    def _number_(call: Call, value: Any) -> Fraction:
        """# Check Numeric Operand."""
        if not isinstance(value, Fraction):
            raise HelRuntimeError(f"'{call.name}' expects numbers, got a {_kind_(value)}", call.line, call.column)
        return value
    
    # INIT BUILTINS ================================================================================
    
    def _tdg_table_(self,
        call:           Call,
        model:          GroundedModel,
        primitive_cost: Optional[Fraction] =    None,
        abstract_init:  Optional[Fraction] =    None
    ) -> TdgTable:
        """# `tdg-table`"""
        # Arguments are non-negative integers.
        for value in (primitive_cost, abstract_init):
            if value is not None and (not isinstance(value, Fraction) or value.denominator != 1 or value < 0):
                raise HelRuntimeError(f"'tdg-table' expects non-negative integers, got {value!r}", call.line, call.column)
        
        # Build table.
        return  tdg_fixpoint(
                    model,
                    primitive_cost =    None if primitive_cost is None else int(primitive_cost),
                    abstract_init =     None if abstract_init is None else int(abstract_init)
                )
    
    def _goal_facts_(self,
        call:       Call,
        model:      GroundedModel,
        predicate:  Optional[str] = None
    ) -> FactSet:
        """# `goal-facts`"""
        return _fact_set_(call, (model.facts[i] for i in ids_of(model.goals)), predicate)
    
    def _facts_(self,
        call:       Call,
        model:      GroundedModel,
        predicate:  Optional[str] = None
    ) -> FactSet:
        """# `facts`"""
        return _fact_set_(call, (fact for fact in model.facts if fact.positive), predicate)
    
    def _task_pattern_(self,
        call:       Call,
        model:      GroundedModel,
        substring:  str
    ) -> TaskPattern:
        """# `task-pattern`"""
        # Pattern must be a string.
        if not isinstance(substring, str):
            raise HelRuntimeError(f"'task-pattern' expects a string, got {substring!r}", call.line, call.column)
        
        # Resolve matches for every task reference.
        return  TaskPattern(
                    substring = substring.lower(),
                    matches =   tuple(substring.lower() in model.task_name(ref).lower() for ref in range(model.task_count))
                )
    
    # EVAL BUILTINS ================================================================================
    
    def _network_cost_(self, call: Call, node: SearchNode) -> Fraction:
        """# `network-cost`"""
        # Resolve table.
        table:  TdgTable =  self._operand_(call, node, TdgTable)
        
        # Scan network.
        self._operations_ += len(node.network)
        
        # Sum with infinite entries clamped.
        return sum((self._penalty_ if table[ref] == INF else Fraction(table[ref]) for ref in node.network), Fraction(0))
    
    def _pending_count_(self, call: Call, node: SearchNode) -> Fraction:
        """# `pending-count`"""
        # Resolve pattern.
        pattern:    TaskPattern =   self._operand_(call, node, TaskPattern)
        
        # Scan network.
        self._operations_ +=        len(node.network)
        
        # Count matches.
        return Fraction(sum(1 for ref in node.network if pattern.matches[ref]))
    
    def _count_unsatisfied_(self, call: Call, node: SearchNode) -> Fraction:
        """# `count-unsatisfied`"""
        facts:  FactSet =   self._operand_(call, node, FactSet)
        self._operations_ += len(facts)
        return Fraction((facts.bits & ~node.state).bit_count())
    
    def _count_true_(self, call: Call, node: SearchNode) -> Fraction:
        """# `count-true`"""
        facts:  FactSet =   self._operand_(call, node, FactSet)
        self._operations_ += len(facts)
        return Fraction((facts.bits & node.state).bit_count())
    
    def _any_true_(self, call: Call, node: SearchNode) -> Fraction:
        """# `any-true`"""
        facts:  FactSet =   self._operand_(call, node, FactSet)
        self._operations_ += len(facts)
        return Fraction(1 if facts.bits & node.state else 0)
    
    def _subtract_(self, call: Call, node: SearchNode) -> Fraction:
        """# `-`"""
        values: List[Fraction] =    self._numbers_(call, node)
        return -values[0] if len(values) == 1 else values[0] - sum(values[1:], Fraction(0))
    
    def _multiply_(self, call: Call, node: SearchNode) -> Fraction:
        """# `*`"""
        product:    Fraction =  Fraction(1)
        for value in self._numbers_(call, node): product *= value
        return product
    
    def _divide_(self, call: Call, node: SearchNode) -> Fraction:
        """# `/`"""
        numerator, denominator =    self._numbers_(call, node)
        
        if denominator == 0: raise HelRuntimeError("division by zero", call.line, call.column)
        
        return numerator / denominator
    
    def _if_(self, call: Call, node: SearchNode) -> Fraction:
        """# `if` (only the selected branch is evaluated)"""
        condition:  Fraction =  self._number_(call, self._value_(call.arguments[0], node))
        return self._number_(call, self._value_(call.arguments[1 if condition != 0 else 2], node))
    
    def _compare_(self, call: Call, node: SearchNode, relation: Callable) -> Fraction:
        """# Comparison Builtins."""
        left, right =   self._numbers_(call, node)
        return Fraction(1 if relation(left, right) else 0)


def hel_init(
    program:    HelProgram,
    model:      GroundedModel,
    root:       Optional[SearchNode] =  None,
    **options
) -> HelHeuristic:
    """# Initialize a Program Against a Model.

    ## Args:
        * program   (HelProgram):       Checked program.
        * model     (GroundedModel):    Grounded model.
        * root      (SearchNode):       Root node. Defaults to the initial state and network.
        * options   (Any):              Handle options (`infinity_penalty`).

    ## Returns:
        * HelHeuristic: Initialized handle; poisoned if an init directive faulted.
    """
    handle: HelHeuristic =  HelHeuristic(program, **options)
    handle.initialize(model, root or SearchNode(model.initial_state, model.initial_network))

    return handle

def hel_eval(
    handle: HelHeuristic,
    node:   SearchNode
) -> Union[Fraction, float]:
    """# Evaluate a Node with an Initialized Handle.

    ## Returns:
        * Fraction | float: Non-negative estimate, or infinity once the handle is poisoned.
    """
    assert handle.initialized, f"{handle.name} was evaluated before initialization"

    return handle.evaluate(node)

def implemented_builtins() -> List[str]:
    """# Names of Builtins the Interpreter Implements."""
    # Instantiate against a trivial program to read the dispatch tables.
    handle: HelHeuristic =  HelHeuristic(HelProgram("builtins", (), Number(Fraction(0))))
    
    # Provide sorted names.
    return sorted([*handle._init_builtins_, *handle._eval_builtins_])

def _fact_set_(
    call:       Call,
    facts:      Any,
    predicate:  Optional[str]
) -> FactSet:
    """# Fact-Set of Facts Matching a Predicate (all facts when None)."""
    # Predicate must be a string.
    if predicate is not None and not isinstance(predicate, str):
        raise HelRuntimeError(f"'{call.name}' expects a predicate name string, got {predicate!r}", call.line, call.column)
    
    # Filter by predicate.
    prefix: Optional[str] = None if predicate is None else f"{predicate.lower()}["
    ids:    tuple =         tuple(sorted(fact.id for fact in facts if prefix is None or fact.name.startswith(prefix)))
    
    # Provide set.
    return FactSet(ids = ids, bits = bits_of(ids))

def _count_nodes_(expression: Expression) -> int:
    """# Number of Nodes of an Expression Tree."""
    return 1 + sum(_count_nodes_(argument) for argument in expression.arguments) if isinstance(expression, Call) else 1

def _kind_(value: Any) -> str:
    """# HEL Kind Name of a Value."""
    return _kind_name_(type(value))

def _kind_name_(kind: type) -> str:
    """# HEL Kind Name of a Python Type."""
    return  {
                Fraction:       "number",
                FactSet:        "fact-set",
                TdgTable:       "cost-table",
                TaskPattern:    "task-pattern",
                str:            "string",
            }.get(kind, kind.__name__)
