"""# stratagem.heuristics.tests.tdg_test

Task decomposition graph table and heuristic test suite.
"""

from functools              import lru_cache
from random                 import Random
from typing                 import Callable, List, Sequence, Tuple

from pytest                 import mark

from stratagem.grounding    import *
from stratagem.heuristics   import *
from stratagem.search       import search, SearchConfig, SearchNode, SearchStatus

def _hierarchy_(
    costs:      Sequence[int],
    compounds:  int,
    methods:    Sequence[Tuple[int, Tuple[int, ...]]],
    network:    Tuple[int, ...] =   ()
) -> GroundedModel:
    """# Fact-Free Model From Operator Costs and (task, subtasks) Method Pairs."""
    # Method ids per compound task.
    owned:  List[List[int]] =   [[] for _ in range(compounds)]
    for index, (task, _) in enumerate(methods): owned[task - len(costs)].append(index)

    # Assemble model.
    return  GroundedModel(
                facts =             (),
                operators =         tuple(GroundOperator(i, f"a{i}[]", c, 0, 0, 0, schema = f"a{i}") for i, c in enumerate(costs)),
                compound_tasks =    tuple(GroundCompoundTask(len(costs) + i, f"t{i}[]", tuple(owned[i])) for i in range(compounds)),
                methods =           tuple(GroundMethod(i, f"m{i}[]", task, subtasks) for i, (task, subtasks) in enumerate(methods)),
                initial_state =     0,
                goals =             0,
                initial_network =   network
            )

def _random_hierarchy_(rng: Random, acyclic: bool) -> GroundedModel:
    """# Random Hierarchy; Acyclic Ones Only Reference Later Compound Tasks."""
    # Draw sizes.
    operators:  int =   rng.randint(1, 4)
    compounds:  int =   rng.randint(1, 6)
    methods:    list =  []

    # Draw methods per compound task.
    for task in range(operators, operators + compounds):

        # Candidate subtasks.
        pool:   list =  list(range(operators)) + [
                            t for t in range(operators, operators + compounds) if not acyclic or t > task
                        ]

        # Zero to three methods of up to three subtasks.
        for _ in range(rng.randint(0, 3)):
            methods.append((task, tuple(rng.choice(pool) for _ in range(rng.randint(0, 3)))))

    # Assemble.
    return _hierarchy_([rng.randint(0, 3) for _ in range(operators)], compounds, methods)

def _brute_force_(model: GroundedModel) -> List[float]:
    """# Minimum Decomposition Cost by Recursion Over an Acyclic Hierarchy."""
    @lru_cache(maxsize = None)
    def cost(ref: int) -> float:
        if model.is_primitive(ref): return model.operators[ref].cost
        return min((sum(cost(s) for s in model.methods[m].subtask_ids) for m in model.compound(ref).method_ids), default = INF)

    return [cost(ref) for ref in range(model.task_count)]

def _kleene_(model: GroundedModel) -> TdgTable:
    """# Least Fixpoint by Iterated Bellman Sweeps From Infinity."""
    # Start with infinite compound costs.
    table:  TdgTable =  TdgTable(tuple([op.cost for op in model.operators] + [INF] * len(model.compound_tasks)))

    # Sweep until stable.
    while (swept := bellman_sweep(model, table)) != table: table = swept

    return table

# HAND-COMPUTED TABLES =============================================================================

def test_cheapest_method_wins() -> None:
    """# Test Task With Methods [a1, a2] and [a1]."""
    # Unit operators a1, a2 and compound t.
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([1, 1], 1, [(2, (0, 1)), (2, (0,))]))

    assert table[2] == 1,   f"Expected cost 1, got {table[2]}"

def test_recursive_method_does_not_lower_cost() -> None:
    """# Test Task With Methods [a1] and [t, a1]."""
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([1], 1, [(1, (0,)), (1, (1, 0))]))

    assert table[1] == 1,   f"Expected cost 1, got {table[1]}"

def test_task_without_methods_is_infinite() -> None:
    """# Test Undecomposable Task."""
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([1], 1, []))

    assert table[1] == INF, f"Expected infinity, got {table[1]}"

def test_only_recursive_method_is_infinite() -> None:
    """# Test Task Whose Only Method Contains Itself."""
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([1], 1, [(1, (1, 0))]))

    assert table[1] == INF, f"Expected infinity, got {table[1]}"

def test_chain_accumulates() -> None:
    """# Test t0 -> [t1, a0], t1 -> [a0, a1]."""
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([2, 3], 2, [(2, (3, 0)), (3, (0, 1))]))

    assert (table[3], table[2]) == (5, 7),  f"Expected (5, 7), got {(table[3], table[2])}"

def test_empty_method_costs_nothing() -> None:
    """# Test Method Without Subtasks."""
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([4], 1, [(1, ()), (1, (0,))]))

    assert table[1] == 0,   f"Expected cost 0, got {table[1]}"

def test_primitive_cost_override() -> None:
    """# Test Cost-Zero Variant."""
    # Same chain with every primitive cost forced to zero.
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([2, 3], 2, [(2, (3, 0)), (3, (0, 1))]), primitive_cost = 0)

    assert all(c == 0 for c in table.cost), f"Expected an all-zero table, got {table.cost}"

def test_abstract_init_caps_finite_costs() -> None:
    """# Test Finite Compound Start Value."""
    # Chain with costs 5 and 7 plus an undecomposable task.
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([2, 3], 3, [(2, (3, 0)), (3, (0, 1))]), abstract_init = 6)

    assert table.cost[2:] == (6, 5, INF),   f"Expected (6, 5, inf), got {table.cost[2:]}"

def test_synthetic_operators_cost_nothing(instance: Callable) -> None:
    """# Test Compiled Precondition Checks."""
    # Rover method checks.
    model:  GroundedModel = ground(*instance("rover"))
    table:  TdgTable =      tdg_fixpoint(model, primitive_cost = 1)

    assert all(table[op.id] == 0 for op in model.operators if op.synthetic),    "Check operators should cost 0"
    assert all(table[op.id] == 1 for op in model.operators if not op.synthetic), "Real operators should cost 1"

# PROPERTIES =======================================================================================

@mark.parametrize("seed", range(5))
def test_acyclic_tables_match_recursion(seed: int) -> None:
    """# Test Random Acyclic Hierarchies Against Direct Recursion."""
    # Seeded generator.
    rng:    Random =    Random(seed)

    # For a batch of hierarchies...
    for _ in range(25):

        # Draw hierarchy.
        model:  GroundedModel = _random_hierarchy_(rng, acyclic = True)

        assert list(tdg_fixpoint(model).cost) == _brute_force_(model),  \
            f"Table {tdg_fixpoint(model).cost} differs from recursion {_brute_force_(model)}"

@mark.parametrize("seed", range(5))
def test_cyclic_tables_are_least_fixpoints(seed: int) -> None:
    """# Test Random Recursive Hierarchies Against Iterated Sweeps."""
    # Seeded generator.
    rng:    Random =    Random(100 + seed)

    # For a batch of hierarchies...
    for _ in range(25):

        # Draw hierarchy and build its table.
        model:  GroundedModel = _random_hierarchy_(rng, acyclic = False)
        table:  TdgTable =      tdg_fixpoint(model)

        assert bellman_sweep(model, table).cost == table.cost,  f"Table {table.cost} is not a fixpoint"
        assert table.cost == _kleene_(model).cost,              f"Table {table.cost} is not the least fixpoint"

def test_network_cost_is_additive() -> None:
    """# Test Sum Over Concatenated Networks."""
    # Random hierarchy with finite entries.
    rng:    Random =    Random(7)
    table:  TdgTable =  tdg_fixpoint(_hierarchy_([1, 2], 2, [(2, (0, 3)), (3, (1,))]))

    # For random network pairs...
    for _ in range(50):

        # Draw networks.
        left, right =   ([rng.randrange(4) for _ in range(rng.randint(0, 5))] for _ in range(2))

        assert table.network_cost(left + right) == table.network_cost(left) + table.network_cost(right),  \
            f"Cost of {left + right} is not the sum of its parts"

# HEURISTIC ========================================================================================

def test_heuristic_sums_pending_tasks() -> None:
    """# Test TDG Evaluation."""
    # Chain model with network [t0, a1].
    model:      GroundedModel = _hierarchy_([2, 3], 2, [(2, (3, 0)), (3, (0, 1))], network = (2, 1))
    heuristic:  TdgHeuristic =  TdgHeuristic()

    assert heuristic.initialize(model, SearchNode(0, model.initial_network)) == 10,  f"Expected root h 10, got {heuristic.root_h}"
    assert heuristic.evaluate(SearchNode(0, ())) == 0,                              "Empty network should evaluate to 0"
    assert heuristic.evaluate(SearchNode(0, (3, 3))) == 10,      "Two t1 tasks should evaluate to 10"

def test_table_is_frozen_during_search(instance: Callable) -> None:
    """# Test No Table Work After Initialization."""
    # Initialize against towers.
    model:      GroundedModel = ground(*instance("towers"))
    heuristic:  TdgHeuristic =  TdgHeuristic()
    heuristic.initialize(model, SearchNode(model.initial_state, model.initial_network))

    # Snapshot relaxation count.
    visits:     int =           heuristic.table.method_visits

    # Search with the initialized handle.
    result =                    search(model, heuristic, SearchConfig(algorithm = "astar"))

    assert result.solved,                               "Towers should be solved"
    assert heuristic.table.method_visits == visits,     "Evaluation must not relax methods"
    assert heuristic.statistics["evaluations"] >= result.expanded,  "Every expansion evaluates children"

def test_dead_network_is_pruned() -> None:
    """# Test Infinite Estimate Prunes the Root."""
    # Network holding an undecomposable task.
    model:  GroundedModel = _hierarchy_([1], 1, [], network = (1,))
    result =                search(model, TdgHeuristic())

    assert result.status is SearchStatus.EXHAUSTED and result.expanded == 0, f"Expected immediate exhaustion, got {result}"
