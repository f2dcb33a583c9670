"""# stratagem.search.tests.engine_test

Best-first progression search test suite.
"""

from heapq                  import heappop, heappush
from itertools              import count
from math                   import inf
from random                 import Random
from types                  import SimpleNamespace
from typing                 import Callable, Dict, Iterator, Optional, Tuple
from unittest.mock          import patch

from pytest                 import mark, raises

from stratagem.grounding    import *
from stratagem.heuristics   import BlindHeuristic, Heuristic, load_heuristic, TdgHeuristic
from stratagem.search       import *

# Every bundled suite instance.
BUNDLED:    list =  [
                        ("towers", "p01"), ("towers", "p02"),
                        ("jobs", "p01"), ("jobs", "p02"), ("jobs", "p03"),
                        ("rover", "p01"), ("rover", "p02"),
                    ]

class _FaultyHeuristic(Heuristic):
    """# Heuristic Failing Once the Network Shrinks Below a Length."""

    def __init__(self, length: int):
        super(_FaultyHeuristic, self).__init__(name = "faulty")
        self._length_:  int =   length

    def _initialize_(self, model: GroundedModel) -> None:
        pass

    def _evaluate_(self, node: SearchNode) -> int:
        return 1 // (len(node.network) >= self._length_)


def _uniform_cost_(model: GroundedModel) -> Tuple[int, Optional[int]]:
    """# Independent Uniform-Cost Oracle.

    ## Returns:
        * Tuple[int, Optional[int]]:    Expansions (goal pop excluded) and solution cost.
    """
    # Seed queue with the root.
    root:       tuple =             (model.initial_state, model.initial_network)
    queue:      list =              [(0, 0, root)]
    best:       Dict[tuple, int] =  {root: 0}
    closed:     set =               set()
    order:      count =             count(1)
    expanded:   int =               0

    # Explore cheapest first, FIFO among equal costs.
    while queue:

        # Pop.
        g, _, key =         heappop(queue)
        state, network =    key
        if key in closed or best[key] < g: continue

        # Goal.
        if not network and model.goals & ~state == 0: return expanded, g

        # Expand.
        closed.add(key)
        expanded +=         1
        if not network:     continue

        # Successors.
        head, rest =        network[0], network[1:]
        if model.is_primitive(head):
            operator =      model.operators[head]
            children =      [(g + operator.cost, (operator.apply(state), rest))] if operator.applicable(state) else []
        else:
            children =      [(g, (state, model.methods[m].subtask_ids + rest)) for m in model.compound(head).method_ids]

        # Push improvements.
        for cost, child in children:
            if child in closed or best.get(child, inf) <= cost: continue
            best[child] =   cost
            heappush(queue, (cost, next(order), child))

    # Exhausted.
    return expanded, None

def _loop_model_() -> GroundedModel:
    """# Compound Task c With the Single Method c -> [c, a]."""
    return  GroundedModel(
                facts =             (),
                operators =         (GroundOperator(0, "a[]", 1, 0, 0, 0, schema = "a"),),
                compound_tasks =    (GroundCompoundTask(1, "c[]", (0,)),),
                methods =           (GroundMethod(0, "m[]", 1, (1, 0)),),
                initial_state =     0,
                goals =             0,
                initial_network =   (1,)
            )

# OUTCOMES =========================================================================================

def test_degenerate_instance_is_solved_without_expansion() -> None:
    """# Test Empty Network With Goals Holding Initially."""
    # Empty model.
    model:  GroundedModel = GroundedModel((), (), (), (), 0, 0, ())

    # Search.
    result: SearchResult =  search(model, BlindHeuristic())

    assert result.status is SearchStatus.SOLVED,    f"Expected solved, got {result.status}"
    assert result.plan == () and result.expanded == 0,  f"Expected empty plan and no expansion, got {result}"

@mark.parametrize("algorithm", ["astar", "gbfs", "wastar"])
def test_towers_plan_has_seven_moves(algorithm: str, towers: tuple) -> None:
    """# Test Towers 3-Ring Under Every Algorithm."""
    # Ground and search.
    model:  GroundedModel = ground(*towers)
    result: SearchResult =  search(model, TdgHeuristic(), SearchConfig(algorithm = algorithm))

    assert result.solved,               f"Towers should be solved by {algorithm}, got {result.status}"
    assert result.plan_length == 7,     f"Expected 7 moves, got {result.plan_length}"
    assert result.cost == 7,            f"Expected cost 7, got {result.cost}"
    assert validate(model, result),     f"Plan failed validation: {validate(model, result)}"

def test_towers_relay_plan(instance: Callable) -> None:
    """# Test Towers 4-Ring Relay Through the Middle Tower."""
    # Ground and search.
    model:  GroundedModel = ground(*instance("towers", "p02"))
    result: SearchResult =  search(model, TdgHeuristic(), SearchConfig(algorithm = "gbfs"))

    assert result.solved,               f"Relay should be solved, got {result.status}"
    assert result.plan_length == 30,    f"Expected two 15-move shifts, got {result.plan_length}"
    assert result.plan[7] == "move[r4,t1,t2,t1,t2]",    f"Largest ring should first reach t2, got {result.plan[7]}"
    assert result.plan[22] == "move[r4,t2,t3,t2,t3]",   f"Largest ring should then reach t3, got {result.plan[22]}"
    assert validate(model, result),     f"Plan failed validation: {validate(model, result)}"

def test_rover_plan(instance: Callable) -> None:
    """# Test Rover Three-Waypoint Plan."""
    # Ground and search.
    model:  GroundedModel = ground(*instance("rover"))
    result: SearchResult =  search(model, BlindHeuristic(), SearchConfig(algorithm = "astar"))

    assert result.plan == (
        "move[rover1,waypoint1,waypoint2]", "move[rover1,waypoint2,waypoint3]",
        "sample[rover1,waypoint3]", "communicate[rover1,waypoint3]",
    ),  f"Unexpected plan {result.plan}"

def test_dead_end_exhausts() -> None:
    """# Test Exhausted Open List."""
    # Network whose only operator is inapplicable.
    model:  GroundedModel = GroundedModel(
                                (Fact(0, "p[]"),), (GroundOperator(0, "a[]", 1, 0b1, 0, 0, schema = "a"),), (), (), 0, 0, (0,)
                            )

    # Search.
    result: SearchResult =  search(model, BlindHeuristic())

    assert result.status is SearchStatus.EXHAUSTED, f"Expected exhausted, got {result.status}"
    assert result.expanded == 1,                    f"Expected one expansion, got {result.expanded}"
    assert not validate(model, result),             "Unsolved results should not validate"

def test_method_streak_cap_terminates_growing_recursion() -> None:
    """# Test Consecutive Method Cap."""
    # Search the ever-growing recursion.
    result: SearchResult =  search(_loop_model_(), BlindHeuristic(), SearchConfig(streak_cap = 50))

    assert result.status is SearchStatus.EXHAUSTED, f"Expected exhausted, got {result.status}"
    assert result.expanded == 51,                   f"Expected root plus 50 decompositions, got {result.expanded}"

# LIMITS ===========================================================================================

@mark.parametrize("budget", [0, 1, 5])
def test_node_budget_stops_exactly(budget: int, towers: tuple) -> None:
    """# Test Expansion Budget."""
    # Search with budget.
    result: SearchResult =  search(ground(*towers), TdgHeuristic(), SearchConfig(node_budget = budget))

    assert result.status is SearchStatus.NODE_BUDGET,   f"Expected budget exhaustion, got {result.status}"
    assert result.expanded == budget,                   f"Expected {budget} expansions, got {result.expanded}"
    assert result.status.exit_code == 4,                "Budget exhaustion should map to exit code 4"

def test_memory_limit_ignores_earlier_peak(towers: tuple) -> None:
    """# Test Memory Released Before the Search Does Not Count Against It."""
    # Raise the process peak well above the limit, then release it.
    ballast:    bytes =         b"\x01" * (128 * 1048576)
    del ballast

    # Search under a tight limit checked on every expansion.
    result:     SearchResult =  search(ground(*towers), TdgHeuristic(), SearchConfig(memory_limit_mb = 32, memory_interval = 1))

    assert result.status is SearchStatus.SOLVED,    f"Expected solved, got {result.status} after {result.expanded} expansions"

def test_memory_limit_counts_growth(towers: tuple) -> None:
    """# Test Growth Past the Limit Stops the Search."""
    # Resident size grows by 64 MiB once the search has started.
    readings:   Iterator =      iter([512 * 1048576, 576 * 1048576])

    with patch("stratagem.search.engine.Process") as process:
        process.return_value.memory_info.side_effect =  lambda: SimpleNamespace(rss = next(readings, 576 * 1048576))
        result: SearchResult =  search(ground(*towers), TdgHeuristic(), SearchConfig(memory_limit_mb = 32, memory_interval = 1))

    assert result.status is SearchStatus.MEMORY,    f"Expected memory exhaustion, got {result.status}"
    assert result.expanded == 0,                    f"Expected the first check to stop, got {result.expanded} expansions"
    assert result.status.exit_code == 5,            "Memory exhaustion should map to exit code 5"

def test_time_limit(instance: Callable) -> None:
    """# Test Wall-Clock Limit."""
    # Search with a vanishing time limit.
    result: SearchResult =  search(ground(*instance("jobs", "p03")), BlindHeuristic(), SearchConfig(time_limit = 1e-9))

    assert result.status is SearchStatus.TIMEOUT,   f"Expected timeout, got {result.status}"
    assert result.status.exit_code == 3,            "Timeout should map to exit code 3"

def test_poisoned_heuristic_aborts(instance: Callable) -> None:
    """# Test Evaluation Fault."""
    # Heuristic failing below network length 2.
    heuristic:  _FaultyHeuristic =  _FaultyHeuristic(2)
    result:     SearchResult =      search(ground(*instance("jobs")), heuristic)

    assert result.status is SearchStatus.HEURISTIC_FAILED,  f"Expected heuristic failure, got {result.status}"
    assert heuristic.poisoned,                              "Handle should be poisoned"
    assert "ZeroDivisionError" in str(heuristic.failure),   f"Unexpected failure {heuristic.failure}"

@mark.parametrize(
    "field, value",
    [("algorithm", "dfs"), ("weight", 0), ("time_limit", 0), ("node_budget", -1), ("streak_cap", 0)]
)
def test_invalid_configuration(field: str, value: object) -> None:
    """# Test Configuration Validation."""
    with raises(SearchConfigError): SearchConfig(**{field: value})

def test_weighted_priority() -> None:
    """# Test Priority Functions."""
    assert SearchConfig(algorithm = "astar").priority(3, 2) == 5,               "A* uses g + h"
    assert SearchConfig(algorithm = "gbfs").priority(3, 2) == 2,                "GBFS uses h"
    assert SearchConfig(algorithm = "wastar", weight = 5).priority(3, 2) == 13, "WA* uses g + w * h"

# PROPERTIES =======================================================================================

def test_blind_astar_matches_uniform_cost_oracle(instance: Callable, random_rover: Callable) -> None:
    """# Test A* With h = 0 Against Uniform-Cost Search."""
    # Collect instances: jobs and random rovers.
    domain, _ =     instance("rover")
    rng:    Random =    Random(17)
    models: list =      [ground(*instance("jobs", "p01")), ground(*instance("jobs", "p02")), ground(*instance("rover", "p02"))]

    # Draw random rovers that ground.
    while len(models) < 24:
        try:                                models.append(ground(domain, random_rover(rng, domain, waypoints = 4)))
        except TriviallyUnsolvableError:    continue

    # Compare every instance.
    for model in models:

        # Search and consult the oracle.
        result:             SearchResult =  search(model, BlindHeuristic(), SearchConfig(algorithm = "astar"))
        expanded, cost =                    _uniform_cost_(model)

        assert result.expanded == expanded, f"Expansions differ from oracle: {result.expanded} != {expanded}"
        assert result.cost == cost,         f"Cost differs from oracle: {result.cost} != {cost}"

@mark.parametrize("suite, problem", BUNDLED)
@mark.parametrize("algorithm", ["astar", "gbfs", "wastar"])
def test_solutions_validate(suite: str, problem: str, algorithm: str, instance: Callable) -> None:
    """# Test Soundness on Every Bundled Instance."""
    # Ground and search.
    model:  GroundedModel = ground(*instance(suite, problem))
    result: SearchResult =  search(model, TdgHeuristic(), SearchConfig(algorithm = algorithm))

    assert result.solved,           f"{suite}/{problem} should be solved, got {result.status}"
    assert validate(model, result), f"{suite}/{problem}: {validate(model, result)}"

def test_search_is_deterministic(instance: Callable) -> None:
    """# Test Reproducible Expansion Counts and Plans."""
    # Ground once.
    model:  GroundedModel = ground(*instance("rover", "p02"))

    # Search twice.
    first, second =         (search(model, load_heuristic("tdg"), SearchConfig(algorithm = "wastar")) for _ in range(2))

    assert (first.plan, first.expanded, first.generated) == (second.plan, second.expanded, second.generated),  \
        "Identical searches should produce identical results"

def test_tdg_guides_gbfs_better_than_blind(instance: Callable) -> None:
    """# Test Guidance Effect Over the Bundled Suite."""
    # Expansions per heuristic.
    totals: Dict[str, int] =    {"blind": 0, "tdg": 0}

    # Search every instance with both heuristics.
    for suite, problem in BUNDLED:

        # Ground once.
        model:  GroundedModel = ground(*instance(suite, problem))

        # Accumulate.
        for name in totals: totals[name] += search(model, load_heuristic(name)).expanded

    assert totals["tdg"] * 2 <= totals["blind"],    f"TDG should at least halve blind expansions, got {totals}"

def test_tdg_expansions_on_jobs(instance: Callable) -> None:
    """# Test Hand-Traced Expansion Counts."""
    # Two expansions per job: the decomposition and the finishing action.
    for problem, jobs in (("p01", 2), ("p02", 3), ("p03", 8)):

        # Search.
        result: SearchResult =  search(ground(*instance("jobs", problem)), TdgHeuristic())

        assert result.expanded == 2 * jobs, f"jobs/{problem}: expected {2 * jobs} expansions, got {result.expanded}"
