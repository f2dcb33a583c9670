"""# stratagem.search.tests.plan_writer_test

Plan rendering test suite.
"""

from pathlib                import Path
from typing                 import Callable

from stratagem.grounding    import *
from stratagem.heuristics   import TdgHeuristic
from stratagem.search       import *

def test_rover_plan_text(instance: Callable) -> None:
    """# Test Plan Block Rendering."""
    # Solve rover.
    model:  GroundedModel = ground(*instance("rover"))
    result: SearchResult =  search(model, TdgHeuristic(), SearchConfig(algorithm = "astar"))

    assert format_plan(model, result) == (
        "==>\n"
        "0 (move rover1 waypoint1 waypoint2)\n"
        "1 (move rover1 waypoint2 waypoint3)\n"
        "2 (sample rover1 waypoint3)\n"
        "3 (communicate rover1 waypoint3)\n"
        "<==\n"
    ),  f"Unexpected plan text:\n{format_plan(model, result)}"

def test_unsolved_plan_is_empty_block() -> None:
    """# Test Empty Plan Rendering."""
    # Empty model.
    model:  GroundedModel = GroundedModel((), (), (), (), 0, 0, ())

    assert format_plan(model, SearchResult(SearchStatus.EXHAUSTED)) == "==>\n<==\n",    "Unsolved plan should be an empty block"

def test_write_plan_creates_parents(tmp_path: Path, towers: tuple) -> None:
    """# Test Plan File Output."""
    # Solve towers.
    model:  GroundedModel = ground(*towers)
    result: SearchResult =  search(model, TdgHeuristic())

    # Write into a nested directory.
    path:   Path =          write_plan(tmp_path / "out" / "towers.plan", model, result)

    assert path.read_text().count("(move") == 7,    "Plan file should list seven moves"

def test_stats_line() -> None:
    """# Test Statistics Line."""
    # Result with known counters.
    result: SearchResult =  SearchResult(SearchStatus.NODE_BUDGET, expanded = 12, wall_time = 0.5)

    assert format_stats(result) == "status=node-budget-exhausted expanded=12 length=0 time=0.500", \
        f"Unexpected stats line {format_stats(result)}"
