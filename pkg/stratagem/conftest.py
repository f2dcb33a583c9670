"""# stratagem.conftest

Fixtures shared across test suites: the bundled mini-suite domains and problems, and a generator
of random rover problems.
"""

from itertools              import product
from pathlib                import Path
from random                 import Random
from typing                 import Callable, Tuple

from pytest                 import fixture

from stratagem.hddl         import LiftedDomain, LiftedProblem, parse_problem, read_domain, read_problem

# Bundled benchmark suites.
SUITES_PATH:    Path =  Path(__file__).parent / "benchmark" / "suites"

def load_instance(
    domain:     str,
    problem:    str =   "p01"
) -> Tuple[LiftedDomain, LiftedProblem]:
    """# Load Bundled Instance.

    ## Args:
        * domain    (str):  Suite directory name (towers, jobs, rover).
        * problem   (str):  Problem file stem. Defaults to "p01".

    ## Returns:
        * Tuple[LiftedDomain, LiftedProblem]:   Parsed domain and problem.
    """
    # Parse domain.
    lifted: LiftedDomain =  read_domain(SUITES_PATH / domain / "domain.hddl")

    # Parse problem against it.
    return lifted, read_problem(SUITES_PATH / domain / f"{problem}.hddl", lifted)

def random_rover_problem(
    rng:        Random,
    domain:     LiftedDomain,
    waypoints:  int =   3
) -> LiftedProblem:
    """# Random Rover Problem.

    Random traversal edges, soil locations, start and target waypoint.

    ## Args:
        * rng       (Random):       Seeded generator.
        * domain    (LiftedDomain): Bundled rover domain.
        * waypoints (int):          Number of waypoints. Defaults to 3.

    ## Returns:
        * LiftedProblem:    Problem with one `get-soil` task.
    """
    # Draw edges, soil, start, and target.
    names:          list =  [f"waypoint{i}" for i in range(1, waypoints + 1)]
    edges:          list =  [(a, b) for a, b in product(names, names) if a != b and rng.random() < 0.4]
    soil:           list =  [w for w in names if rng.random() < 0.5]
    start, target =         rng.choice(names), rng.choice(names)

    # Render problem.
    return  parse_problem(
                f"""
                (define (problem random-rover)
                  (:domain rover)
                  (:objects rover1 - rover {' '.join(names)} - waypoint)
                  (:htn :ordered-subtasks (and (get-soil {target})))
                  (:init (at rover1 {start})
                         {' '.join(f'(can-traverse {a} {b})' for a, b in edges)}
                         {' '.join(f'(soil-at {w})' for w in soil)})
                  (:goal (and (communicated-soil-data {target}))))
                """,
                domain
            )


@fixture
def suites_path() -> Path:
    """# Bundled Suites Directory."""
    return SUITES_PATH

@fixture
def instance() -> Callable[..., Tuple[LiftedDomain, LiftedProblem]]:
    """# Bundled Instance Loader."""
    return load_instance

@fixture
def towers() -> Tuple[LiftedDomain, LiftedProblem]:
    """# Towers 3-Ring Instance."""
    return load_instance("towers", "p01")

@fixture
def random_rover() -> Callable[..., LiftedProblem]:
    """# Random Rover Problem Generator."""
    return random_rover_problem
