"""# stratagem.pipeline.tests.conftest

Pipeline test configuration: canned responses, their classification and the grounded jobs training
problem.
"""

from pathlib                import Path
from typing                 import List

from pytest                 import fixture

from stratagem.conftest     import load_instance, SUITES_PATH
from stratagem.grounding    import ground, GroundedModel
from stratagem.heuristics   import PROGRAMS_PATH
from stratagem.pipeline     import *

# Canned provider responses, ordinals 00-19.
RESPONSES_PATH: Path =  Path(__file__).parent / "fixtures" / "responses"

@fixture
def responses_path() -> Path:
    """# Canned Responses Directory."""
    return RESPONSES_PATH

@fixture
def classified() -> List[CandidateRecord]:
    """# Classified Canned Responses (20 candidates for jobs)."""
    return  [
                classify_response(response, "mock", "jobs")
                for response in request_candidates("prompt", MockProvider(RESPONSES_PATH), 20)
            ]

@fixture(scope = "module")
def jobs_training() -> GroundedModel:
    """# Grounded Jobs Training Problem (p03)."""
    return ground(*load_instance("jobs", "p03"))

@fixture
def prompt_spec() -> PromptSpec:
    """# Prompt Inputs for Jobs, Hints Included."""
    return  PromptSpec(
                domain_name =           "jobs",
                domain_text =           (SUITES_PATH / "jobs" / "domain.hddl").read_text(encoding = "utf-8"),
                smallest_problem_text = (SUITES_PATH / "jobs" / "p01.hddl").read_text(encoding = "utf-8"),
                largest_problem_text =  (SUITES_PATH / "jobs" / "p03.hddl").read_text(encoding = "utf-8"),
                worked_example =        (PROGRAMS_PATH / "goal_distance.hel").read_text(encoding = "utf-8"),
                hints =                 load_hints(SUITES_PATH / "jobs" / "hints.json")
            )
