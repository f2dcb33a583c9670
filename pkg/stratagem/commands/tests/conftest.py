"""# stratagem.commands.tests.conftest

Command test configuration: an in-process command runner and small HDDL files.
"""

from pathlib                import Path
from typing                 import Callable, Tuple

from pytest                 import CaptureFixture, fixture

from stratagem.__main__     import main

# Result of one command: exit code, standard output, standard error.
Outcome =   Tuple[int, str, str]

@fixture
def run(tmp_path: Path, capsys: CaptureFixture) -> Callable[..., Outcome]:
    """# In-Process Command Runner.

    Logs go to a temporary directory; captured output is drained per call.
    """
    def runner(*argv: str) -> Outcome:
        # Drop output of earlier calls.
        capsys.readouterr()

        # Run command.
        code:       int =   main(["--logging-path", str(tmp_path / "logs"), *argv])
        captured =          capsys.readouterr()

        return code, captured.out, captured.err

    return runner

@fixture
def broken_domain(tmp_path: Path) -> Path:
    """# Domain File With an Unclosed Form on Line 3."""
    path:   Path =  tmp_path / "broken.hddl"
    path.write_text(
        "(define (domain broken)\n"
        "  (:requirements :typing)\n"
        "  (:predicates (at ?x)\n",
        encoding = "utf-8"
    )
    return path

@fixture
def degenerate_problem(tmp_path: Path) -> Path:
    """# Towers Problem Without Task Network or Goals."""
    path:   Path =  tmp_path / "empty.hddl"
    path.write_text(
        "(define (problem towers-empty)\n"
        "  (:domain towers)\n"
        "  (:objects r1 - ring t1 - tower)\n"
        "  (:init (on r1 t1) (tower-top r1 t1) (smallest r1)))\n",
        encoding = "utf-8"
    )
    return path
