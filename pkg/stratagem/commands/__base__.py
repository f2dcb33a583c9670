"""# stratagem.commands.base

Abstract command process and the loading steps shared by sub-commands.
"""

__all__ =   [
                "CommandProcess",
                "load_model",
                "resolve_suite",
                "suite_prompt_spec"
            ]

from abc                        import ABC, abstractmethod
from logging                    import Logger
from pathlib                    import Path
from typing                     import Optional

from stratagem.benchmark        import BenchmarkError, load_manifest, SuiteManifest, SUITES_PATH
from stratagem.grounding        import ground, GroundedModel, GroundingError, GroundingOptions
from stratagem.hddl             import HDDLError, LiftedDomain, read_domain, read_problem
from stratagem.hel              import HelError
from stratagem.heuristics       import HeuristicError, PROGRAMS_PATH
from stratagem.pipeline         import load_hints, PipelineError, PromptSpec
from stratagem.search           import SearchConfigError
from stratagem.utilities        import get_child, report_error

class CommandProcess(ABC):
    """# Abstract Command Process.

    Configured from parsed arguments, executed once. Input, configuration and environment errors
    are reported as one diagnostic line on standard error and end the command with exit code 1.
    """

    def __init__(self,
        name:   str
    ):
        """# Instantiate Command Process.

        ## Args:
            * name  (str):  Process name, used for its logger.
        """
        # Initialize logger.
        self.__logger__:    Logger =    get_child(name)

    # METHODS ======================================================================================

    def run(self) -> int:
        """# Run Process.

        ## Returns:
            * int:  Exit code.
        """
        try:# Execute.
            return self.execute()

        # Positioned diagnostics.
        except (HDDLError, HelError) as e:  report_error(e.diagnostic())

        # Plain diagnostics.
        except (
            BenchmarkError, GroundingError, HeuristicError, PipelineError, SearchConfigError
        ) as e:                             report_error(str(e))

        # Unreadable or unwritable files.
        except OSError as e:                report_error(f"{e.filename}: {e.strerror}" if e.filename else str(e))

        # Failed.
        return 1

    @abstractmethod
    def execute(self) -> int:
        """# Execute Process.

        ## Returns:
            * int:  Exit code.
        """
        pass


def load_model(
    domain:     str,
    problem:    str,
    options:    Optional[GroundingOptions] =    None
) -> GroundedModel:
    """# Read and Ground a Problem.

    ## Args:
        * domain    (str):              Domain file.
        * problem   (str):              Problem file.
        * options   (GroundingOptions): Grounding options. Defaults to stripping and pruning.

    ## Raises:
        * HDDLError:        If either file fails to parse.
        * GroundingError:   If grounding fails or proves the problem unsolvable.

    ## Returns:
        * GroundedModel:    Grounded problem.
    """
    # Parse domain.
    lifted: LiftedDomain =  read_domain(domain)

    # Parse problem against it, then ground.
    return ground(lifted, read_problem(problem, lifted), options)

def suite_prompt_spec(
    manifest:       SuiteManifest,
    worked_example: str =   "goal_distance"
) -> PromptSpec:
    """# Prompt Inputs of a Suite.

    ## Args:
        * manifest          (SuiteManifest):    Suite.
        * worked_example    (str):              `.hel` path, or name of a bundled reference
                                                program. Defaults to "goal_distance".

    ## Returns:
        * PromptSpec:   Domain file, smallest and largest problems (by size), hints if declared.
    """
    # Order problems by size.
    problems:   list =  sorted(manifest.problems, key = lambda p: (p.stat().st_size, p.name))

    # Resolve worked example.
    example:    Path =  Path(worked_example) if worked_example.endswith(".hel") else PROGRAMS_PATH / f"{worked_example}.hel"

    # Provide inputs.
    return  PromptSpec(
                domain_name =           manifest.name,
                domain_text =           manifest.domain.read_text(encoding = "utf-8"),
                smallest_problem_text = problems[0].read_text(encoding = "utf-8"),
                largest_problem_text =  problems[-1].read_text(encoding = "utf-8"),
                worked_example =        example.read_text(encoding = "utf-8"),
                hints =                 load_hints(manifest.hints) if manifest.hints else None
            )

def resolve_suite(
    suite:  str
) -> SuiteManifest:
    """# Resolve Suite Argument.

    ## Args:
        * suite (str):  Suite directory, manifest file, or name of a bundled suite.

    ## Raises:
        * ManifestError:    If the manifest is unreadable or incomplete.

    ## Returns:
        * SuiteManifest:    Loaded manifest.
    """
    return load_manifest(suite if Path(suite).exists() else SUITES_PATH / suite)
