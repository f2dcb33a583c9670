"""# stratagem.pipeline.refinement

Refinement prompt: the base prompt followed by the previous candidate, its results next to the TDG
baseline on the training problem, and advice chosen from the shape of the failure.
"""

__all__ =   [
                "build_refinement_prompt",
                "STATE_READERS"
            ]

from typing                         import List, Optional, Set

from stratagem.benchmark.records    import RunRecord
from stratagem.pipeline.candidates  import CandidateRecord, CandidateStatus
from stratagem.pipeline.prompt      import build_prompt, PromptSpec

# Builtins through which a program reads the state.
STATE_READERS:  Set[str] =  {"count-unsatisfied", "count-true", "any-true"}

def build_refinement_prompt(
    base:       PromptSpec,
    previous:   CandidateRecord,
    baseline:   RunRecord
) -> str:
    """# Build Refinement Prompt.

    ## Args:
        * base      (PromptSpec):       Inputs of the base prompt.
        * previous  (CandidateRecord):  Evaluated candidate with its program text.
        * baseline  (RunRecord):        TDG run on the same training problem.

    ## Returns:
        * str:  Base prompt plus a feedback section.
    """
    assert previous.program_text is not None, f"{previous.id} has no program to refine"
    assert previous.status is not CandidateStatus.PARSED, f"{previous.id} was never evaluated"

    # Feedback section.
    feedback:   List[str] = [
                                "# 14. Feedback on your previous heuristic",
                                "Your previous program was:",
                                f"```hel\n{previous.program_text.strip()}\n```",
                                "Results on the training problem:",
                                _results_table_(previous, baseline),
                                "What to change:",
                                _advice_(previous, baseline),
                                "**Do NOT start from scratch: modify and improve the previous version.**",
                            ]

    # Append to the base prompt.
    return build_prompt(base) + "\n" + "\n\n".join(feedback) + "\n"

# HELPERS ==========================================================================================

def _results_table_(previous: CandidateRecord, baseline: RunRecord) -> str:
    """# Candidate and Baseline Side by Side."""
    # Render optional cells.
    def cell(value: Optional[object]) -> str: return "-" if value is None else str(value)

    return  "\n".join([
                "| heuristic | status | expanded | wall time (s) | plan length |",
                "|---|---|---|---|---|",
                f"| previous | {previous.status} | {cell(previous.training_expanded)} | "
                f"{cell(None if previous.training_time is None else f'{previous.training_time:.3f}')} | "
                f"{cell(previous.training_plan_length)} |",
                f"| tdg | {baseline.status} | {baseline.expanded} | {baseline.wall_time:.3f} | {baseline.plan_length} |",
            ])

def _advice_(previous: CandidateRecord, baseline: RunRecord) -> str:
    """# Advice Keyed by Outcome and Program Shape."""
    # Builtins used.
    used:   Set[str] =  {call.name for call in previous.program.calls()} if previous.program is not None else set()

    match previous.status:

        # Too slow.
        case CandidateStatus.TIMED_OUT:
            return  (
                        "The program ran out of time. This is anti-pattern A3: per-node work is too heavy. "
                        "Move that work to initialize: bind every table, fact-set and pattern in `init` and "
                        "keep `eval` to a few scans."
                    )

        # Faults.
        case CandidateStatus.RUNTIME_FAILED | CandidateStatus.PARSE_FAILED | CandidateStatus.STATIC_FAILED:
            return f"The program failed with this error, fix it:\n\n    {previous.diagnostic}"

    # Better than the baseline.
    if not baseline.solved or previous.training_expanded < baseline.expanded:
        return  (
                    f"The program improved on the TDG baseline ({previous.training_expanded} against "
                    f"{baseline.expanded if baseline.solved else 'no solution'} expanded nodes). Keep its "
                    f"structure, and tighten an existing term or add a third component to the `max`."
                )

    # Not better: collect advice by shape.
    advice: List[str] = [
                            f"The program did not improve on the TDG baseline ({previous.training_expanded} against "
                            f"{baseline.expanded} expanded nodes)."
                        ]

    if not used & STATE_READERS:
        advice.append(
            "It never reads the state. This is anti-pattern A1: add state awareness, for example "
            "`(count-unsatisfied goals)` over `(goal-facts)`, so that progress towards the goals lowers the estimate."
        )

    if "max" not in used:
        advice.append("It has a single estimate. Add a second lower bound and combine both with `max`.")

    if len(advice) == 1:
        advice.append("Tighten the terms of the `max`, or add a tie-breaking penalty scaled to the differences you need to separate.")

    return " ".join(advice)
