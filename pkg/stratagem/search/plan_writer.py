"""# stratagem.search.plan_writer

Plan and statistics rendering.

Plans are written as:

    ==>
    0 (move r1 r2 t3 t1 t3)
    1 (move r2 r3 t2 t1 t2)
    <==
"""

__all__ =   [
                "format_plan",
                "format_stats",
                "write_plan"
            ]

from pathlib                    import Path
from typing                     import List, Union

from stratagem.grounding        import GroundedModel, GroundOperator
from stratagem.search.result    import SearchResult

def format_plan(
    model:  GroundedModel,
    result: SearchResult
) -> str:
    """# Format Plan.

    ## Args:
        * model     (GroundedModel):    Model the result was computed on.
        * result    (SearchResult):     Search result; unsolved results render an empty plan.

    ## Returns:
        * str:  Plan text, newline-terminated.
    """
    # Open plan.
    lines:  List[str] = ["==>"]

    # One line per primitive action.
    for index, name in enumerate(result.plan):

        # Resolve operator.
        operator:   GroundOperator =    model.operators[model.task_index[name]]

        # Render action.
        lines.append(f"{index} ({' '.join((operator.schema, *operator.arguments))})")

    # Close plan.
    lines.append("<==")

    # Provide text.
    return "\n".join(lines) + "\n"

def write_plan(
    path:   Union[str, Path],
    model:  GroundedModel,
    result: SearchResult
) -> Path:
    """# Write Plan File.

    ## Args:
        * path      (str | Path):       Destination.
        * model     (GroundedModel):    Model the result was computed on.
        * result    (SearchResult):     Search result.

    ## Returns:
        * Path: Destination written.
    """
    # Ensure parent exists.
    path:   Path =  Path(path)
    path.parent.mkdir(parents = True, exist_ok = True)

    # Write plan.
    path.write_text(format_plan(model, result), encoding = "utf-8")

    # Provide path.
    return path

def format_stats(
    result: SearchResult
) -> str:
    """# Format Machine-Readable Statistics Line (`status=.. expanded=.. length=.. time=..`)."""
    return f"status={result.status} expanded={result.expanded} length={result.plan_length} time={result.wall_time:.3f}"
