"""# stratagem.heuristics.loader

Resolves heuristic specifications (`--heuristic NAME|PATH`) to fresh heuristic handles.
"""

__all__ =   [
                "load_heuristic",
                "PROGRAMS_PATH",
                "reference_programs"
            ]

from pathlib                            import Path
from typing                             import List

from stratagem.heuristics.__base__      import Heuristic
from stratagem.heuristics.exceptions    import UnknownHeuristicError
from stratagem.registration             import HEURISTIC_REGISTRY

# Reference HEL programs shipped with the package.
PROGRAMS_PATH:  Path =  Path(__file__).parent / "programs"

def reference_programs() -> List[str]:
    """# Names of the Bundled Reference Programs."""
    return sorted(path.stem for path in PROGRAMS_PATH.glob("*.hel"))

def load_heuristic(
    specification:  str,
    **options
) -> Heuristic:
    """# Load Heuristic.

    Resolution order: registered built-in name (`blind`, `tdg`), path of a `.hel` file, name of a 
    bundled reference program (`goal_distance` resolves `programs/goal_distance.hel`).

    ## Args:
        * specification (str):  Name or path.
        * options:              Heuristic options (`primitive_cost`, `abstract_init`, 
                                `infinity_penalty`); options a heuristic does not take are 
                                ignored.

    ## Raises:
        * UnknownHeuristicError:    If the specification resolves to nothing.
        * HelError:                 If a HEL program fails to parse or check.

    ## Returns:
        * Heuristic:    Fresh, uninitialized handle.
    """
    # Built-in heuristics.
    if specification in HEURISTIC_REGISTRY.list(): return HEURISTIC_REGISTRY.load(name = specification, **options)
    
    # Lazy import keeps the HEL interpreter out of the registry walk.
    from stratagem.hel  import HelHeuristic
    
    # Program files.
    if specification.endswith(".hel") and Path(specification).is_file():
        return HelHeuristic.from_file(specification, **options)
    
    # Bundled reference programs.
    if (PROGRAMS_PATH / f"{specification}.hel").is_file():
        return HelHeuristic.from_file(PROGRAMS_PATH / f"{specification}.hel", **options)
    
    # Nothing matched.
    raise UnknownHeuristicError(specification, HEURISTIC_REGISTRY.list() + reference_programs())
