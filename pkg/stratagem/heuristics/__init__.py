"""# stratagem.heuristics

This package defines the heuristic contract, the built-in baselines and the loader that resolves
heuristic names and HEL program paths.
"""

__all__ =   [
                # Abstract heuristic class.
                "Heuristic",
                
                # Concrete heuristic classes.
                "BlindHeuristic",
                "TdgHeuristic",
                
                # TDG table.
                "bellman_sweep",
                "INF",
                "tdg_fixpoint",
                "TdgTable",
                
                # Loading.
                "load_heuristic",
                "PROGRAMS_PATH",
                "reference_programs",
                
                # Errors.
                "HeuristicError",
                "HeuristicFailure",
                "UnknownHeuristicError"
            ]

# Abstract heuristic class.
from stratagem.heuristics.__base__      import Heuristic

# Concrete heuristic classes.
from stratagem.heuristics.blind         import BlindHeuristic
from stratagem.heuristics.tdg           import bellman_sweep, INF, tdg_fixpoint, TdgHeuristic, TdgTable

# Loading.
from stratagem.heuristics.loader        import load_heuristic, PROGRAMS_PATH, reference_programs

# Errors.
from stratagem.heuristics.exceptions    import *
