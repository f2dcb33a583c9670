"""# stratagem.search

Total-order progression search: node expansion, best-first search, solution validation and plan
output.
"""

__all__ =   [
                # Nodes.
                "SearchNode",
                "Step",

                # Configuration & results.
                "ALGORITHMS",
                "SearchConfig",
                "SearchResult",
                "SearchStatus",

                # Search.
                "expand",
                "is_goal",
                "ProgressionSearch",
                "search",

                # Validation & output.
                "format_plan",
                "format_stats",
                "validate",
                "Validation",
                "write_plan",

                # Errors.
                "SearchConfigError",
                "SearchError"
            ]

from stratagem.search.node          import SearchNode, Step
from stratagem.search.exceptions    import SearchConfigError, SearchError
from stratagem.search.config        import ALGORITHMS, SearchConfig
from stratagem.search.result        import SearchResult, SearchStatus
from stratagem.search.progression   import expand, is_goal
from stratagem.search.engine        import ProgressionSearch, search
from stratagem.search.validator     import validate, Validation
from stratagem.search.plan_writer   import format_plan, format_stats, write_plan
