"""# stratagem.search.config

Search configuration.
"""

__all__ =   [
                "ALGORITHMS",
                "SearchConfig"
            ]

from dataclasses                    import dataclass
from fractions                      import Fraction
from typing                         import Optional, Union

from stratagem.search.exceptions    import SearchConfigError

# Supported best-first orderings.
ALGORITHMS: tuple = ("astar", "gbfs", "wastar")

@dataclass(frozen = True)
class SearchConfig():
    r"""# :class:`SearchConfig`

    ## Properties:
    * :param:`algorithm`        (str):      "astar" (f = g + h), "gbfs" (f = h) or "wastar" 
                                            (f = g + w * h). Defaults to "gbfs".
    * :param:`weight`           (Fraction): Weight w of weighted A*. Defaults to 5.
    * :param:`time_limit`       (float):    Wall-clock limit in seconds, None for unlimited.
    * :param:`node_budget`      (int):      Maximum expansions, None for unlimited.
    * :param:`memory_limit_mb`  (int):      Advisory limit, in MiB, on resident memory grown since
                                            the search started; None for unlimited. Checked every
                                            `memory_interval` expansions.
    * :param:`memory_interval`  (int):      Expansions between memory checks. Defaults to 1000.
    * :param:`streak_cap`       (int):      Maximum consecutive method applications without an
                                            operator application. Defaults to 10,000.
    """
    algorithm:          str =                           "gbfs"
    weight:             Union[Fraction, int, float] =   5
    time_limit:         Optional[float] =               None
    node_budget:        Optional[int] =                 None
    memory_limit_mb:    Optional[int] =                 None
    memory_interval:    int =                           1000
    streak_cap:         int =                           10_000

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.algorithm not in ALGORITHMS:
            raise SearchConfigError("algorithm", self.algorithm, f"expected one of {', '.join(ALGORITHMS)}")

        if Fraction(self.weight) < 1:
            raise SearchConfigError("weight", self.weight, "must be at least 1")

        if self.time_limit is not None and self.time_limit <= 0:
            raise SearchConfigError("time_limit", self.time_limit, "must be positive")

        if self.node_budget is not None and self.node_budget < 0:
            raise SearchConfigError("node_budget", self.node_budget, "must be non-negative")

        if self.memory_limit_mb is not None and self.memory_limit_mb <= 0:
            raise SearchConfigError("memory_limit_mb", self.memory_limit_mb, "must be positive")

        if self.memory_interval < 1:
            raise SearchConfigError("memory_interval", self.memory_interval, "must be positive")

        if self.streak_cap < 1:
            raise SearchConfigError("streak_cap", self.streak_cap, "must be positive")

    def priority(self,
        g:  int,
        h:  Union[Fraction, int, float]
    ) -> Union[Fraction, int, float]:
        """# Open-List Priority f.

        ## Args:
            * g (int):      Accumulated cost.
            * h (Fraction): Heuristic estimate.

        ## Returns:
            * Fraction: f-value under the configured algorithm.
        """
        match self.algorithm:
            case "astar":   return g + h
            case "gbfs":    return h
            case _:         return g + Fraction(self.weight) * h
