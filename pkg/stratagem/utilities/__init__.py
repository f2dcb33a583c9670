"""# stratagem.utilities

Shared plumbing: logging, console diagnostics, default output directories and the s-expression
reader under both parsers (imported from `stratagem.utilities.sexpr` directly).
"""

__all__ =   [
                # Console.
                "BANNER",
                "emphasize",
                "report_error",

                # Logging.
                "get_child",
                "get_logger",

                # Output.
                "default_output",
                "TIMESTAMP"
            ]

from stratagem.utilities.banner     import BANNER
from stratagem.utilities.console    import emphasize, report_error
from stratagem.utilities.logger     import get_child, get_logger
from stratagem.utilities.timestamp  import default_output, TIMESTAMP
