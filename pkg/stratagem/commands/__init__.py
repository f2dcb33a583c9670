"""# stratagem.commands

Command-line sub-commands. Each sub-package registers its parser and entry point with
`COMMAND_REGISTRY` when imported.
"""

__all__ =   [
                "bench",
                "generate",
                "ground",
                "parse",
                "report",
                "select",
                "solve"
            ]

from stratagem.commands import bench, generate, ground, parse, report, select, solve
