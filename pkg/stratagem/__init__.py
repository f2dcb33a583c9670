"""# stratagem

Total-order HTN planning with a pluggable heuristic interface, a sandboxed heuristic expression 
language for generated heuristics, a generate-evaluate-select pipeline, and a benchmark harness.
"""

__all__ =   [
                "__author__",
                "__author_email__",
                "__description__",
                "__title__",
                "__version__",
                "__version_info__",
            ]

from stratagem._version_    import  (
                                        __author__,
                                        __author_email__,
                                        __description__,
                                        __title__,
                                        __version__,
                                        __version_info__,
                                    )
