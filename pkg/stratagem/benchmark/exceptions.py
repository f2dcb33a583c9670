"""# stratagem.benchmark.exceptions

Defines the errors raised while loading suites and run records. Failed matrix cells are records,
not errors.
"""

__all__ =   [
                "BenchmarkError",
                "ManifestError",
                "RecordFormatError"
            ]

class BenchmarkError(Exception):
    """# Generic Benchmark Error.

    Base exception class for all benchmark errors.
    """

    def __init__(self,
        message:    str
    ):
        """# Raise Benchmark Error.

        ## Args:
            * message   (str):  Human-readable description.
        """
        # Define properties.
        self.message:   str =   message

        # Initialize exception.
        super(BenchmarkError, self).__init__(message)


class ManifestError(BenchmarkError):
    """# Manifest Error.

    Raised when a suite manifest is unreadable, misses a key or names a file that does not exist.
    """

    def __init__(self,
        path:   str,
        reason: str
    ):
        """# Raise Manifest Error.

        ## Args:
            * path      (str):  Manifest file.
            * reason    (str):  What is wrong with it.
        """
        # Define properties.
        self.path:  str =   path

        # Initialize exception.
        super(ManifestError, self).__init__(f"{path}: {reason}")


class RecordFormatError(BenchmarkError):
    """# Record Format Error.

    Raised when a line of a run-record file is not a valid record.
    """

    def __init__(self,
        path:   str,
        line:   int,
        reason: str
    ):
        """# Raise Record Format Error.

        ## Args:
            * path      (str):  Record file.
            * line      (int):  1-based line number.
            * reason    (str):  What is wrong with it.
        """
        # Define properties.
        self.path:  str =   path
        self.line:  int =   line

        # Initialize exception.
        super(RecordFormatError, self).__init__(f"{path}:{line}: {reason}")
