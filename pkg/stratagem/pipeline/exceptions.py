"""# stratagem.pipeline.exceptions

Defines the errors raised while generating and storing heuristic candidates. Bad candidates are
data, not errors: only transport and configuration faults raise.
"""

__all__ =   [
                "CandidateStoreError",
                "PipelineError",
                "ProviderConfigError",
                "TransportError"
            ]

from typing import Optional

class PipelineError(Exception):
    """# Generic Pipeline Error.

    Base exception class for all pipeline errors.
    """

    def __init__(self,
        message:    str
    ):
        """# Raise Pipeline Error.

        ## Args:
            * message   (str):  Human-readable description.
        """
        # Define properties.
        self.message:   str =   message

        # Initialize exception.
        super(PipelineError, self).__init__(message)


class TransportError(PipelineError):
    """# Transport Error.

    Raised when a provider request fails before a response body is obtained (connection failure,
    non-2xx status, malformed envelope).
    """

    def __init__(self,
        reason: str,
        status: Optional[int] = None
    ):
        """# Raise Transport Error.

        ## Args:
            * reason    (str):  Failure description.
            * status    (int):  HTTP status code, if a response was received.
        """
        # Define properties.
        self.reason:    str =           reason
        self.status:    Optional[int] = status

        # Initialize exception.
        super(TransportError, self).__init__(
            f"transport failure: {reason}" if status is None else f"transport failure (HTTP {status}): {reason}"
        )


class ProviderConfigError(PipelineError):
    """# Provider Configuration Error.

    Raised when a provider configuration file or specification is missing, malformed or refers to
    an unset API key variable.
    """

    def __init__(self,
        source: str,
        reason: str
    ):
        """# Raise Provider Configuration Error.

        ## Args:
            * source    (str):  Configuration file or specification.
            * reason    (str):  What is wrong with it.
        """
        # Define properties.
        self.source:    str =   source

        # Initialize exception.
        super(ProviderConfigError, self).__init__(f"{source}: {reason}")


class CandidateStoreError(PipelineError):
    """# Candidate Store Error.

    Raised when a candidate store directory holds unreadable or inconsistent records.
    """

    def __init__(self,
        path:   str,
        reason: str
    ):
        """# Raise Candidate Store Error.

        ## Args:
            * path      (str):  Offending file.
            * reason    (str):  What is wrong with it.
        """
        # Define properties.
        self.path:  str =   path

        # Initialize exception.
        super(CandidateStoreError, self).__init__(f"{path}: {reason}")
