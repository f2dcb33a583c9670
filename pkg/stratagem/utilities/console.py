"""# stratagem.utilities.console

Human-facing console output helpers.
"""

__all__ = ["emphasize", "report_error"]

import sys
from typing     import Optional, TextIO

from termcolor  import colored

def emphasize(
    text:   str,
    color:  str =               "cyan",
    stream: Optional[TextIO] =  None
) -> str:
    """# Emphasize Text.
    
    Colour text when the destination stream is a terminal; otherwise return it unchanged so that 
    redirected output stays plain.

    ## Args:
        * text      (str):      Text being emphasized.
        * color     (str):      Termcolor colour name. Defaults to "cyan".
        * stream    (TextIO):   Destination stream. Defaults to standard error.

    ## Returns:
        * str:  Possibly coloured text.
    """
    # Resolve destination.
    stream: TextIO =    stream or sys.stderr
    
    # Only colour terminals.
    return colored(text, color) if getattr(stream, "isatty", lambda: False)() else text

def report_error(
    diagnostic: str
) -> None:
    """# Report Error.
    
    Write one diagnostic line (conventionally `file:line:col: message`) to standard error.

    ## Args:
        * diagnostic    (str):  Diagnostic line.
    """
    print(emphasize(text = diagnostic, color = "red"), file = sys.stderr)
