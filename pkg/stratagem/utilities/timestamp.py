"""# stratagem.utilities.timestamp

Process start time, and the default output directories named after it.
"""

__all__ =   [
                "default_output",
                "TIMESTAMP"
            ]

from datetime   import datetime
from pathlib    import Path

# Fixed at import so that every default directory of one invocation shares it.
TIMESTAMP:  str =   datetime.now().strftime("%Y%m%d_%H%M%S")

def default_output(
    *parts: str,
    root:   Path =  Path("output")
) -> Path:
    """# Default Output Directory.

    ## Args:
        * parts (str):  Name components, joined by underscores ahead of the timestamp.
        * root  (Path): Parent directory. Defaults to "./output/".

    ## Returns:
        * Path: `<root>/<part>_..._<TIMESTAMP>`; not created.
    """
    return root / "_".join([*(p for p in parts if p), TIMESTAMP])
