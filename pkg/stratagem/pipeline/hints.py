"""# stratagem.pipeline.hints

Per-domain hint block: representation caveats, the dominant search bottleneck and heuristic
construction guidance.
"""

__all__ =   [
                "HintBlock",
                "load_hints"
            ]

from dataclasses                    import dataclass
from json                           import JSONDecodeError, loads
from pathlib                        import Path
from typing                         import Union

from stratagem.pipeline.exceptions  import PipelineError

# Keys of a hint block file.
HINT_KEYS:  tuple = ("representation_caveats", "bottleneck", "construction_guidance")

@dataclass(frozen = True)
class HintBlock():
    r"""# :class:`HintBlock`

    ## Properties:
    * :param:`representation_caveats`   (str):  How grounding changes what the domain file shows.
    * :param:`bottleneck`               (str):  Main source of branching in the domain.
    * :param:`construction_guidance`    (str):  Lower-bound candidates, symmetry breakers and
                                                penalty scales.
    """
    representation_caveats: str =   ""
    bottleneck:             str =   ""
    construction_guidance:  str =   ""


def load_hints(
    path:   Union[str, Path]
) -> HintBlock:
    """# Load Hint Block.

    ## Args:
        * path  (str | Path):   JSON file with the three hint categories (missing ones are empty).

    ## Raises:
        * PipelineError:    If the file is not a JSON object of strings.

    ## Returns:
        * HintBlock:    Loaded hints.
    """
    try:# Read document.
        document:   dict =  loads(Path(path).read_text(encoding = "utf-8"))

    # Relay decoding failures.
    except (OSError, JSONDecodeError) as e: raise PipelineError(f"{path}: cannot read hint block ({e})") from e

    # Validate shape.
    if not isinstance(document, dict) or any(not isinstance(document.get(key, ""), str) for key in HINT_KEYS):
        raise PipelineError(f"{path}: hint block must map {', '.join(HINT_KEYS)} to strings")

    # Provide hints.
    return HintBlock(**{key: document.get(key, "") for key in HINT_KEYS})
