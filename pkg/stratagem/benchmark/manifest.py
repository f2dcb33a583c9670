"""# stratagem.benchmark.manifest

Suite manifests: `{"domain": path, "problems": [paths], "training": path?, "hints": path?}`, paths
relative to the manifest file.
"""

__all__ =   [
                "load_manifest",
                "MANIFEST_NAME",
                "SuiteManifest"
            ]

from dataclasses                        import dataclass
from json                               import JSONDecodeError, loads
from pathlib                            import Path
from typing                             import Optional, Tuple, Union

from stratagem.benchmark.exceptions     import ManifestError

# Manifest file name inside a suite directory.
MANIFEST_NAME:  str =   "manifest.json"

@dataclass(frozen = True)
class SuiteManifest():
    r"""# :class:`SuiteManifest`

    ## Properties:
    * :param:`name`     (str):              Suite name (the directory name).
    * :param:`domain`   (Path):             Domain file.
    * :param:`problems` (Tuple[Path, ...]): Problem files, in declared order.
    * :param:`training` (Path):             Selection problem, one of the problems.
    * :param:`hints`    (Path):             Hint block file, if any.
    """
    name:       str
    domain:     Path
    problems:   Tuple[Path, ...]
    training:   Path
    hints:      Optional[Path] =    None


def load_manifest(
    path:   Union[str, Path]
) -> SuiteManifest:
    """# Load Suite Manifest.

    Without a declared training problem, the smallest problem file (by size, then by name) is the
    training problem.

    ## Args:
        * path  (str | Path):   Manifest file, or the suite directory holding `manifest.json`.

    ## Raises:
        * ManifestError:    If the manifest is unreadable, incomplete or names missing files.

    ## Returns:
        * SuiteManifest:    Manifest with resolved paths.
    """
    # Resolve file.
    path:       Path =  Path(path)
    path =              path / MANIFEST_NAME if path.is_dir() else path

    try:# Read document.
        document:   dict =  loads(path.read_text(encoding = "utf-8"))

    # Relay decoding failures.
    except (OSError, JSONDecodeError) as e: raise ManifestError(str(path), f"cannot read manifest ({e})") from e

    # Required keys.
    if not isinstance(document, dict) or "domain" not in document or not document.get("problems"):
        raise ManifestError(str(path), "manifest needs a domain and a nonempty problems list")

    # Resolve paths against the manifest.
    base:       Path =              path.parent
    domain:     Path =              base / document["domain"]
    problems:   Tuple[Path, ...] =  tuple(base / problem for problem in document["problems"])
    hints:      Optional[Path] =    base / document["hints"] if document.get("hints") else None

    # Every path exists.
    for required in (domain, *problems, *([hints] if hints else [])):
        if not required.is_file(): raise ManifestError(str(path), f"{required} does not exist")

    # Training problem.
    training:   Path =              base / document["training"] if document.get("training") \
                                    else min(problems, key = lambda p: (p.stat().st_size, p.name))

    if training not in problems: raise ManifestError(str(path), f"training problem {training} is not one of the problems")

    # Provide manifest.
    return SuiteManifest(document.get("name", base.name), domain, problems, training, hints)
