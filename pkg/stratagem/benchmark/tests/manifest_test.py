"""# stratagem.benchmark.tests.manifest_test

Suite manifest test suite.
"""

from json                   import dumps
from pathlib                import Path

from pytest                 import mark, raises

from stratagem.benchmark    import *

def _suite_(directory: Path, document: dict, files: tuple = ("domain.hddl", "a.hddl", "bb.hddl")) -> Path:
    """# Write a Suite Directory."""
    # Files with distinct sizes.
    for i, name in enumerate(files): (directory / name).write_text("x" * (i + 1), encoding = "utf-8")

    # Manifest.
    (directory / MANIFEST_NAME).write_text(dumps(document), encoding = "utf-8")

    return directory

# BUNDLED SUITES ===================================================================================

@mark.parametrize("name, problems", [("jobs", 3), ("rover", 2), ("towers", 2)])
def test_bundled_suites_load(name: str, problems: int) -> None:
    """# Test Every Bundled Manifest."""
    # Load.
    manifest:   SuiteManifest = load_manifest(SUITES_PATH / name)

    assert manifest.name == name,                   f"Expected suite {name}, got {manifest.name}"
    assert len(manifest.problems) == problems,      f"Expected {problems} problems, got {len(manifest.problems)}"
    assert manifest.training in manifest.problems,  "Training problem should be one of the problems"

def test_declared_training_and_hints() -> None:
    """# Test Jobs Declares Its Training Problem and Hints."""
    # Load.
    manifest:   SuiteManifest = load_manifest(SUITES_PATH / "jobs" / MANIFEST_NAME)

    assert manifest.training.name == "p03.hddl",    f"Unexpected training problem: {manifest.training}"
    assert manifest.hints.name == "hints.json",     f"Unexpected hints: {manifest.hints}"

def test_default_training_is_smallest() -> None:
    """# Test Smallest Problem Without a Declaration."""
    # Load.
    manifest:   SuiteManifest = load_manifest(SUITES_PATH / "towers")

    assert manifest.training.name == "p01.hddl",    f"Unexpected training problem: {manifest.training}"
    assert manifest.hints is None,                  "Towers has no hints"

# ERRORS ===========================================================================================

def test_missing_problem_file(tmp_path: Path) -> None:
    """# Test Manifest Naming a Missing File."""
    # Suite with a dangling problem.
    suite:  Path =  _suite_(tmp_path, {"domain": "domain.hddl", "problems": ["a.hddl", "missing.hddl"]})

    with raises(ManifestError, match = "missing.hddl"): load_manifest(suite)

def test_training_outside_problems(tmp_path: Path) -> None:
    """# Test Training Problem Not Among the Problems."""
    # Suite training on an unlisted file.
    suite:  Path =  _suite_(tmp_path, {"domain": "domain.hddl", "problems": ["a.hddl"], "training": "bb.hddl"})

    with raises(ManifestError, match = "not one of the problems"): load_manifest(suite)

@mark.parametrize("text", ["{", "[]", "{\"domain\": \"domain.hddl\", \"problems\": []}"])
def test_malformed_manifest(tmp_path: Path, text: str) -> None:
    """# Test Unreadable and Incomplete Manifests."""
    # Write manifest.
    (tmp_path / MANIFEST_NAME).write_text(text, encoding = "utf-8")

    with raises(ManifestError): load_manifest(tmp_path)

def test_smallest_by_size(tmp_path: Path) -> None:
    """# Test Size Decides the Default Training Problem."""
    # Larger file listed first.
    suite:  Path =  _suite_(tmp_path, {"domain": "domain.hddl", "problems": ["bb.hddl", "a.hddl"]})

    assert load_manifest(suite).training.name == "a.hddl",  "Smaller file should be the training problem"
