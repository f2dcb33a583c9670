"""# stratagem.registration.registries.tests.registries_test

Application registries test suite.
"""

from stratagem.heuristics   import Heuristic
from stratagem.registration import COMMAND_REGISTRY, HEURISTIC_REGISTRY

def test_command_registry_lists_every_subcommand() -> None:
    """# Test Command Registry Discovers All Sub-Commands."""
    # Expected sub-commands.
    expected:   list =  ["bench", "generate", "ground", "parse", "report", "select", "solve"]
    
    assert COMMAND_REGISTRY.list() == expected, \
        f"Commands expected to be {expected}, got {COMMAND_REGISTRY.list()}"

def test_heuristic_registry_lists_builtins() -> None:
    """# Test Heuristic Registry Discovers Built-in Heuristics."""
    assert HEURISTIC_REGISTRY.list() == ["blind", "tdg"],   \
        f"Heuristics expected to be blind & tdg, got {HEURISTIC_REGISTRY.list()}"

def test_heuristic_registry_load() -> None:
    """# Test Loading a Registered Heuristic."""
    # Load heuristic.
    heuristic:  Heuristic = HEURISTIC_REGISTRY.load(name = "tdg", primitive_cost = 0)
    
    assert isinstance(heuristic, Heuristic),    f"Loaded object expected to be Heuristic, got {type(heuristic)}"
    assert heuristic.name == "tdg",             f"Heuristic name expected to be 'tdg', got {heuristic.name}"

def test_command_sections_follow_listing_order() -> None:
    """# Test Command Help Sections."""
    # Section names and their commands.
    sections:   dict =  {
                            section: [entry.name for entry in entries]
                            for section, entries in COMMAND_REGISTRY.sections().items()
                        }

    assert list(sections) == ["Planning", "Pipeline", "Benchmark"], \
        f"Sections expected in listing order, got {list(sections)}"
    assert sorted(sections["Planning"]) == ["ground", "parse", "solve"],    \
        f"Planning commands expected to be ground, parse & solve, got {sections['Planning']}"
    assert sorted(sections["Pipeline"]) == ["generate", "select"],          \
        f"Pipeline commands expected to be generate & select, got {sections['Pipeline']}"

def test_heuristic_registry_describes_builtins() -> None:
    """# Test Built-in Heuristic Descriptions."""
    # Describe built-ins.
    description:    str =   HEURISTIC_REGISTRY.describe()

    assert description.startswith("blind (Constant zero"),  f"Blind expected first, got {description}"
    assert "tdg (Sum over pending tasks" in description,    f"TDG description missing from {description}"
