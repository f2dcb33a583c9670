"""# stratagem.registration.core.tests.entry_test

Registration entry test suite.
"""

from pytest                                     import raises

from stratagem.registration.core.entry          import Entry
from stratagem.registration.core.exceptions     import IncompleteEntryError

def test_entry_defaults() -> None:
    """# Test Default Initialization of Entry."""
    # Initialize entry.
    entry:  Entry = Entry(name = "tdg")
    
    assert entry.name == "tdg",         f"Entry name expected to be 'tdg', got {entry.name}"
    assert entry.description == "",     f"Entry description expected to be empty, got {entry.description!r}"
    assert entry.tags == [],            f"Entry tags expected to be empty, got {entry.tags}"
    assert entry.parser is None,        f"Entry parser expected to be None, got {entry.parser}"

def test_entry_description_is_one_line() -> None:
    """# Test that Descriptions Collapse to a Single Line."""
    # Initialize entry with a wrapped description.
    entry:  Entry = Entry(name = "tdg", description = """Sum over pending tasks
                                                          of their minimum decomposition cost""")

    assert entry.description == "Sum over pending tasks of their minimum decomposition cost", \
        f"Description expected on one line, got {entry.description!r}"

def test_entry_tags_are_not_shared() -> None:
    """# Test that Default Tag Lists are Independent."""
    # Initialize entries.
    first:  Entry = Entry(name = "blind")
    second: Entry = Entry(name = "tdg")
    
    first.tags.append("mutated")
    
    assert second.tags == [],   f"Second entry tags expected to be empty, got {second.tags}"
    
def test_entry_has_tags() -> None:
    """# Test Tag Matching."""
    # Initialize entry.
    entry:  Entry = Entry(name = "tdg", tags = ["informed", "admissible"])
    
    assert entry.has_tags(),                            "An empty tag request should match"
    assert entry.has_tags("informed", "admissible"),    "Entry should carry both tags"
    assert not entry.has_tags("informed", "learned"),   "Entry should not carry 'learned'"

def test_entry_repr_lists_tags() -> None:
    """# Test Entry Representation."""
    assert repr(Entry(name = "tdg", tags = ["informed"])) == "<Entry(tdg #informed)>", \
        f"Unexpected representation {Entry(name = 'tdg', tags = ['informed'])!r}"

def test_register_parser_without_handler(subparser) -> None:
    """# Test Parser Registration without Handler Raises."""
    # Initialize entry.
    entry:  Entry = Entry(name = "tdg")
    
    with raises(IncompleteEntryError) as exc_info: entry.register_parser(subparser = subparser)

    assert exc_info.value.missing == "parser",  f"Missing handler expected to be 'parser', got {exc_info.value.missing}"
    assert exc_info.value.entry_name == "tdg",  f"Entry name expected to be 'tdg', got {exc_info.value.entry_name}"
