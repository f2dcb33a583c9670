"""# stratagem.registration.core.tests.conftest

Registration core fixtures.
"""

from argparse   import ArgumentParser, _SubParsersAction

from pytest     import fixture

@fixture
def subparser() -> _SubParsersAction:
    """# Sub-Parser Action of a Bare Top-Level Parser."""
    return ArgumentParser(prog = "stratagem").add_subparsers(dest = "command")
