"""# stratagem.hel.program

Syntax tree of HEL programs.
"""

__all__ =   [
                "Call",
                "Definition",
                "Expression",
                "HelProgram",
                "Number",
                "Symbol",
                "Text"
            ]

from dataclasses    import dataclass, field
from fractions      import Fraction
from typing         import Iterator, Optional, Tuple, Union

@dataclass(frozen = True)
class Number():
    r"""# :class:`Number`

    ## Properties:
    * :param:`value`    (Fraction): Exact rational value.
    """
    value:  Fraction
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)


@dataclass(frozen = True)
class Text():
    r"""# :class:`Text`

    ## Properties:
    * :param:`value`    (str):  String literal contents.
    """
    value:  str
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)


@dataclass(frozen = True)
class Symbol():
    r"""# :class:`Symbol`

    ## Properties:
    * :param:`name` (str):  Reference to a symbol bound in init.
    """
    name:   str
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)


@dataclass(frozen = True)
class Call():
    r"""# :class:`Call`

    ## Properties:
    * :param:`name`         (str):                      Builtin name.
    * :param:`arguments`    (Tuple[Expression, ...]):   Argument expressions.
    """
    name:       str
    arguments:  Tuple["Expression", ...] =  ()
    line:       int =                       field(default = 1, compare = False)
    column:     int =                       field(default = 1, compare = False)

    def walk(self) -> Iterator["Expression"]:
        """# Pre-Order Traversal of this Call and its Arguments."""
        yield self
        for argument in self.arguments:
            if isinstance(argument, Call):  yield from argument.walk()
            else:                           yield argument


Expression = Union[Number, Text, Symbol, Call]


@dataclass(frozen = True)
class Definition():
    r"""# :class:`Definition`

    Init directive `(def symbol (builtin args...))`.

    ## Properties:
    * :param:`symbol`   (str):  Bound symbol.
    * :param:`call`     (Call): Init builtin application.
    """
    symbol: str
    call:   Call
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)


@dataclass(frozen = True)
class HelProgram():
    r"""# :class:`HelProgram`

    Statically checked HEL program. Immutable and shareable between searches.

    ## Properties:
    * :param:`name`         (str):                      Program name.
    * :param:`definitions`  (Tuple[Definition, ...]):   Init directives, in execution order.
    * :param:`expression`   (Expression):               Per-node eval expression.
    * :param:`source`       (str):                      Path read from, if any.
    """
    name:           str
    definitions:    Tuple[Definition, ...]
    expression:     Expression
    source:         Optional[str] = field(default = None, compare = False)

    @property
    def symbols(self) -> Tuple[str, ...]:
        """# Bound Symbols in Definition Order."""
        return tuple(definition.symbol for definition in self.definitions)

    def calls(self) -> Iterator[Call]:
        """# Every Builtin Application of the Eval Expression."""
        if isinstance(self.expression, Call):
            yield from (node for node in self.expression.walk() if isinstance(node, Call))
