"""# stratagem.hel.parser

Reads and statically checks HEL programs of the form:

    (heuristic "name"
      (init (def symbol (init-builtin literal...))...)
      (eval expression))

Static checks: symbols are defined once, before use, and never shadow a builtin; init directives
apply init builtins to literals only; the eval expression applies eval builtins only and references
only bound symbols and literals; every application matches its builtin's arity.
"""

__all__ =   [
                "hel_parse",
                "read_program"
            ]

from fractions                  import Fraction
from pathlib                    import Path
from re                         import compile as compile_pattern, Pattern
from typing                     import Dict, List, Optional, Union

from stratagem.hel.builtins     import Builtin, BUILTINS, RESERVED
from stratagem.hel.exceptions   import *
from stratagem.hel.program      import *
from stratagem.utilities.sexpr  import Form, read_sexprs, SExpr, SExprSyntaxError, Token

# Integer, decimal and ratio literals.
NUMBER:     Pattern =   compile_pattern(r"[+-]?\d+(\.\d+)?|\d+/[1-9]\d*")

def hel_parse(
    text:   Union[str, bytes],
    source: Optional[str] =     None
) -> HelProgram:
    """# Parse HEL Program.

    ## Args:
        * text      (str | bytes):  Program text.
        * source    (str):          File name reported in diagnostics.

    ## Raises:
        * HelSyntaxError:   On malformed text or program structure.
        * HelStaticError:   On scoping, phase and arity violations.

    ## Returns:
        * HelProgram:   Checked program.
    """
    try:# Read and check.
        return _ProgramReader(source).read(text)

    # Attach source to every diagnostic.
    except HelError as e:

        e.source =  source
        raise

def read_program(
    path:   Union[str, Path]
) -> HelProgram:
    """# Read HEL Program File.

    ## Args:
        * path  (str | Path):   Path to a `.hel` file (UTF-8).

    ## Returns:
        * HelProgram:   Checked program.
    """
    return hel_parse(Path(path).read_bytes(), source = str(path))

# HELPERS ==========================================================================================

class _ProgramReader():
    """# Program Reader (one use)."""

    def __init__(self, source: Optional[str]):
        """# Instantiate Program Reader."""
        self._source_:  Optional[str] =         source
        self._bound_:   Dict[str, Definition] = {}

    def read(self, text: Union[str, bytes]) -> HelProgram:
        """# Read Program."""
        try:# Tokenize.
            forms:  tuple = read_sexprs(text)

        # Relay reader failures.
        except SExprSyntaxError as e:   raise HelSyntaxError(e.message, e.line, e.column) from None

        # Exactly one program.
        if len(forms) != 1:
            line, column =  (forms[1].line, forms[1].column) if len(forms) > 1 else (1, 1)
            raise HelSyntaxError(f"expected exactly one heuristic form, found {len(forms)}", line, column)

        # Unpack program form.
        program:    SExpr = forms[0]

        if not isinstance(program, Form) or program.head() != "heuristic":
            raise HelSyntaxError("expected (heuristic \"name\" (init ...) (eval ...))", program.line, program.column)

        if len(program.items) != 4:
            raise HelSyntaxError(
                f"heuristic form expects a name, an init section and an eval section, got {len(program.items) - 1} item(s)",
                program.line, program.column
            )

        _, name, init, evaluation = program.items

        # Name.
        if not isinstance(name, Token) or not name.quoted:
            raise HelSyntaxError("heuristic name must be a double-quoted string", name.line, name.column)

        # Sections.
        definitions:    List[Definition] =  self._init_(init)
        expression:     Expression =        self._eval_(evaluation)

        # Provide program.
        return HelProgram(name.text, tuple(definitions), expression, self._source_)

    # SECTIONS =====================================================================================

    def _init_(self, init: SExpr) -> List[Definition]:
        """# Read Init Section."""
        if not isinstance(init, Form) or init.head() != "init":
            raise HelSyntaxError("expected (init (def symbol (builtin args...))...)", init.line, init.column)

        return [self._definition_(item) for item in init.items[1:]]

    def _eval_(self, evaluation: SExpr) -> Expression:
        """# Read Eval Section."""
        if not isinstance(evaluation, Form) or evaluation.head() != "eval" or len(evaluation.items) != 2:
            raise HelSyntaxError("expected (eval expression) with exactly one expression", evaluation.line, evaluation.column)

        return self._expression_(evaluation.items[1])

    def _definition_(self, item: SExpr) -> Definition:
        """# Read One Init Directive."""
        # Shape.
        if  (
                not isinstance(item, Form) or item.head() != "def" or len(item.items) != 3
                or not isinstance(item.items[1], Token) or item.items[1].quoted
                or not isinstance(item.items[2], Form)
            ):
            raise HelSyntaxError("expected (def symbol (builtin args...))", item.line, item.column)

        symbol, application =   item.items[1], item.items[2]

        # Symbols are unique and never shadow builtins.
        if symbol.text in self._bound_ or symbol.text in BUILTINS or symbol.text in RESERVED:
            raise DuplicateSymbolError(symbol.text, symbol.line, symbol.column)

        if NUMBER.fullmatch(symbol.text):
            raise HelSyntaxError(f"'{symbol.text}' is a number, not a symbol", symbol.line, symbol.column)

        # Builtin must be an init builtin.
        builtin:    Builtin =       self._builtin_(application, phase = "init")

        # Arguments are literals.
        arguments:  List[Expression] =  []

        for argument in application.items[1:]:

            # Reject nested applications and symbol references.
            if isinstance(argument, Form) or not (argument.quoted or NUMBER.fullmatch(argument.text)):
                raise HelStaticError(f"arguments of init builtin '{builtin.name}' must be literals", argument.line, argument.column)

            arguments.append(self._literal_(argument))

        # Bind symbol.
        definition: Definition =    Definition(
                                        symbol.text,
                                        Call(builtin.name, tuple(arguments), application.line, application.column),
                                        item.line, item.column
                                    )
        self._bound_[symbol.text] = definition

        # Provide directive.
        return definition

    # EXPRESSIONS ==================================================================================

    def _expression_(self, item: SExpr) -> Expression:
        """# Read Eval Expression."""
        # Atoms.
        if isinstance(item, Token):

            # Literals.
            if item.quoted or NUMBER.fullmatch(item.text):  return self._literal_(item)

            # Malformed numbers.
            if item.text[0].isdigit() or item.text[0] == ".":
                raise HelSyntaxError(f"malformed number '{item.text}'", item.line, item.column)

            # Symbol references.
            if item.text not in self._bound_:               raise UnboundSymbolError(item.text, item.line, item.column)

            return Symbol(item.text, item.line, item.column)

        # Applications.
        builtin:    Builtin =   self._builtin_(item, phase = "eval")

        return  Call(
                    builtin.name,
                    tuple(self._expression_(argument) for argument in item.items[1:]),
                    item.line,
                    item.column
                )

    def _builtin_(self, application: Form, phase: str) -> Builtin:
        """# Resolve and Check a Builtin Application."""
        # Head must be a symbol.
        if not application.head():
            raise HelSyntaxError("expected a builtin name at the head of the form", application.line, application.column)

        name:   str =   application.head()

        # Resolve.
        if name in RESERVED:        raise ReservedBuiltinError(name, application.line, application.column)
        if name not in BUILTINS:    raise UnknownBuiltinError(name, application.line, application.column)

        builtin:    Builtin =   BUILTINS[name]

        # Phase.
        if builtin.phase != phase:

            if phase == "eval":     raise InitBuiltinInEvalError(name, application.line, application.column)
            raise EvalBuiltinInInitError(name, application.line, application.column)

        # Arity.
        if not builtin.accepts(len(application.items) - 1):
            raise ArityMismatchError(name, builtin.arity, len(application.items) - 1, application.line, application.column)

        # Provide builtin.
        return builtin

    @staticmethod
    def _literal_(token: Token) -> Expression:
        """# Literal Token as Number or Text."""
        if token.quoted:    return Text(token.text, token.line, token.column)
        return Number(Fraction(token.text), token.line, token.column)
