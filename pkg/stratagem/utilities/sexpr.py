"""# stratagem.utilities.sexpr

Positioned s-expression reader shared by the HDDL frontend and the HEL parser.

Input is tokenized by a small pyparsing grammar into :class:`Token` and :class:`Form` nodes that
remember the 1-based line and column at which they start. Symbols are normalized to lower case;
quoted strings keep their case. A `;` starts a comment that runs to the end of the line.
"""

__all__ =   [
                "Form",
                "read_sexprs",
                "SExpr",
                "SExprSyntaxError",
                "Token"
            ]

from dataclasses    import dataclass, field
from functools      import lru_cache
from typing         import List, Optional, Tuple, Union

from pyparsing      import (
                        col,
                        Forward,
                        lineno,
                        ParseBaseException,
                        ParserElement,
                        QuotedString,
                        Regex,
                        rest_of_line,
                        StringEnd,
                        Suppress,
                        ZeroOrMore
                    )

@dataclass(frozen = True)
class Token():
    r"""# :class:`Token`

    Atom of an s-expression.

    ## Properties:
    * :param:`text`     (str):  Symbol text (lower case) or string contents.
    * :param:`line`     (int):  1-based line of the first character.
    * :param:`column`   (int):  1-based column of the first character.
    * :param:`quoted`   (bool): True if the token was a double-quoted string.
    """
    text:   str
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)
    quoted: bool =  False


@dataclass(frozen = True)
class Form():
    r"""# :class:`Form`

    Parenthesized s-expression list.

    ## Properties:
    * :param:`items`    (Tuple[SExpr, ...]):    Children in source order.
    * :param:`line`     (int):                  1-based line of the opening parenthesis.
    * :param:`column`   (int):                  1-based column of the opening parenthesis.
    """
    items:  Tuple["SExpr", ...]
    line:   int =   field(default = 1, compare = False)
    column: int =   field(default = 1, compare = False)

    def head(self) -> str:
        """# Head Symbol.

        ## Returns:
            * str:  Text of the first item if it is an unquoted token, otherwise "".
        """
        # Empty forms and forms led by lists have no head.
        if not self.items or not isinstance(self.items[0], Token) or self.items[0].quoted: return ""

        # Provide head symbol.
        return self.items[0].text


SExpr = Union[Token, Form]


class SExprSyntaxError(Exception):
    """# S-Expression Syntax Error.

    Raised when input is not a sequence of well-formed s-expressions.
    """

    def __init__(self,
        message:    str,
        line:       int,
        column:     int
    ):
        """# Raise S-Expression Syntax Error.

        ## Args:
            * message   (str):  Expected-token message.
            * line      (int):  1-based line of the offending position.
            * column    (int):  1-based column of the offending position.
        """
        # Define properties.
        self.message:   str =   message
        self.line:      int =   line
        self.column:    int =   column

        # Initialize exception.
        super(SExprSyntaxError, self).__init__(f"{line}:{column}: {message}")


def read_sexprs(
    text:   Union[str, bytes]
) -> Tuple[SExpr, ...]:
    """# Read S-Expressions.

    ## Args:
        * text  (str | bytes):  Source text. Bytes are decoded as UTF-8, replacing invalid sequences.

    ## Raises:
        * SExprSyntaxError: On unbalanced parentheses, unterminated strings, or nesting too deep to
                            read.

    ## Returns:
        * Tuple[SExpr, ...]:    Top-level expressions in source order.
    """
    # Decode raw bytes.
    if isinstance(text, bytes): text = text.decode("utf-8", errors = "replace")

    try:# Parse complete input.
        return tuple(_grammar_().parse_string(text, parse_all = True))

    # Relay pyparsing failures at the offending delimiter.
    except ParseBaseException as e:

        # Locate failure.
        message, location = _describe_(e = e, text = text)

        # Report error.
        raise SExprSyntaxError(
            message =   message,
            line =      lineno(location, text) if text else 1,
            column =    col(location, text) if text else 1
        ) from None

    # Pathologically deep nesting.
    except RecursionError:

        # Report error.
        raise SExprSyntaxError(message = "expressions nested too deeply", line = 1, column = 1) from None

# HELPERS ==========================================================================================

def _describe_(
    e:      ParseBaseException,
    text:   str
) -> Tuple[str, int]:
    """# Describe Parse Failure.

    ## Args:
        * e     (ParseBaseException):   Failure raised by the grammar.
        * text  (str):                  Source text.

    ## Returns:
        * Tuple[str, int]:  Message and the offset it refers to. A list left open is reported at
                            its opening parenthesis, a stray closing parenthesis where it stands.
    """
    # Delimiter scan.
    problem:    Optional[Tuple[str, int]] = _unbalanced_(text)

    if problem is not None: return problem

    # Anything else, clamped to the last character.
    return f"lexical error: {e.msg}", min(e.loc, max(len(text) - 1, 0))

def _unbalanced_(
    text:   str
) -> Optional[Tuple[str, int]]:
    """# Find First Delimiter Problem.

    Strings and line comments are skipped. An unterminated string inside a list leaves the list
    open.

    ## Args:
        * text  (str):  Source text.

    ## Returns:
        * Tuple[str, int] | None:   Message and offset of the first stray ')', else of the
                                    innermost '(' left open, else of an unterminated top-level
                                    string; None if delimiters balance.
    """
    openers:    List[int] = []
    position:   int =       0

    while position < len(text):

        character:  str =   text[position]

        # Line comment.
        if character == ";":
            newline:    int =   text.find("\n", position)
            position =          len(text) if newline < 0 else newline + 1
            continue

        # String, honoring escapes.
        if character == '"':
            start:  int =   position
            position +=     1

            while position < len(text) and text[position] != '"':
                position += 2 if text[position] == "\\" else 1

            if position >= len(text):
                if openers: break
                return "unterminated string", start

        elif character == "(":  openers.append(position)

        elif character == ")":
            if not openers:     return "unbalanced parentheses: unexpected ')'", position
            openers.pop()

        position += 1

    # Innermost list still open.
    if openers: return "unbalanced parentheses: expected ')'", openers[-1]

    return None

def _position_(
    source:     str,
    location:   int
) -> Tuple[int, int]:
    """# Line and Column of Location."""
    return lineno(location, source), col(location, source)

@lru_cache(maxsize = 1)
def _grammar_() -> ParserElement:
    """# Build Grammar.

    ## Returns:
        * ParserElement:    Reader for a sequence of s-expressions followed by end of input.
    """
    # Declare recursive expression.
    expression: Forward =       Forward()

    # Quoted strings keep their case.
    string:     ParserElement = QuotedString(quote_char = '"', esc_char = "\\", multiline = True)
    string.set_parse_action(lambda s, l, t: Token(t[0], *_position_(s, l), quoted = True))

    # Symbols are any run of non-delimiters.
    symbol:     ParserElement = Regex(r"""[^\s()";]+""")
    symbol.set_parse_action(lambda s, l, t: Token(t[0].lower(), *_position_(s, l)))

    # Lists.
    # Once opened, a list must close.
    form:       ParserElement = Suppress("(") - ZeroOrMore(expression) + Suppress(")")
    form.set_parse_action(lambda s, l, t: Form(tuple(t), *_position_(s, l)))

    # Tie the knot.
    expression <<= string | symbol | form

    # Complete input.
    document:   ParserElement = ZeroOrMore(expression) + StringEnd()
    document.ignore(";" + rest_of_line)

    # Columns count raw characters.
    document.parse_with_tabs()

    # Provide grammar.
    return document
