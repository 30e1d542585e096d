"""Parser for the term / identity language.

Grammar::

    term     := var | sym "(" term ("," term)* ")" | sym
    var      := "x" digits
    identity := term ("=" | "~=") term

Identity sets are newline-separated identities; ``#`` starts a comment.
"""
import logging
import re
import threading

import ply.lex as lex
import ply.yacc as yacc

from src.errors import TermSyntaxError
from src.terms.syntax import App, Identity, IdentityMode, IdentitySet, Term, Var

logger = logging.getLogger(__name__)

_VARIABLE = re.compile(r"x[0-9]+")


class TermParser:
    """LALR parser built once per instance; not shared between threads."""

    tokens = ("VAR", "SYMBOL", "LPAREN", "RPAREN", "COMMA", "EQ", "WEQ")

    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_COMMA = r","
    t_WEQ = r"~="
    t_EQ = r"="
    t_ignore = " \t"

    def __init__(self):
        self._text = ""
        self.lexer = lex.lex(module=self, errorlog=lex.NullLogger())
        self.parser = yacc.yacc(
            module=self,
            start="statement",
            debug=False,
            write_tables=False,
            errorlog=yacc.NullLogger(),
        )

    # Lexer rules

    def t_SYMBOL(self, t):
        r"[A-Za-z_][A-Za-z0-9_]*"
        if _VARIABLE.fullmatch(t.value):
            t.type = "VAR"
            t.value = int(t.value[1:])
        return t

    def t_error(self, t):
        raise TermSyntaxError(f"illegal character {t.value[0]!r}", t.lexpos, self._text)

    # Grammar rules

    def p_statement_term(self, p):
        "statement : term"
        p[0] = p[1]

    def p_statement_identity(self, p):
        """statement : term EQ term
                     | term WEQ term"""
        mode = IdentityMode.WEAK if p[2] == "~=" else IdentityMode.STRONG
        p[0] = Identity(p[1], p[3], mode)

    def p_term_variable(self, p):
        "term : VAR"
        p[0] = Var(p[1])

    def p_term_constant(self, p):
        "term : SYMBOL"
        p[0] = App(p[1], ())

    def p_term_application(self, p):
        "term : SYMBOL LPAREN arguments RPAREN"
        p[0] = App(p[1], tuple(p[3]))

    def p_arguments_single(self, p):
        "arguments : term"
        p[0] = [p[1]]

    def p_arguments_more(self, p):
        "arguments : arguments COMMA term"
        p[0] = p[1] + [p[3]]

    def p_error(self, p):
        if p is None:
            raise TermSyntaxError("unexpected end of input", len(self._text), self._text)
        raise TermSyntaxError(f"unexpected token {str(p.value)!r}", p.lexpos, self._text)

    def parse(self, text: str):
        """Parse a term or an identity."""
        if not text.strip():
            raise TermSyntaxError("empty input", 0, text)
        self._text = text
        return self.parser.parse(text, lexer=self.lexer.clone())


_local = threading.local()


def _parser() -> TermParser:
    parser = getattr(_local, "parser", None)
    if parser is None:
        parser = TermParser()
        _local.parser = parser
    return parser


def parse_term(text: str) -> Term:
    result = _parser().parse(text)
    if isinstance(result, Identity):
        raise TermSyntaxError("expected a term, found an identity", text.find("=") if "=" in text else 0, text)
    return result


def parse_identity(text: str) -> Identity:
    result = _parser().parse(text)
    if not isinstance(result, Identity):
        raise TermSyntaxError("expected an identity ('=' or '~=')", len(text), text)
    return result


def parse_identity_set(text: str) -> IdentitySet:
    """Newline-separated identities; '#' comments and blank lines are ignored."""
    identities = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            identities.append(parse_identity(content))
        except TermSyntaxError as e:
            raise TermSyntaxError(f"line {line_number}: {e.message}", e.position, content) from e
    logger.debug(f"Parsed {len(identities)} identities")
    return IdentitySet(tuple(identities))
