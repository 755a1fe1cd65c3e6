"""Recursive-descent parser for the formula grammar.

::

    condition := formula ('<=' | '=') formula
    formula   := unary (('+' | '-') unary)*
    unary     := ('inf' | 'sup' | 'int') IDENT '.' formula
               | '-' RATIONAL ['*' unary] | '-' unary
               | RATIONAL ['*' unary]
               | '(' formula ')' | 'd' '(' term ',' term ')' | IDENT '(' term, ... ')'
    term      := IDENT ['(' term, ... ')']

``*`` binds tighter than ``+`` and a quantifier extends as far right as possible. A bare rational
``r`` is the numeral ``r·1``, ``-φ`` is ``(-1)·φ`` and ``φ - ψ`` is ``φ + (-1)·ψ``.
"""
from ..common.errors import ALSyntaxError, ArityMismatch, UnknownSymbol
from ..common.rationals import parse_rational
from ..syntax.formulas import Add, Condition, Dist, Formula, Int, Inf, Rel, Scale, Sup, numeral
from ..syntax.signature import KEYWORDS, METRIC_SYMBOL, Signature
from ..syntax.terms import App, Const, Term, Var
from .lexer import tokenize

_QUANTIFIERS = {'inf': Inf, 'sup': Sup, 'int': Int}


class FormulaParser:

    def __init__(self, sig: Signature, text: str, file: str = '<string>', line: int = 1):
        self.sig = sig
        self.tokens = tokenize(text, file, line)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != 'EOF':
            self.pos += 1
        return token

    def accept(self, kind, text=None):
        token = self.current
        if token.kind == kind and (text is None or token.text == text):
            return self.advance()
        return None

    def expect(self, kind, what):
        token = self.current
        if token.kind != kind:
            found = token.text or 'end of input'
            raise ALSyntaxError(f"expected {what}, found {found!r}", token.span)
        return self.advance()

    def expect_end(self):
        self.expect('EOF', 'end of input')

    def formula(self) -> Formula:
        phi = self.unary()
        while True:
            if self.accept('PLUS'):
                phi = Add(phi, self.unary())
            elif self.accept('MINUS'):
                phi = Add(phi, Scale(-1, self.unary()))
            else:
                return phi

    def unary(self) -> Formula:
        token = self.current
        if token.kind == 'IDENT' and token.text in _QUANTIFIERS:
            self.advance()
            var = self.variable_name()
            self.expect('DOT', "'.' after the quantified variable")
            return _QUANTIFIERS[token.text](var, self.formula())
        if self.accept('MINUS'):
            if self.current.kind == 'RATIONAL':
                return self.scaled(-parse_rational(self.advance().text, token.span))
            return Scale(-1, self.unary())
        if token.kind == 'RATIONAL':
            self.advance()
            return self.scaled(parse_rational(token.text, token.span))
        return self.primary()

    def scaled(self, r) -> Formula:
        if self.accept('STAR'):
            return Scale(r, self.unary())
        return numeral(r)

    def primary(self) -> Formula:
        token = self.current
        if self.accept('LPAREN'):
            phi = self.formula()
            self.expect('RPAREN', "')'")
            return phi
        if token.kind != 'IDENT':
            found = token.text or 'end of input'
            raise ALSyntaxError(f"expected a formula, found {found!r}", token.span)
        self.advance()
        if self.current.kind != 'LPAREN':
            raise ALSyntaxError(f"expected a formula, found the term {token.text!r}", token.span)
        args = self.arguments()
        if token.text == METRIC_SYMBOL:
            if len(args) != 2:
                raise ArityMismatch(f"{METRIC_SYMBOL} takes 2 arguments, got {len(args)}.", token.span)
            return Dist(*args)
        if self.sig.is_relation(token.text):
            self.sig.relation(token.text, len(args), token.span)
            return Rel(token.text, args)
        if self.sig.is_function(token.text):
            raise ALSyntaxError(f"function symbol {token.text!r} used as a formula", token.span)
        raise UnknownSymbol(f"unknown relation symbol {token.text!r}.", token.span)

    def arguments(self) -> tuple:
        self.expect('LPAREN', "'('")
        args = [self.term()]
        while self.accept('COMMA'):
            args.append(self.term())
        self.expect('RPAREN', "')'")
        return tuple(args)

    def variable_name(self) -> str:
        token = self.expect('IDENT', 'a variable')
        if token.text in KEYWORDS or self.sig.is_constant(token.text) or self.sig.is_function(token.text) \
                or self.sig.is_relation(token.text):
            raise ALSyntaxError(f"{token.text!r} cannot be used as a variable", token.span)
        return token.text

    def term(self) -> Term:
        token = self.expect('IDENT', 'a term')
        name = token.text
        if self.current.kind == 'LPAREN':
            if not self.sig.is_function(name):
                raise UnknownSymbol(f"unknown function symbol {name!r}.", token.span)
            args = self.arguments()
            self.sig.function(name, len(args), token.span)
            return App(name, args)
        if self.sig.is_constant(name):
            return Const(name)
        if self.sig.is_function(name):
            arity = self.sig.function(name).arity
            raise ArityMismatch(f"{name} takes {arity} argument(s), got 0.", token.span)
        if name in KEYWORDS or self.sig.is_relation(name):
            raise ALSyntaxError(f"{name!r} cannot be used as a term", token.span)
        return Var(name)

    def condition(self) -> list:
        lhs = self.formula()
        if self.accept('LE'):
            rhs = self.formula()
            self.expect_end()
            return [Condition(lhs, rhs)]
        if self.accept('EQ'):
            rhs = self.formula()
            self.expect_end()
            return Condition.equality(lhs, rhs)
        token = self.current
        found = token.text or 'end of input'
        raise ALSyntaxError(f"expected '<=' or '=', found {found!r}", token.span)


def parse_formula(sig: Signature, text: str, file: str = '<string>', line: int = 1) -> Formula:
    """Parses one formula.

    Args:
        sig (Signature): declares constants, functions and relations; other identifiers are variables.
        text (str): the formula, e.g. ``"1/2 * 1 + sup x. d(x,c)"``.
        file (str, optional): name used in error spans. Defaults to ``'<string>'``.
        line (int, optional): line number of the first line of ``text``. Defaults to ``1``.

    Returns:
        Formula: the AST.

    Raises:
        ALSyntaxError: if ``text`` is not in the grammar.
        UnknownSymbol: for undeclared symbols.
        ArityMismatch: for applications with the wrong number of arguments.
    """
    parser = FormulaParser(sig, text, file, line)
    phi = parser.formula()
    parser.expect_end()
    return phi


def parse_condition(sig: Signature, text: str, file: str = '<string>', line: int = 1) -> list:
    """Parses ``phi <= psi`` into one condition or ``phi = psi`` into the two conditions it abbreviates."""
    return FormulaParser(sig, text, file, line).condition()


def parse_term(sig: Signature, text: str, file: str = '<string>', line: int = 1) -> Term:
    parser = FormulaParser(sig, text, file, line)
    t = parser.term()
    parser.expect_end()
    return t
