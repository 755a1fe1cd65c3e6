import re
from dataclasses import dataclass

from ..common.errors import ALSyntaxError, SourceSpan

TOKEN_SPEC = [
    ('SPACE', r'[ \t\r\n]+'),
    ('RATIONAL', r'\d+(\.\d+)?(/\d+)?'),
    ('IDENT', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('LE', r'<='),
    ('EQ', r'='),
    ('PLUS', r'\+'),
    ('MINUS', r'-'),
    ('STAR', r'\*'),
    ('DOT', r'\.'),
    ('COMMA', r','),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
]
_MASTER = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan


def tokenize(text: str, file: str = '<string>', line: int = 1) -> list:
    """Splits ``text`` into tokens, the last one of kind ``EOF``.

    Raises:
        ALSyntaxError: on a character that starts no token.
    """
    tokens = []
    pos, line_start = 0, 0
    while pos < len(text):
        m = _MASTER.match(text, pos)
        if m is None:
            raise ALSyntaxError(f"unexpected character {text[pos]!r}",
                                SourceSpan(file, line, pos - line_start + 1))
        kind = m.lastgroup
        if kind == 'SPACE':
            newlines = m.group().count('\n')
            if newlines:
                line += newlines
                line_start = m.start() + m.group().rfind('\n') + 1
        else:
            tokens.append(Token(kind, m.group(), SourceSpan(file, line, pos - line_start + 1)))
        pos = m.end()
    tokens.append(Token('EOF', '', SourceSpan(file, line, pos - line_start + 1)))
    return tokens
