import re
from fractions import Fraction
from numbers import Rational

from .errors import ALSyntaxError, SourceSpan

# decimals or p/q, optional sign; no exponent, no binary-float literals
_RATIONAL = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$')


def parse_rational(value, span: SourceSpan or None = None) -> Fraction:
    """Reads an exact rational from a string (``"1/2"``, ``"0.25"``, ``"-3"``), an integer or a
    :class:`fractions.Fraction`.

    Python floats are refused: they are binary approximations and would silently break exactness.

    Args:
        value: the value to convert.
        span (SourceSpan, optional): position reported on failure. Defaults to ``None``.

    Returns:
        Fraction: the rational in lowest terms.

    Raises:
        ALSyntaxError: if ``value`` does not denote a rational.
    """
    if isinstance(value, bool):
        raise ALSyntaxError(f"expected a rational, got {value!r}", span)
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIONAL.match(text):
            if '/' in text:
                num, den = text.split('/')
                if Fraction(den) == 0:
                    raise ALSyntaxError(f"zero denominator in {value!r}", span)
                return Fraction(num) / Fraction(den)
            return Fraction(text)
    raise ALSyntaxError(f"expected a rational, got {value!r}", span)


def format_rational(r) -> str:
    """Canonical text of a rational: ``"1/2"``, ``"-3"``, ``"0"``."""
    return str(Fraction(r))


def is_nonnegative(r) -> bool:
    return Fraction(r) >= 0
