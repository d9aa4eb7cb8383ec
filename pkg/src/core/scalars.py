import re

import mpmath
from sympy import QQ, Rational

from src.core.errors import InvalidLiteral

# Element type of the rational field: gmpy2.mpq when available, PythonMPQ otherwise.
ExactScalar = QQ.dtype

_INTEGER = re.compile(r"[+-]?\d+")
_FRACTION = re.compile(r"[+-]?\d+/\d+")
_DECIMAL = re.compile(r"[+-]?(\d+\.\d*|\.\d+)")


def parse_literal(text):
    """
    Parse an integer, "p/q" or finite decimal literal into an exact rational.
    :param text: The literal as a string.
    :return: ExactScalar equal to the literal, never rounded.
    """
    literal = text.strip()
    if not (_INTEGER.fullmatch(literal) or _FRACTION.fullmatch(literal) or _DECIMAL.fullmatch(literal)):
        raise InvalidLiteral(f"malformed scalar literal {text!r}", literal=text)
    if "/" in literal and int(literal.split("/")[1]) == 0:
        raise InvalidLiteral(f"zero denominator in {text!r}", literal=text)
    return QQ.from_sympy(Rational(literal))


def to_scalar(value):
    """Convert an int, literal string, sympy Rational or field element to an ExactScalar."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidLiteral(f"unsupported scalar {value!r}; use an integer, 'p/q' or a decimal string", literal=repr(value))
    if isinstance(value, str):
        return parse_literal(value)
    if isinstance(value, ExactScalar):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ.from_sympy(value)
    raise InvalidLiteral(f"unsupported scalar {value!r}", literal=repr(value))


def numerator(value):
    return int(QQ.numer(value))


def denominator(value):
    return int(QQ.denom(value))


def format_exact(value):
    """Render as "p" or "p/q" in lowest terms with q > 0."""
    p, q = numerator(value), denominator(value)
    return str(p) if q == 1 else f"{p}/{q}"


def format_decimal(value, digits=15):
    """Advisory decimal rendering with `digits` significant digits."""
    p, q = numerator(value), denominator(value)
    with mpmath.workdps(digits + 20):
        return mpmath.nstr(mpmath.mpf(p) / mpmath.mpf(q), digits)
