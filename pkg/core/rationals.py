# core/rationals.py

from fractions import Fraction
import functools

from .exceptions import RationalParseError

# Every length and distance in the lab is a Fraction: arbitrary-precision,
# always in lowest terms with a positive denominator.
RationalLength = Fraction


@functools.total_ordering
class _Infinity:
    """ Distance to an unreachable vertex. Larger than every rational. """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash('kclab-infinity')

    def __repr__(self):
        return 'INFINITY'

    def __str__(self):
        return 'inf'


INFINITY = _Infinity()


def rational(value):
    """
    Exact conversion of int, Fraction or text ("p/q", "3", "0.1") to a Fraction.
    Floats are refused: they would smuggle binary rounding into exact data.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise RationalParseError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise RationalParseError(f"not a rational: {value!r}") from exc
    raise RationalParseError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value):
    """ `num/den`, always with an explicit denominator (`2/1`, not `2`). """
    if value is INFINITY:
        return str(INFINITY)
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_length(text):
    """ Strict `num/den` in lowest terms with den > 0, as written by format_rational. """
    num, sep, den = text.partition('/')
    if not sep or not _is_int(num) or not den.isdigit():
        raise RationalParseError(f"expected <num>/<den>, got {text!r}")
    value_num, value_den = int(num), int(den)
    if value_den == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    value = Fraction(value_num, value_den)
    if value.numerator != value_num or value.denominator != value_den:
        raise RationalParseError(f"{text!r} is not in lowest terms")
    return value


def _is_int(text):
    return text.lstrip('-').isdigit()
