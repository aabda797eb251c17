"""Rational scalars.

``Rat`` is ``gmpy2.mpq`` when gmpy2 is importable and ``fractions.Fraction``
otherwise. Both are kept in lowest terms with a positive denominator.
"""

from fractions import Fraction
import numbers

try:
    from gmpy2 import mpq as Rat
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rat = Fraction
    HAVE_GMPY2 = False

ZERO = Rat(0)
ONE = Rat(1)


def rat(x):
    """Coerce ``x`` (int, str like ``"-3/4"``, Fraction, mpq) to ``Rat``.

    Floats are refused: nothing in the exact path may carry rounding error.
    """
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    if isinstance(x, str):
        return Rat(x.strip())
    if isinstance(x, (int, Fraction)) or type(x) is Rat:
        return Rat(x)
    if isinstance(x, numbers.Rational):
        return Rat(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def is_rational(x):
    return isinstance(x, (int, Fraction)) or type(x) is Rat


def rat_str(x):
    """``a/b`` or ``a``; the inverse of :func:`rat` on strings."""
    x = Rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def height(x):
    x = Rat(x)
    return max(abs(int(x.numerator)), int(x.denominator))
