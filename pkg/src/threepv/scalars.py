"""Exact rational scalars.

Every quantity in this package is an exact rational number; there is no
floating point anywhere in the math path.  gmpy2's mpq is used when
available (arbitrary-precision, much faster), with fractions.Fraction as
a drop-in fallback.
"""

try:
    from gmpy2 import mpq as QQ
    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QQ
    _BACKEND = "fractions"

ZERO = QQ(0)
ONE = QQ(1)


def rat(p, q=1):
    """Build the exact rational p/q."""
    return QQ(p, q)


def parse_rat(s):
    """Parse 'p' or 'p/q' into an exact rational.

    >>> parse_rat('-3/2') == rat(-3, 2)
    True
    """
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return QQ(int(p), int(q))
    return QQ(int(s))


def rat_str(x):
    """Serialize a rational as 'p' or 'p/q' (never a float)."""
    # both mpq and Fraction print this way already
    return str(QQ(x))


def binom(m, j):
    """Binomial coefficient binom(m, j) for integer m (possibly negative),
    integer j >= 0, as an exact rational-friendly integer."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= m - i
    den = 1
    for i in range(2, j + 1):
        den *= i
    return QQ(num, den)
