"""Kaehler differentials of the three-point ring and their cohomology.

Omega^1_R = (R dt + R du) / (2u du - (2t+4) dt), and the quotient
H = Omega^1_R / dR is two-dimensional with basis

    w0 = class(t^-1 dt),    w1 = class(t^-1 u dt).

reduce_mod_dR computes the class of any one-form exactly by

    (i)   u du = (t+2) dt                      (module relation)
    (ii)  t^k du  == -k t^(k-1) u dt  mod dR   (from d(t^k u))
    (iii) t^k dt  == delta_{k,-1} w0           (from d(t^(k+1)))
    (iv)  (k+3) t^(k+1) u dt == -(4k+6) t^k u dt   mod dR

step (iv) walking the exponent toward -1 from either side; the degenerate
instance k = -3 forces class(t^-3 u dt) = 0, hence every exponent <= -3
vanishes.  The resulting coefficients class(t^j u dt) = lambda_j w1 are
signed Catalan numbers with two rational stragglers below zero:

    j       -3   -2    -1    0    1    2    3     4
    lambda   0   1/2    1   -1    2   -5   14   -42

The closed form for them is lambda_{l-1} = (-1)^l 2^l (2l-1)!! / (l+1)!.
"""

from .ring import RRingElem, r_mul
from .scalars import QQ, rat


class OneForm:
    """A one-form f dt + g du with f, g in R (before any reduction)."""

    __slots__ = ("ft", "fu")

    def __init__(self, ft=None, fu=None):
        self.ft = ft if ft is not None else RRingElem()
        self.fu = fu if fu is not None else RRingElem()

    def is_zero(self):
        return self.ft.is_zero() and self.fu.is_zero()

    def __eq__(self, other):
        return isinstance(other, OneForm) and self.ft == other.ft and self.fu == other.fu

    def __add__(self, other):
        return OneForm(self.ft + other.ft, self.fu + other.fu)

    def __sub__(self, other):
        return OneForm(self.ft - other.ft, self.fu - other.fu)

    def scale(self, c):
        return OneForm(self.ft.scale(c), self.fu.scale(c))

    def rmul(self, r):
        """Left module action r * (f dt + g du)."""
        return OneForm(r_mul(r, self.ft), r_mul(r, self.fu))

    def __repr__(self):
        return "(%r) dt + (%r) du" % (self.ft, self.fu)


class CohomClass:
    """Element q0 * w0 + q1 * w1 of H = Omega^1_R / dR."""

    __slots__ = ("q0", "q1")

    def __init__(self, q0=0, q1=0):
        self.q0 = QQ(q0)
        self.q1 = QQ(q1)

    def is_zero(self):
        return not self.q0 and not self.q1

    def __eq__(self, other):
        return isinstance(other, CohomClass) and self.q0 == other.q0 and self.q1 == other.q1

    def __add__(self, other):
        return CohomClass(self.q0 + other.q0, self.q1 + other.q1)

    def __sub__(self, other):
        return CohomClass(self.q0 - other.q0, self.q1 - other.q1)

    def scale(self, c):
        return CohomClass(self.q0 * QQ(c), self.q1 * QQ(c))

    def __repr__(self):
        return "%s*w0 + %s*w1" % (self.q0, self.q1)


def differential(f):
    """d f as a OneForm: d(t^k) = k t^(k-1) dt, d(t^k u) = k t^(k-1) u dt + t^k du."""
    ft = {}
    fu = {}
    for (k, uu), c in f.terms.items():
        if uu == 0:
            if k:
                key = (k - 1, 0)
                s = ft.get(key, 0) + k * c
                if s:
                    ft[key] = s
                else:
                    ft.pop(key, None)
        else:
            if k:
                key = (k - 1, 1)
                s = ft.get(key, 0) + k * c
                if s:
                    ft[key] = s
                else:
                    ft.pop(key, None)
            key = (k, 0)
            s = fu.get(key, 0) + c
            if s:
                fu[key] = s
            else:
                fu.pop(key, None)
    out = OneForm()
    out.ft.terms = ft
    out.fu.terms = fu
    return out


def reduce_mod_dR(form):
    """Class of a one-form in H, as a CohomClass.

    Follows steps (i)-(iv) of the module docstring; all arithmetic exact.
    """
    # collect everything as coefficients of t^k dt and t^j u dt
    plain = {}   # k -> coeff of t^k dt
    ustem = {}   # j -> coeff of t^j u dt

    def put(d, k, c):
        s = d.get(k, 0) + c
        if s:
            d[k] = s
        else:
            d.pop(k, None)

    for (k, uu), c in form.ft.terms.items():
        put(ustem if uu else plain, k, c)

    for (k, uu), c in form.fu.terms.items():
        if uu:
            # (i): t^k u du = t^(k+1) dt + 2 t^k dt
            put(plain, k + 1, c)
            put(plain, k, 2 * c)
        else:
            # (ii): t^k du == -k t^(k-1) u dt  mod dR
            if k:
                put(ustem, k - 1, -k * c)

    # (iii)
    q0 = plain.get(-1, QQ(0))

    # (iv): walk each u-term exponent to -1
    q1 = QQ(0)
    for j, c in ustem.items():
        c = QQ(c)
        while j > -1:
            # (j+2) t^j u dt == -(4j+2) t^(j-1) u dt
            c = c * rat(-(4 * j + 2), j + 2)
            j -= 1
        while j < -1:
            if j == -3:
                c = QQ(0)
                break
            # (j+3) t^(j+1) u dt == -(4j+6) t^j u dt, read upward
            c = c * rat(-(j + 3), 4 * j + 6)
            j += 1
        q1 += c

    return CohomClass(q0, q1)


def _odd_double_factorial(n):
    """(n)!! for odd integer n, extended by (-1)!! = 1 and
    (-2j-1)!! = (-1)^j / (2j-1)!! for j >= 1."""
    if n % 2 == 0:
        raise ValueError("odd n only")
    if n >= 1:
        out = 1
        while n >= 1:
            out *= n
            n -= 2
        return QQ(out)
    if n == -1:
        return QQ(1)
    j = (-n - 1) // 2
    return rat(1 if j % 2 == 0 else -1) / _odd_double_factorial(2 * j - 1)


def lambda_coeff(j):
    """lambda_j with class(t^j u dt) = lambda_j w1, in closed form.

    lambda_{l-1} = (-1)^l 2^l (2l-1)!! / (l+1)!  for l = j+1 >= -1,
    and lambda_j = 0 for j <= -3.
    """
    if j <= -3:
        return QQ(0)
    l = j + 1
    sign = -1 if l % 2 else 1
    two_l = rat(2) ** l if l >= 0 else rat(1) / (rat(2) ** (-l))
    fact = 1
    for i in range(2, l + 2):
        fact *= i
    return QQ(sign) * two_l * _odd_double_factorial(2 * l - 1) / fact


def pairing(f, g):
    """class(f dg) in H — the cocycle pairing behind all central terms."""
    return reduce_mod_dR(differential(g).rmul(f))


def mu_oracle(m, n):
    """w1-coefficient of class(t^m d(t^n u)), computed through the
    reduction engine (no closed form)."""
    a = RRingElem.t_pow(m)
    b = RRingElem.monomial(n, 1)
    return pairing(a, b).q1
