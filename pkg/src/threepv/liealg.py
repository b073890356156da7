"""Abstract bracket tables and 2-cocycles for the three-point algebras.

Generators are GenId pairs (family, mode):

    witt / virasoro: ("d", m), ("d1", m), plus centrals ("c1", 0), ("c2", 0)
    affine sl2:      ("e", m), ("e1", m), ("f", m), ("f1", m),
                     ("h", m), ("h1", m), centrals ("w0", 0), ("w1", 0)
    heisenberg:      ("b", m), ("b1", m), centrals ("one0", 0), ("one1", 0)

The un-superscripted families pair with t^m, the "1" families with t^m u.
Two independent routes produce the affine structure constants:

    affine_bracket        the closed bracket table, verbatim
    affine_bracket_kassel sl2 tensor R with central term (x,y) class(f dg),
                          central values computed by the Kaehler reduction

and the two do NOT agree everywhere; mu_compare / kassel-vs-table report
the exact differences (all in the w1 coefficients of the mixed pairs).
Only the Kassel route satisfies the Jacobi identity.
"""

import itertools

from .kaehler import pairing
from .ring import RRingElem
from .scalars import QQ, rat

CENTRAL_FAMILIES = frozenset(["w0", "w1", "one0", "one1", "c1", "c2"])


class LieVector:
    """Finite rational combination of generators, {GenId: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = QQ(c)
                if c:
                    self.terms[key] = c

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LieVector) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        v = LieVector()
        v.terms = out
        return v

    def __sub__(self, other):
        v = LieVector()
        v.terms = dict(self.terms)
        for key, c in other.terms.items():
            s = v.terms.get(key, 0) - c
            if s:
                v.terms[key] = s
            else:
                v.terms.pop(key, None)
        return v

    def __neg__(self):
        v = LieVector()
        v.terms = {key: -c for key, c in self.terms.items()}
        return v

    def scale(self, c):
        c = QQ(c)
        v = LieVector()
        if c:
            v.terms = {key: c * v0 for key, v0 in self.terms.items()}
        return v

    def add_term(self, key, c):
        s = self.terms.get(key, 0) + c
        if s:
            self.terms[key] = s
        else:
            self.terms.pop(key, None)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            "%s*%s_%s" % (self.terms[k], k[0], k[1]) for k in sorted(self.terms)
        )


def _odd_dfact(n):
    """(n)!! for odd n, with (-1)!! = 1 and (-2j-1)!! = (-1)^j / (2j-1)!!."""
    if n >= 1:
        out = 1
        while n >= 1:
            out *= n
            n -= 2
        return QQ(out)
    if n == -1:
        return QQ(1)
    j = (-n - 1) // 2
    return rat(1 if j % 2 == 0 else -1) / _odd_dfact(2 * j - 1)


def _pow2(k):
    return rat(2) ** k if k >= 0 else rat(1) / (rat(2) ** (-k))


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def mu_closed_form(m, n):
    """mu_{m,n} = m (-1)^(m+n+1) 2^(m+n) (2(m+n)-1)!! / (m+n+1)!.

    Zero whenever m + n <= -2 (the inverse factorial vanishes there).
    """
    s = m + n
    if s <= -2:
        return QQ(0)
    sign = -1 if (s + 1) % 2 else 1
    return QQ(m) * sign * _pow2(s) * _odd_dfact(2 * s - 1) / _fact(s + 1)


# ---------------------------------------------------------------------------
# Witt and Virasoro
# ---------------------------------------------------------------------------

def witt_bracket(i, j):
    """Closed-form bracket on the d / d1 basis.

    [d_m, d_n]   = (n-m) (d_{m+n+1} + 4 d_{m+n})
    [d1_m, d1_n] = (n-m) d_{m+n-1}
    [d_m, d1_n]  = (n-m-1) d1_{m+n+1} + (4n-4m-2) d1_{m+n}
    """
    (ki, m), (kj, n) = i, j
    if ki in CENTRAL_FAMILIES or kj in CENTRAL_FAMILIES:
        return LieVector()
    if ki == "d" and kj == "d":
        return LieVector({("d", m + n + 1): n - m, ("d", m + n): 4 * (n - m)})
    if ki == "d1" and kj == "d1":
        return LieVector({("d", m + n - 1): n - m})
    if ki == "d" and kj == "d1":
        return LieVector(
            {("d1", m + n + 1): n - m - 1, ("d1", m + n): 4 * n - 4 * m - 2}
        )
    if ki == "d1" and kj == "d":
        return -witt_bracket(j, i)
    raise ValueError("not witt generators: %r, %r" % (i, j))


def phi1(i, j):
    """The first 2-cocycle on the Witt-type algebra, in closed form."""
    (ki, k), (kj, l) = i, j
    if ki == "d1" and kj == "d1":
        out = QQ(0)
        if k + l == 1:
            out += 2 * (l * l - l) * (2 * l - 1)
        if k + l == 0:
            out += l ** 3 - l
        return out
    if ki == "d1" and kj == "d":
        if k + l <= -2:
            return QQ(0)
        sign = -1 if (k + l) % 2 else 1
        return (
            QQ(6 * sign)
            * _pow2(k + l)
            * (k - 1) * k * l
            * _odd_dfact(2 * k + 2 * l - 3)
            / _fact(k + l + 1)
        )
    if ki == "d" and kj == "d1":
        return -phi1(j, i)
    if ki == "d" and kj == "d":
        out = QQ(0)
        if k + l == -2:
            out += l * (l + 1) * (l + 2)
        if k + l == -1:
            out += 4 * l * (2 * l + 1) * (l + 1)
        if k + l == 0:
            out += 4 * l * (2 * l - 1) * (2 * l + 1)
        return out
    raise ValueError("not witt generators: %r, %r" % (i, j))


def phi2(i, j):
    """The second 2-cocycle: -2 phi1 on like-kind pairs, zero on mixed."""
    if i[0] == j[0]:
        return -2 * phi1(i, j)
    return QQ(0)


def vir_bracket(i, j):
    """Witt bracket centrally extended by phi1 c1 + phi2 c2."""
    if i[0] in CENTRAL_FAMILIES or j[0] in CENTRAL_FAMILIES:
        return LieVector()
    out = witt_bracket(i, j)
    c = phi1(i, j)
    if c:
        out.add_term(("c1", 0), c)
    c = phi2(i, j)
    if c:
        out.add_term(("c2", 0), c)
    return out


# ---------------------------------------------------------------------------
# Heisenberg
# ---------------------------------------------------------------------------

def heis_bracket(i, j):
    """Three-point Heisenberg bracket on b / b1 with centrals one0, one1.

    [b_m, b_n]   = (n-m) delta_{m+n,0} one0
    [b1_m, b1_n] = (n-m) (delta_{m+n,-2} + 4 delta_{m+n,-1}) one0
    [b1_m, b_n]  = 2 mu_{m,n} one1
    """
    (ki, m), (kj, n) = i, j
    if ki in CENTRAL_FAMILIES or kj in CENTRAL_FAMILIES:
        return LieVector()
    out = LieVector()
    if ki == "b" and kj == "b":
        if m + n == 0:
            out.add_term(("one0", 0), QQ(n - m))
    elif ki == "b1" and kj == "b1":
        if m + n == -2:
            out.add_term(("one0", 0), QQ(n - m))
        if m + n == -1:
            out.add_term(("one0", 0), QQ(4 * (n - m)))
    elif ki == "b1" and kj == "b":
        c = 2 * mu_closed_form(m, n)
        if c:
            out.add_term(("one1", 0), c)
    elif ki == "b" and kj == "b1":
        c = -2 * mu_closed_form(n, m)
        if c:
            out.add_term(("one1", 0), c)
    else:
        raise ValueError("not heisenberg generators: %r, %r" % (i, j))
    return out


# ---------------------------------------------------------------------------
# Affine sl2: closed table and the Kassel construction
# ---------------------------------------------------------------------------

def _delta(a, b):
    return 1 if a == b else 0


def affine_bracket(i, j):
    """The closed bracket table for the three-point affine sl2 algebra.

    Central terms: w0 on like-kind pairs, w1 (with coefficient built from
    mu_closed_form) on the mixed pairs.
    """
    (ki, m), (kj, n) = i, j
    if ki in CENTRAL_FAMILIES or kj in CENTRAL_FAMILIES:
        return LieVector()

    out = LieVector()
    pair = (ki, kj)

    # same-letter e/f pairs vanish
    if {ki, kj} <= {"e", "e1"} or {ki, kj} <= {"f", "f1"}:
        return out

    if pair == ("h", "h"):
        if m + n == 0:
            out.add_term(("w0", 0), QQ(n - m))
    elif pair == ("h1", "h1"):
        c = QQ(n - m)
        if m + n == -2:
            out.add_term(("w0", 0), c)
        if m + n == -1:
            out.add_term(("w0", 0), 4 * c)
    elif pair == ("h", "h1"):
        c = -2 * mu_closed_form(m, n)
        if c:
            out.add_term(("w1", 0), c)
    elif pair == ("e", "f"):
        out.add_term(("h", m + n), QQ(1))
        if m + n == 0:
            out.add_term(("w0", 0), QQ(-m))
    elif pair in (("e", "f1"), ("e1", "f")):
        out.add_term(("h1", m + n), QQ(1))
        c = -QQ(m) * mu_closed_form(m, n)
        if c:
            out.add_term(("w1", 0), c)
    elif pair == ("e1", "f1"):
        out.add_term(("h", m + n + 2), QQ(1))
        out.add_term(("h", m + n + 1), QQ(4))
        c = rat(n - m, 2)
        if m + n == -2 and c:
            out.add_term(("w0", 0), c)
        if m + n == -1 and c:
            out.add_term(("w0", 0), 4 * c)
    elif pair == ("h", "e"):
        out.add_term(("e", m + n), QQ(2))
    elif pair in (("h", "e1"), ("h1", "e")):
        out.add_term(("e1", m + n), QQ(2))
    elif pair == ("h1", "e1"):
        out.add_term(("e", m + n + 2), QQ(2))
        out.add_term(("e", m + n + 1), QQ(8))
    elif pair == ("h", "f"):
        out.add_term(("f", m + n), QQ(-2))
    elif pair in (("h", "f1"), ("h1", "f")):
        out.add_term(("f1", m + n), QQ(-2))
    elif pair == ("h1", "f1"):
        out.add_term(("f", m + n + 2), QQ(-2))
        out.add_term(("f", m + n + 1), QQ(-8))
    else:
        return -affine_bracket(j, i)
    return out


_SL2_BRACKET = {
    ("e", "f"): (("h", 1),),
    ("f", "e"): (("h", -1),),
    ("h", "e"): (("e", 2),),
    ("e", "h"): (("e", -2),),
    ("h", "f"): (("f", -2),),
    ("f", "h"): (("f", 2),),
}

_SL2_FORM = {("e", "f"): QQ(1), ("f", "e"): QQ(1), ("h", "h"): QQ(2)}


def _split_affine_gen(g):
    fam, m = g
    letter = fam[0]
    uu = 1 if fam.endswith("1") else 0
    if letter not in ("e", "f", "h"):
        raise ValueError("not an affine generator: %r" % (g,))
    return letter, RRingElem.monomial(m, uu)


def affine_bracket_kassel(i, j):
    """[x (x) f, y (x) g] = [x,y] (x) fg + (x,y) class(f dg).

    The central term is computed by the Kaehler reduction engine, so this
    route is independent of the closed table and of mu_closed_form.
    """
    (ki, _), (kj, _) = i, j
    if ki in CENTRAL_FAMILIES or kj in CENTRAL_FAMILIES:
        return LieVector()
    x, fx = _split_affine_gen(i)
    y, fy = _split_affine_gen(j)

    out = LieVector()
    prod = fx * fy
    for (z, c) in _SL2_BRACKET.get((x, y), ()):
        for (k, uu), cc in prod.terms.items():
            out.add_term((z + ("1" if uu else ""), k), c * cc)

    fv = _SL2_FORM.get((x, y))
    if fv:
        cls = pairing(fx, fy)
        if cls.q0:
            out.add_term(("w0", 0), fv * cls.q0)
        if cls.q1:
            out.add_term(("w1", 0), fv * cls.q1)
    return out


# ---------------------------------------------------------------------------
# generic structural checks
# ---------------------------------------------------------------------------

def check_antisymmetry(bracket, gens):
    """All (i, j) with bracket(i,j) + bracket(j,i) != 0 or bracket(i,i) != 0."""
    bad = []
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            res = bracket(gens[a], gens[b]) + bracket(gens[b], gens[a])
            if not res.is_zero():
                bad.append(((gens[a], gens[b]), res))
    return bad


def _bracket_with_vector(bracket, cache, x, vec):
    out = LieVector()
    for w, c in vec.terms.items():
        if w[0] in CENTRAL_FAMILIES:
            continue
        key = (x, w)
        piece = cache.get(key)
        if piece is None:
            piece = bracket(x, w)
            cache[key] = piece
        for key2, c2 in piece.terms.items():
            out.add_term(key2, c * c2)
    return out


def check_jacobi(bracket, gens):
    """All unordered triples violating Jacobi; empty list means it holds.

    Pair brackets are cached, so the cost is dominated by the triple loop.
    """
    cache = {}
    for a in gens:
        for b in gens:
            cache[(a, b)] = bracket(a, b)
    bad = []
    for x, y, z in itertools.combinations(gens, 3):
        total = _bracket_with_vector(bracket, cache, x, cache[(y, z)])
        total += _bracket_with_vector(bracket, cache, y, cache[(z, x)])
        total += _bracket_with_vector(bracket, cache, z, cache[(x, y)])
        if not total.is_zero():
            bad.append(((x, y, z), total))
    return bad


def _phi_on_vector(phi, x, vec):
    out = QQ(0)
    for w, c in vec.terms.items():
        if w[0] in CENTRAL_FAMILIES:
            continue
        out += c * phi(x, w)
    return out


def check_cocycle_identity(phi, window):
    """Violations of phi(x,[y,z]) + phi(y,[z,x]) + phi(z,[x,y]) = 0 over
    the Witt basis with |modes| <= window (also checks phi antisymmetry)."""
    gens = [(k, m) for k in ("d", "d1") for m in range(-window, window + 1)]
    bad = []
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            s = phi(gens[a], gens[b]) + phi(gens[b], gens[a])
            if s:
                bad.append((("antisym", gens[a], gens[b]), s))
    for x, y, z in itertools.combinations(gens, 3):
        total = (
            _phi_on_vector(phi, x, witt_bracket(y, z))
            + _phi_on_vector(phi, y, witt_bracket(z, x))
            + _phi_on_vector(phi, z, witt_bracket(x, y))
        )
        if total:
            bad.append((("jacobi", x, y, z), total))
    return bad


def coboundary_window_test(phi, window):
    """Decide whether phi restricted to |modes| <= window is a coboundary,
    i.e. whether some linear psi satisfies phi(x,y) = psi([x,y]) there.

    Returns a dict:
      feasible    bool
      psi         {GenId: value} witnessing feasibility (free vars -> 0)
      certificate [((x, y), coeff), ...] witnessing infeasibility: the
                  combination sum coeff * [x,y] vanishes identically while
                  sum coeff * phi(x,y) != 0.  Verified before returning.
    """
    gens = [(k, m) for k in ("d", "d1") for m in range(-window, window + 1)]
    pairs = list(itertools.combinations(gens, 2))

    rows = []
    for (x, y) in pairs:
        vec = witt_bracket(x, y)
        a = {w: QQ(c) for w, c in vec.terms.items()}
        rows.append((a, phi(x, y), {(x, y): QQ(1)}))

    pivots = {}
    for a, b, combo in rows:
        a = dict(a)
        b = QQ(b)
        combo = dict(combo)
        while a:
            col = min(a)
            if col in pivots:
                pa, pb, pcombo = pivots[col]
                c = a[col]
                for cc, v in pa.items():
                    s = a.get(cc, 0) - c * v
                    if s:
                        a[cc] = s
                    else:
                        a.pop(cc, None)
                b -= c * pb
                for cc, v in pcombo.items():
                    s = combo.get(cc, 0) - c * v
                    if s:
                        combo[cc] = s
                    else:
                        combo.pop(cc, None)
            else:
                inv = 1 / a[col]
                pivots[col] = (
                    {cc: v * inv for cc, v in a.items()},
                    b * inv,
                    {cc: v * inv for cc, v in combo.items()},
                )
                break
        else:
            if b:
                cert = sorted(combo.items())
                _verify_certificate(phi, cert)
                return {"feasible": False, "psi": None, "certificate": cert}

    psi = {col: pb for col, (pa, pb, _) in pivots.items()}
    # pivot rows may still reference non-pivot columns; resolve by back-subst
    for col in sorted(pivots, reverse=True):
        pa, pb, _ = pivots[col]
        val = pb
        for cc, v in pa.items():
            if cc != col:
                val -= v * psi.get(cc, QQ(0))
        psi[col] = val
    return {"feasible": True, "psi": psi, "certificate": None}


def _verify_certificate(phi, cert):
    total_vec = LieVector()
    total_phi = QQ(0)
    for (x, y), c in cert:
        total_vec += witt_bracket(x, y).scale(c)
        total_phi += c * phi(x, y)
    if not total_vec.is_zero() or not total_phi:
        raise AssertionError("invalid infeasibility certificate")
