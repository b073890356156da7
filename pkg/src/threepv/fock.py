"""Polynomial Fock spaces and exact application of normal-ordered operators.

States are finite rational combinations of monomials in the variables

    x_j, x1_j   (j any integer)   oscillator pairs (a, a*), (a1, a1*)
    y_j, y1_j   (j < 0)           current modes (b, b1)

tensored with a two-dimensional auxiliary space (component vpart in {0, 1})
on which the zero modes b_0 and b1_0 act by the scalar B0 and the matrix B1.

A monomial is a plain hashable tuple

    FockMonomial = (vars, vpart)
    vars         = sorted tuple of ((code, idx), exponent)

with variable codes 0 = x, 1 = x1, 2 = y, 3 = y1.

Single modes act in one of two gauges r in {0, 1}:

    r = 0 ("usual")    a_m  = d/dx_m (m >= 0)  else  x_m .
                       a*_m = x_{-m} . (m <= 0) else -d/dx_{-m}
    r = 1 ("natural")  a_m  = x_m .  always;  a*_m = -d/dx_{-m}  always

(same for the "1" pair on x1), while the b-family is gauge-independent:

    b_m  = y_m .          (m < 0)
    b_m  = -2m k0 d/dy_{-m}                      (m > 0),  b_0 = B0
    b1_m = y1_m .         (m < 0)
    b1_m = -(2+2m) k0 d/dy1_{-2-m} - 4(1+2m) k0 d/dy1_{-1-m}   (m >= 0)
    b1_0 additionally acts by the matrix B1 on the auxiliary component.

Infinite normal-ordered sums (QuadSum, CubicSum) act locally finitely: for
each monomial only finitely many summands contribute, and the contributing
mode sets are enumerated exactly — annihilation candidates are read off the
monomial's variables (normal ordering makes annihilators act first, so the
original support bounds them), creation modes run over a half-line that the
partners' upper bounds cut to a finite range.
"""

import random
from collections import namedtuple

from .scalars import QQ, ONE

# variable codes
X, X1, Y, Y1 = 0, 1, 2, 3

VACUUM_MONO = ((), 0)

OSC_FAMILIES = ("a", "a*", "a1", "a1*")
HEIS_FAMILIES = ("b", "b1")


class RepParams:
    """Gauge r, central value kappa0, and the zero-mode data B0, B1."""

    __slots__ = ("r", "kappa0", "B0", "B1", "key")

    def __init__(self, r=0, kappa0=1, B0=1, B1=((1, 2), (3, 1))):
        if r not in (0, 1):
            raise ValueError("r must be 0 or 1")
        self.r = r
        self.kappa0 = QQ(kappa0)
        if not self.kappa0:
            raise ValueError("kappa0 must be nonzero")
        self.B0 = QQ(B0)
        self.B1 = (
            (QQ(B1[0][0]), QQ(B1[0][1])),
            (QQ(B1[1][0]), QQ(B1[1][1])),
        )
        if self.B1[0][0] != self.B1[1][1]:
            raise ValueError("B1 must have equal diagonal entries")
        self.key = (self.r, self.kappa0, self.B0, self.B1)

    def __repr__(self):
        return "RepParams(r=%d, kappa0=%s, B0=%s, B1=%r)" % (
            self.r,
            self.kappa0,
            self.B0,
            self.B1,
        )


class FockState:
    """Finite rational combination of Fock monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = QQ(c)
                if c:
                    self.terms[mono] = c

    @staticmethod
    def vacuum():
        return FockState({VACUUM_MONO: 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FockState) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        st = FockState()
        st.terms = out
        return st

    def __sub__(self, other):
        st = FockState()
        st.terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = st.terms.get(mono, 0) - c
            if s:
                st.terms[mono] = s
            else:
                st.terms.pop(mono, None)
        return st

    def scale(self, c):
        c = QQ(c)
        st = FockState()
        if c:
            st.terms = {mono: c * v for mono, v in self.terms.items()}
        return st

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%r" % (c, mono) for mono, c in sorted(self.terms.items()))


def make_monomial(var_powers, vpart=0):
    """Build a FockMonomial from {(code, idx): exponent}."""
    vars_tuple = tuple(
        sorted((key, e) for key, e in var_powers.items() if e)
    )
    return (vars_tuple, vpart)


def _mono_mul(mono, var):
    vars_tuple, vp = mono
    out = []
    placed = False
    for key, e in vars_tuple:
        if key == var:
            out.append((key, e + 1))
            placed = True
        else:
            out.append((key, e))
    if not placed:
        out.append((var, 1))
        out.sort()
    return (tuple(out), vp)


def _mono_diff(mono, var):
    """(monomial, multiplicity) after d/d var, or None."""
    vars_tuple, vp = mono
    for i, (key, e) in enumerate(vars_tuple):
        if key == var:
            if e == 1:
                rest = vars_tuple[:i] + vars_tuple[i + 1:]
            else:
                rest = vars_tuple[:i] + ((key, e - 1),) + vars_tuple[i + 1:]
            return ((rest, vp), e)
    return None


def apply_factor(fam, m, mono, params):
    """Single mode on a single monomial -> list of (monomial, coeff)."""
    r = params.r
    if fam == "a" or fam == "a1":
        code = X if fam == "a" else X1
        if r == 0 and m >= 0:
            hit = _mono_diff(mono, (code, m))
            return [(hit[0], QQ(hit[1]))] if hit else []
        return [(_mono_mul(mono, (code, m)), ONE)]
    if fam == "a*" or fam == "a1*":
        code = X if fam == "a*" else X1
        if r == 0 and m <= 0:
            return [(_mono_mul(mono, (code, -m)), ONE)]
        hit = _mono_diff(mono, (code, -m))
        return [(hit[0], QQ(-hit[1]))] if hit else []
    if fam == "b":
        if m < 0:
            return [(_mono_mul(mono, (Y, m)), ONE)]
        if m == 0:
            return [(mono, params.B0)] if params.B0 else []
        hit = _mono_diff(mono, (Y, -m))
        return [(hit[0], -2 * m * params.kappa0 * hit[1])] if hit else []
    if fam == "b1":
        if m < 0:
            return [(_mono_mul(mono, (Y1, m)), ONE)]
        out = []
        hit = _mono_diff(mono, (Y1, -2 - m))
        if hit:
            out.append((hit[0], -(2 + 2 * m) * params.kappa0 * hit[1]))
        hit = _mono_diff(mono, (Y1, -1 - m))
        if hit:
            out.append((hit[0], -4 * (1 + 2 * m) * params.kappa0 * hit[1]))
        if m == 0:
            vars_tuple, vp = mono
            for col in (0, 1):
                c = params.B1[vp][col]
                if c:
                    out.append(((vars_tuple, col), c))
        return out
    raise ValueError("unknown mode family %r" % (fam,))


def is_annihilation(fam, m, r):
    """Normal-ordering side of the mode (m-indexed classification)."""
    if fam in ("b", "b1"):
        return m >= 0
    if fam in ("a", "a1"):
        return r == 0 and m >= 0
    if fam in ("a*", "a1*"):
        return m >= 1 if r == 0 else True
    raise ValueError("unknown mode family %r" % (fam,))


def apply_product(factors, mono, params):
    """Normal-ordered product of modes on a monomial.

    Creation factors move left (original order kept within each group), so
    application order is: annihilators right-to-left first, then creators.
    """
    r = params.r
    ordered = [f for f in factors if not is_annihilation(f[0], f[1], r)]
    ordered += [f for f in factors if is_annihilation(f[0], f[1], r)]
    current = [(mono, ONE)]
    for fam, m in reversed(ordered):
        nxt = []
        for mo, c in current:
            for mo2, c2 in apply_factor(fam, m, mo, params):
                nxt.append((mo2, c * c2))
        if not nxt:
            return []
        current = nxt
    return current


# ---------------------------------------------------------------------------
# infinite normal-ordered sums
# ---------------------------------------------------------------------------

# QuadSum:  sum over p+q = M of (c0 + c1 p) :A_p B_q:
# CubicSum: c * sum over i+j+k = M of :A_i B_j C_k:
QuadSum = namedtuple("QuadSum", "famA famB M c0 c1")
CubicSum = namedtuple("CubicSum", "famA famB famC M c")


def _ann_candidates(fam, mono, params):
    """Modes on the annihilation side that can act nonzero on the monomial."""
    vars_tuple, _ = mono
    r = params.r
    out = set()
    if fam == "a" or fam == "a1":
        if r == 0:
            code = X if fam == "a" else X1
            for (c, idx), _e in vars_tuple:
                if c == code and idx >= 0:
                    out.add(idx)
    elif fam == "a*" or fam == "a1*":
        code = X if fam == "a*" else X1
        for (c, idx), _e in vars_tuple:
            if c == code and (r == 1 or idx < 0):
                out.add(-idx)
    elif fam == "b":
        out.add(0)
        for (c, idx), _e in vars_tuple:
            if c == Y:
                out.add(-idx)
    elif fam == "b1":
        out.add(0)
        for (c, idx), _e in vars_tuple:
            if c == Y1:
                if -2 - idx > 0:
                    out.add(-2 - idx)
                if -1 - idx > 0:
                    out.add(-1 - idx)
    else:
        raise ValueError("unknown mode family %r" % (fam,))
    return out


def _creation_bound(fam, r):
    """Upper end of the creation half-line: an int, None (no creation side),
    or "all" (every mode creates; only r=1 unstarred oscillators)."""
    if fam in ("b", "b1"):
        return -1
    if fam in ("a", "a1"):
        return -1 if r == 0 else "all"
    if fam in ("a*", "a1*"):
        return 0 if r == 0 else None
    raise ValueError("unknown mode family %r" % (fam,))


def _slot_upper(fam, mono, params):
    """Largest mode this slot can contribute (None = unbounded)."""
    cre = _creation_bound(fam, params.r)
    if cre == "all":
        return None
    ub = None
    if cre is not None:
        ub = cre
    anns = _ann_candidates(fam, mono, params)
    if anns:
        m = max(anns)
        ub = m if ub is None or m > ub else ub
    return ub


def _slot_candidates(fam, mono, params, remaining, others_upper):
    """Finite candidate set for one enumerated slot, given the remaining mode
    sum and the other slots' upper bounds."""
    cand = _ann_candidates(fam, mono, params)
    cre = _creation_bound(fam, params.r)
    if isinstance(cre, int):
        if any(u is None for u in others_upper):
            raise AssertionError("cannot bound creation range")
        lb = remaining - sum(others_upper)
        cand.update(range(lb, cre + 1))
    return cand


def apply_quad_sum(qs, mono, params, acc):
    """Accumulate (QuadSum applied to monomial) into the dict acc."""
    famA, famB, M, c0, c1 = qs
    creA = _creation_bound(famA, params.r)
    creB = _creation_bound(famB, params.r)

    if creB is None:
        # famB never creates: its annihilation candidates are necessary
        cand_q = _ann_candidates(famB, mono, params)
        pairs = [(M - q, q) for q in cand_q]
    elif creA is None:
        cand_p = _ann_candidates(famA, mono, params)
        pairs = [(p, M - p) for p in cand_p]
    elif creA == "all" or creB == "all":
        raise AssertionError("cannot bound creation range")
    else:
        cand_p = _slot_candidates(
            famA, mono, params, M, [_slot_upper(famB, mono, params)]
        )
        pairs = [(p, M - p) for p in cand_p]

    for p, q in pairs:
        w = c0 + c1 * p
        if not w:
            continue
        for mo, c in apply_product(((famA, p), (famB, q)), mono, params):
            s = acc.get(mo, 0) + w * c
            if s:
                acc[mo] = s
            else:
                acc.pop(mo, None)


def apply_cubic_sum(cs, mono, params, acc):
    """Accumulate (CubicSum applied to monomial) into the dict acc."""
    famA, famB, famC, M, weight = cs
    fams = (famA, famB, famC)
    bounds = [_creation_bound(f, params.r) for f in fams]
    all_slots = [i for i, b in enumerate(bounds) if b == "all"]
    if len(all_slots) > 1:
        raise AssertionError("sum with two unbounded creation slots")
    det = all_slots[0] if all_slots else 2
    enum = [i for i in range(3) if i != det]

    uppers = [_slot_upper(f, mono, params) for f in fams]

    s1, s2 = enum
    cand1 = _slot_candidates(fams[s1], mono, params, M, [uppers[s2], uppers[det]])
    for v1 in cand1:
        cand2 = _slot_candidates(fams[s2], mono, params, M - v1, [uppers[det]])
        for v2 in cand2:
            modes = [None, None, None]
            modes[s1] = v1
            modes[s2] = v2
            modes[det] = M - v1 - v2
            factors = tuple((fams[i], modes[i]) for i in range(3))
            for mo, c in apply_product(factors, mono, params):
                s = acc.get(mo, 0) + weight * c
                if s:
                    acc[mo] = s
                else:
                    acc.pop(mo, None)


def no_sum_apply(sum_op, state, params):
    """Apply one normal-ordered infinite sum to a state, exactly."""
    out = FockState()
    for mono, c in state.terms.items():
        acc = {}
        if isinstance(sum_op, QuadSum):
            apply_quad_sum(sum_op, mono, params, acc)
        elif isinstance(sum_op, CubicSum):
            apply_cubic_sum(sum_op, mono, params, acc)
        else:
            raise TypeError("not a sum: %r" % (sum_op,))
        for mo, cc in acc.items():
            out.terms[mo] = out.terms.get(mo, 0) + c * cc
    out.terms = {mo: c for mo, c in out.terms.items() if c}
    return out


def naive_sum_apply(sum_op, state, params, box):
    """Brute-force windowed application, for cross-checking the smart
    enumeration.  Only valid when box exceeds every contributing mode."""
    out = FockState()
    for mono, c in state.terms.items():
        acc = {}
        if isinstance(sum_op, QuadSum):
            famA, famB, M, c0, c1 = sum_op
            for p in range(-box, box + 1):
                w = c0 + c1 * p
                if not w:
                    continue
                for mo, cc in apply_product(((famA, p), (famB, M - p)), mono, params):
                    acc[mo] = acc.get(mo, 0) + w * cc
        else:
            famA, famB, famC, M, weight = sum_op
            for i in range(-box, box + 1):
                for j in range(-box, box + 1):
                    factors = ((famA, i), (famB, j), (famC, M - i - j))
                    for mo, cc in apply_product(factors, mono, params):
                        acc[mo] = acc.get(mo, 0) + weight * cc
        for mo, cc in acc.items():
            out.terms[mo] = out.terms.get(mo, 0) + c * cc
    out.terms = {mo: c for mo, c in out.terms.items() if c}
    return out


# ---------------------------------------------------------------------------
# composite operators
# ---------------------------------------------------------------------------

_MEMO = {}


def clear_memo():
    _MEMO.clear()


class ModeOp:
    """A finite combination of explicit mode products and normal-ordered
    infinite sums, at fixed parameters.

    terms: tuple of (coeff, ((family, mode), ...)) -- () is the identity
    sums:  tuple of QuadSum / CubicSum

    Application is linear, so per-monomial images are memoized globally,
    keyed by the operator's content and parameters.
    """

    __slots__ = ("terms", "sums", "params", "key")

    def __init__(self, terms=(), sums=(), params=None):
        if params is None:
            raise ValueError("params required")
        self.terms = tuple((QQ(c), tuple(fs)) for c, fs in terms if QQ(c))
        self.sums = tuple(sums)
        self.params = params
        self.key = (self.terms, self.sums, params.key)

    def is_zero_op(self):
        return not self.terms and not self.sums

    def scaled(self, c):
        c = QQ(c)
        if not c:
            return ModeOp((), (), self.params)
        terms = [(c * cc, fs) for cc, fs in self.terms]
        sums = []
        for s in self.sums:
            if isinstance(s, QuadSum):
                sums.append(QuadSum(s.famA, s.famB, s.M, c * s.c0, c * s.c1))
            else:
                sums.append(CubicSum(s.famA, s.famB, s.famC, s.M, c * s.c))
        return ModeOp(terms, sums, self.params)

    def __add__(self, other):
        if self.params.key != other.params.key:
            raise ValueError("parameter mismatch")
        return ModeOp(self.terms + other.terms, self.sums + other.sums, self.params)

    def apply_mono(self, mono):
        cached = _MEMO.get((self.key, mono))
        if cached is None:
            acc = {}
            for coeff, factors in self.terms:
                for mo, c in apply_product(factors, mono, self.params):
                    s = acc.get(mo, 0) + coeff * c
                    if s:
                        acc[mo] = s
                    else:
                        acc.pop(mo, None)
            for sum_op in self.sums:
                if isinstance(sum_op, QuadSum):
                    apply_quad_sum(sum_op, mono, self.params, acc)
                else:
                    apply_cubic_sum(sum_op, mono, self.params, acc)
            cached = tuple(acc.items())
            _MEMO[(self.key, mono)] = cached
        return cached

    def apply(self, state):
        out = {}
        for mono, c in state.terms.items():
            for mo, cc in self.apply_mono(mono):
                s = out.get(mo, 0) + c * cc
                if s:
                    out[mo] = s
                else:
                    out.pop(mo, None)
        st = FockState()
        st.terms = out
        return st


def osc_apply(fam, m, state, params):
    """One oscillator mode a / a* / a1 / a1* on a state."""
    if fam not in OSC_FAMILIES:
        raise ValueError("not an oscillator family: %r" % (fam,))
    return ModeOp(((1, ((fam, m),)),), (), params).apply(state)


def heis_apply(fam, m, state, params):
    """One current mode b / b1 on a state."""
    if fam not in HEIS_FAMILIES:
        raise ValueError("not a current family: %r" % (fam,))
    return ModeOp(((1, ((fam, m),)),), (), params).apply(state)


def commutator_apply(opA, opB, state):
    """[opA, opB] applied to a state: A(B(s)) - B(A(s))."""
    return opA.apply(opB.apply(state)) - opB.apply(opA.apply(state))


# ---------------------------------------------------------------------------
# contractions
# ---------------------------------------------------------------------------

def contraction(famA, famB, m, n, params):
    """Scalar with A_m B_n = :A_m B_n: + contraction * Id on every state."""
    r = params.r
    k0 = params.kappa0
    pair = (famA, famB)
    if pair in (("a", "a*"), ("a1", "a1*")):
        if m + n != 0:
            return QQ(0)
        if r == 0:
            return QQ(1) if m >= 0 else QQ(0)
        return QQ(0)
    if pair in (("a*", "a"), ("a1*", "a1")):
        if m + n != 0:
            return QQ(0)
        if r == 0:
            return QQ(-1) if m >= 1 else QQ(0)
        return QQ(-1)
    if pair == ("b", "b"):
        if m + n == 0 and m > 0:
            return -2 * m * k0
        return QQ(0)
    if pair == ("b1", "b1"):
        if m < 0:
            return QQ(0)
        out = QQ(0)
        if m + n == -2:
            out += -(2 * m + 2) * k0
        if m + n == -1:
            out += -(8 * m + 4) * k0
        return out
    return QQ(0)


def _commutator_value(famA, famB, m, n, params):
    """The c-number [A_m, B_n] in the oscillator / current algebra."""
    k0 = params.kappa0
    pair = (famA, famB)
    if pair in (("a", "a*"), ("a1", "a1*")):
        return QQ(1) if m + n == 0 else QQ(0)
    if pair in (("a*", "a"), ("a1*", "a1")):
        return QQ(-1) if m + n == 0 else QQ(0)
    if pair == ("b", "b"):
        return -2 * m * k0 if m + n == 0 else QQ(0)
    if pair == ("b1", "b1"):
        out = QQ(0)
        if m + n == -2:
            out += (n - m) * k0
        if m + n == -1:
            out += 4 * (n - m) * k0
        return out
    return QQ(0)


def contraction_check(params, window, states):
    """Verify both contraction identities exactly; returns violations.

    (i)  contraction(A,B,m,n) - contraction(B,A,n,m) = [A_m, B_n]
    (ii) A_m(B_n(s)) - :A_m B_n:(s) = contraction(A,B,m,n)*s on each state
    """
    pairs = [
        ("a", "a*"), ("a*", "a"), ("a1", "a1*"), ("a1*", "a1"),
        ("b", "b"), ("b1", "b1"),
        ("a", "a1*"), ("a1", "a*"), ("a", "b"), ("b", "b1"), ("b1", "b"),
    ]
    bad = []
    for famA, famB in pairs:
        for m in range(-window, window + 1):
            for n in range(-window, window + 1):
                c_ab = contraction(famA, famB, m, n, params)
                c_ba = contraction(famB, famA, n, m, params)
                comm = _commutator_value(famA, famB, m, n, params)
                if c_ab - c_ba != comm:
                    bad.append((("identity", famA, famB, m, n), c_ab - c_ba - comm))
                for idx, s in enumerate(states):
                    plain = ModeOp(
                        ((1, ((famA, m),)),), (), params
                    ).apply(ModeOp(((1, ((famB, n),)),), (), params).apply(s))
                    normal = ModeOp(((1, ((famA, m), (famB, n))),), (), params).apply(s)
                    resid = plain - normal - s.scale(c_ab)
                    if not resid.is_zero():
                        bad.append((("states", famA, famB, m, n, idx), resid))
    return bad


# ---------------------------------------------------------------------------
# seeded states
# ---------------------------------------------------------------------------

def seeded_states(seed, count, max_degree=3):
    """Deterministic pseudo-random polynomial states for spot checks."""
    rng = random.Random(seed)
    pool = [(X, j) for j in range(-4, 5)]
    pool += [(X1, j) for j in range(-4, 5)]
    pool += [(Y, j) for j in range(-4, 0)]
    pool += [(Y1, j) for j in range(-4, 0)]
    states = []
    for _ in range(count):
        st = FockState()
        for _ in range(rng.randint(1, 3)):
            powers = {}
            for _ in range(rng.randint(0, max_degree)):
                var = rng.choice(pool)
                powers[var] = powers.get(var, 0) + 1
            mono = make_monomial(powers, rng.randint(0, 1))
            c = rng.randint(1, 9) * rng.choice((1, -1))
            st += FockState({mono: c})
        if st.is_zero():
            st = FockState.vacuum()
        states.append(st)
    return states
