"""Two-parameter family of modules over the Witt-type algebra.

For a weight alpha, the module U_alpha has basis {a_i, abar_i : i integer}
(written 𝐚_i, 𝐚̄_i elsewhere), with the action

    d_n  . a_i    = (alpha+i) (a_{i+n+1} + 4 a_{i+n})
    d_n  . abar_i = (alpha+i+1) abar_{n+i+1} + (4 alpha + 4i + 2) abar_{n+i}
    d1_n . a_i    = (alpha+i) abar_{n+i-1}
    d1_n . abar_i = (alpha+i+1) a_{n+i+1} + 2 (2 alpha + 2i + 1) a_{n+i}

density_module_check verifies [x, y].v = x.(y.v) - y.(x.v) exactly on a
window of generators and basis vectors.
"""

import itertools

from .liealg import LieVector, witt_bracket
from .scalars import QQ

# vectors in U_alpha reuse the generic sparse-combination container,
# with keys ("a", i) and ("abar", i)
UAlphaVec = LieVector


def density_act(gen, vec, alpha):
    """Action of the Witt generator gen = ("d"|"d1", n) on a UAlphaVec."""
    kind, n = gen
    alpha = QQ(alpha)
    out = UAlphaVec()
    for (base, i), c in vec.terms.items():
        if kind == "d" and base == "a":
            w = c * (alpha + i)
            out.add_term(("a", i + n + 1), w)
            out.add_term(("a", i + n), 4 * w)
        elif kind == "d" and base == "abar":
            out.add_term(("abar", n + i + 1), c * (alpha + i + 1))
            out.add_term(("abar", n + i), c * (4 * alpha + 4 * i + 2))
        elif kind == "d1" and base == "a":
            out.add_term(("abar", n + i - 1), c * (alpha + i))
        elif kind == "d1" and base == "abar":
            out.add_term(("a", n + i + 1), c * (alpha + i + 1))
            out.add_term(("a", n + i), c * 2 * (2 * alpha + 2 * i + 1))
        else:
            raise ValueError("bad generator or basis key: %r, %r" % (gen, base))
    return out


def _act_by_vector(wv, vec, alpha):
    out = UAlphaVec()
    for gen, c in wv.terms.items():
        out += density_act(gen, vec, alpha).scale(c)
    return out


def density_module_check(alpha, window):
    """All module-axiom violations on the window; empty list means U_alpha
    is a module there.

    Checks [x, y].v == x.(y.v) - y.(x.v) for Witt generators x, y with
    |mode| <= window and basis vectors v with |index| <= window.
    """
    gens = [(k, m) for k in ("d", "d1") for m in range(-window, window + 1)]
    basis = [(b, i) for b in ("a", "abar") for i in range(-window, window + 1)]
    bad = []
    for x, y in itertools.combinations(gens, 2):
        via_bracket = witt_bracket(x, y)
        for key in basis:
            v = UAlphaVec({key: 1})
            lhs = _act_by_vector(via_bracket, v, alpha)
            rhs = density_act(x, density_act(y, v, alpha), alpha) - density_act(
                y, density_act(x, v, alpha), alpha
            )
            if not (lhs - rhs).is_zero():
                bad.append(((x, y, key), lhs - rhs))
    return bad
