"""Fock-space engine: mode actions, normal ordering, exact sum enumeration."""

import pytest

from threepv.scalars import QQ
from threepv.liealg import heis_bracket
from threepv.fock import (
    RepParams,
    FockState,
    ModeOp,
    QuadSum,
    CubicSum,
    make_monomial,
    apply_factor,
    is_annihilation,
    apply_product,
    no_sum_apply,
    naive_sum_apply,
    osc_apply,
    heis_apply,
    commutator_apply,
    contraction,
    contraction_check,
    seeded_states,
    clear_memo,
    VACUUM_MONO,
    X, X1, Y, Y1,
)

P0 = RepParams(r=0)
P1 = RepParams(r=1)
PARAMS = [P0, P1]


def single(fam, m, params):
    return ModeOp(((1, ((fam, m),)),), (), params)


# ---------------------------------------------------------------------------
# monomials and single modes
# ---------------------------------------------------------------------------

def test_make_monomial_sorts_and_drops_zero_exponents():
    m = make_monomial({(X, 3): 2, (Y, -1): 1, (X, -2): 0}, 1)
    assert m == ((((X, 3), 2), ((Y, -1), 1)), 1)


def test_rep_params_validation():
    with pytest.raises(ValueError):
        RepParams(r=2)
    with pytest.raises(ValueError):
        RepParams(kappa0=0)
    with pytest.raises(ValueError):
        RepParams(B1=((1, 2), (3, 5)))


def test_single_modes_on_vacuum_r0():
    vac = VACUUM_MONO
    # annihilators kill the vacuum
    assert apply_factor("a", 3, vac, P0) == []
    assert apply_factor("a*", 2, vac, P0) == []
    assert apply_factor("b", 1, vac, P0) == []
    # creators populate it
    assert apply_factor("a", -2, vac, P0) == [(make_monomial({(X, -2): 1}), 1)]
    assert apply_factor("a*", -1, vac, P0) == [(make_monomial({(X, 1): 1}), 1)]
    assert apply_factor("b", -3, vac, P0) == [(make_monomial({(Y, -3): 1}), 1)]
    assert apply_factor("b1", -1, vac, P0) == [(make_monomial({(Y1, -1): 1}), 1)]
    # b_0 is the scalar B0
    assert apply_factor("b", 0, vac, P0) == [(vac, QQ(1))]


def test_single_modes_on_vacuum_r1():
    vac = VACUUM_MONO
    # in the r=1 gauge the unstarred oscillators always multiply
    assert apply_factor("a", 3, vac, P1) == [(make_monomial({(X, 3): 1}), 1)]
    # and the starred ones always differentiate (killing the vacuum)
    assert apply_factor("a*", -1, vac, P1) == []
    assert apply_factor("a1*", 0, vac, P1) == []


def test_b1_zero_mode_matrix_action():
    vac0 = FockState({VACUUM_MONO: 1})
    out = heis_apply("b1", 0, vac0, P0)
    # default B1 = ((1,2),(3,1)): component 0 -> 1*v0 + 2*v1
    assert out.terms == {((), 0): QQ(1), ((), 1): QQ(2)}
    vac1 = FockState({((), 1): 1})
    out = heis_apply("b1", 0, vac1, P0)
    assert out.terms == {((), 0): QQ(3), ((), 1): QQ(1)}


def test_b1_positive_mode_derivatives():
    # b1_1 = -4 k0 d/dy1_{-3} - 12 k0 d/dy1_{-2}
    st = FockState({make_monomial({(Y1, -3): 1}): 1})
    out = heis_apply("b1", 1, st, RepParams(r=0, kappa0=2))
    assert out.terms == {VACUUM_MONO: QQ(-8)}
    st = FockState({make_monomial({(Y1, -2): 2}): 1})
    out = heis_apply("b1", 1, st, RepParams(r=0, kappa0=2))
    assert out.terms == {make_monomial({(Y1, -2): 1}): QQ(-48)}


def test_normal_order_partition_is_stable():
    # in :a*_1 a_-1: (r=0) both factors are on their stated sides already
    assert is_annihilation("a*", 1, 0)
    assert not is_annihilation("a", -1, 0)
    # :a_0 a*_0: (r=0) reorders to a*_0 a_0, killing the vacuum
    assert apply_product((("a", 0), ("a*", 0)), VACUUM_MONO, P0) == []
    # while the plain product gives it back: contraction 1
    vac = FockState.vacuum()
    plain = osc_apply("a", 0, osc_apply("a*", 0, vac, P0), P0)
    assert plain.terms == {VACUUM_MONO: QQ(1)}
    assert contraction("a", "a*", 0, 0, P0) == 1


# ---------------------------------------------------------------------------
# commutation relations on states
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("params", PARAMS, ids=["r0", "r1"])
def test_oscillator_relations(params):
    states = [FockState.vacuum()] + seeded_states(101, 4)
    rng = range(-4, 5)
    for m in rng:
        for n in rng:
            delta = QQ(1) if m + n == 0 else QQ(0)
            for s in states:
                lhs = commutator_apply(
                    single("a", m, params), single("a*", n, params), s
                )
                assert lhs == s.scale(delta), ("a/a*", m, n)
                lhs = commutator_apply(
                    single("a1", m, params), single("a1*", n, params), s
                )
                assert lhs == s.scale(delta), ("a1/a1*", m, n)
    # vanishing pairs, smaller window
    zero_pairs = [("a", "a"), ("a*", "a*"), ("a", "a1"), ("a", "a1*"),
                  ("a*", "a1*"), ("a1", "a1"), ("a", "b"), ("a*", "b1")]
    for famA, famB in zero_pairs:
        for m in range(-2, 3):
            for n in range(-2, 3):
                for s in states[:3]:
                    lhs = commutator_apply(
                        single(famA, m, params), single(famB, n, params), s
                    )
                    assert lhs.is_zero(), (famA, famB, m, n)


@pytest.mark.parametrize("params", [RepParams(r=0, kappa0=1),
                                    RepParams(r=0, kappa0=2),
                                    RepParams(r=1, kappa0=2)],
                         ids=["r0k1", "r0k2", "r1k2"])
def test_current_modes_represent_heisenberg(params):
    """Commutators of b/b1 modes match the abstract bracket with
    one0 -> kappa0 and one1 -> 0."""
    states = [FockState.vacuum()] + seeded_states(202, 4)
    rng = range(-4, 5)
    for famA in ("b", "b1"):
        for famB in ("b", "b1"):
            for m in rng:
                for n in rng:
                    expected = QQ(0)
                    for (kind, _), c in heis_bracket((famA, m), (famB, n)).terms.items():
                        if kind == "one0":
                            expected += c * params.kappa0
                        # one1 -> 0
                    for s in states:
                        lhs = commutator_apply(
                            single(famA, m, params), single(famB, n, params), s
                        )
                        assert lhs == s.scale(expected), (famA, famB, m, n)


@pytest.mark.parametrize("params", PARAMS, ids=["r0", "r1"])
def test_contraction_identities(params):
    states = [FockState.vacuum()] + seeded_states(303, 5)
    assert contraction_check(params, 4, states) == []


def test_contraction_frozen_values():
    k2 = RepParams(r=0, kappa0=2)
    assert contraction("b", "b", 3, -3, k2) == -12
    assert contraction("b", "b", -3, 3, k2) == 0
    assert contraction("b", "b", 0, 0, k2) == 0
    assert contraction("b1", "b1", 1, -3, k2) == -8
    assert contraction("b1", "b1", 1, -2, k2) == -24
    assert contraction("b1", "b1", -1, 0, k2) == 0
    assert contraction("a", "a*", 2, -2, P0) == 1
    assert contraction("a", "a*", -2, 2, P0) == 0
    assert contraction("a*", "a", 2, -2, P0) == -1
    assert contraction("a", "a*", 2, -2, P1) == 0
    assert contraction("a*", "a", -2, 2, P1) == -1
    assert contraction("b", "b1", 2, -2, k2) == 0


# ---------------------------------------------------------------------------
# infinite sums: smart enumeration vs brute force
# ---------------------------------------------------------------------------

QUAD_SHAPES = [
    ("a", "a*"), ("a1", "a1*"), ("a1", "a*"), ("a", "a1*"),
    ("b", "a*"), ("b1", "a1*"), ("b", "a1*"),
    ("b", "b"), ("b1", "b1"), ("b", "b1"),
]
CUBIC_SHAPES = [
    ("a", "a*", "a*"), ("a", "a1*", "a1*"), ("a1", "a*", "a1*"),
    ("a1", "a1*", "a1*"), ("a", "a*", "a1*"), ("a1", "a*", "a*"),
]


@pytest.mark.parametrize("params", PARAMS, ids=["r0", "r1"])
def test_quad_sums_match_naive(params):
    states = seeded_states(404, 3, max_degree=2)
    for famA, famB in QUAD_SHAPES:
        for M in (-3, -1, 0, 2):
            qs = QuadSum(famA, famB, M, QQ(1), QQ(2))
            for s in states:
                smart = no_sum_apply(qs, s, params)
                brute = naive_sum_apply(qs, s, params, 12)
                assert smart == brute, (famA, famB, M)


@pytest.mark.parametrize("params", PARAMS, ids=["r0", "r1"])
def test_cubic_sums_match_naive(params):
    states = seeded_states(505, 2, max_degree=2)
    for fams in CUBIC_SHAPES:
        for M in (-2, 0, 1):
            cs = CubicSum(fams[0], fams[1], fams[2], M, QQ(1))
            for s in states:
                smart = no_sum_apply(cs, s, params)
                brute = naive_sum_apply(cs, s, params, 12)
                assert smart == brute, (fams, M)


def test_unboundable_sum_raises():
    st = FockState.vacuum()
    with pytest.raises(AssertionError):
        no_sum_apply(QuadSum("a", "b", 0, QQ(1), QQ(0)), st, P1)
    with pytest.raises(AssertionError):
        no_sum_apply(QuadSum("a", "a1", 0, QQ(1), QQ(0)), st, P1)


def test_quad_sum_frozen_example():
    # sum_{p+q=0} 2 :a_p a*_q: at r=0 acts diagonally on monomials:
    # x_j with j >= 0 counts +1 per power (term p = j, x_j d/dx_j), while
    # x_j with j < 0 counts -1 per power (term p = j, ordered x_j (-d/dx_j))
    qs = QuadSum("a", "a*", 0, QQ(2), QQ(0))
    st = FockState({make_monomial({(X, 2): 1, (X, -1): 2}): 1})
    out = no_sum_apply(qs, st, P0)
    assert out == st.scale(2 * (1 - 2))


# ---------------------------------------------------------------------------
# ModeOp plumbing
# ---------------------------------------------------------------------------

def test_mode_op_addition_and_scaling():
    op = single("a", -1, P0) + single("a*", 0, P0).scaled(3)
    vac = FockState.vacuum()
    out = op.apply(vac)
    assert out.terms == {
        make_monomial({(X, -1): 1}): QQ(1),
        make_monomial({(X, 0): 1}): QQ(3),
    }


def test_memoization_is_consistent():
    clear_memo()
    op = ModeOp(
        ((1, (("a", -1), ("a", 0))),),
        (QuadSum("a", "a*", 0, QQ(1), QQ(1)),),
        P0,
    )
    st = seeded_states(606, 1)[0]
    first = op.apply(st)
    second = op.apply(st)  # memo hit
    assert first == second
    clear_memo()
    third = op.apply(st)  # recomputed
    assert first == third
    # operators with identical content share their memo key
    op2 = ModeOp(
        ((1, (("a", -1), ("a", 0))),),
        (QuadSum("a", "a*", 0, QQ(1), QQ(1)),),
        P0,
    )
    assert op2.key == op.key
    # but different parameters split it
    op3 = ModeOp(op.terms, op.sums, RepParams(r=0, kappa0=2))
    assert op3.key != op.key


def test_identity_term():
    op = ModeOp(((QQ(5), ()),), (), P0)
    st = seeded_states(707, 1)[0]
    assert op.apply(st) == st.scale(5)


def test_seeded_states_deterministic():
    a = seeded_states(42, 5)
    b = seeded_states(42, 5)
    assert all(x == y for x, y in zip(a, b))
    c = seeded_states(43, 5)
    assert any(x != y for x, y in zip(a, c))
