"""Mode operators realizing the three-point algebras on polynomial Fock spaces.

Three operator families are assembled from the normal-ordered machinery in
fock:

* tau_mode -- the affine generators e, f, h, e1, f1, h1 act through quadratic
  and cubic normal-ordered sums in oscillator modes plus the current modes
  b, b1; the first central class acts by the scalar chi0 = kappa0 + 4 (for
  r = 0) or kappa0 (for r = 1), the second central class acts by zero.
* pi_witt_mode -- the derivation families d, d1 act through quadratic
  oscillator sums.  The explicit mode sums are authoritative;
  pi_field_mode rebuilds them by generic composition of the underlying
  fields (products with the polynomial P(w) = w^2 + 4w and its derivative)
  as an independent route used to detect index-convention drift.
* pi_vir_mode -- the centrally extended derivation families D, D1 add
  current-mode corrections whose coefficients live in VirParams; the
  abstract weight-one basis embeds via the index shift D_m = -(d_{m+1}),
  and the first central class acts by central_charge(r).

lambda_to_modes translates a bracket identity given against a formal
parameter, [A_lambda B] = sum_j lambda^j / j! G_j, into the mode identities

    [A_m, B_n] = sum_j binom(m, j) (G_j)_{m+n-j},

where each G_j is a w-polynomial combination of registered fields (expanded
as sum_K F_K w^{-K-1}, the constant field contributing at mode -1), and
returns a residual predicate over (m, n, state).  convention_audit re-runs
such a check on a small window and reports the integer mode shift that
would repair any failure, so a convention drift surfaces as a loud
diagnostic instead of a silent mismatch.
"""

from .scalars import QQ, binom
from .fock import CubicSum, ModeOp, QuadSum, commutator_apply

AFFINE_GENERATORS = ("e", "f", "h", "e1", "f1", "h1")
WITT_KINDS = ("d", "d1")
VIR_KINDS = ("D", "D1")
WITT_REP_PAIRS = (("d", "d"), ("d1", "d1"), ("d", "d1"))
PAIRS_ITEMS = (1, 3, 10, 14)


def chi0(params):
    """Scalar by which the first central class acts under tau."""
    return params.kappa0 + (4 if params.r == 0 else 0)


def _identity_op(c, params):
    return ModeOp(((c, ()),), (), params)


# ---------------------------------------------------------------------------
# tau: the affine generators
# ---------------------------------------------------------------------------

def tau_mode(gen, m, params):
    """Mode m of the realized affine generator.

    Conventions: every current expands as sum of (.)_m z^{-m-1}; the starred
    oscillator fields expand as sum of a*_n z^{-n} (weight zero), the
    unstarred ones as sum of a_n z^{-n-1}; multiplying a weight-one family
    F by P(z) = z^2 + 4z sends mode m to F_{m+2} + 4 F_{m+1}.
    """
    if gen == "f":
        return ModeOp(((-1, (("a", m),)),), (), params)
    if gen == "f1":
        return ModeOp(((-1, (("a1", m),)),), (), params)
    if gen == "h":
        return ModeOp(
            ((1, (("b", m),)),),
            (QuadSum("a", "a*", m, 2, 0), QuadSum("a1", "a1*", m, 2, 0)),
            params,
        )
    if gen == "h1":
        return ModeOp(
            ((1, (("b1", m),)),),
            (
                QuadSum("a1", "a*", m, 2, 0),
                QuadSum("a", "a1*", m + 2, 2, 0),
                QuadSum("a", "a1*", m + 1, 8, 0),
            ),
            params,
        )
    if gen == "e":
        x0 = chi0(params)
        return ModeOp(
            ((-m * x0, (("a*", m),)),),
            (
                CubicSum("a", "a*", "a*", m, 1),
                CubicSum("a", "a1*", "a1*", m + 2, 1),
                CubicSum("a", "a1*", "a1*", m + 1, 4),
                CubicSum("a1", "a*", "a1*", m, 2),
                QuadSum("b", "a*", m, 1, 0),
                QuadSum("b1", "a1*", m, 1, 0),
            ),
            params,
        )
    if gen == "e1":
        x0 = chi0(params)
        return ModeOp(
            (
                (-(m + 1) * x0, (("a1*", m + 2),)),
                (-(4 * m + 2) * x0, (("a1*", m + 1),)),
            ),
            (
                CubicSum("a1", "a*", "a*", m, 1),
                CubicSum("a1", "a1*", "a1*", m + 2, 1),
                CubicSum("a1", "a1*", "a1*", m + 1, 4),
                CubicSum("a", "a*", "a1*", m + 2, 2),
                CubicSum("a", "a*", "a1*", m + 1, 8),
                QuadSum("b1", "a*", m, 1, 0),
                QuadSum("b", "a1*", m + 2, 1, 0),
                QuadSum("b", "a1*", m + 1, 4, 0),
            ),
            params,
        )
    raise ValueError("unknown generator %r" % (gen,))


def tau_realize(vec, params):
    """Realize a combination of affine generators and central classes.

    Generator modes go through tau_mode; the class w0 acts by chi0 times the
    identity and w1 acts by zero.
    """
    op = ModeOp((), (), params)
    for (fam, mode), coeff in sorted(vec.terms.items()):
        if fam == "w0":
            op = op + _identity_op(coeff * chi0(params), params)
        elif fam == "w1":
            continue
        else:
            op = op + tau_mode(fam, mode, params).scaled(coeff)
    return op


# ---------------------------------------------------------------------------
# pi: the derivation families
# ---------------------------------------------------------------------------

def pi_witt_mode(kind, m, params):
    """Mode m of the realized derivation family d or d1 (authoritative sums)."""
    if kind == "d":
        return ModeOp(
            (),
            (
                QuadSum("a", "a*", m + 1, -m - 1, 1),
                QuadSum("a", "a*", m, -4 * m, 4),
                QuadSum("a1", "a1*", m + 1, -m, 1),
                QuadSum("a1", "a1*", m, 2 - 4 * m, 4),
            ),
            params,
        )
    if kind == "d1":
        return ModeOp(
            (),
            (
                QuadSum("a1", "a*", m - 1, 1 - m, 1),
                QuadSum("a", "a1*", m + 1, -m, 1),
                QuadSum("a", "a1*", m, 2 - 4 * m, 4),
            ),
            params,
        )
    raise ValueError("unknown derivation family %r" % (kind,))


# field pieces (coeff, p, famA, famB, derivB) meaning
# coeff * w^p * :famA (d/dw)^derivB famB: with famA of weight one and famB of
# weight zero
_PI_FIELD_PIECES = {
    "d": (
        (1, 2, "a", "a*", 1),
        (4, 1, "a", "a*", 1),
        (1, 2, "a1", "a1*", 1),
        (4, 1, "a1", "a1*", 1),
        (1, 1, "a1", "a1*", 0),
        (2, 0, "a1", "a1*", 0),
    ),
    "d1": (
        (1, 0, "a1", "a*", 1),
        (1, 2, "a", "a1*", 1),
        (4, 1, "a", "a1*", 1),
        (1, 1, "a", "a1*", 0),
        (2, 0, "a", "a1*", 0),
    ),
}


def pi_field_mode(kind, m, params):
    """Mode m of the d / d1 fields built by generic field composition.

    Independent route cross-checking pi_witt_mode: each product
    :A (d^k B): is convolved mode-by-mode, then shifted by the w-power.
    """
    if kind not in _PI_FIELD_PIECES:
        raise ValueError("unknown derivation family %r" % (kind,))
    sums = []
    for c, p, fam_a, fam_b, deriv_b in _PI_FIELD_PIECES[kind]:
        k = m + p
        if deriv_b == 0:
            # (:A B:)_K = sum over p1+q = K of :A_{p1} B_q:
            sums.append(QuadSum(fam_a, fam_b, k, c, 0))
        else:
            # (:A dB:)_K = sum over p1+q = K-1 of (-q) :A_{p1} B_q:
            sums.append(QuadSum(fam_a, fam_b, k - 1, c * (1 - k), c))
    return ModeOp((), tuple(sums), params)


# ---------------------------------------------------------------------------
# extended (centrally corrected) derivation families
# ---------------------------------------------------------------------------

class VirParams:
    """Coefficients of the current-mode corrections in the extended family.

    gammaP is the scalar multiplying the P-convolution of :b b:, i.e. the
    quadratic correction enters mode m as
    gammaP * ((:b^2:)_{m+2} + 4 (:b^2:)_{m+1}).
    """

    __slots__ = ("nu", "zeta", "gamma1", "mu", "gamma2", "gammaP", "key")

    def __init__(self, nu, zeta=0, gamma1=0, mu=0, gamma2=0, gammaP=0):
        self.nu = QQ(nu)
        self.zeta = QQ(zeta)
        self.gamma1 = QQ(gamma1)
        self.mu = QQ(mu)
        self.gamma2 = QQ(gamma2)
        self.gammaP = QQ(gammaP)
        self.key = (self.nu, self.zeta, self.gamma1, self.mu, self.gamma2,
                    self.gammaP)

    @staticmethod
    def standard(kappa0):
        """The closing coefficient assignment at central value kappa0.

        nu = +1/(2 kappa0) (only nu^2 is forced; the sign choice is a
        convention, the other sign being induced by b1 -> -b1).
        """
        k0 = QQ(kappa0)
        if not k0:
            raise ValueError("kappa0 must be nonzero")
        quarter = QQ(1) / (4 * k0)
        return VirParams(nu=QQ(1) / (2 * k0), zeta=0, gamma1=-quarter,
                         mu=0, gamma2=0, gammaP=-quarter)

    def __repr__(self):
        return ("VirParams(nu=%s, zeta=%s, gamma1=%s, mu=%s, gamma2=%s, "
                "gammaP=%s)" % self.key)


def central_charge(r):
    """Scalar by which the first central class acts in the extended family
    (the second acts by zero)."""
    if r not in (0, 1):
        raise ValueError("r must be 0 or 1")
    d0 = 1 if r == 0 else 0
    return -(QQ(d0) + QQ(1, 2)) / 3


def pi_vir_mode(kind, m, params, vparams=None):
    """Mode m (weight-two labeling, coefficient of z^{-m-2}) of the extended
    derivation family D or D1."""
    if vparams is None:
        vparams = VirParams.standard(params.kappa0)
    if kind == "D":
        op = pi_witt_mode("d", m + 1, params)
        terms = []
        sums = []
        if vparams.gammaP:
            sums.append(QuadSum("b", "b", m + 2, vparams.gammaP, 0))
            sums.append(QuadSum("b", "b", m + 1, 4 * vparams.gammaP, 0))
        if vparams.gamma1:
            sums.append(QuadSum("b1", "b1", m, vparams.gamma1, 0))
        if vparams.mu:
            terms.append((-(m + 1) * vparams.mu, (("b", m),)))
        if vparams.gamma2:
            terms.append((vparams.gamma2, (("b", m + 1),)))
        return op + ModeOp(terms, sums, params)
    if kind == "D1":
        op = pi_witt_mode("d1", m + 1, params)
        terms = []
        sums = []
        if vparams.nu:
            sums.append(QuadSum("b", "b1", m, vparams.nu, 0))
        if vparams.zeta:
            terms.append((-(m + 1) * vparams.zeta, (("b1", m),)))
        return op + ModeOp(terms, sums, params)
    raise ValueError("unknown extended family %r" % (kind,))


def vir_realize(vec, params, vparams=None, c1_value=None, c2_value=0):
    """Realize a combination of abstract d / d1 modes and central classes.

    The abstract weight-one basis embeds by the index shift D_m = -(d_{m+1}),
    so d_K maps to -D_{K-1} and d1_K to -D1_{K-1}; c1 acts by c1_value
    (default central_charge(r)) times the identity and c2 by c2_value.
    """
    if c1_value is None:
        c1_value = central_charge(params.r)
    op = ModeOp((), (), params)
    for (fam, mode), coeff in sorted(vec.terms.items()):
        if fam == "c1":
            if c1_value:
                op = op + _identity_op(coeff * QQ(c1_value), params)
        elif fam == "c2":
            if c2_value:
                op = op + _identity_op(coeff * QQ(c2_value), params)
        elif fam == "d":
            op = op + pi_vir_mode("D", mode - 1, params, vparams).scaled(-coeff)
        elif fam == "d1":
            op = op + pi_vir_mode("D1", mode - 1, params, vparams).scaled(-coeff)
        else:
            raise ValueError("unexpected family %r" % (fam,))
    return op


# ---------------------------------------------------------------------------
# bracket identities against a formal parameter, translated to modes
# ---------------------------------------------------------------------------

def _field_one(k, params):
    if k == -1:
        return _identity_op(QQ(1), params)
    return ModeOp((), (), params)


def _field_single(fam):
    def build(k, params):
        return ModeOp(((1, ((fam, k),)),), (), params)
    return build


def _field_p_dbeta(k, params):
    # (P db)_K = -(K+2) b_{K+1} - 4 (K+1) b_K
    return ModeOp(
        ((-(k + 2), (("b", k + 1),)), (-4 * (k + 1), (("b", k),))),
        (),
        params,
    )


def _field_beta1_sq(k, params):
    # (:b1 b1:)_K = sum over p+q = K-1 of :b1_p b1_q:
    return ModeOp((), (QuadSum("b1", "b1", k - 1, 1, 0),), params)


def _field_dbeta1_beta1(k, params):
    # (:(db1) b1:)_K = sum over p+q = K-2 of (-p-1) :b1_p b1_q:
    return ModeOp((), (QuadSum("b1", "b1", k - 2, -1, -1),), params)


FIELD_BUILDERS = {
    "1": _field_one,
    "beta": _field_single("b"),
    "beta1": _field_single("b1"),
    "P_dbeta": _field_p_dbeta,
    "no_beta1_sq": _field_beta1_sq,
    "no_dbeta1_beta1": _field_dbeta1_beta1,
    "pi_d": lambda k, params: pi_witt_mode("d", k, params),
    "pi_d1": lambda k, params: pi_witt_mode("d1", k, params),
}


def field_mode(name, k, params):
    """Mode k (weight-one indexing) of a registered field."""
    try:
        build = FIELD_BUILDERS[name]
    except KeyError:
        raise ValueError("unknown field %r" % (name,))
    return build(k, params)


def _group_j_terms(j_terms):
    grouped = {}
    for j, coeff, p, name, nderiv in j_terms:
        if j < 0:
            raise ValueError("negative bracket order %r" % (j,))
        if nderiv not in (0, 1):
            raise ValueError("unsupported derivative order %r" % (nderiv,))
        if name not in FIELD_BUILDERS:
            raise ValueError("unknown field %r" % (name,))
        grouped.setdefault(j, []).append((coeff, p, name, nderiv))
    return grouped


def gj_mode_op(terms, k, params):
    """Mode k of a field expression sum of coeff * w^p * (d/dw)^nd F.

    Translation rules: (w^p F)_K = F_{K+p} and
    (w^p dF)_K = -(K+p) F_{K+p-1}.
    """
    op = ModeOp((), (), params)
    for coeff, p, name, nderiv in terms:
        coeff = QQ(coeff)
        if not coeff:
            continue
        if nderiv == 0:
            op = op + field_mode(name, k + p, params).scaled(coeff)
        else:
            op = op + field_mode(name, k + p - 1, params).scaled(
                -coeff * (k + p)
            )
    return op


def bracket_rhs_op(j_terms, m, n, params, shift=0):
    """The translated right-hand side sum_j binom(m, j) (G_j)_{m+n-j+shift}
    as one operator (shift is used by the convention audit)."""
    grouped = _group_j_terms(j_terms)
    op = ModeOp((), (), params)
    for j, terms in sorted(grouped.items()):
        bj = binom(m, j)
        if not bj:
            continue
        op = op + gj_mode_op(terms, m + n - j + shift, params).scaled(bj)
    return op


def lambda_to_modes(lhs_a, lhs_b, j_terms, params):
    """Residual predicate for a mode-translated bracket identity.

    lhs_a, lhs_b are registered field names; j_terms is an iterable of
    (j, coeff, p, name, nderiv) contributions, each meaning that the order-j
    coefficient G_j contains coeff * w^p * (d/dw)^nderiv of the named field.
    Returns check(m, n, state) -> FockState residual

        [A_m, B_n] state  -  sum_j binom(m, j) (G_j)_{m+n-j} state,

    which is zero exactly when the identity holds on that state.
    """
    grouped = _group_j_terms(j_terms)
    if lhs_a not in FIELD_BUILDERS or lhs_b not in FIELD_BUILDERS:
        raise ValueError("unknown field %r" % (lhs_a if lhs_a not in
                                               FIELD_BUILDERS else lhs_b,))

    def check(m, n, state):
        op_a = field_mode(lhs_a, m, params)
        op_b = field_mode(lhs_b, n, params)
        lhs = commutator_apply(op_a, op_b, state)
        rhs = ModeOp((), (), params)
        for j, terms in sorted(grouped.items()):
            bj = binom(m, j)
            if not bj:
                continue
            rhs = rhs + gj_mode_op(terms, m + n - j, params).scaled(bj)
        return lhs - rhs.apply(state)

    return check


def convention_audit(lhs_a, lhs_b, j_terms, params, mn_pairs, states,
                     shifts=(-2, -1, 1, 2)):
    """Small-window bracket check reporting the observed mode shift.

    For each (m, n) pair and state, compares [A_m, B_n] applied to the state
    with the translated right-hand side; on mismatch, retries the right-hand
    side under every uniform mode shift K -> K + s and records which shift
    (if any) repairs the identity.  Returns a list of dicts with keys
    m, n, state, pass, shift.
    """
    results = []
    for m, n in mn_pairs:
        op_a = field_mode(lhs_a, m, params)
        op_b = field_mode(lhs_b, n, params)
        rhs = bracket_rhs_op(j_terms, m, n, params)
        for idx, state in enumerate(states):
            lhs_val = commutator_apply(op_a, op_b, state)
            ok = (lhs_val - rhs.apply(state)).is_zero()
            found = None
            if not ok:
                for s in shifts:
                    shifted = bracket_rhs_op(j_terms, m, n, params, shift=s)
                    if (lhs_val - shifted.apply(state)).is_zero():
                        found = s
                        break
            results.append(
                {"m": m, "n": n, "state": idx, "pass": ok, "shift": found}
            )
    return results


# ---------------------------------------------------------------------------
# bracket data: derivation families and current-mode identities
# ---------------------------------------------------------------------------

def witt_rep_gj(pair, r):
    """G_j field-expression data for [pi(A)_m, pi(B)_n], A, B in {d, d1}.

    With P = w^2 + 4w (so dP = 2w + 4, d2P = 2), the three lines are

        [d_lambda d]       G0 = P dA + dP A; G1 = 2 P A + d0 (2P + 4);
                           G2 = 2 d0 P dP;   G3 = 2 d0 P^2
        [d1_lambda d1]     G0 = dA; G1 = 2 A; G2 = d0 dP; G3 = 2 d0 P
        [d_lambda d1]      G0 = P dB + (3/2) dP B; G1 = 2 P B

    where A is the realized d field, B the realized d1 field and
    d0 = 1 if r == 0 else 0 marks the anomaly terms.
    """
    d0 = 1 if r == 0 else 0
    if pair == ("d", "d"):
        return [
            (0, 1, 2, "pi_d", 1), (0, 4, 1, "pi_d", 1),
            (0, 2, 1, "pi_d", 0), (0, 4, 0, "pi_d", 0),
            (1, 2, 2, "pi_d", 0), (1, 8, 1, "pi_d", 0),
            (1, 2 * d0, 2, "1", 0), (1, 8 * d0, 1, "1", 0),
            (1, 4 * d0, 0, "1", 0),
            (2, 4 * d0, 3, "1", 0), (2, 24 * d0, 2, "1", 0),
            (2, 32 * d0, 1, "1", 0),
            (3, 2 * d0, 4, "1", 0), (3, 16 * d0, 3, "1", 0),
            (3, 32 * d0, 2, "1", 0),
        ]
    if pair == ("d1", "d1"):
        return [
            (0, 1, 0, "pi_d", 1),
            (1, 2, 0, "pi_d", 0),
            (2, 2 * d0, 1, "1", 0), (2, 4 * d0, 0, "1", 0),
            (3, 2 * d0, 2, "1", 0), (3, 8 * d0, 1, "1", 0),
        ]
    if pair == ("d", "d1"):
        return [
            (0, 1, 2, "pi_d1", 1), (0, 4, 1, "pi_d1", 1),
            (0, 3, 1, "pi_d1", 0), (0, 6, 0, "pi_d1", 0),
            (1, 2, 2, "pi_d1", 0), (1, 8, 1, "pi_d1", 0),
        ]
    raise ValueError("unknown pair %r" % (pair,))


def pairs_gj(item, params):
    """LHS field names and G_j data for the checked current-mode identities.

    Returns (lhs_a, lhs_b, j_terms) for items 1, 3, 10, 14:

        1   [b_lambda b]           = -2 lambda kappa0
        3   [b1_lambda b1]         = -(2 P lambda + dP) kappa0
        10  [P db_lambda P db]     = 2 kappa0 (P lambda^3 + 3 dP lambda^2
                                     + 3 d2P lambda) P
        14  [:b1^2:_lambda :b1^2:] = -4 (2 P lambda + dP) kappa0 :b1^2:
                                     - 8 P kappa0 :(db1) b1:
                                     + 8 (P^2 lambda^3 / 6 + P dP lambda^2 / 2
                                     + (dP)^2 lambda / 4) kappa0^2
    """
    k0 = params.kappa0
    if item == 1:
        return "beta", "beta", [(1, -2 * k0, 0, "1", 0)]
    if item == 3:
        return "beta1", "beta1", [
            (0, -2 * k0, 1, "1", 0), (0, -4 * k0, 0, "1", 0),
            (1, -2 * k0, 2, "1", 0), (1, -8 * k0, 1, "1", 0),
        ]
    if item == 10:
        return "P_dbeta", "P_dbeta", [
            (1, 12 * k0, 2, "1", 0), (1, 48 * k0, 1, "1", 0),
            (2, 24 * k0, 3, "1", 0), (2, 144 * k0, 2, "1", 0),
            (2, 192 * k0, 1, "1", 0),
            (3, 12 * k0, 4, "1", 0), (3, 96 * k0, 3, "1", 0),
            (3, 192 * k0, 2, "1", 0),
        ]
    if item == 14:
        k2 = k0 * k0
        return "no_beta1_sq", "no_beta1_sq", [
            (0, -8 * k0, 1, "no_beta1_sq", 0),
            (0, -16 * k0, 0, "no_beta1_sq", 0),
            (0, -8 * k0, 2, "no_dbeta1_beta1", 0),
            (0, -32 * k0, 1, "no_dbeta1_beta1", 0),
            (1, -8 * k0, 2, "no_beta1_sq", 0),
            (1, -32 * k0, 1, "no_beta1_sq", 0),
            (1, 8 * k2, 2, "1", 0), (1, 32 * k2, 1, "1", 0),
            (1, 32 * k2, 0, "1", 0),
            (2, 16 * k2, 3, "1", 0), (2, 96 * k2, 2, "1", 0),
            (2, 128 * k2, 1, "1", 0),
            (3, 8 * k2, 4, "1", 0), (3, 64 * k2, 3, "1", 0),
            (3, 128 * k2, 2, "1", 0),
        ]
    raise ValueError("unknown item %r" % (item,))
