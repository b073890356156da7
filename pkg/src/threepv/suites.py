"""Named verification suites and the report plumbing behind the CLI.

Each suite certifies one family of identities as exact rational equalities
and returns a CheckReport: a flat list of checks, each with a human-readable
lhs / rhs description, the state it was evaluated on ('-' for stateless
algebraic checks), a pass flag, and the exact residual when it fails.

Reports are deterministic: for a fixed config and seed the JSON rendering is
byte-identical across runs, regardless of the THREEPV_THREADS setting.
"""

import itertools
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor

from .scalars import QQ, parse_rat, rat_str
from .ring import RRingElem, witt_bracket_geometric
from .kaehler import CohomClass, OneForm, differential, reduce_mod_dR
from .kaehler import lambda_coeff, mu_oracle
from .liealg import (
    affine_bracket,
    affine_bracket_kassel,
    check_antisymmetry,
    check_cocycle_identity,
    check_jacobi,
    coboundary_window_test,
    heis_bracket,
    mu_closed_form,
    phi1,
    phi2,
    vir_bracket,
    witt_bracket,
)
from .density import density_module_check
from .fock import FockState, ModeOp, RepParams, commutator_apply, seeded_states
from .realization import (
    AFFINE_GENERATORS,
    VirParams,
    WITT_REP_PAIRS,
    PAIRS_ITEMS,
    central_charge,
    chi0,
    convention_audit,
    lambda_to_modes,
    pairs_gj,
    pi_vir_mode,
    tau_mode,
    tau_realize,
    vir_realize,
    witt_rep_gj,
)

SUITE_NAMES = (
    "ring-witt",
    "kaehler-basis",
    "mu-compare",
    "affine-jacobi",
    "kassel-vs-table",
    "cocycle-identity",
    "coboundary-window",
    "heisenberg-rep",
    "affine-rep",
    "witt-rep",
    "virasoro-rep",
    "pairs-subset",
    "density-module",
    "lambda-table",
    "audit",
)

FORMATS = ("text", "json")

_DENSITY_ALPHAS = (QQ(0), QQ(1, 2), QQ(-3, 4), QQ(2))


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def parse_states_spec(spec):
    """Parse 'vacuum' or 'random:K:D' into ('vacuum', 0, 0) / ('random', K, D)."""
    if spec == "vacuum":
        return ("vacuum", 0, 0)
    parts = spec.split(":")
    if len(parts) == 3 and parts[0] == "random":
        try:
            count, degree = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError("bad states spec %r" % (spec,))
        if count < 1 or degree < 0:
            raise ValueError("bad states spec %r" % (spec,))
        return ("random", count, degree)
    raise ValueError("states must be 'vacuum' or 'random:K:D', got %r" % (spec,))


def parse_b1(text):
    """Parse a 2x2 matrix given row-major as 'a,b,c,d' (exact rationals)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("B1 must be 4 comma-separated rationals, got %r" % (text,))
    a, b, c, d = (parse_rat(p) for p in parts)
    return ((a, b), (c, d))


class SuiteConfig:
    """Validated parameters for one suite run."""

    __slots__ = ("suite", "r", "kappa0", "B0", "B1", "window", "states",
                 "seed", "format")

    def __init__(self, suite, r=0, kappa0=1, B0=1, B1=((1, 2), (3, 1)),
                 window=3, states="vacuum", seed=0, format="text"):
        if suite not in SUITE_NAMES:
            raise ValueError("unknown suite: %s" % (suite,))
        if r not in (0, 1):
            raise ValueError("r must be 0 or 1, got %r" % (r,))
        kappa0 = QQ(kappa0)
        if not kappa0:
            raise ValueError("kappa0 must be nonzero")
        window = int(window)
        if window < 1:
            raise ValueError("window must be >= 1, got %r" % (window,))
        parse_states_spec(states)
        if format not in FORMATS:
            raise ValueError("format must be one of %s, got %r" % (FORMATS, format))
        self.suite = suite
        self.r = int(r)
        self.kappa0 = kappa0
        self.B0 = QQ(B0)
        self.B1 = tuple(tuple(QQ(x) for x in row) for row in B1)
        self.window = window
        self.states = states
        self.seed = int(seed)
        self.format = format

    def rep_params(self):
        return RepParams(r=self.r, kappa0=self.kappa0, B0=self.B0, B1=self.B1)

    def params_dict(self):
        """Config echo for the report, with rationals as 'p/q' strings."""
        return {
            "r": self.r,
            "kappa0": rat_str(self.kappa0),
            "B0": rat_str(self.B0),
            "B1": [[rat_str(x) for x in row] for row in self.B1],
            "window": self.window,
            "states": self.states,
            "seed": self.seed,
        }


def build_states(cfg):
    """Labelled evaluation states: the vacuum plus any seeded random states."""
    kind, count, degree = parse_states_spec(cfg.states)
    out = [("vacuum", FockState.vacuum())]
    if kind == "random":
        for i, st in enumerate(seeded_states(cfg.seed, count, degree)):
            out.append(("s%02d" % i, st))
    return out


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _check(lhs, rhs, state, ok, residual):
    return {
        "lhs": lhs,
        "rhs": rhs,
        "state": state,
        "pass": bool(ok),
        "residual": None if ok else residual,
    }


def _scalar_check(lhs, rhs, state, got, want):
    return _check(lhs, rhs, state, got == want, rat_str(got - want))


def _state_check(lhs, rhs, state, got, want):
    return _check(lhs, rhs, state, got == want, repr(got - want))


def _terms_str(terms):
    """Sorted rendering of a {(family, mode): coeff} difference."""
    items = [(k, c) for k, c in sorted(terms.items()) if c]
    if not items:
        return "0"
    return " + ".join("%s*%s_%s" % (c, k[0], k[1]) for k, c in items)


class CheckReport:
    """Outcome of one suite run: checks plus pass/fail totals."""

    __slots__ = ("suite", "params", "checks", "passed", "failed")

    def __init__(self, suite, params, checks):
        self.suite = suite
        self.params = params
        self.checks = list(checks)
        self.passed = sum(1 for c in self.checks if c["pass"])
        self.failed = len(self.checks) - self.passed

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": [
                {
                    "lhs": c["lhs"],
                    "rhs": c["rhs"],
                    "state": c["state"],
                    "pass": c["pass"],
                    "residual": c["residual"],
                }
                for c in self.checks
            ],
            "passed": self.passed,
            "failed": self.failed,
        }


def emit_report(report, format="text"):
    """Render a CheckReport as stable JSON or a readable text table."""
    if format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if format != "text":
        raise ValueError("format must be one of %s, got %r" % (FORMATS, format))
    lines = ["suite: %s" % report.suite]
    p = report.params
    lines.append(
        "params: r=%s kappa0=%s B0=%s B1=%s window=%s states=%s seed=%s"
        % (p["r"], p["kappa0"], p["B0"],
           ",".join(x for row in p["B1"] for x in row),
           p["window"], p["states"], p["seed"])
    )
    for c in report.checks:
        line = "%s  %s == %s  [state %s]" % (
            "PASS" if c["pass"] else "FAIL", c["lhs"], c["rhs"], c["state"])
        if not c["pass"]:
            line += "  residual: %s" % c["residual"]
        lines.append(line)
    lines.append("passed %d, failed %d" % (report.passed, report.failed))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# suite bodies (each returns a list of task callables; a task returns a list
# of check dicts)
# ---------------------------------------------------------------------------

def _modes(window):
    return range(-window, window + 1)


def _single(fam, m, params):
    return ModeOp(((1, ((fam, m),)),), (), params)


def _suite_ring_witt(cfg):
    gens = [(k, m) for k in ("d", "d1") for m in _modes(cfg.window)]

    def task(i, j):
        closed = witt_bracket(i, j)
        geo = witt_bracket_geometric(i, j)
        diff = dict(closed.terms)
        for key, c in geo.terms.items():
            diff[key] = diff.get(key, QQ(0)) - c
        ok = all(not c for c in diff.values())
        name = "[%s_%d, %s_%d]" % (i[0], i[1], j[0], j[1])
        return [_check("closed form %s" % name, "geometric %s" % name, "-",
                       ok, _terms_str(diff))]

    return [lambda i=i, j=j: task(i, j) for i in gens for j in gens]


def _seeded_ring_elems(seed, count):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        e = RRingElem()
        for _ in range(rng.randint(1, 4)):
            k = rng.randint(-6, 6)
            uu = rng.randint(0, 1)
            c = rng.randint(1, 9) * rng.choice((1, -1))
            e = e + RRingElem.monomial(k, uu, c)
        out.append(e)
    return out


def _suite_kaehler_basis(cfg):
    kind, count, _ = parse_states_spec(cfg.states)
    tasks = []

    def basis_task(k):
        got = reduce_mod_dR(OneForm(ft=RRingElem.monomial(k, 0)))
        want = CohomClass(1, 0) if k == -1 else CohomClass()
        return [_check("reduce(t^%d dt)" % k,
                       "w0" if k == -1 else "0",
                       "-", got == want, repr(got - want))]

    for k in _modes(cfg.window):
        tasks.append(lambda k=k: basis_task(k))

    if kind == "random":
        elems = _seeded_ring_elems(cfg.seed, count)

        def exact_task(i, f):
            got = reduce_mod_dR(differential(f))
            return [_check("reduce(d f%03d)" % i, "0", "-",
                           got.is_zero(), repr(got))]

        for i, f in enumerate(elems):
            tasks.append(lambda i=i, f=f: exact_task(i, f))
    return tasks


def _suite_mu_compare(cfg):
    def task(m, n):
        closed = mu_closed_form(m, n)
        oracle = mu_oracle(m, n)
        return [_scalar_check(
            "mu(%d,%d) closed form = %s" % (m, n, rat_str(closed)),
            "reduction oracle = %s" % rat_str(oracle),
            "-", closed, oracle)]

    return [lambda m=m, n=n: task(m, n)
            for m in _modes(cfg.window) for n in _modes(cfg.window)]


def _fam_multiset(fams):
    return tuple(sorted(fams))


def _suite_affine_jacobi(cfg):
    gens = [(g, m) for g in AFFINE_GENERATORS for m in _modes(cfg.window)]

    def task():
        checks = []
        bad_anti = check_antisymmetry(affine_bracket_kassel, gens)
        checks.append(_check(
            "antisymmetry of the oracle-backed bracket, |modes| <= %d" % cfg.window,
            "0", "-", not bad_anti,
            None if not bad_anti else "%d violations; first %r" % (
                len(bad_anti), bad_anti[0][0])))
        bad = check_jacobi(affine_bracket_kassel, gens)
        bad_by_fams = {}
        for (x, y, z), res in bad:
            key = _fam_multiset((x[0], y[0], z[0]))
            bad_by_fams.setdefault(key, []).append(((x, y, z), res))
        for fams in sorted(set(itertools.combinations_with_replacement(
                sorted(AFFINE_GENERATORS), 3))):
            key = _fam_multiset(fams)
            hits = bad_by_fams.get(key, [])
            residual = None
            if hits:
                (x, y, z), res = hits[0]
                residual = "%d violations; first at (%s_%d, %s_%d, %s_%d): %s" % (
                    len(hits), x[0], x[1], y[0], y[1], z[0], z[1],
                    _terms_str(res.terms))
            checks.append(_check(
                "jacobiator on {%s, %s, %s}, |modes| <= %d"
                % (fams[0], fams[1], fams[2], cfg.window),
                "0", "-", not hits, residual))
        return checks

    return [task]


def _suite_kassel_vs_table(cfg):
    gens = [(g, m) for g in AFFINE_GENERATORS for m in _modes(cfg.window)]

    def task(i, j):
        t = affine_bracket(i, j)
        k = affine_bracket_kassel(i, j)
        diff = t - k
        name = "[%s_%d, %s_%d]" % (i[0], i[1], j[0], j[1])
        return [_check("closed table %s" % name, "pairing construction %s" % name,
                       "-", diff.is_zero(), _terms_str(diff.terms))]

    return [lambda i=i, j=j: task(i, j) for i in gens for j in gens]


def _suite_cocycle_identity(cfg):
    def task(name, phi):
        bad = check_cocycle_identity(phi, cfg.window)
        anti = [b for b in bad if b[0][0] == "antisym"]
        jac = [b for b in bad if b[0][0] == "jacobi"]
        checks = []
        for label, hits in (("antisymmetry", anti), ("cocycle identity", jac)):
            residual = None
            if hits:
                residual = "%d violations; first %r -> %s" % (
                    len(hits), hits[0][0], rat_str(hits[0][1]))
            checks.append(_check("%s %s, |modes| <= %d" % (name, label, cfg.window),
                                 "0", "-", not hits, residual))
        return checks

    return [lambda: task("phi1", phi1), lambda: task("phi2", phi2)]


def _cert_str(cert):
    bits = []
    for (x, y), c in cert:
        bits.append("%s*phi(%s_%d, %s_%d)" % (rat_str(c), x[0], x[1], y[0], y[1]))
    return " + ".join(bits)


def _suite_coboundary_window(cfg):
    def task(name, phi):
        res = coboundary_window_test(phi, cfg.window)
        infeasible = not res["feasible"]
        checks = [_check(
            "%s on |modes| <= %d is a coboundary" % (name, cfg.window),
            "infeasible", "-", infeasible,
            None if infeasible else
            "feasible: a linear functional matches %s on the window" % name)]
        if infeasible:
            cert = res["certificate"]
            total = sum((c * phi(x, y) for (x, y), c in cert), QQ(0))
            checks.append(_check(
                "certificate for %s: %s = %s while the same combination of "
                "brackets vanishes" % (name, _cert_str(cert), rat_str(total)),
                "nonzero", "-", bool(total), "certificate pairs to zero"))
        return checks

    return [lambda: task("phi1", phi1), lambda: task("phi2", phi2)]


def _suite_heisenberg_rep(cfg):
    params = cfg.rep_params()
    states = build_states(cfg)

    def task(famA, famB, m, n):
        expected = QQ(0)
        for (kind, _), c in heis_bracket((famA, m), (famB, n)).terms.items():
            if kind == "one0":
                expected += c * params.kappa0
            # one1 acts by zero in this representation
        checks = []
        name = "[%s_%d, %s_%d]" % (famA, m, famB, n)
        rhs = "%s * id (one0 -> kappa0, one1 -> 0)" % rat_str(expected)
        for label, s in states:
            got = commutator_apply(_single(famA, m, params),
                                   _single(famB, n, params), s)
            checks.append(_state_check("realized %s" % name, rhs, label,
                                       got, s.scale(expected)))
        return checks

    return [lambda a=a, b=b, m=m, n=n: task(a, b, m, n)
            for a in ("b", "b1") for b in ("b", "b1")
            for m in _modes(cfg.window) for n in _modes(cfg.window)]


def _suite_affine_rep(cfg):
    params = cfg.rep_params()
    states = build_states(cfg)
    pairs = list(itertools.combinations_with_replacement(AFFINE_GENERATORS, 2))

    def task(gA, gB, m, n):
        opA = tau_mode(gA, m, params)
        opB = tau_mode(gB, n, params)
        rhs_op = tau_realize(affine_bracket((gA, m), (gB, n)), params)
        name = "[%s_%d, %s_%d]" % (gA, m, gB, n)
        checks = []
        for label, s in states:
            got = commutator_apply(opA, opB, s)
            want = rhs_op.apply(s)
            checks.append(_state_check(
                "realized %s" % name,
                "realized bracket (w0 -> kappa0 + 4*delta_{r,0}, w1 -> 0)",
                label, got, want))
        return checks

    return [lambda a=a, b=b, m=m, n=n: task(a, b, m, n)
            for (a, b) in pairs
            for m in _modes(cfg.window) for n in _modes(cfg.window)]


def _suite_witt_rep(cfg):
    params = cfg.rep_params()
    states = build_states(cfg)

    def task(pair, m, n):
        kindA, kindB = pair
        checker = lambda_to_modes("pi_" + kindA, "pi_" + kindB,
                                  witt_rep_gj(pair, cfg.r), params)
        name = "[pi(%s)_%d, pi(%s)_%d]" % (kindA, m, kindB, n)
        checks = []
        for label, s in states:
            residual = checker(m, n, s)
            checks.append(_check(name, "mode expansion of the bracket fields",
                                 label, residual.is_zero(), repr(residual)))
        return checks

    return [lambda p=p, m=m, n=n: task(p, m, n)
            for p in WITT_REP_PAIRS
            for m in _modes(cfg.window) for n in _modes(cfg.window)]


_VIR_FAMILIES = (("D", "d"), ("D1", "d1"))

# Vacuum probes that isolate the central action: with B0 = 0 and B1 = 0 the
# non-central part of each bracket kills the vacuum, so the commutator must
# return exactly (cocycle value) * (realized central class) * |0>.
_VIR_PROBES = (
    ("D1", "D1", 2, -3),
    ("D1", "D1", 1, -2),
    ("D1", "D1", 0, -1),
    ("D", "D", -2, 0),
)


def _suite_virasoro_rep(cfg):
    params = cfg.rep_params()
    vparams = VirParams.standard(cfg.kappa0)
    states = build_states(cfg)

    def task(kA, famA, kB, famB, m, n):
        opA = pi_vir_mode(kA, m, params, vparams)
        opB = pi_vir_mode(kB, n, params, vparams)
        rhs_op = vir_realize(vir_bracket((famA, m + 1), (famB, n + 1)),
                             params, vparams)
        name = "[pi(%s)_%d, pi(%s)_%d]" % (kA, m, kB, n)
        rhs = "realized bracket (c1 -> %s, c2 -> 0)" % rat_str(central_charge(cfg.r))
        checks = []
        for label, s in states:
            got = commutator_apply(opA, opB, s)
            want = rhs_op.apply(s)
            checks.append(_state_check(name, rhs, label, got, want))
        return checks

    def probe_task(kA, kB, m, n):
        zero = RepParams(r=cfg.r, kappa0=cfg.kappa0, B0=0, B1=((0, 0), (0, 0)))
        famA = "d" if kA == "D" else "d1"
        famB = "d" if kB == "D" else "d1"
        value = phi1((famA, m + 1), (famB, n + 1)) * central_charge(cfg.r)
        vac = FockState.vacuum()
        got = commutator_apply(pi_vir_mode(kA, m, zero, vparams),
                               pi_vir_mode(kB, n, zero, vparams), vac)
        return [_state_check(
            "pure-central [pi(%s)_%d, pi(%s)_%d] with B0 = 0, B1 = 0"
            % (kA, m, kB, n),
            "%s * |0>" % rat_str(value),
            "vacuum", got, vac.scale(value))]

    tasks = [lambda a=a, fa=fa, b=b, fb=fb, m=m, n=n: task(a, fa, b, fb, m, n)
             for (a, fa) in _VIR_FAMILIES for (b, fb) in _VIR_FAMILIES
             for m in _modes(cfg.window) for n in _modes(cfg.window)
             if (a, b) != ("D1", "D")]
    tasks.extend(lambda a=a, b=b, m=m, n=n: probe_task(a, b, m, n)
                 for (a, b, m, n) in _VIR_PROBES)
    return tasks


def _suite_pairs_subset(cfg):
    params = cfg.rep_params()
    states = build_states(cfg)

    def task(item, m, n):
        lhs_a, lhs_b, j_terms = pairs_gj(item, params)
        checker = lambda_to_modes(lhs_a, lhs_b, j_terms, params)
        name = "item %d: [%s_%d, %s_%d]" % (item, lhs_a, m, lhs_b, n)
        checks = []
        for label, s in states:
            residual = checker(m, n, s)
            checks.append(_check(name, "mode expansion of the bracket fields",
                                 label, residual.is_zero(), repr(residual)))
        return checks

    return [lambda i=i, m=m, n=n: task(i, m, n)
            for i in PAIRS_ITEMS
            for m in _modes(cfg.window) for n in _modes(cfg.window)]


def _suite_density_module(cfg):
    def task(alpha):
        bad = density_module_check(alpha, cfg.window)
        residual = None
        if bad:
            (x, y, key), res = bad[0]
            residual = "%d violations; first at ([%s_%d, %s_%d], %s_%d): %r" % (
                len(bad), x[0], x[1], y[0], y[1], key[0], key[1], res)
        return [_check(
            "module axioms for U_alpha, alpha = %s, |modes| <= %d"
            % (rat_str(alpha), cfg.window),
            "0", "-", not bad, residual)]

    return [lambda a=a: task(a) for a in _DENSITY_ALPHAS]


def _suite_lambda_table(cfg):
    def task(j):
        closed = CohomClass(0, lambda_coeff(j))
        got = reduce_mod_dR(OneForm(ft=RRingElem.monomial(j, 1)))
        return [_check(
            "lambda(%d) closed form = %s" % (j, rat_str(closed.q1)),
            "class(t^%d u dt) = %r" % (j, got),
            "-", got == closed, repr(got - closed))]

    return [lambda j=j: task(j) for j in _modes(cfg.window)]


# Deliberately small windows whose failures report the observed index shift:
# a drifted mode convention shows up here as 'repaired by shift s' instead of
# as a wall of unexplained representation failures.
_AUDIT_LINES = (
    ("weight-one current pair", "item-1"),
    ("derivation family line", "d1-d1"),
)


def _suite_audit(cfg):
    params = cfg.rep_params()
    labelled = build_states(cfg)
    labels = [label for label, _ in labelled]
    states = [s for _, s in labelled]
    window = min(cfg.window, 2)
    mn_pairs = [(m, n) for m in range(-window, window + 1)
                for n in range(-window, window + 1)]

    def task(name, key):
        if key == "item-1":
            lhs_a, lhs_b, j_terms = pairs_gj(1, params)
        else:
            lhs_a, lhs_b = "pi_d1", "pi_d1"
            j_terms = witt_rep_gj(("d1", "d1"), cfg.r)
        rows = convention_audit(lhs_a, lhs_b, j_terms, params, mn_pairs, states)
        checks = []
        for row in rows:
            residual = None
            if not row["pass"]:
                if row["shift"] is None:
                    residual = "no uniform mode shift in {-2,-1,1,2} repairs it"
                else:
                    residual = ("identity holds after the uniform mode shift "
                                "K -> K + %d" % row["shift"])
            checks.append(_check(
                "audit %s: [%s_%d, %s_%d]" % (name, lhs_a, row["m"],
                                              lhs_b, row["n"]),
                "mode-translated bracket, no shift",
                labels[row["state"]], row["pass"], residual))
        return checks

    return [lambda name=name, key=key: task(name, key)
            for name, key in _AUDIT_LINES]


_SUITES = {
    "ring-witt": _suite_ring_witt,
    "kaehler-basis": _suite_kaehler_basis,
    "mu-compare": _suite_mu_compare,
    "affine-jacobi": _suite_affine_jacobi,
    "kassel-vs-table": _suite_kassel_vs_table,
    "cocycle-identity": _suite_cocycle_identity,
    "coboundary-window": _suite_coboundary_window,
    "heisenberg-rep": _suite_heisenberg_rep,
    "affine-rep": _suite_affine_rep,
    "witt-rep": _suite_witt_rep,
    "virasoro-rep": _suite_virasoro_rep,
    "pairs-subset": _suite_pairs_subset,
    "density-module": _suite_density_module,
    "lambda-table": _suite_lambda_table,
    "audit": _suite_audit,
}


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def thread_count():
    """Worker cap from THREEPV_THREADS (default 1, minimum 1)."""
    raw = os.environ.get("THREEPV_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _run_tasks(tasks):
    n = thread_count()
    if n <= 1:
        batches = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            batches = list(pool.map(lambda t: t(), tasks))
    checks = [c for batch in batches for c in batch]
    checks.sort(key=lambda c: (c["lhs"], c["rhs"], c["state"]))
    return checks


def run_suite(cfg):
    """Run one named suite and return its CheckReport."""
    builder = _SUITES.get(cfg.suite)
    if builder is None:
        raise ValueError("unknown suite: %s" % (cfg.suite,))
    checks = _run_tasks(builder(cfg))
    return CheckReport(cfg.suite, cfg.params_dict(), checks)
