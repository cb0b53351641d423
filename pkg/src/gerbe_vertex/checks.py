"""Oracle and identity checks shared by the ``verify`` command and the test suite.

Every check returns a :class:`CheckResult`; none of them raises on a failed
comparison, so a caller can aggregate a full report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

from .chars import (
    char_table,
    enumerate_irreps,
    f_central,
    f_rho,
    f_tau0,
    identity_class,
    rho_class,
    tau0_class,
    wreath_char,
    wreath_dim,
)
from .closedforms import (
    deg1_vertices,
    deg2_connected_11,
    deg2_vertices,
    framed_deg1_vertices,
    gerbe_c1,
    hodge_g1_derivatives,
    hodge_g2,
)
from .combinat import WeightedPartition, enumerate_weighted, negate, z_factor
from .exactnum import Rational, field_new
from .gerbe import gerbe_invariants
from .hurwitz import RubberSpec, check_deg, h_bruteforce, h_burnside, phi_series
from .series import SeriesRing
from .vertex import build_key_equation, connected, frame, hodge_predictions, solve_initial

__all__ = ["CheckResult", "CHECKS", "run_suite"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self, timing: bool = True) -> str:
        tag = "PASS" if self.passed else "FAIL"
        t = f" ({self.seconds:.1f}s)" if timing else ""
        return f"[{tag}] {self.name}{t}: {self.detail}"


def _timed(name):
    def wrap(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            res = fn(*args, **kwargs)
            res.name = name
            res.seconds = time.perf_counter() - t0
            return res

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _wp(text: str, m: int) -> WeightedPartition:
    return WeightedPartition.parse(text, m)


# -- tables are expensive; share them across checks ---------------------------------

@lru_cache(maxsize=None)
def solved_table(m: int, d: int, lo: int, hi: int, x_order: int):
    return solve_initial(m, d, SeriesRing(m, lo, hi, x_order))


# -- characters -----------------------------------------------------------------

@_timed("characters")
def check_characters(ms=(1, 2, 3), d_dim=4, d_orth=3) -> CheckResult:
    """Group order from dimensions, column orthogonality, central-character closed forms."""
    fails = []
    for m in ms:
        for d in range(1, d_dim + 1):
            tot = sum(wreath_dim(x) ** 2 for x in enumerate_irreps(d, m))
            if tot != m**d * factorial(d):
                fails.append(f"sum dim^2 at m={m}, d={d}: {tot}")
        f = field_new(m)
        for d in range(1, d_orth + 1):
            irreps, classes, rows = char_table(d, m)
            for a, mu in enumerate(classes):
                for b, nu in enumerate(classes):
                    nb = classes.index(negate(nu))
                    s = f.zero()
                    for r in rows:
                        s = s + r[a] * r[nb]
                    want = z_factor(mu) if a == b else 0
                    if s != want:
                        fails.append(f"orthogonality m={m}, d={d}, {mu}, {nu}")
            for xi in irreps:
                if wreath_char(xi, identity_class(d, m)) != wreath_dim(xi):
                    fails.append(f"X(identity) != dim for {xi}")
                if d >= 2 and f_central(xi, tau0_class(d, m)) != f_tau0(xi):
                    fails.append(f"F(tau0) closed form for {xi}")
                for g in range(1, m):
                    if f_central(xi, rho_class(d, m, g)) != f_rho(xi, g):
                        fails.append(f"F(rho_{g}) closed form for {xi}")
    return CheckResult("", not fails, f"{len(fails)} failures", failures=fails)


# -- Hurwitz numbers --------------------------------------------------------------

@_timed("burnside = brute force")
def check_burnside(cases=((2, 1), (2, 2), (2, 3), (3, 1), (3, 2)), r_max=3, gamma_max=2) -> CheckResult:
    fails, n = [], 0
    for m, d in cases:
        classes = enumerate_weighted(d, m)
        gammas = [g for k in range(gamma_max + 1) for g in combinations_with_replacement(range(1, m), k)]
        for mu in classes:
            for nu in classes:
                for r in range(r_max + 1 if d >= 2 else 1):
                    for g in gammas:
                        spec = RubberSpec(m, mu, nu, r, g)
                        n += 1
                        if h_burnside(spec) != h_bruteforce(spec):
                            fails.append(f"m={m} {mu} {nu} r={r} gamma={g}")
    return CheckResult("", not fails, f"{n} specs, {len(fails)} mismatches", failures=fails)


@_timed("Phi convolution and lambda=0 slice")
def check_phi_identities(ms=(1, 2, 3), d_max=2, window=6) -> CheckResult:
    """Phi(a+b) = sum Phi(a) Z Phi(b), tested on window+1 ratios a:b, and Phi(0) = delta/Z."""
    fails = []
    for m in ms:
        ring = SeriesRing(m, 0, window, window)
        for d in range(1, d_max + 1):
            classes = enumerate_weighted(d, m)
            phi = {(a, b): phi_series(m, a, b, ring) for a in classes for b in classes}
            for (a, b), s in phi.items():
                want = Rational(1, z_factor(a)) if b == negate(a) else 0
                if s.coefficient(0, [0] * (m - 1)) != want or len(s.coefficient(0).terms) > 1:
                    fails.append(f"lambda=0 slice {a},{b}")
            # a single lambda stands in for two: lambda1 = lambda, lambda2 = t*lambda
            for t in range(window + 1):
                scaled = {k: v.scale_vars(t) for k, v in phi.items()}
                summed = {k: v.scale_vars(1 + t) for k, v in phi.items()}
                for a in classes:
                    for b in classes:
                        acc = ring.zero()
                        for xi in classes:
                            acc = acc + (phi[(a, xi)] * scaled[(negate(xi), b)]).scale(z_factor(xi))
                        if not acc.agrees_with(summed[(a, b)], window, window):
                            fails.append(f"convolution m={m} {a},{b} t={t}")
    return CheckResult("", not fails, f"{len(fails)} failures", failures=fails)


@_timed("connected wreath H vs m=1 prediction")
def check_deg_identity(m=2, d_max=2, g_max=2, n_max=2) -> CheckResult:
    fails, n, nonzero = [], 0, 0
    for d in range(1, d_max + 1):
        classes = enumerate_weighted(d, m)
        for g in range(g_max + 1):
            for mu in classes:
                for nu in classes:
                    for k in range(n_max + 1):
                        for gam in combinations_with_replacement(range(1, m), k):
                            w, p = check_deg(m, g, mu, nu, gam)
                            n += 1
                            nonzero += bool(w)
                            if w != p:
                                fails.append(f"g={g} {mu} {nu} gamma={gam}: {w} vs {p}")
    return CheckResult("", not fails, f"{n} cases ({nonzero} nonzero), {len(fails)} mismatches", failures=fails)


# -- vertex -----------------------------------------------------------------------

@_timed("key-equation residuals")
def check_residuals(m: int, d_max: int, window=6) -> CheckResult:
    table = solved_table(m, d_max, -d_max - 2, window + d_max, window)
    fails, n = [], 0
    for d in range(1, d_max + 1):
        for mu in enumerate_weighted(d, m):
            if mu.n_trivial < 1:
                continue
            for s in range(1, m):
                r = build_key_equation(m, mu, s, table)
                n += 1
                if not (r.lam_prec >= window and r.x_prec >= window):
                    fails.append(f"{mu} s={s}: residual reliable only to ({r.lam_prec},{r.x_prec})")
                elif not r.agrees_with(table.ring.zero(), window, window):
                    fails.append(f"{mu} s={s}: nonzero residual")
    return CheckResult("", not fails, f"m={m}, d<={d_max}: {n} equations, {len(fails)} nonzero", failures=fails)


@_timed("degree-1 Z2 vertex and framing")
def check_degree1(taus=(Rational(1, 2), Rational(1), Rational(3, 2)), hi=8, x_order=8) -> CheckResult:
    fails = []
    table = solved_table(2, 1, -2, hi + 1, x_order)
    ring = table.ring
    for key, want in deg1_vertices(ring).items():
        if not table[_wp(key, 2)].agrees_with(want, hi, x_order):
            fails.append(f"initial {key}")
    for tau in taus:
        framed = frame(table, tau)
        for key, want in framed_deg1_vertices(ring, tau).items():
            got = framed[_wp(key, 2)]
            if not got.agrees_with(want, hi, x_order):
                fails.append(f"tau={tau} {key}")
    return CheckResult("", not fails, f"window [-1,{hi}], x<={x_order}, taus {[str(t) for t in taus]}", failures=fails)


@_timed("degree-2 Z2 vertices")
def check_degree2(hi=8, x_order=8) -> CheckResult:
    fails = []
    table = solved_table(2, 2, -4, hi + 2, x_order)
    for key, want in deg2_vertices(table.ring).items():
        if not table[_wp(key, 2)].agrees_with(want, hi, x_order):
            fails.append(key)
    conn = connected(table, _wp("[(1,1),(1,1)]", 2))
    if not conn.agrees_with(deg2_connected_11(table.ring), hi, x_order):
        fails.append("connected (1,1)^2")
    return CheckResult("", not fails, f"window [-2,{hi}], x<={x_order}", failures=fails)


def hodge_comparison(x_order=8) -> dict:
    """Per-genus agreement of the six predictions with the sec-power displays.

    Keys (2, g) and (1, g) compare G(2,g) and d/dx G(1,g) literally; (1, g, "neg")
    compares d/dx G(1,g) with the negated integrand.
    """
    table = solved_table(2, 2, -4, 15, x_order + 1)
    pred = hodge_predictions(table)
    ring = table.ring
    g2 = hodge_g2(ring)
    g1 = hodge_g1_derivatives(ring)
    out = {}
    for g in (1, 2, 3):
        out[(2, g)] = pred[(2, g)].agrees_with(g2[g], 0, x_order)
        der = pred[(1, g)].d_dx(1)
        out[(1, g)] = der.agrees_with(g1[g], 0, x_order)
        out[(1, g, "neg")] = der.agrees_with(-g1[g], 0, x_order)
    return out


@_timed("Hodge predictions")
def check_hodge(x_order=8) -> CheckResult:
    """G(2,g) literally; d/dx G(1,g) against the integrands with x oriented as -x.

    The G_(2,1) closed form is odd in x and with it (16/3) a_g differentiates to
    minus the displayed integrands, exactly. The literal comparison is reported
    in the detail line.
    """
    cmp = hodge_comparison(x_order)
    fails = [f"G(2,{g})" for g in (1, 2, 3) if not cmp[(2, g)]]
    fails += [f"d/dx G(1,{g}) (x -> -x)" for g in (1, 2, 3) if not cmp[(1, g, "neg")]]
    literal = sum(cmp[(1, g)] for g in (1, 2, 3))
    return CheckResult("", not fails,
                       f"x-degree <= {x_order}; G(1,g) literal sign matches {literal}/3, opposite sign matches "
                       f"{sum(cmp[(1, g, 'neg')] for g in (1, 2, 3))}/3", failures=fails)


@_timed("framing composition")
def check_framing_composition(taus=((Rational(1, 2), Rational(1)),), d_max=2, window=6) -> CheckResult:
    """frame(frame(G, t1) as initial data, t2) = frame(G, t1 + t2)."""
    fails = []
    table = solved_table(2, d_max, -4, window + 2 * d_max, window)
    for t1, t2 in taus:
        a = replace(frame(table, t1), tau=Rational(0))
        twice = frame(a, t2)
        once = frame(table, t1 + t2)
        for mu in once.keys():
            if not twice[mu].agrees_with(once[mu], window, window):
                fails.append(f"{mu} at {t1}+{t2}")
    return CheckResult("", not fails, f"{len(fails)} failures", failures=fails)


# -- gerbe -------------------------------------------------------------------------

@_timed("gerbe gluing")
def check_gerbe(window=8) -> CheckResult:
    fails = []
    t2 = solved_table(2, 2, -4, window + 2, window)
    c1 = gerbe_invariants(t2, 1).series
    if not c1.agrees_with(gerbe_c1(t2.ring), window, window):
        fails.append("C1 (m=2)")
    c2 = gerbe_invariants(t2, 2).series
    if c2.lam_prec < window or c2.x_prec < window:
        fails.append(f"C2 (m=2) reliable only to ({c2.lam_prec},{c2.x_prec})")
    if not c2.is_rational():
        fails.append("C2 (m=2) has irrational coefficients")
    t1 = solved_table(1, 1, -2, window + 1, 0)
    c1m1 = gerbe_invariants(t1, 1).series
    if not c1m1.agrees_with(gerbe_c1(t1.ring), window, 0):
        fails.append("C1 (m=1)")
    return CheckResult("", not fails, f"window {window}", failures=fails)


# -- suites ---------------------------------------------------------------------------

def run_suite(m: int, d: int, window: int = 6, progress=None) -> list[CheckResult]:
    """Every check that applies at (m, d)."""
    plan = [
        lambda: check_characters(ms=(m,), d_dim=min(d + 1, 4), d_orth=min(d, 3)),
        lambda: check_burnside(cases=tuple((m, k) for k in range(1, min(d, 3) + 1)), r_max=3, gamma_max=2),
        lambda: check_phi_identities(ms=(m,), d_max=min(d, 2), window=window),
        lambda: check_deg_identity(m=m, d_max=min(d, 2), g_max=2, n_max=2),
        lambda: check_residuals(m, d, window),
    ]
    if m == 2:
        plan.append(lambda: check_degree1())
        if d >= 2:
            plan += [lambda: check_degree2(), lambda: check_hodge(), lambda: check_gerbe(),
                     lambda: check_framing_composition(window=window)]
    out = []
    for step in plan:
        res = step()
        out.append(res)
        if progress:
            progress(res)
    return out


CHECKS = {
    "characters": check_characters,
    "burnside": check_burnside,
    "phi": check_phi_identities,
    "deg": check_deg_identity,
    "residuals": check_residuals,
    "degree1": check_degree1,
    "degree2": check_degree2,
    "hodge": check_hodge,
    "framing": check_framing_composition,
    "gerbe": check_gerbe,
}
