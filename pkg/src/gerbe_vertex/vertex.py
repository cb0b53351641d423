"""The one-leg vertex with a Z_m gerby leg.

Initial values (framing 0) come from three sources: a closed form when every
monodromy is trivial, a product rule for mixed monodromies, and a linear
system for the remaining all-nontrivial entries.  Framing is applied by an
explicit convolution with Phi^bullet.

The linear system is solved in graded coordinates.  Writing u_i = lambda*x_i,
a term lambda^e x^k has grade a = e - |k|, every Phi-entry is a power series
in lambda and u, and the system splits into one finite linear problem per
grade.  Each problem is solved on coefficients; a coefficient counts as known
only when the truncated equations determine it uniquely.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd

from .chars import char_table, f_rho, f_tau0
from .combinat import (
    WeightedPartition,
    aut_order,
    canonicalize,
    enumerate_weighted,
    negate,
    split_trivial,
    twist,
    z_factor,
)
from .exactnum import CycloNum, Rational, field_new, root, sqrt_minus_one_power
from .hurwitz import log_over_keys, phi_series
from .series import SeriesRing, TruncSeries, WindowError, csc_monomial

__all__ = [
    "VertexTable",
    "SolverError",
    "trivial_vertex",
    "s_of_eta",
    "key_equation_rows",
    "x_tilde",
    "build_key_equation",
    "solve_initial",
    "frame",
    "connected",
    "hodge_predictions",
]

log = logging.getLogger(__name__)

INF = 10**9


class SolverError(ArithmeticError):
    """The linear system for the initial values could not be solved to the requested window."""


@dataclass
class VertexTable:
    """G^bullet_mu(lambda; tau; x) for every weighted partition mu of size <= d_max."""

    m: int
    tau: Rational
    ring: SeriesRing
    d_max: int
    entries: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def __getitem__(self, mu: WeightedPartition) -> TruncSeries:
        if mu.is_empty():
            return self.ring.one()
        try:
            return self.entries[mu]
        except KeyError:
            raise KeyError(f"vertex table has no entry for {mu}") from None

    def __contains__(self, mu) -> bool:
        return mu.is_empty() or mu in self.entries

    def keys(self):
        return sorted(self.entries, key=lambda wp: (wp.size, wp.pairs))


# -- closed forms ---------------------------------------------------------------

def trivial_vertex(m: int, mu: WeightedPartition, ring: SeriesRing) -> TruncSeries:
    """Closed form for a weighted partition with every monodromy trivial."""
    if any(k for k in mu.monodromies):
        raise ValueError(f"{mu} has a nontrivial monodromy")
    if mu.m != m or ring.m != m:
        raise ValueError("inconsistent m")
    f = field_new(m)
    need = len(mu)
    wide = SeriesRing(m, min(ring.lo, -need), ring.hi + need, ring.x_order)
    out = wide.const(Rational(1, aut_order(mu)))
    for p in mu.parts:
        coef = -sqrt_minus_one_power(f, p + 1) * Rational(1, 2 * m * p)
        out = out * csc_monomial(wide, Rational(p, 2)).scale(coef)
    return out.to_ring(ring)


def s_of_eta(eta: WeightedPartition) -> int:
    """The framing index s attached to an all-nontrivial weighted partition."""
    m = eta.m
    if eta.is_empty() or any(k == 0 for k in eta.monodromies):
        raise ValueError(f"{eta} must be nonempty with every monodromy nontrivial")
    if canonicalize(eta.pairs, m) != eta:
        raise ValueError(f"{eta} is not canonical")
    eta1, h1 = eta.pairs[0]
    c = gcd(m, eta1)
    hbar = h1 % c
    sigma = [s for s in range(1, m) if (-h1 + eta1 * s - (-hbar)) % m == 0]
    idx = hbar if 1 <= h1 <= c - 1 else hbar + 1
    if not 1 <= idx <= len(sigma):
        raise ValueError(f"no admissible s for {eta}")
    return sigma[idx - 1]


def _row_of(eta: WeightedPartition) -> tuple[WeightedPartition, int]:
    s = s_of_eta(eta)
    m = eta.m
    (p1, _), rest = eta.pairs[0], eta.pairs[1:]
    mu = canonicalize([(p1, 0)] + [(p, h - p * s) for p, h in rest], m)
    return mu, s


def key_equation_rows(d: int, m: int) -> list[tuple[WeightedPartition, WeightedPartition, int]]:
    """(eta, row mu, s) for every all-nontrivial eta of size d."""
    out = []
    for eta in enumerate_weighted(d, m):
        if eta.n_trivial == 0:
            mu, s = _row_of(eta)
            out.append((eta, mu, s))
    return out


def x_tilde(m: int) -> list[CycloNum]:
    """Scalars (sqrt(-1))^(1 - 2i/m) for i = 1..m-1."""
    f = field_new(m)
    return [sqrt_minus_one_power(f, m - 2 * i, m) for i in range(1, m)]


def _source_of(nu: WeightedPartition, s: int) -> WeightedPartition:
    """The vertex index -w^s(nu) paired with nu."""
    return negate(twist(nu, s))


# -- residual of the linear system ---------------------------------------------

def build_key_equation(m: int, mu: WeightedPartition, s: int, table: VertexTable,
                       ring: SeriesRing | None = None) -> TruncSeries:
    """sum_nu G_{-w^s(nu)} Z_nu Phi_{-nu,mu}(-sqrt(-1) s lambda/m; x~), from table entries."""
    ring = ring or table.ring
    if not 1 <= s <= m - 1:
        raise ValueError("s must lie in 1..m-1")
    if mu.n_trivial < 1:
        raise ValueError("mu needs at least one trivial monodromy")
    f = field_new(m)
    c = -root(f, m) * Rational(s, m)
    xt = x_tilde(m)
    total = None
    for nu in enumerate_weighted(mu.size, m):
        src = _source_of(nu, s)
        if src not in table:
            raise KeyError(f"table lacks {src}")
        g = table[src].to_ring(ring)
        ph = phi_series(m, negate(nu), mu, ring).scale_vars(c, xt).scale(z_factor(nu))
        term = g * ph
        total = term if total is None else total + term
    return total


# -- graded polynomials ---------------------------------------------------------

def _upoly_mul(a: dict, b: dict, deg: int) -> dict:
    out: dict = {}
    if not a or not b or deg < 0:
        return out
    for ka, va in a.items():
        da = sum(ka)
        if da > deg:
            continue
        for kb, vb in b.items():
            if da + sum(kb) > deg:
                continue
            k = tuple(x + y for x, y in zip(ka, kb))
            t = va * vb
            out[k] = out[k] + t if k in out else t
    return {k: v for k, v in out.items() if v}


def _upoly_axpy(acc: dict, c, b: dict, deg: int):
    """acc += c * b, dropping terms above deg."""
    for k, v in b.items():
        if sum(k) <= deg:
            t = v * c
            acc[k] = acc[k] + t if k in acc else t


def _upoly_trunc(a: dict, deg: int) -> dict:
    return {k: v for k, v in a.items() if v and sum(k) <= deg}


class _Graded:
    """Series as grade -> polynomial in u, with a reliable u-degree per grade.

    Grades below ``v`` vanish; grades above ``amax`` are unknown.
    """

    __slots__ = ("v", "amax", "pieces", "prec")

    def __init__(self, v: int, amax: int, pieces: dict, prec: dict):
        self.v, self.amax, self.pieces, self.prec = v, amax, pieces, prec

    def piece(self, a: int) -> dict:
        return self.pieces.get(a, {})

    def prec_at(self, a: int) -> int:
        if a < self.v:
            return INF
        if a > self.amax:
            return -1
        return self.prec.get(a, -1)

    @classmethod
    def from_series(cls, s: TruncSeries, v: int, x_exact: bool = False) -> "_Graded":
        pieces: dict = {}
        for key, c in s.terms.items():
            a = key[0] - sum(key[1:])
            pieces.setdefault(a, {})[key[1:]] = c
        # a box (L, X) in (lambda, x) covers grade a up to u-degree min(X, L - a)
        amax = s.lam_prec
        prec = {a: (INF if x_exact else min(s.x_prec, s.lam_prec - a)) for a in range(v, amax + 1)}
        return cls(v, amax, pieces, prec)

    def mul(self, other: "_Graded", ucap) -> "_Graded":
        v = self.v + other.v
        amax = min(self.amax + other.v, other.amax + self.v)
        while amax >= v and ucap(amax) < 0:
            amax -= 1
        pieces, prec = {}, {}
        for a in range(v, amax + 1):
            p = INF
            for b in range(self.v, a - other.v + 1):
                p = min(p, self.prec_at(b), other.prec_at(a - b))
            p = min(p, ucap(a))
            acc: dict = {}
            for b in range(self.v, a - other.v + 1):
                fa, fb = self.piece(b), other.piece(a - b)
                if fa and fb:
                    for k, val in _upoly_mul(fa, fb, p).items():
                        acc[k] = acc[k] + val if k in acc else val
            pieces[a] = {k: val for k, val in acc.items() if val}
            prec[a] = p
        return _Graded(v, amax, pieces, prec)

    def to_series(self, ring: SeriesRing, x_target: int) -> TruncSeries:
        """Back to (lambda, x) with the largest box compatible with x_target."""
        xp = x_target
        lp = ring.hi

        def covered(L):
            for a in range(min(self.v, ring.lo), L + 1):
                if a > self.amax:
                    return False
                if self.prec_at(a) < min(xp, L - a):
                    return False
            return True

        while lp >= ring.lo and not covered(lp):
            lp -= 1
        if lp < ring.lo:
            return TruncSeries(ring, {}, ring.lo - 1, xp)
        terms = {}
        for a, poly in self.pieces.items():
            for k, c in poly.items():
                e = a + sum(k)
                if e <= lp and sum(k) <= xp:
                    terms[(e,) + k] = c
        return TruncSeries(ring, terms, lp, xp)


def _exp_linear(coeffs: list, deg: int, nv: int, f) -> dict:
    """exp(sum_i coeffs[i] u_i) truncated at total degree deg."""
    out = {(0,) * nv: f.one()}
    for i, c in enumerate(coeffs):
        if not c:
            continue
        uni = {}
        pw = f.one()
        for n in range(deg + 1):
            k = [0] * nv
            k[i] = n
            uni[tuple(k)] = pw * Rational(1, factorial(n))
            pw = pw * c
        out = _upoly_mul(out, uni, deg)
    return out


# -- solver ---------------------------------------------------------------------

@dataclass
class _Context:
    m: int
    hi: int
    xo: int

    def ucap(self, a: int) -> int:
        return max(-1, min(self.xo, self.hi - a))


def _grade_ok(a: int, length: int) -> bool:
    return a >= -length and (a - length) % 2 == 0


class _Elim:
    """Incremental elimination with affine expressions over pending unknowns."""

    CONST = -1

    def __init__(self, zero):
        self.zero = zero
        self.expr: dict = {}       # var -> {pending var | CONST: coeff}
        self.pending: set = set()
        self.users: dict = {}      # pending var -> resolved vars referencing it
        self.inconsistent = 0
        self._order: dict = {}

    def add_var(self, var, order_key):
        self.pending.add(var)
        self.expr[var] = {var: 1}
        self.users[var] = set()
        self._order[var] = order_key

    def add_equation(self, combo: dict, const):
        """sum combo[var] * var + const = 0."""
        acc: dict = {}
        if const:
            acc[self.CONST] = const
        for var, c in combo.items():
            for p, v in self.expr[var].items():
                t = v * c
                acc[p] = acc[p] + t if p in acc else t
        acc = {p: v for p, v in acc.items() if v}
        vars_ = [p for p in acc if p != self.CONST]
        if not vars_:
            if acc:
                self.inconsistent += 1
            return
        piv = min(vars_, key=lambda p: self._order[p])
        cinv = -acc.pop(piv).inverse()
        sol = {p: v * cinv for p, v in acc.items()}
        # substitute piv -> sol everywhere it occurs
        for user in list(self.users[piv]) + [piv]:
            e = self.expr[user]
            coef = e.pop(piv, None)
            if coef is None:
                continue
            for p, v in sol.items():
                t = v * coef
                if p in e:
                    nv = e[p] + t
                    if nv:
                        e[p] = nv
                    else:
                        del e[p]
                        if p != self.CONST:
                            self.users[p].discard(user)
                else:
                    e[p] = t
                    if p != self.CONST:
                        self.users[p].add(user)
        self.pending.discard(piv)
        del self.users[piv]

    def value(self, var):
        e = self.expr[var]
        if any(p != self.CONST for p in e):
            return None
        return e.get(self.CONST, self.zero)


def _solve_degree(ctx: _Context, d: int, known: dict, trivial: dict, diag: dict) -> dict:
    """Solve the all-nontrivial entries of size d given graded lower-degree entries."""
    m = ctx.m
    f = field_new(m)
    nv = m - 1
    rows = key_equation_rows(d, m)
    if not rows:
        return {}
    irreps, classes, table = char_table(d, m)
    cidx = {c: i for i, c in enumerate(classes)}
    unknowns = [eta for eta, _, _ in rows]
    uidx = {eta: i for i, eta in enumerate(unknowns)}
    svals = sorted({s for _, _, s in rows})
    xt = x_tilde(m)
    amax = ctx.hi
    umax = ctx.ucap(-d)

    def char(xi_i, wp):
        return table[xi_i][cidx[wp]]

    # graded known entries of size d (mixed or trivial), built by the product rule
    def known_entry(kappa):
        if kappa in known:
            return known[kappa]
        triv, nontriv = split_trivial(kappa)
        g = trivial[triv]
        if not nontriv.is_empty():
            g = g.mul(known[nontriv], ctx.ucap)
        known[kappa] = g
        return g

    # per (s, xi): F0 scalar, E polynomial, W_known graded pieces
    c_s = {s: -root(f, m) * Rational(s, m) for s in svals}
    f0 = [f_tau0(xi) if d >= 2 else Rational(0) for xi in irreps]
    E = {}
    for s in svals:
        for xi_i, xi in enumerate(irreps):
            coeffs = [c_s[s] * xt[i - 1] * f_rho(xi, i) for i in range(1, m)]
            E[(s, xi_i)] = _exp_linear(coeffs, umax, nv, f)

    # unknown column index for each (s, nu); known sources otherwise
    col_of = {}
    known_src = {}
    for s in svals:
        for nu in classes:
            src = _source_of(nu, s)
            if src in uidx:
                col_of[(s, nu)] = uidx[src]
            else:
                known_src[(s, nu)] = known_entry(src)

    vmin = min(-len(eta) for eta in unknowns)
    vknown = min((g.v for g in known_src.values()), default=vmin)
    v0 = min(vmin, vknown)

    # W_known[s, xi][a], with precision
    Wk: dict = {}
    Wk_prec: dict = {}
    for s in svals:
        for xi_i in range(len(irreps)):
            pieces, prec = {}, {}
            for a in range(v0, amax + 1):
                acc: dict = {}
                p = ctx.ucap(a)
                for nu in classes:
                    g = known_src.get((s, nu))
                    if g is None:
                        continue
                    w = char(xi_i, negate(nu))
                    if not w:
                        continue
                    p = min(p, g.prec_at(a))
                    _upoly_axpy(acc, w, g.piece(a), ctx.ucap(a))
                pieces[a] = acc
                prec[a] = p
            Wk[(s, xi_i)] = pieces
            Wk_prec[(s, xi_i)] = prec

    # Wtot = Wk + contributions of solved unknowns, filled grade by grade
    Wu: dict = {key: {} for key in Wk}
    Wu_prec: dict = {key: {} for key in Wk}

    # M0[row][col] = sum_xi X(mu) X(-nu_col) / Z_mu * E_xi
    row_info = []
    for eta, mu, s in rows:
        zmu = Rational(1, z_factor(mu))
        weights = {}
        for xi_i in range(len(irreps)):
            x = char(xi_i, mu)
            if x:
                weights[xi_i] = x * zmu
        row_info.append((mu, s, weights))
    M0 = []
    col_nu = {}
    for s in svals:
        for nu in classes:
            if (s, nu) in col_of:
                col_nu[(s, col_of[(s, nu)])] = nu
    for mu, s, weights in row_info:
        rowm = {}
        for j in range(len(unknowns)):
            nu = col_nu[(s, j)]
            acc: dict = {}
            for xi_i, w in weights.items():
                x = char(xi_i, negate(nu))
                if x:
                    _upoly_axpy(acc, w * x, E[(s, xi_i)], umax)
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                rowm[j] = acc
        M0.append(rowm)

    result_pieces = {j: {} for j in range(len(unknowns))}
    result_prec = {j: {} for j in range(len(unknowns))}
    stop_at = amax

    for a in range(v0, amax + 1):
        # T[a] for each (s, xi): known part at grade a and exponential tail of lower grades
        P: dict = {}
        Pprec: dict = {}
        need = ctx.ucap(a)
        for (s, xi_i) in Wk:
            p = min(need, Wk_prec[(s, xi_i)][a])
            acc = dict(Wk[(s, xi_i)][a])
            cf = c_s[s] * f0[xi_i]
            if cf:
                pw = f.one()
                for j in range(1, a - v0 + 1):
                    pw = pw * cf * Rational(1, j)
                    b = a - j
                    pb = min(Wk_prec[(s, xi_i)][b], Wu_prec[(s, xi_i)].get(b, INF))
                    p = min(p, pb)
                    _upoly_axpy(acc, pw, Wk[(s, xi_i)][b], p)
                    _upoly_axpy(acc, pw, Wu[(s, xi_i)].get(b, {}), p)
            acc = _upoly_trunc(acc, p)
            P[(s, xi_i)] = _upoly_mul(E[(s, xi_i)], acc, p) if acc else {}
            Pprec[(s, xi_i)] = p
        rhs = []
        rhs_prec = []
        for mu, s, weights in row_info:
            p = need
            acc: dict = {}
            for xi_i, w in weights.items():
                p = min(p, Pprec[(s, xi_i)])
            for xi_i, w in weights.items():
                _upoly_axpy(acc, w, P[(s, xi_i)], p)
            rhs.append({k: v for k, v in acc.items() if v})
            rhs_prec.append(p)
        D = min(rhs_prec)
        active = [j for j, eta in enumerate(unknowns) if _grade_ok(a, len(eta))]
        if D < 0:
            stop_at = a - 1
            break
        el = _Elim(f.zero())
        monos = _monomials(nv, D)
        for j in active:
            for k in monos:
                el.add_var((j, k), (sum(k), k, j))
        for deg in range(D + 1):
            for k2 in monos:
                if sum(k2) != deg:
                    continue
                for r_i, rowm in enumerate(M0):
                    combo = {}
                    for j, poly in rowm.items():
                        if j not in active:
                            continue
                        for k in _divisors(k2):
                            c = poly.get(tuple(x - y for x, y in zip(k2, k)))
                            if c:
                                combo[(j, k)] = c
                    const = rhs[r_i].get(k2)
                    el.add_equation(combo, const)
        if el.inconsistent:
            raise SolverError(f"inconsistent equations at grade {a} for size {d} (m={m})")
        for j in range(len(unknowns)):
            if j not in active:
                result_pieces[j][a] = {}
                result_prec[j][a] = INF
                continue
            poly = {}
            rel = -1
            for deg in range(D + 1):
                ok = True
                for k in monos:
                    if sum(k) == deg:
                        val = el.value((j, k))
                        if val is None:
                            ok = False
                            break
                        if val:
                            poly[k] = val
                if not ok:
                    break
                rel = deg
            result_pieces[j][a] = _upoly_trunc(poly, rel)
            result_prec[j][a] = rel
        # fold solved pieces into W
        for (s, xi_i) in Wu:
            acc: dict = {}
            p = INF
            for nu in classes:
                j = col_of.get((s, nu))
                if j is None:
                    continue
                w = char(xi_i, negate(nu))
                if not w:
                    continue
                p = min(p, result_prec[j][a])
                _upoly_axpy(acc, w, result_pieces[j][a], INF)
            Wu[(s, xi_i)][a] = _upoly_trunc(acc, p)
            Wu_prec[(s, xi_i)][a] = p
        diag.setdefault(d, {})[a] = {str(unknowns[j]): (None if result_prec[j][a] >= INF else result_prec[j][a])
                                     for j in range(len(unknowns))}
    out = {}
    for j, eta in enumerate(unknowns):
        last = max(result_prec[j], default=vmin - 1)
        out[eta] = _Graded(-len(eta), min(last, stop_at), result_pieces[j], result_prec[j])
    return out


@lru_cache(maxsize=None)
def _monomials(nv: int, deg: int) -> tuple:
    out = []

    def rec(i, rem, acc):
        if i == nv:
            out.append(tuple(acc))
            return
        for e in range(rem + 1):
            rec(i + 1, rem - e, acc + [e])

    for total in range(deg + 1):
        rec(0, total, [])
    return tuple(sorted(out, key=lambda k: (sum(k), k)))


@lru_cache(maxsize=None)
def _divisors(k: tuple) -> tuple:
    """Multi-indices below k componentwise."""
    if not k:
        return ((),)
    return tuple((e,) + rest for e in range(k[0] + 1) for rest in _divisors(k[1:]))


def _solve_graded(m: int, d_max: int, hi: int, xo: int, diag: dict) -> dict:
    ctx = _Context(m, hi, xo)
    ring_t = SeriesRing(m, -2 * d_max - 2, hi + 2 * d_max + 2, 0)
    trivial = {}
    for d in range(1, d_max + 1):
        for wp in enumerate_weighted(d, m):
            if wp.n_nontrivial == 0:
                s = trivial_vertex(m, wp, ring_t)
                trivial[wp] = _Graded.from_series(s, -len(wp), x_exact=True)
    f = field_new(m)
    empty = canonicalize([], m)
    trivial[empty] = _Graded(0, INF, {0: {(0,) * (m - 1): f.one()}}, {})
    known: dict = dict(trivial)
    for d in range(1, d_max + 1):
        solved = _solve_degree(ctx, d, known, trivial, diag)
        known.update(solved)
        for wp in enumerate_weighted(d, m):
            if wp not in known:
                triv, nontriv = split_trivial(wp)
                known[wp] = trivial[triv].mul(known[nontriv], ctx.ucap)
    known.pop(empty, None)
    return known


def solve_initial(m: int, d_max: int, ring: SeriesRing, max_headroom: int = 16) -> VertexTable:
    """Framing-zero vertex for every weighted partition of size <= d_max."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    if ring.m != m:
        raise ValueError("ring has a different m")
    if ring.lo > -d_max:
        raise WindowError(f"lambda-window must reach down to {-d_max}")
    h = 1
    while True:
        diag: dict = {}
        graded = _solve_graded(m, d_max, ring.hi + h, ring.x_order + h, diag)
        table = VertexTable(m, Rational(0), ring, d_max)
        short = []
        for wp, g in graded.items():
            if wp.n_nontrivial == 0:
                s = trivial_vertex(m, wp, ring)
            else:
                s = g.to_series(ring, ring.x_order)
            table.entries[wp] = s
            if s.lam_prec < ring.hi or s.x_prec < ring.x_order:
                short.append(wp)
        if not short:
            table.diagnostics = {"headroom": h, "reliable_u_degree": diag}
            return table
        log.info("headroom %d insufficient for %s; retrying", h, short[:3])
        if h >= max_headroom:
            raise SolverError(
                f"window exhausted: entries {[str(w) for w in short[:4]]} not reliable to "
                f"lambda^{ring.hi}, x-degree {ring.x_order} with headroom {h}"
            )
        h += 2


# -- framing ------------------------------------------------------------------

def frame(table0: VertexTable, tau, d: int | None = None, ring: SeriesRing | None = None) -> VertexTable:
    """Framed vertex: G_mu(tau) = sum_nu G_nu(0) Z_nu Phi_{-nu,mu}(sqrt(-1) tau lambda; x~)."""
    tau = Rational(tau)
    m = table0.m
    if (tau * m).denominator != 1:
        raise ValueError(f"tau={tau} must lie in (1/{m})Z")
    if table0.tau != 0:
        raise ValueError("frame expects a framing-zero table")
    ring = ring or table0.ring
    d = d or table0.d_max
    f = field_new(m)
    c = root(f, m) * tau
    xt = x_tilde(m)
    out = VertexTable(m, tau, ring, d)
    for k in range(1, d + 1):
        cl = enumerate_weighted(k, m)
        for mu in cl:
            total = None
            for nu in cl:
                ph = phi_series(m, negate(nu), mu, ring).scale_vars(c, xt).scale(z_factor(nu))
                term = table0[nu].to_ring(ring) * ph
                total = term if total is None else total + term
            out.entries[mu] = total
    return out


# -- connected parts and predictions ----------------------------------------------

def connected(table: VertexTable, mu: WeightedPartition | None = None):
    """Connected G_mu by inverting G^bullet = exp(G) over p-monomials."""
    fam = {(wp,): s for wp, s in table.entries.items()}
    conn = log_over_keys(fam, 1, table.m, table.ring)
    conn = {k[0]: v for k, v in conn.items()}
    if mu is None:
        return conn
    return conn[mu]


def hodge_predictions(table: VertexTable, genera=(1, 2, 3)) -> dict:
    """G(1,g) = 16/3 [lambda^(2g-1)] and G(2,g) = -8 [lambda^(2g)] of regraded degree-2 vertices (m = 2)."""
    if table.m != 2:
        raise ValueError("predictions are defined for m = 2")
    if table.tau != 0:
        raise ValueError("predictions need a framing-zero table")
    m = 2
    w21 = canonicalize([(2, 1)], m)
    w11 = canonicalize([(1, 1), (1, 1)], m)
    conn = connected(table)
    a_src = conn[w21].regrade_x_by_lambda()
    b_src = conn[w11].regrade_x_by_lambda()
    out = {}
    for g in genera:
        out[(1, g)] = a_src.coefficient(2 * g - 1).scale(Rational(16, 3))
        out[(2, g)] = b_src.coefficient(2 * g).scale(Rational(-8))
    return out
