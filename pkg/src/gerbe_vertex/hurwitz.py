"""Wreath Hurwitz numbers and their generating series.

Two independent routes compute the same numbers: a character sum over the
irreducibles of Z_m wr S_d, and an explicit class-algebra computation in the
group itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from .chars import (
    char_table,
    enumerate_irreps,
    f_rho,
    f_tau0,
    rho_class,
    tau0_class,
)
from .combinat import (
    WeightedPartition,
    aut_order,
    canonicalize,
    enumerate_weighted,
    z_factor,
)
from .exactnum import CycloNum, Rational, field_new
from .series import SeriesRing, TruncSeries

__all__ = [
    "RubberSpec",
    "WreathGroupTable",
    "h_burnside",
    "h_bruteforce",
    "phi_series",
    "hurwitz_family",
    "connected_parts",
    "log_over_keys",
    "hurwitz_from_series",
    "check_deg",
    "BRUTE_CAP",
]

BRUTE_CAP = {"d": 3, "m": 3}


@dataclass(frozen=True)
class RubberSpec:
    """Boundary classes mu, nu, r transposition insertions and the insertion vector gamma."""

    m: int
    mu: WeightedPartition
    nu: WeightedPartition
    r: int = 0
    gamma: tuple[int, ...] = ()

    def __post_init__(self):
        if self.mu.m != self.m or self.nu.m != self.m:
            raise ValueError("mu and nu must share the same m")
        if self.mu.size != self.nu.size or self.mu.size < 1:
            raise ValueError("mu and nu must be nonempty of the same size")
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if self.r and self.mu.size < 2:
            raise ValueError("transposition insertions need d >= 2")
        g = tuple(sorted(self.gamma))
        if any(not 1 <= x <= self.m - 1 for x in g):
            raise ValueError("gamma entries must lie in 1..m-1")
        object.__setattr__(self, "gamma", g)

    @property
    def d(self) -> int:
        return self.mu.size

    @property
    def chi(self) -> int:
        return len(self.mu) + len(self.nu) - self.r


def h_burnside(spec: RubberSpec) -> CycloNum:
    """Character-sum evaluation of H^bullet."""
    d, m = spec.d, spec.m
    irreps, classes, rows = char_table(d, m)
    ia, ib = classes.index(spec.mu), classes.index(spec.nu)
    w = Rational(1, z_factor(spec.mu) * z_factor(spec.nu))
    total = field_new(m).zero()
    for xi, row in zip(irreps, rows):
        term = row[ia] * row[ib]
        if not term:
            continue
        if spec.r:
            term = term * f_tau0(xi) ** spec.r
        for g in spec.gamma:
            term = term * f_rho(xi, g)
        total = total + term
    return total * w


# -- explicit group --------------------------------------------------------

class WreathGroupTable:
    """Z_m wr S_d as explicit (colors, permutation) pairs with class data.

    Multiplication is (c, s)(c', s') = (c + s.c', s s') where
    (s.c')[s(i)] = c'[i] and (s s')(i) = s(s'(i)).
    """

    def __init__(self, d: int, m: int, cap: dict | None = None):
        cap = cap or BRUTE_CAP
        if d > cap["d"] or m > cap["m"]:
            raise ValueError(f"group Z_{m} wr S_{d} exceeds the brute-force cap {cap}")
        self.d, self.m = d, m
        perms = list(permutations(range(d)))
        colorings = _all_colorings(d, m)
        self.elements = [(c, p) for p in perms for c in colorings]
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.classes = list(enumerate_weighted(d, m))
        cidx = {c: i for i, c in enumerate(self.classes)}
        self.class_of = [cidx[self.element_type(e)] for e in self.elements]
        self.class_sizes = Counter(self.class_of)
        self.members = [[] for _ in self.classes]
        for i, c in enumerate(self.class_of):
            self.members[c].append(i)
        self._struct: dict = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        (c1, s1), (c2, s2) = a, b
        moved = [0] * self.d
        for i in range(self.d):
            moved[s1[i]] = c2[i]
        colors = tuple((x + y) % self.m for x, y in zip(c1, moved))
        perm = tuple(s1[s2[i]] for i in range(self.d))
        return colors, perm

    def element_type(self, e) -> WeightedPartition:
        colors, perm = e
        seen = [False] * self.d
        pairs = []
        for start in range(self.d):
            if seen[start]:
                continue
            length, total, i = 0, 0, start
            while not seen[i]:
                seen[i] = True
                total += colors[i]
                length += 1
                i = perm[i]
            pairs.append((length, total))
        return canonicalize(pairs, self.m)

    def structure(self, a: int, b: int) -> dict[int, int]:
        """Class-sum product C_a C_b = sum_k n_k C_k, as {k: n_k}."""
        key = (a, b)
        if key not in self._struct:
            counts: Counter = Counter()
            for i in self.members[a]:
                ei = self.elements[i]
                for j in self.members[b]:
                    counts[self.class_of[self.index[self.mul(ei, self.elements[j])]]] += 1
            self._struct[key] = {k: v // self.class_sizes[k] for k, v in counts.items()}
        return self._struct[key]

    def multiply_central(self, vec: dict[int, int], cls: int) -> dict[int, int]:
        out: Counter = Counter()
        for k, v in vec.items():
            for k2, n in self.structure(k, cls).items():
                out[k2] += v * n
        return dict(out)


def _all_colorings(d: int, m: int):
    if d == 0:
        return [()]
    return [c + (k,) for c in _all_colorings(d - 1, m) for k in range(m)]


@lru_cache(maxsize=None)
def _group(d: int, m: int) -> WreathGroupTable:
    return WreathGroupTable(d, m)


def h_bruteforce(spec: RubberSpec, cap: dict | None = None) -> CycloNum:
    """(1/|G|) times the identity coefficient of C_mu C_nu C_tau0^r prod C_rho."""
    d, m = spec.d, spec.m
    cap = cap or BRUTE_CAP
    if d > cap["d"] or m > cap["m"]:
        raise ValueError(f"brute force capped at d <= {cap['d']}, m <= {cap['m']}")
    G = _group(d, m) if cap is BRUTE_CAP else WreathGroupTable(d, m, cap)
    idx = {c: i for i, c in enumerate(G.classes)}
    vec = {idx[spec.mu]: 1}
    factors = [idx[spec.nu]]
    if spec.r:
        factors += [idx[tau0_class(d, m)]] * spec.r
    factors += [idx[rho_class(d, m, g)] for g in spec.gamma]
    for f in factors:
        vec = G.multiply_central(vec, f)
    ident = idx[canonicalize([(1, 0)] * d, m)]
    return field_new(m)(Rational(vec.get(ident, 0), G.order))


# -- generating series ------------------------------------------------------

@lru_cache(maxsize=None)
def _irrep_exponentials(d: int, m: int, ring: SeriesRing) -> tuple[TruncSeries, ...]:
    lam = ring.lam()
    out = []
    for xi in enumerate_irreps(d, m):
        arg = lam.scale(f_tau0(xi)) if d >= 2 else ring.zero()
        for i in range(1, m):
            arg = arg + (ring.x(i) * lam).scale(f_rho(xi, i))
        out.append(arg.exp())
    return tuple(out)


def phi_series(m: int, mu: WeightedPartition, nu: WeightedPartition, ring: SeriesRing) -> TruncSeries:
    """Phi^bullet_{mu,nu}(lambda; x) as a character sum of exponentials."""
    if mu.size != nu.size:
        raise ValueError("mu and nu must have the same size")
    if ring.m != m or mu.m != m or nu.m != m:
        raise ValueError("inconsistent m")
    d = mu.size
    irreps, classes, rows = char_table(d, m)
    ia, ib = classes.index(mu), classes.index(nu)
    w = Rational(1, z_factor(mu) * z_factor(nu))
    exps = _irrep_exponentials(d, m, ring)
    total = ring.zero()
    for row, ex in zip(rows, exps):
        c = row[ia] * row[ib]
        if c:
            total = total + ex.scale(c * w)
    return total


def hurwitz_family(m: int, d: int, ring: SeriesRing) -> dict:
    """Phi^bullet_{mu,nu} for every pair of weighted partitions of size 1..d."""
    fam = {}
    for k in range(1, d + 1):
        cl = enumerate_weighted(k, m)
        for a in cl:
            for b in cl:
                fam[(a, b)] = phi_series(m, a, b, ring)
    return fam


def _key_multiset(key) -> tuple:
    """Flatten a key (tuple of weighted partitions, one per leg) into a sorted monomial."""
    return tuple(sorted((leg, p, k) for leg, wp in enumerate(key) for p, k in wp.pairs))


def log_over_keys(family: dict, legs: int, m: int, ring: SeriesRing) -> dict:
    """Invert F^bullet = exp(F^circ) over p-monomials.

    ``family`` maps keys (tuples of ``legs`` weighted partitions) to series;
    the empty key is implicitly 1.  Truncation is by the largest total size
    per leg present in the family.
    """
    if not family:
        return {}
    mono_to_key = {}
    A = {}
    for key, val in family.items():
        mono = _key_multiset(key)
        mono_to_key[mono] = key
        A[mono] = val
    maxdeg = [max(key[leg].size for key in family) for leg in range(legs)]

    def fits(mono):
        sizes = [0] * legs
        for leg, p, _ in mono:
            sizes[leg] += p
        return all(s <= md for s, md in zip(sizes, maxdeg))

    def mul(X, Y):
        out = {}
        for a, va in X.items():
            for b, vb in Y.items():
                mono = tuple(sorted(a + b))
                if mono not in mono_to_key:
                    if fits(mono) and _balanced(mono, legs):
                        raise ValueError(f"family is missing the key for monomial {mono}")
                    continue
                t = va * vb
                out[mono] = out[mono] + t if mono in out else t
        return out

    result = {mono: v for mono, v in A.items()}
    power = A
    k = 1
    while True:
        k += 1
        power = mul(power, A)
        if not power:
            break
        coef = Rational((-1) ** (k + 1), k)
        for mono, v in power.items():
            result[mono] = result[mono] + v.scale(coef)
    return {mono_to_key[mono]: v for mono, v in result.items()}


def _balanced(mono, legs) -> bool:
    sizes = [0] * legs
    for leg, p, _ in mono:
        sizes[leg] += p
    return len(set(sizes)) == 1


def connected_parts(family: dict, m: int, ring: SeriesRing) -> dict:
    """Phi^circ from a complete family of Phi^bullet keyed by (mu, nu)."""
    return log_over_keys(family, 2, m, ring)


def hurwitz_from_series(series: TruncSeries, r: int, gamma: tuple[int, ...]) -> CycloNum:
    """Read H off a Phi-series: coefficient of lambda^(r+l(gamma)) x_gamma, times r! gamma!."""
    nv = series.ring.nvars
    ex = [0] * nv
    for g in gamma:
        ex[g - 1] += 1
    gfact = prod(factorial(e) for e in ex)
    c = series.coefficient(r + len(gamma), ex)
    return c * (factorial(r) * gfact)


@lru_cache(maxsize=None)
def _connected_family(m: int, d: int, ring: SeriesRing) -> dict:
    return connected_parts(hurwitz_family(m, d, ring), m, ring)


def check_deg(m: int, g: int, mu: WeightedPartition, nu: WeightedPartition, gamma=()) -> tuple[CycloNum, CycloNum]:
    """(wreath connected H, prediction from the m = 1 connected double Hurwitz number)."""
    gamma = tuple(sorted(gamma))
    d = mu.size
    if nu.size != d:
        raise ValueError("mu and nu must have the same size")
    r = 2 * g - 2 + len(mu) + len(nu)
    if r < 0:
        raise ValueError("negative branch-point count")
    if r and d < 2:
        f = field_new(m)
        return f.zero(), f.zero()
    n = len(gamma)
    ring = SeriesRing(m, 0, r + n, max(n, 0))
    wreath = hurwitz_from_series(_connected_family(m, d, ring)[(mu, nu)], r, gamma)
    ring1 = SeriesRing(1, 0, r, 0)
    mu1 = canonicalize([(p, 0) for p in mu.parts], 1)
    nu1 = canonicalize([(p, 0) for p in nu.parts], 1)
    base = hurwitz_from_series(_connected_family(1, d, ring1)[(mu1, nu1)], r, ())
    base_q = base.rational()
    if (sum(gamma) + sum(mu.monodromies) + sum(nu.monodromies)) % m:
        pred = Rational(0)
    else:
        ratio = Rational(aut_order(mu1) * aut_order(nu1), aut_order(mu) * aut_order(nu))
        pred = ratio * Rational(m) ** (2 * g - 1) * d**n * base_q
    return wreath, field_new(m)(pred)
