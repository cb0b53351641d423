"""Truncated Laurent series in lambda and power series in x_1..x_{m-1}.

Coefficients live in Q(zeta_{4m}).  Every series carries a precision box
``(lam_prec, x_prec)``: all coefficients with lambda-exponent <= lam_prec and
total x-degree <= x_prec are exact, nothing outside the box is stored.
Arithmetic propagates the box, so a coefficient that could have been
influenced by discarded terms is never reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, lcm

from gmpy2 import mpq, mpz

from .exactnum import CycloField, CycloNum, Rational, field_new

__all__ = [
    "SeriesRing",
    "TruncSeries",
    "WindowError",
    "maclaurin",
    "trig_oracle",
    "csc_monomial",
]


class WindowError(ArithmeticError):
    """A result would need exponents outside the truncation window."""


@dataclass(frozen=True)
class SeriesRing:
    """Truncation context: lambda-window [lo, hi], total x-degree <= x_order."""

    m: int
    lo: int = -4
    hi: int = 10
    x_order: int = 10

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not self.lo <= 0 <= self.hi:
            raise ValueError("window must satisfy lo <= 0 <= hi")
        if self.x_order < 0:
            raise ValueError("x_order must be >= 0")

    @property
    def nvars(self) -> int:
        return self.m - 1

    @property
    def field(self) -> CycloField:
        return field_new(self.m)

    def zero(self) -> "TruncSeries":
        return TruncSeries(self, {})

    def one(self) -> "TruncSeries":
        return self.const(1)

    def const(self, c) -> "TruncSeries":
        c = self.field(c)
        return TruncSeries(self, {(0,) * (self.nvars + 1): c} if c else {})

    def monomial(self, c, e: int, k=None) -> "TruncSeries":
        """c * lambda^e * x^k."""
        k = tuple(k) if k is not None else (0,) * self.nvars
        if len(k) != self.nvars:
            raise ValueError(f"expected {self.nvars} x-exponents")
        if e < self.lo:
            raise WindowError(f"lambda^{e} is below the window")
        c = self.field(c)
        key = (e,) + k
        if e > self.hi or sum(k) > self.x_order or not c:
            return self.zero()
        return TruncSeries(self, {key: c})

    def lam(self) -> "TruncSeries":
        return self.monomial(1, 1)

    def x(self, i: int) -> "TruncSeries":
        """The variable x_i, 1-indexed."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"x_{i} does not exist for m={self.m}")
        k = [0] * self.nvars
        k[i - 1] = 1
        return self.monomial(1, 0, k)

    def widen(self, lam: int = 0, x: int = 0, lo: int = 0) -> "SeriesRing":
        return SeriesRing(self.m, self.lo - lo, self.hi + lam, self.x_order + x)


def _xdeg(key) -> int:
    return sum(key[1:])


class TruncSeries:
    """Immutable truncated series; see the module docstring for the precision contract."""

    __slots__ = ("ring", "terms", "lam_prec", "x_prec", "_packed")

    def __init__(self, ring: SeriesRing, terms: dict, lam_prec: int | None = None, x_prec: int | None = None):
        self.ring = ring
        lp = ring.hi if lam_prec is None else min(lam_prec, ring.hi)
        xp = ring.x_order if x_prec is None else min(x_prec, ring.x_order)
        self.lam_prec = lp
        self.x_prec = xp
        clean = {}
        for key, c in terms.items():
            if key[0] < ring.lo:
                if c:
                    raise WindowError(f"term lambda^{key[0]} below window lo={ring.lo}")
                continue
            if c and key[0] <= lp and _xdeg(key) <= xp:
                clean[key] = c
        self.terms = clean
        self._packed = None

    # -- basic queries ---------------------------------------------------
    @property
    def m(self) -> int:
        return self.ring.m

    def valuation(self) -> int:
        """Smallest stored lambda-exponent, lam_prec + 1 when nothing is stored."""
        if not self.terms:
            return self.lam_prec + 1
        return min(k[0] for k in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def with_prec(self, lam_prec: int | None = None, x_prec: int | None = None) -> "TruncSeries":
        lp = self.lam_prec if lam_prec is None else min(lam_prec, self.lam_prec)
        xp = self.x_prec if x_prec is None else min(x_prec, self.x_prec)
        return TruncSeries(self.ring, self.terms, lp, xp)

    def to_ring(self, ring: SeriesRing) -> "TruncSeries":
        """Move to another ring with the same m, keeping the common precision box."""
        if ring.m != self.m:
            raise ValueError("cannot change m")
        return TruncSeries(ring, self.terms, min(self.lam_prec, ring.hi), min(self.x_prec, ring.x_order))

    # -- additive structure ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + self.ring.const(other)
        self._check(other)
        lp = min(self.lam_prec, other.lam_prec)
        xp = min(self.x_prec, other.x_prec)
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                out[k] = out[k] + c
            else:
                out[k] = c
        return TruncSeries(self.ring, out, lp, xp)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.ring, {k: -c for k, c in self.terms.items()}, self.lam_prec, self.x_prec)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return self + (-self.ring.const(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        """Multiply by a constant (int, rational or CycloNum)."""
        c = self.ring.field(c)
        if not c:
            return TruncSeries(self.ring, {}, self.lam_prec, self.x_prec)
        return TruncSeries(self.ring, {k: v * c for k, v in self.terms.items()}, self.lam_prec, self.x_prec)

    # -- multiplication ----------------------------------------------------
    def _pack(self):
        """Integer form: (common denominator, [(e, xdeg, key, nonzero int coords)])."""
        if self._packed is None:
            den = 1
            for c in self.terms.values():
                for q in c.c:
                    if q:
                        den = lcm(den, int(q.denominator))
            items = []
            for key, c in self.terms.items():
                coords = tuple((j, int(q.numerator) * (den // int(q.denominator))) for j, q in enumerate(c.c) if q)
                items.append((key[0], _xdeg(key), key, coords))
            self._packed = (den, items)
        return self._packed

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        va, vb = self.valuation(), other.valuation()
        lp = min(self.ring.hi, self.lam_prec + vb, other.lam_prec + va)
        xp = min(self.x_prec, other.x_prec)
        if not self.terms or not other.terms:
            return TruncSeries(self.ring, {}, lp, xp)
        if va + vb < self.ring.lo:
            raise WindowError(f"product reaches lambda^{va + vb}, below window lo={self.ring.lo}")
        da, ia = self._pack()
        db, ib = other._pack()
        field = self.ring.field
        deg = field.degree
        acc: dict = {}
        for ea, xa, ka, ca in ia:
            lim_e = lp - ea
            lim_x = xp - xa
            for eb, xb, kb, cb in ib:
                if eb > lim_e or xb > lim_x:
                    continue
                key = tuple(u + v for u, v in zip(ka, kb))
                slot = acc.get(key)
                if slot is None:
                    slot = [0] * (2 * deg - 1)
                    acc[key] = slot
                for i, x in ca:
                    for j, y in cb:
                        slot[i + j] += x * y
        den = mpz(da) * mpz(db)
        red = field._sparse_reduce
        out = {}
        for key, slot in acc.items():
            vec = slot[:deg]
            for k in range(deg, 2 * deg - 1):
                ck = slot[k]
                if ck:
                    for j, r in red[k]:
                        vec[j] += ck * r
            if any(vec):
                out[key] = CycloNum(field, tuple(mpq(v, den) for v in vec))
        return TruncSeries(self.ring, out, lp, xp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- exp / log / inverse -------------------------------------------------
    def _nilpotent_check(self, what: str):
        for key in self.terms:
            if key[0] < 0 or (key[0] == 0 and _xdeg(key) == 0):
                raise ValueError(f"{what}: argument must have no constant or negative-lambda terms")

    def _horner(self, coeffs) -> "TruncSeries":
        """sum_n coeffs[n] * self^n for a nilpotent self."""
        acc = self.ring.zero().with_prec(self.lam_prec, self.x_prec)
        for c in reversed(coeffs):
            acc = acc * self + self.ring.const(c)
        return acc.with_prec(self.lam_prec, self.x_prec)

    def nil_order(self) -> int:
        """Number of powers of a nilpotent series that can be nonzero in the window."""
        if not self.terms:
            return 1
        return self.lam_prec + self.x_prec + 2

    def exp(self) -> "TruncSeries":
        self._nilpotent_check("exp")
        n = self.nil_order()
        return self._horner([Rational(1, factorial(k)) for k in range(n)])

    def log(self) -> "TruncSeries":
        const = self.terms.get((0,) * (self.ring.nvars + 1))
        if const is None or const != 1:
            raise ValueError("log: constant term must be 1")
        b = self - 1
        b._nilpotent_check("log")
        n = b.nil_order()
        return b._horner([mpq(0)] + [Rational((-1) ** (k + 1), k) for k in range(1, n)])

    def inverse(self) -> "TruncSeries":
        """Reciprocal of c*(1 + nilpotent) with c a nonzero constant."""
        const = self.terms.get((0,) * (self.ring.nvars + 1))
        if const is None:
            raise ValueError("inverse: constant term must be nonzero")
        cinv = const.inverse()
        b = self.scale(cinv) - 1
        b._nilpotent_check("inverse")
        n = b.nil_order()
        return b._horner([(-1) ** k for k in range(n)]).scale(cinv)

    # -- substitutions -------------------------------------------------------
    def scale_vars(self, c_lambda, c_x=None) -> "TruncSeries":
        """Substitute lambda -> c_lambda*lambda and x_i -> c_x[i]*x_i."""
        f = self.ring.field
        cl = f(c_lambda)
        cx = [f(c) for c in (c_x or [1] * self.ring.nvars)]
        if len(cx) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} x-scalars")
        pw_cache: dict = {}

        def pw(i, base, e):
            key = (i, e)
            if key not in pw_cache:
                pw_cache[key] = base**e
            return pw_cache[key]

        out = {}
        for key, c in self.terms.items():
            v = c * pw(-1, cl, key[0])
            for i, e in enumerate(key[1:]):
                if e:
                    v = v * pw(i, cx[i], e)
            out[key] = v
        return TruncSeries(self.ring, out, self.lam_prec, self.x_prec)

    def regrade_x_by_lambda(self) -> "TruncSeries":
        """Substitute x_i -> x_i / lambda."""
        out = {}
        for key, c in self.terms.items():
            e = key[0] - _xdeg(key)
            if e < self.ring.lo:
                raise WindowError(f"regrading reaches lambda^{e}, below window lo={self.ring.lo}")
            out[(e,) + key[1:]] = c
        return TruncSeries(self.ring, out, self.lam_prec - self.x_prec, self.x_prec)

    def d_dx(self, i: int = 1) -> "TruncSeries":
        """Partial derivative in x_i (1-indexed)."""
        if not 1 <= i <= self.ring.nvars:
            raise ValueError(f"x_{i} does not exist for m={self.m}")
        out = {}
        for key, c in self.terms.items():
            e = key[i]
            if e:
                nk = list(key)
                nk[i] -= 1
                out[tuple(nk)] = c * e
        return TruncSeries(self.ring, out, self.lam_prec, self.x_prec - 1)

    def coefficient(self, e_lambda: int, e_x=None):
        """Exact coefficient; with e_x omitted, the x-series at lambda^e_lambda."""
        if e_lambda > self.lam_prec or e_lambda < self.ring.lo:
            raise WindowError(f"lambda^{e_lambda} is outside the reliable window [{self.ring.lo}, {self.lam_prec}]")
        if e_x is None:
            out = {(0,) + key[1:]: c for key, c in self.terms.items() if key[0] == e_lambda}
            return TruncSeries(self.ring, out, self.ring.hi, self.x_prec)
        e_x = tuple(e_x)
        if len(e_x) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} x-exponents")
        if sum(e_x) > self.x_prec:
            raise WindowError(f"x-degree {sum(e_x)} beyond reliable x-order {self.x_prec}")
        return self.terms.get((e_lambda,) + e_x, self.ring.field.zero())

    def set_x_zero(self) -> "TruncSeries":
        out = {k: c for k, c in self.terms.items() if not _xdeg(k)}
        return TruncSeries(self.ring, out, self.lam_prec, self.x_prec)

    # -- comparison ----------------------------------------------------------
    def agrees_with(self, other: "TruncSeries", lam_max: int | None = None, x_max: int | None = None) -> bool:
        """Equality of every coefficient in the common reliable box (optionally clipped)."""
        self._check(other)
        lp = min(self.lam_prec, other.lam_prec)
        xp = min(self.x_prec, other.x_prec)
        if lam_max is not None:
            if lam_max > lp:
                raise WindowError(f"requested comparison to lambda^{lam_max} but reliable only to {lp}")
            lp = lam_max
        if x_max is not None:
            if x_max > xp:
                raise WindowError(f"requested comparison to x-degree {x_max} but reliable only to {xp}")
            xp = x_max
        keys = set(self.terms) | set(other.terms)
        zero = self.ring.field.zero()
        for k in keys:
            if k[0] <= lp and _xdeg(k) <= xp:
                if self.terms.get(k, zero) != other.terms.get(k, zero):
                    return False
        return True

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.ring == other.ring and self.terms == other.terms
                and self.lam_prec == other.lam_prec and self.x_prec == other.x_prec)

    __hash__ = None

    # -- rendering -------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            factors = [f"({c})"]
            if key[0]:
                factors.append("L" if key[0] == 1 else f"L^{key[0]}")
            for i, e in enumerate(key[1:], start=1):
                if e:
                    factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TruncSeries(m={self.m}, prec=({self.lam_prec},{self.x_prec}), {len(self.terms)} terms)"

    def to_json(self) -> list[dict]:
        return [{"lambda": k[0], "x": list(k[1:]), "coeff": str(c)} for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, ring: SeriesRing, data: list[dict], lam_prec=None, x_prec=None) -> "TruncSeries":
        f = ring.field
        return cls(ring, {(d["lambda"],) + tuple(d["x"]): f.parse(d["coeff"]) for d in data}, lam_prec, x_prec)


# -- univariate Maclaurin series ---------------------------------------------

def _series_div(num: list, den: list, n: int) -> list:
    out = []
    for k in range(n):
        s = num[k] if k < len(num) else mpq(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s / den[0])
    return out


@lru_cache(maxsize=None)
def maclaurin(name: str, n: int) -> tuple:
    """First n Maclaurin coefficients of a named function, as rationals."""
    sin = [mpq(0) if k % 2 == 0 else mpq((-1) ** (k // 2), factorial(k)) for k in range(n + 1)]
    cos = [mpq((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else mpq(0) for k in range(n + 1)]
    if name == "sin":
        out = sin
    elif name == "cos":
        out = cos
    elif name == "sinh":
        out = [abs(c) for c in sin]
    elif name == "cosh":
        out = [abs(c) for c in cos]
    elif name == "exp":
        out = [mpq(1, factorial(k)) for k in range(n + 1)]
    elif name == "tan":
        out = _series_div(sin, cos, n)
    elif name == "sec":
        out = _series_div([mpq(1)], cos, n)
    elif name == "t_over_sin":
        out = _series_div([mpq(1)], sin[1:], n)
    elif name == "t_over_sinh":
        out = _series_div([mpq(1)], [abs(c) for c in sin[1:]], n)
    else:
        raise ValueError(f"unknown function {name!r}")
    return tuple(out[:n])


_TRIG_NAMES = ("sin", "cos", "tan", "sec", "sinh", "cosh", "exp", "t_over_sin", "t_over_sinh")


def trig_oracle(name: str, argument: TruncSeries) -> TruncSeries:
    """f(argument) for a named rational Maclaurin series and a nilpotent argument."""
    if name not in _TRIG_NAMES:
        raise ValueError(f"unknown function {name!r}; choose from {_TRIG_NAMES}")
    argument._nilpotent_check(name)
    n = argument.nil_order()
    return argument._horner(list(maclaurin(name, n)))


def csc_monomial(ring: SeriesRing, c, e: int = 1) -> TruncSeries:
    """1/sin(c*lambda^e) as a Laurent series: lambda^(-e)/c * (t/sin t)(c*lambda^e)."""
    if e < 1:
        raise ValueError("csc_monomial needs a positive lambda-exponent")
    c = ring.field(c)
    if not c:
        raise ZeroDivisionError("csc of zero")
    wide = ring.widen(lam=e)
    t = wide.monomial(c, e)
    body = trig_oracle("t_over_sin", t)
    shifted = {(k[0] - e,) + k[1:]: v * c.inverse() for k, v in body.terms.items()}
    if -e < ring.lo:
        raise WindowError(f"csc needs lambda^{-e}, below window lo={ring.lo}")
    return TruncSeries(ring, shifted, body.lam_prec - e, body.x_prec)
