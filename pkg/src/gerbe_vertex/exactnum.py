"""Exact arithmetic in Q and in the cyclotomic field Q(zeta_N), N = 4m.

Q(zeta_{4m}) is the smallest field holding sqrt(-1), every m-th root of unity
and the scalars (sqrt(-1))^{1-2i/m}, so a single field per m covers every
constant the vertex computation touches.

Elements are stored as coordinate tuples in the power basis
1, z, ..., z^{phi(N)-1} with z = zeta_N, each coordinate a reduced ``mpq``.
"""

from __future__ import annotations

import cmath
import re
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

Rational = mpq

__all__ = [
    "Rational",
    "CycloField",
    "CycloNum",
    "cyclotomic_poly",
    "field_new",
    "root",
    "sqrt_minus_one_power",
    "parse_rational",
]


def parse_rational(text: str) -> mpq:
    """Parse ``"p"`` or ``"p/q"`` into a reduced rational."""
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(int(p), int(q))
    return mpq(int(text))


# -- integer polynomial helpers (coefficient lists, lowest degree first) ------

def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                num[i - dq + j] -= c * den[j]
    rem = num[:dq] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Phi_n by exact division of x^n - 1 by Phi_k for every proper divisor k."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for k in range(1, n):
        if n % k == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(k)))
            if any(rem):
                raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(poly)


class CycloField:
    """Q(zeta_N) with N = 4m.

    ``minpoly`` holds the coefficients of Phi_N, lowest degree first.
    """

    __slots__ = ("m", "N", "degree", "minpoly", "_reduce", "_sparse_reduce", "_zero", "_one")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.N = 4 * m
        self.minpoly = cyclotomic_poly(self.N)
        self.degree = len(self.minpoly) - 1
        deg = self.degree
        # z^k for deg <= k <= 2*deg - 2, in the power basis
        red = {}
        cur = [-c for c in self.minpoly[:deg]]  # z^deg
        for k in range(deg, 2 * deg - 1):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(deg):
                    cur[j] -= top * self.minpoly[j]
        self._reduce = red
        self._sparse_reduce = {k: [(j, r) for j, r in enumerate(v) if r] for k, v in red.items()}
        self._zero = CycloNum(self, (mpq(0),) * deg)
        self._one = CycloNum(self, (mpq(1),) + (mpq(0),) * (deg - 1))

    def __repr__(self) -> str:
        return f"CycloField(m={self.m}, N={self.N})"

    def __reduce__(self):
        return (field_new, (self.m,))

    def zero(self) -> "CycloNum":
        return self._zero

    def one(self) -> "CycloNum":
        return self._one

    def __call__(self, value) -> "CycloNum":
        """Coerce an int, rational or CycloNum of this field."""
        if isinstance(value, CycloNum):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value
        return CycloNum(self, (mpq(value),) + (mpq(0),) * (self.degree - 1))

    def from_coords(self, coords) -> "CycloNum":
        coords = tuple(mpq(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        return CycloNum(self, coords)

    def parse(self, text: str) -> "CycloNum":
        """Inverse of ``str(CycloNum)``: a polynomial in ``z`` with rational coefficients."""
        s = text.replace(" ", "")
        if s == "0":
            return self._zero
        acc = self._zero
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m_ = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(z(?:\^(\d+))?)?", body)
            if not m_ or (m_.group(1) is None and m_.group(2) is None):
                raise ValueError(f"cannot parse cyclotomic term {body!r}")
            coef = parse_rational(m_.group(1)) if m_.group(1) else mpq(1)
            if sign == "-":
                coef = -coef
            power = 0
            if m_.group(2):
                power = int(m_.group(3)) if m_.group(3) else 1
            acc = acc + root(self, power) * coef
        return acc


@lru_cache(maxsize=None)
def field_new(m: int) -> CycloField:
    """Q(zeta_{4m}); cached so every caller shares one field object per m."""
    return CycloField(m)


class CycloNum:
    """An element of Q(zeta_N) with exact rational coordinates."""

    __slots__ = ("field", "c")

    def __init__(self, field: CycloField, coords: tuple):
        self.field = field
        self.c = coords

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other.field is not self.field:
                raise ValueError("cannot mix elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, type(mpq(0)))):
            return self.field(other)
        try:
            return self.field(mpq(other))
        except (TypeError, ValueError):
            return None

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.field.m, self.c))

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "CycloNum":
        """Multiply by a rational."""
        q = mpq(q)
        return CycloNum(self.field, tuple(a * q for a in self.c))

    def __mul__(self, other):
        if not isinstance(other, CycloNum):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        if other.field is not self.field:
            raise ValueError("cannot mix elements of different cyclotomic fields")
        a, b = self.c, other.c
        if not any(b[1:]):
            q = b[0]
            return CycloNum(self.field, tuple(x * q for x in a))
        if not any(a[1:]):
            q = a[0]
            return CycloNum(self.field, tuple(x * q for x in b))
        nza = [(i, x) for i, x in enumerate(a) if x]
        nzb = [(j, y) for j, y in enumerate(b) if y]
        if not nza or not nzb:
            return self.field._zero
        field = self.field
        deg = field.degree
        prod = [0] * (2 * deg - 1)
        for i, x in nza:
            for j, y in nzb:
                prod[i + j] += x * y
        out = prod[:deg]
        for k in range(deg, 2 * deg - 1):
            ck = prod[k]
            if ck:
                for j, r in field._sparse_reduce[k]:
                    out[j] += ck * r
        return CycloNum(field, tuple(mpq(v) for v in out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Inverse via the extended Euclidean algorithm modulo Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return self.field(1 / self.c[0])
        deg = self.field.degree
        # find u with u*a = 1 mod Phi_N over Q
        r0 = [mpq(c) for c in self.field.minpoly]
        r1 = _trim(list(self.c))
        s0, s1 = [mpq(0)], [mpq(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r1 is a nonzero constant
        inv_c = 1 / r1[0]
        u = [x * inv_c for x in s1]
        _, u = _qpoly_divmod(u, [mpq(c) for c in self.field.minpoly])
        u = u + [mpq(0)] * (deg - len(u))
        return CycloNum(self.field, tuple(u[:deg]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "CycloNum":
        """Complex conjugation, z -> z^{-1}."""
        f = self.field
        acc = f.zero()
        for k, ck in enumerate(self.c):
            if ck:
                acc = acc + root(f, -k) * ck
        return acc

    # -- rendering --------------------------------------------------------
    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.field.N)
        return sum(float(ck) * z**k for k, ck in enumerate(self.c))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            ck = self.c[k]
            if not ck:
                continue
            mag = abs(ck)
            if k == 0:
                body = _fmt_q(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{_fmt_q(mag)}*{mono}"
            terms.append(("-" if ck < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycloNum[{self.field.N}]({self})"


def _fmt_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(num: list, den: list) -> tuple[list, list]:
    num = _trim(list(num))
    den = _trim(list(den))
    if len(num) < len(den):
        return [mpq(0)], num
    lead = den[-1]
    quot = [mpq(0)] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / lead
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    rem = _trim(num[: len(den) - 1] or [mpq(0)])
    return quot, rem


def _qpoly_mul(a: list, b: list) -> list:
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [mpq(0)] * (n - len(a))
    b = b + [mpq(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def _root_cached(m: int, k: int) -> CycloNum:
    field = field_new(m)
    deg, N = field.degree, field.N
    k %= N
    if k < deg:
        coords = [mpq(0)] * deg
        coords[k] = mpq(1)
        return CycloNum(field, tuple(coords))
    # z^k = z^(k-1) * z, stays inside the degree-reduction table
    return _root_cached(m, k - 1) * _root_cached(m, 1)


def root(field: CycloField, k: int) -> CycloNum:
    """zeta_N^k, k taken mod N."""
    return _root_cached(field.m, k % field.N)


def sqrt_minus_one_power(field: CycloField, a: int, b: int = 1) -> CycloNum:
    """(sqrt(-1))^{a/b} on the principal branch, i.e. exp(i*pi*a/(2b)) = zeta_{4m}^{m a / b}."""
    if b <= 0:
        raise ValueError("denominator must be positive")
    g = gcd(a, b)
    a, b = a // g, b // g
    if (field.m * a) % b:
        raise ValueError(f"(sqrt(-1))^({a}/{b}) is not in Q(zeta_{field.N})")
    return root(field, field.m * a // b)
