"""Characters of S_d and of the wreath product Z_m wr S_d.

Ordinary characters come from the Murnaghan-Nakayama rule on beta-sets.
Wreath characters are evaluated by distributing the parts of a class over
the m colors, attaching the root-of-unity factor zeta_m^(-k*c) to a part of
monodromy k placed in color c.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from math import factorial, prod

from .combinat import (
    Partition,
    WeightedPartition,
    canonicalize,
    enumerate_weighted,
    kappa,
    partition_dim,
    partitions,
    z_factor,
)
from .exactnum import CycloNum, Rational, field_new, root

__all__ = [
    "WreathIrrep",
    "sym_char",
    "sym_char_frobenius",
    "enumerate_irreps",
    "wreath_dim",
    "wreath_char",
    "class_size",
    "f_central",
    "f_tau0",
    "f_rho",
    "tau0_class",
    "rho_class",
    "identity_class",
    "char_table",
]


@dataclass(frozen=True)
class WreathIrrep:
    """An m-tuple of partitions labelling an irreducible of Z_m wr S_d."""

    colors: tuple[Partition, ...]

    @property
    def m(self) -> int:
        return len(self.colors)

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.colors)

    def __str__(self) -> str:
        return "(" + ", ".join("(" + ",".join(map(str, p)) + ")" for p in self.colors) + ")"


# -- symmetric group ------------------------------------------------------

def _check_sizes(shape, cls):
    if sum(shape) != sum(cls):
        raise ValueError(f"size mismatch: shape {shape} vs class {cls}")


@lru_cache(maxsize=None)
def _mn_beta(beta: tuple[int, ...], cls: tuple[int, ...]) -> int:
    if not cls:
        return 1
    r, rest = cls[0], cls[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        sign = -1 if sum(1 for x in beta if nb < x < b) % 2 else 1
        new = tuple(sorted((bset - {b}) | {nb}, reverse=True))
        total += sign * _mn_beta(new, rest)
    return total


def sym_char(shape: Partition, cls: Partition) -> int:
    """chi^shape on the class of cycle type cls (Murnaghan-Nakayama)."""
    shape, cls = tuple(shape), tuple(sorted(cls, reverse=True))
    _check_sizes(shape, cls)
    n = len(shape)
    beta = tuple(shape[i] + n - 1 - i for i in range(n))
    return _mn_beta(beta, cls)


def sym_char_frobenius(shape: Partition, cls: Partition) -> int:
    """chi^shape(cls) as the coefficient of x^(shape+delta) in a_delta * p_cls.

    Independent of the rim-hook recursion; used as an oracle.
    """
    shape, cls = tuple(shape), tuple(cls)
    _check_sizes(shape, cls)
    n = max(len(shape), 1)
    lam = shape + (0,) * (n - len(shape))
    target = tuple(lam[i] + n - 1 - i for i in range(n))
    # power sums over n variables, monomials as exponent tuples
    poly = {(0,) * n: 1}
    for r in cls:
        new = {}
        for mono, c in poly.items():
            for i in range(n):
                e = list(mono)
                e[i] += r
                e = tuple(e)
                new[e] = new.get(e, 0) + c
        poly = new
    # a_delta = sum over permutations of sign * x^(sigma(delta))
    total = 0
    from itertools import permutations

    delta = tuple(n - 1 - i for i in range(n))
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        sgn = -1 if inv % 2 else 1
        need = tuple(target[i] - delta[perm[i]] for i in range(n))
        if min(need) < 0:
            continue
        total += sgn * poly.get(need, 0)
    return total


# -- wreath product -------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_irreps(d: int, m: int) -> tuple[WreathIrrep, ...]:
    """All m-tuples of partitions of total size d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    out = []

    def rec(remaining, prefix):
        if len(prefix) == m - 1:
            for p in partitions(remaining):
                out.append(WreathIrrep(prefix + (p,)))
            return
        for size in range(remaining, -1, -1):
            for p in partitions(size):
                rec(remaining - size, prefix + (p,))

    rec(d, ())
    return tuple(out)


def wreath_dim(irrep: WreathIrrep) -> int:
    d = irrep.size
    num = factorial(d) * prod(partition_dim(p) for p in irrep.colors)
    den = prod(factorial(sum(p)) for p in irrep.colors)
    return num // den


def _zeta_m(m: int, k: int) -> CycloNum:
    return root(field_new(m), 4 * k)


@lru_cache(maxsize=None)
def _wreath_char_cached(colors: tuple, pairs: tuple, m: int) -> CycloNum:
    field = field_new(m)
    targets = [sum(p) for p in colors]
    n = len(pairs)
    acc: dict[int, int] = {}  # exponent of zeta_m -> integer weight
    for coloring in iproduct(range(m), repeat=n):
        load = [0] * m
        for (p, _), c in zip(pairs, coloring):
            load[c] += p
        if load != targets:
            continue
        weight = 1
        for c in range(m):
            if colors[c]:
                cls = sorted((p for (p, _), cc in zip(pairs, coloring) if cc == c), reverse=True)
                weight *= sym_char(colors[c], tuple(cls))
                if not weight:
                    break
        if not weight:
            continue
        e = -sum(k * c for (_, k), c in zip(pairs, coloring)) % m
        acc[e] = acc.get(e, 0) + weight
    total = field.zero()
    for e, w in sorted(acc.items()):
        if w:
            total = total + root(field, 4 * e) * w
    return total


def wreath_char(irrep: WreathIrrep, cls: WeightedPartition) -> CycloNum:
    """Character of the irreducible ``irrep`` on the class ``cls``."""
    if irrep.m != cls.m:
        raise ValueError("irrep and class have different m")
    if irrep.size != cls.size:
        raise ValueError("irrep and class have different size")
    return _wreath_char_cached(irrep.colors, cls.pairs, cls.m)


def class_size(cls: WeightedPartition) -> int:
    d, m = cls.size, cls.m
    return m**d * factorial(d) // z_factor(cls)


def f_central(irrep: WreathIrrep, cls: WeightedPartition) -> CycloNum:
    """Eigenvalue of the class sum of ``cls`` on ``irrep``."""
    return wreath_char(irrep, cls) * Rational(class_size(cls), wreath_dim(irrep))


def identity_class(d: int, m: int) -> WeightedPartition:
    return canonicalize([(1, 0)] * d, m)


def tau0_class(d: int, m: int) -> WeightedPartition:
    if d < 2:
        raise ValueError("the transposition class needs d >= 2")
    return canonicalize([(2, 0)] + [(1, 0)] * (d - 2), m)


def rho_class(d: int, m: int, gamma: int) -> WeightedPartition:
    return canonicalize([(1, gamma)] + [(1, 0)] * (d - 1), m)


def f_tau0(irrep: WreathIrrep) -> Rational:
    if irrep.size < 2:
        raise ValueError("f_tau0 needs d >= 2")
    return Rational(irrep.m * sum(kappa(p) for p in irrep.colors), 2)


def f_rho(irrep: WreathIrrep, gamma: int) -> CycloNum:
    m = irrep.m
    field = field_new(m)
    total = field.zero()
    for j, p in enumerate(irrep.colors):
        if p:
            total = total + _zeta_m(m, -gamma * j) * sum(p)
    return total


@lru_cache(maxsize=None)
def char_table(d: int, m: int) -> tuple[tuple[WreathIrrep, ...], tuple[WeightedPartition, ...], tuple[tuple[CycloNum, ...], ...]]:
    """(irreps, classes, rows) with rows[i][j] = X_{irreps[i]}(classes[j])."""
    irreps = enumerate_irreps(d, m)
    classes = enumerate_weighted(d, m)
    rows = tuple(tuple(wreath_char(xi, mu) for mu in classes) for xi in irreps)
    return irreps, classes, rows
