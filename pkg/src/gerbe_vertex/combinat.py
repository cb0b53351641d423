"""Partitions and Z_m-weighted partitions.

A weighted partition is a multiset of (part, monodromy) pairs with the
monodromy read mod m.  The canonical order sorts parts descending, then by
``k mod gcd(part, m)`` ascending, then by ``k`` ascending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, gcd, prod
from collections import Counter
from typing import Iterator

__all__ = [
    "Partition",
    "WeightedPartition",
    "canonicalize",
    "partitions",
    "enumerate_weighted",
    "kappa",
    "aut_order",
    "z_factor",
    "twist",
    "negate",
    "split_trivial",
    "concat",
    "sub_multisets",
    "partition_dim",
]

Partition = tuple  # weakly decreasing tuple of positive ints


def _sort_key(pair: tuple[int, int], m: int) -> tuple[int, int, int]:
    part, k = pair
    return (-part, k % gcd(part, m), k)


@dataclass(frozen=True, order=False)
class WeightedPartition:
    """Canonically ordered Z_m-weighted partition. Build with :func:`canonicalize`."""

    pairs: tuple[tuple[int, int], ...]
    m: int

    @property
    def size(self) -> int:
        return sum(p for p, _ in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def parts(self) -> Partition:
        return tuple(p for p, _ in self.pairs)

    @property
    def monodromies(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.pairs)

    @property
    def n_trivial(self) -> int:
        return sum(1 for _, k in self.pairs if k == 0)

    @property
    def n_nontrivial(self) -> int:
        return sum(1 for _, k in self.pairs if k != 0)

    def is_empty(self) -> bool:
        return not self.pairs

    def color_parts(self, k: int) -> Partition:
        """Underlying partition of the parts with monodromy k."""
        return tuple(p for p, kk in self.pairs if kk == k)

    def __str__(self) -> str:
        body = ",".join(f"({p},{k})" for p, k in self.pairs)
        return f"[{body}]@{self.m}"

    def __repr__(self) -> str:
        return f"WP{self}"

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> "WeightedPartition":
        """Read ``[(p1,k1),(p2,k2)]@m``; the ``@m`` suffix may be replaced by the argument."""
        text = text.strip()
        if "@" in text:
            body, mtxt = text.rsplit("@", 1)
            m_parsed = int(mtxt)
            if m is not None and m != m_parsed:
                raise ValueError(f"{text!r} is for m={m_parsed}, expected m={m}")
            m = m_parsed
        else:
            body = text
        if m is None:
            raise ValueError("weighted partition needs an m")
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"cannot parse weighted partition {text!r}")
        found = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", body)
        rest = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)", "", body[1:-1]).replace(",", "").strip()
        if rest:
            raise ValueError(f"cannot parse weighted partition {text!r}")
        return canonicalize([(int(p), int(k)) for p, k in found], m)


def canonicalize(pairs, m: int) -> WeightedPartition:
    """Reduce monodromies mod m and sort into canonical order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    red = []
    for p, k in pairs:
        if p < 1:
            raise ValueError(f"parts must be positive, got {p}")
        red.append((int(p), int(k) % m))
    red.sort(key=lambda pk: _sort_key(pk, m))
    return WeightedPartition(tuple(red), m)


def aut_order(wp: WeightedPartition) -> int:
    return prod(factorial(c) for c in Counter(wp.pairs).values())


def z_factor(wp: WeightedPartition) -> int:
    return aut_order(wp) * wp.m ** len(wp) * prod(wp.parts)


def twist(wp: WeightedPartition, s: int) -> WeightedPartition:
    """(part, k) -> (part, -k - part*s)."""
    return canonicalize([(p, -k - p * s) for p, k in wp.pairs], wp.m)


def negate(wp: WeightedPartition) -> WeightedPartition:
    return canonicalize([(p, -k) for p, k in wp.pairs], wp.m)


def split_trivial(wp: WeightedPartition) -> tuple[WeightedPartition, WeightedPartition]:
    triv = [pk for pk in wp.pairs if pk[1] == 0]
    nontriv = [pk for pk in wp.pairs if pk[1] != 0]
    return canonicalize(triv, wp.m), canonicalize(nontriv, wp.m)


def concat(a: WeightedPartition, b: WeightedPartition) -> WeightedPartition:
    if a.m != b.m:
        raise ValueError("cannot concatenate weighted partitions with different m")
    return canonicalize(a.pairs + b.pairs, a.m)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n, reverse-lexicographic (largest first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_weighted(d: int, m: int) -> tuple[WeightedPartition, ...]:
    """Every Z_m-weighted partition of d, sorted by canonical pair list."""
    if d < 1:
        raise ValueError("d must be >= 1")
    seen = set()
    for lam in partitions(d):
        groups = Counter(lam)
        choices = [list(combinations_with_replacement(range(m), c)) for c in groups.values()]
        for combo in _product(choices):
            pairs = [(p, k) for p, ks in zip(groups, combo) for k in ks]
            seen.add(canonicalize(pairs, m))
    return tuple(sorted(seen, key=lambda wp: wp.pairs))


def _product(lists) -> Iterator[tuple]:
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def kappa(p: Partition) -> int:
    return sum(x * (x - 2 * i + 1) for i, x in enumerate(p, start=1))


def partition_dim(p: Partition) -> int:
    """Dimension of the S_|p| irrep via the hook length formula."""
    n = sum(p)
    if n == 0:
        return 1
    conj = [sum(1 for x in p if x > j) for j in range(p[0])] if p else []
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def sub_multisets(wp: WeightedPartition) -> list[WeightedPartition]:
    """All distinct nonempty sub-multisets of wp, canonical."""
    counts = Counter(wp.pairs)
    keys = list(counts)
    out = []

    def rec(i, acc):
        if i == len(keys):
            if acc:
                out.append(canonicalize(acc, wp.m))
            return
        for c in range(counts[keys[i]] + 1):
            rec(i + 1, acc + [keys[i]] * c)

    rec(0, [])
    return out
