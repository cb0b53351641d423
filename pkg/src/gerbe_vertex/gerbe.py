"""Invariants of the local BZ_m gerbe, glued from two framing-zero vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import enumerate_weighted, negate, z_factor
from .series import TruncSeries
from .vertex import VertexTable

__all__ = ["GerbeSeries", "gerbe_invariants", "gerbe_terms"]


@dataclass(frozen=True)
class GerbeSeries:
    m: int
    d: int
    series: TruncSeries


def gerbe_terms(table0: VertexTable, d: int) -> dict:
    """The signed summands (-1)^(d - l'(mu)) G_mu Z_mu G_{-mu}, keyed by mu."""
    if table0.tau != 0:
        raise ValueError("gluing needs framing-zero vertices")
    if d > table0.d_max:
        raise ValueError(f"table only reaches size {table0.d_max}")
    out = {}
    for mu in enumerate_weighted(d, table0.m):
        sign = -1 if (d - mu.n_trivial) % 2 else 1
        out[mu] = (table0[mu] * table0[negate(mu)]).scale(sign * z_factor(mu))
    return out


def gerbe_invariants(table0: VertexTable, d: int) -> GerbeSeries:
    total = table0.ring.zero()
    for term in gerbe_terms(table0, d).values():
        total = total + term
    return GerbeSeries(table0.m, d, total)
