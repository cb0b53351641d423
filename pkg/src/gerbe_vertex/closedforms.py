"""Closed-form Z_2 series built from rational trig expansions.

These are oracles: they never touch the character machinery or the solver.
Each builder works in a widened ring and truncates, so the result is exact
on the full requested window.
"""

from __future__ import annotations

from .exactnum import Rational, field_new, root
from .series import SeriesRing, TruncSeries, csc_monomial, trig_oracle

__all__ = [
    "deg1_vertices",
    "framed_deg1_vertices",
    "deg2_vertices",
    "deg2_connected_11",
    "sec_power",
    "hodge_g1_derivatives",
    "hodge_g2",
    "gerbe_c1",
]

_MARGIN = 4


def _wide(ring: SeriesRing) -> SeriesRing:
    return SeriesRing(ring.m, min(ring.lo, -4), ring.hi + _MARGIN, ring.x_order + _MARGIN)


def _trig(w: SeriesRing, name: str, lam_c=0, lx_c=0, x_c=0) -> TruncSeries:
    """name(lam_c*lambda + lx_c*lambda*x + x_c*x) in ring w (one x-variable)."""
    arg = w.zero()
    if lam_c:
        arg = arg + w.lam().scale(lam_c)
    if lx_c:
        arg = arg + (w.lam() * w.x(1)).scale(lx_c)
    if x_c:
        arg = arg + w.x(1).scale(x_c)
    return trig_oracle(name, arg)


def _i():
    return root(field_new(2), 2)


def deg1_vertices(ring: SeriesRing) -> dict[str, TruncSeries]:
    """G_(1,0) = 1/(4 sin(l/2)) and G_(1,1) = i tan(l x/2)/(4 sin(l/2))."""
    w = _wide(ring)
    half = Rational(1, 2)
    csc = csc_monomial(w, half)
    g10 = csc.scale(Rational(1, 4))
    g11 = (csc * _trig(w, "tan", lx_c=half)).scale(_i() * Rational(1, 4))
    return {"[(1,0)]@2": g10.to_ring(ring), "[(1,1)]@2": g11.to_ring(ring)}


def framed_deg1_vertices(ring: SeriesRing, tau) -> dict[str, TruncSeries]:
    tau = Rational(tau)
    w = _wide(ring)
    half = Rational(1, 2)
    csc = csc_monomial(w, half).scale(Rational(1, 4))
    tan = _trig(w, "tan", lx_c=half)
    s = _trig(w, "sin", lx_c=tau) if tau else w.zero()
    c = _trig(w, "cos", lx_c=tau) if tau else w.one()
    i = _i()
    g11 = (csc * s).scale(i) + (csc * c * tan).scale(i)
    g10 = -(csc * s * tan) + csc * c
    return {"[(1,0)]@2": g10.to_ring(ring), "[(1,1)]@2": g11.to_ring(ring)}


def deg2_vertices(ring: SeriesRing) -> dict[str, TruncSeries]:
    w = _wide(ring)
    half = Rational(1, 2)
    tan = _trig(w, "tan", lx_c=half)
    sec = _trig(w, "sec", lx_c=half)
    denom = (_trig(w, "cos", lx_c=1) + _trig(w, "cos", lam_c=1)).inverse()
    csc1 = csc_monomial(w, 1)
    g21 = (tan * (_trig(w, "cos", lx_c=1) + _trig(w, "cos", lam_c=1) + 1) * csc1 * denom).scale(Rational(-1, 8))
    cschalf = csc_monomial(w, half)
    g1111 = (sec * sec * denom).scale(Rational(-1, 16)) - (cschalf * cschalf * tan * tan).scale(Rational(1, 32))
    return {"[(2,1)]@2": g21.to_ring(ring), "[(1,1),(1,1)]@2": g1111.to_ring(ring)}


def deg2_connected_11(ring: SeriesRing) -> TruncSeries:
    w = _wide(ring)
    half = Rational(1, 2)
    sec = _trig(w, "sec", lx_c=half)
    denom = (_trig(w, "cos", lx_c=1) + _trig(w, "cos", lam_c=1)).inverse()
    return (sec * sec * denom).scale(Rational(-1, 16)).to_ring(ring)


def sec_power(ring: SeriesRing, n: int) -> TruncSeries:
    """sec(x/2)^n as an x-series at lambda^0."""
    w = _wide(ring)
    sec = _trig(w, "sec", x_c=Rational(1, 2))
    return (sec**n).to_ring(ring)


_G1_INTEGRANDS = {
    1: {4: Rational(-1, 12), 6: Rational(5, 24)},
    2: {4: Rational(-1, 240), 6: Rational(-13, 288), 8: Rational(7, 96)},
    3: {4: Rational(-11, 30240), 6: Rational(1, 576), 8: Rational(-1, 48), 10: Rational(3, 128)},
}

_G2_FORMS = {
    1: {6: Rational(1, 16)},
    2: {6: Rational(-1, 192), 8: Rational(1, 64)},
    3: {6: Rational(1, 5760), 8: Rational(-1, 384), 10: Rational(1, 256)},
}


def _sec_combo(ring: SeriesRing, combo: dict) -> TruncSeries:
    out = ring.zero()
    for n, c in combo.items():
        out = out + sec_power(ring, n).scale(c)
    return out


def hodge_g1_derivatives(ring: SeriesRing) -> dict[int, TruncSeries]:
    """d/dx G(1,g) for g = 1, 2, 3 as combinations of sec powers."""
    return {g: _sec_combo(ring, c) for g, c in _G1_INTEGRANDS.items()}


def hodge_g2(ring: SeriesRing) -> dict[int, TruncSeries]:
    return {g: _sec_combo(ring, c) for g, c in _G2_FORMS.items()}


def gerbe_c1(ring: SeriesRing) -> TruncSeries:
    """Degree-one glued series: sec^2(l x/2)/(8 sin^2(l/2)) for m = 2, 1/(4 sin^2(l/2)) for m = 1."""
    w = SeriesRing(ring.m, min(ring.lo, -4), ring.hi + _MARGIN, ring.x_order + _MARGIN)
    csc = csc_monomial(w, Rational(1, 2))
    if ring.m == 1:
        return (csc * csc).scale(Rational(1, 4)).to_ring(ring)
    if ring.m == 2:
        sec = _trig(w, "sec", lx_c=Rational(1, 2))
        return (csc * csc * sec * sec).scale(Rational(1, 8)).to_ring(ring)
    raise ValueError("closed form available for m = 1, 2")
