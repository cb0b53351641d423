"""Exact computation of the framed one-leg orbifold vertex with a Z_m gerby leg."""
