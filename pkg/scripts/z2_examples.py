"""Print the degree-1 and degree-2 Z_2 vertices next to their trig closed forms, and the six Hodge predictions."""

from dataclasses import dataclass

from gerbe_vertex.closedforms import deg1_vertices, deg2_vertices, hodge_g1_derivatives, hodge_g2
from gerbe_vertex.combinat import WeightedPartition
from gerbe_vertex.series import SeriesRing
from gerbe_vertex.vertex import hodge_predictions, solve_initial


@dataclass
class Config:
    hi: int = 6
    x_order: int = 4


def main(cfg: Config = Config()):
    ring = SeriesRing(2, -4, cfg.hi, cfg.x_order)
    table = solve_initial(2, 2, ring)
    forms = {**deg1_vertices(ring), **deg2_vertices(ring)}
    for key in sorted(forms):
        got = table[WeightedPartition.parse(key)]
        same = got.agrees_with(forms[key], cfg.hi, cfg.x_order)
        print(f"{key}  closed form {'matches' if same else 'DIFFERS'}")
        print(f"  {got}")
    pring = SeriesRing(2, -4, 15, cfg.x_order + 1)
    pred = hodge_predictions(solve_initial(2, 2, pring))
    g2, g1 = hodge_g2(pring), hodge_g1_derivatives(pring)
    for g in (1, 2, 3):
        print(f"G(2,{g}) = {pred[(2, g)].with_prec(None, cfg.x_order)}"
              f"   sec-power display: {pred[(2, g)].agrees_with(g2[g], 0, cfg.x_order)}")
    for g in (1, 2, 3):
        der = pred[(1, g)].d_dx(1)
        print(f"G(1,{g}) = {pred[(1, g)].with_prec(None, cfg.x_order)}"
              f"   d/dx vs integrand: {der.agrees_with(g1[g], 0, cfg.x_order)},"
              f" vs minus integrand: {der.agrees_with(-g1[g], 0, cfg.x_order)}")


if __name__ == "__main__":
    main()
