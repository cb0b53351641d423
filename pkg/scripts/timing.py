"""Wall-clock cost of solving the initial vertex and checking every key equation."""

import argparse
import time
from dataclasses import dataclass

from gerbe_vertex.combinat import enumerate_weighted
from gerbe_vertex.series import SeriesRing
from gerbe_vertex.vertex import build_key_equation, solve_initial


@dataclass
class Config:
    window: int = 6
    cases: tuple = ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3))


def run(cfg: Config):
    print(f"{'m':>2} {'d':>2} {'headroom':>8} {'solve s':>8} {'residual s':>10} {'equations':>9}")
    for m, d in cfg.cases:
        ring = SeriesRing(m, -d - 2, cfg.window + d, cfg.window)
        t0 = time.perf_counter()
        table = solve_initial(m, d, ring)
        t1 = time.perf_counter()
        n = 0
        for k in range(1, d + 1):
            for mu in enumerate_weighted(k, m):
                if mu.n_trivial:
                    for s in range(1, m):
                        r = build_key_equation(m, mu, s, table)
                        assert r.agrees_with(ring.zero(), cfg.window, cfg.window)
                        n += 1
        t2 = time.perf_counter()
        print(f"{m:>2} {d:>2} {table.diagnostics['headroom']:>8} {t1 - t0:>8.2f} {t2 - t1:>10.2f} {n:>9}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=6)
    ap.add_argument("--quick", action="store_true", help="skip m = 3, d = 3")
    a = ap.parse_args()
    cfg = Config(window=a.window)
    if a.quick:
        cfg.cases = cfg.cases[:-1]
    run(cfg)
