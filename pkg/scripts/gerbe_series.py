"""Glued local BZ_m gerbe series C_d for small m and d, written as JSON."""

import argparse
import json
from dataclasses import dataclass

from gerbe_vertex.gerbe import gerbe_invariants
from gerbe_vertex.series import SeriesRing
from gerbe_vertex.vertex import solve_initial


@dataclass
class Config:
    m: int = 2
    d: int = 2
    hi: int = 6
    x_order: int = 4


def main(cfg: Config):
    table = solve_initial(cfg.m, cfg.d, SeriesRing(cfg.m, -2 * cfg.d, cfg.hi + cfg.d, cfg.x_order))
    out = {}
    for d in range(1, cfg.d + 1):
        s = gerbe_invariants(table, d).series.with_prec(cfg.hi, cfg.x_order)
        out[f"C{d}"] = {"rational": s.is_rational(), "terms": s.to_json()}
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=int, default=v)
    main(Config(**vars(ap.parse_args())))
