"""Command-line entry point.

Every command prints either text or a JSON document of the shape
``{"config": ..., "results": [{"key": ..., "series" | "value": ...}], "diagnostics": ...}``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from .chars import char_table
from .checks import run_suite
from .combinat import WeightedPartition
from .exactnum import CycloNum, Rational, parse_rational
from .gerbe import gerbe_invariants
from .hurwitz import RubberSpec, h_bruteforce, h_burnside
from .series import SeriesRing, TruncSeries, WindowError
from .vertex import SolverError, frame, hodge_predictions, solve_initial

log = logging.getLogger("gerbe_vertex")

THREADS_ENV = "GERBE_VERTEX_THREADS"


@dataclass
class RunConfig:
    command: str
    m: int = 2
    d_max: int = 1
    tau: Rational = field(default_factory=lambda: Rational(0))
    lo: int | None = None
    hi: int = 8
    x_order: int = 8
    fmt: str = "text"
    approx: bool = False
    oracle: bool = False
    threads: int = 1
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("--m must be >= 1")
        if self.d_max < 1:
            raise ValueError("--d must be >= 1")
        if (self.tau * self.m).denominator != 1:
            raise ValueError(f"--tau {self.tau}: denominator must divide m={self.m}")
        if self.lo is None:
            self.lo = -2 * self.d_max
        if not self.lo <= 0 <= self.hi:
            raise ValueError("lambda window must satisfy lo <= 0 <= hi")
        if self.x_order < 0:
            raise ValueError("--x-order must be >= 0")
        if self.threads < 1:
            raise ValueError(f"{THREADS_ENV} must be >= 1")

    def public(self) -> dict:
        out = asdict(self)
        out["tau"] = str(self.tau)
        out["options"] = {k: v if isinstance(v, (bool, int)) else str(v) for k, v in self.options.items()}
        return out


# -- rendering -------------------------------------------------------------------

def _value_json(v, approx: bool) -> dict:
    out = {"value": str(v)}
    if approx:
        z = v.to_complex() if isinstance(v, CycloNum) else complex(float(v))
        out["approx"] = [z.real, z.imag]
    return out


def _series_json(s: TruncSeries, approx: bool) -> dict:
    terms = s.to_json()
    if approx:
        for t, (_, c) in zip(terms, s.sorted_terms()):
            z = c.to_complex()
            t["approx"] = [z.real, z.imag]
    return {"series": terms, "lambda_prec": s.lam_prec, "x_prec": s.x_prec}


def _emit(cfg: RunConfig, results: list[tuple[str, object]], diagnostics: dict, out) -> None:
    if cfg.fmt == "json":
        rows = []
        for key, v in results:
            row = {"key": key}
            row.update(_series_json(v, cfg.approx) if isinstance(v, TruncSeries) else _value_json(v, cfg.approx))
            rows.append(row)
        doc = {"config": cfg.public(), "results": rows, "diagnostics": diagnostics}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    for key, v in results:
        if isinstance(v, TruncSeries):
            out.write(f"{key} [lambda <= {v.lam_prec}, x-degree <= {v.x_prec}]:\n  {v}\n")
        else:
            line = f"{key}: {v}"
            if cfg.approx and isinstance(v, CycloNum):
                z = v.to_complex()
                line += f"  ~ {z.real:.12g}{z.imag:+.12g}i"
            out.write(line + "\n")


# -- commands ------------------------------------------------------------------------

def _cmd_char_table(cfg: RunConfig, out) -> int:
    irreps, classes, rows = char_table(cfg.d_max, cfg.m)
    results = []
    for xi, row in zip(irreps, rows):
        for cls, v in zip(classes, row):
            results.append((f"X{xi}{cls}", v))
    _emit(cfg, results, {"irreps": [str(x) for x in irreps], "classes": [str(c) for c in classes]}, out)
    return 0


def _cmd_hurwitz(cfg: RunConfig, out) -> int:
    o = cfg.options
    spec = RubberSpec(cfg.m, o["mu"], o["nu"], o["r"], o["gamma"])
    results = [("burnside", h_burnside(spec))]
    if cfg.oracle:
        results.append(("bruteforce", h_bruteforce(spec)))
    diag = {"chi": spec.chi}
    if cfg.oracle:
        diag["agree"] = results[0][1] == results[1][1]
    _emit(cfg, results, diag, out)
    return 0


def _table_ring(cfg: RunConfig, extra: int) -> SeriesRing:
    return SeriesRing(cfg.m, cfg.lo, cfg.hi + extra, cfg.x_order)


def _cmd_vertex(cfg: RunConfig, out) -> int:
    t0 = time.perf_counter()
    if cfg.options.get("predictions"):
        if cfg.m != 2:
            raise ValueError("--predictions needs --m 2")
        # regrading x -> x/lambda moves every x-degree-k term down by k
        ring = SeriesRing(2, -4, max(cfg.hi, cfg.x_order + 7), cfg.x_order + 1)
        table = solve_initial(2, 2, ring)
        pred = hodge_predictions(table)
        results = []
        for (leg, g), s in sorted(pred.items()):
            results.append((f"G({leg},{g})", s.with_prec(None, cfg.x_order)))
        log.info("predictions in %.2fs", time.perf_counter() - t0)
        _emit(cfg, results, table.diagnostics, out)
        return 0
    framed = cfg.tau != 0
    ring = _table_ring(cfg, cfg.d_max if framed else 0)
    table = solve_initial(cfg.m, cfg.d_max, ring)
    diag = dict(table.diagnostics)
    if framed:
        table = frame(table, cfg.tau)
    results = [(str(mu), table[mu].with_prec(cfg.hi, cfg.x_order)) for mu in table.keys()]
    log.info("vertex table in %.2fs", time.perf_counter() - t0)
    _emit(cfg, results, diag, out)
    return 0


def _cmd_gerbe(cfg: RunConfig, out) -> int:
    t0 = time.perf_counter()
    table = solve_initial(cfg.m, cfg.d_max, _table_ring(cfg, cfg.d_max))
    results = []
    for d in range(1, cfg.d_max + 1):
        g = gerbe_invariants(table, d)
        results.append((f"C{d}", g.series.with_prec(cfg.hi, cfg.x_order)))
    log.info("gerbe series in %.2fs", time.perf_counter() - t0)
    _emit(cfg, results, table.diagnostics, out)
    return 0


def _cmd_verify(cfg: RunConfig, out) -> int:
    """Check lines go to ``out``; wall-clock timings go to stderr so that ``out`` is reproducible."""
    t0 = time.perf_counter()

    def progress(res):
        sys.stderr.write(f"  {res.name}: {res.seconds:.1f}s\n")
        if cfg.fmt == "text":
            out.write(res.line(timing=False) + "\n")
            for f in res.failures[:10]:
                out.write(f"    {f}\n")
            out.flush()

    reports = run_suite(cfg.m, cfg.d_max, progress=progress)
    ok = all(r.passed for r in reports)
    sys.stderr.write(f"verify --m {cfg.m} --d {cfg.d_max}: {time.perf_counter() - t0:.1f}s\n")
    if cfg.fmt == "json":
        doc = {
            "config": cfg.public(),
            "results": [
                {"key": r.name, "value": "pass" if r.passed else "fail", "detail": r.detail, "failures": r.failures}
                for r in reports
            ],
            "diagnostics": {"passed": ok, "checks": len(reports)},
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed\n")
    return 0 if ok else 1


COMMANDS = {
    "char-table": _cmd_char_table,
    "hurwitz": _cmd_hurwitz,
    "vertex": _cmd_vertex,
    "gerbe": _cmd_gerbe,
    "verify": _cmd_verify,
}


# -- argument parsing -----------------------------------------------------------

def _gamma(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.replace(" ", "").split(","))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gerbe-vertex", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log solver progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, d=True, window=True):
        sp.add_argument("--m", type=int, default=2)
        if d:
            sp.add_argument("--d", type=int, default=1)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--approx", action="store_true", help="add floating renderings (display only)")
        if window:
            sp.add_argument("--lambda-order", type=int, default=8, help="highest lambda exponent kept")
            sp.add_argument("--lambda-lo", type=int, default=None, help="lowest lambda exponent (default -2d)")
            sp.add_argument("--x-order", type=int, default=8, help="highest total x-degree kept")

    common(sub.add_parser("char-table", help="character table of Z_m wr S_d"), window=False)
    h = sub.add_parser("hurwitz", help="a single wreath Hurwitz number")
    common(h, d=False, window=False)
    h.add_argument("--mu", required=True)
    h.add_argument("--nu", required=True)
    h.add_argument("--r", type=int, default=0)
    h.add_argument("--gamma", default="", help="comma-separated nontrivial monodromies")
    h.add_argument("--oracle", action="store_true", help="also compute by brute force in the group")
    v = sub.add_parser("vertex", help="the one-leg vertex table")
    common(v)
    v.add_argument("--tau", default="0")
    v.add_argument("--predictions", action="store_true", help="the six Hodge-integral predictions (m = 2)")
    common(sub.add_parser("gerbe", help="glued invariants C_d of the local BZ_m gerbe"))
    vf = sub.add_parser("verify", help="run the oracle and identity suite")
    common(vf, window=False)
    vf.add_argument("--suite", choices=("all",), default="all")
    return p


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV}={raw!r} is not an integer") from None


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    options = {}
    if ns.command == "hurwitz":
        options = {
            "mu": WeightedPartition.parse(ns.mu, ns.m),
            "nu": WeightedPartition.parse(ns.nu, ns.m),
            "r": ns.r,
            "gamma": _gamma(ns.gamma),
        }
    if ns.command == "vertex":
        options["predictions"] = ns.predictions
    cfg = RunConfig(
        command=ns.command,
        m=ns.m,
        d_max=getattr(ns, "d", None) or (options["mu"].size if "mu" in options else 1),
        tau=parse_rational(getattr(ns, "tau", "0")),
        lo=getattr(ns, "lambda_lo", None),
        hi=getattr(ns, "lambda_order", 8),
        x_order=getattr(ns, "x_order", 8),
        fmt=ns.format,
        approx=ns.approx,
        oracle=getattr(ns, "oracle", False),
        threads=_threads(),
    )
    cfg.options = options
    return cfg


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
    except (ValueError, ZeroDivisionError) as e:
        parser.error(str(e))
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (WindowError, SolverError, ValueError, KeyError) as e:
        sys.stderr.write(f"gerbe-vertex {cfg.command}: {type(e).__name__}: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
