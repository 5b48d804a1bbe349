"""``qcong``: run verification jobs and write JSON or tab-separated reports.

Exit status is 0 when every check passes, 1 when any check fails and 2
for usage errors.  Reports carry no timings; ``all`` prints its timing
summary on stderr so the report itself stays reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from qcong import reports as R
from qcong.errors import QcongError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class JobConfig:
    command: str
    precision: int | None = None
    alpha: int | None = None
    n_max: int | None = None
    modulus: int | None = None
    m_max: int | None = None
    r_max: int | None = None
    eta: list[str] = field(default_factory=list)
    fmt: str = "json"
    out: str | None = None
    csv: str | None = None
    jobs: int | None = None

    def params(self) -> dict:
        keys = ("precision", "alpha", "n_max", "modulus", "m_max", "r_max", "eta")
        return {k: getattr(self, k) for k in keys if getattr(self, k) not in (None, [])}


def _opt(v, default):
    return default if v is None else v


# -- the acceptance suite as independent units ----------------------------------
# each unit is (label, function name in reports, kwargs); run in this order

SUITE = (
    ("family alpha=1", "job_ladder", {"alpha": 1, "n_max": 2000}),
    ("family alpha=2", "job_ladder", {"alpha": 2, "n_max": 200}),
    ("family alpha=3", "job_ladder", {"alpha": 3, "n_max": 20}),
    ("L_1 in x", "job_xpoly", {"alpha": 1}),
    ("base identities", "job_appendix_a", {}),
    ("modular equations", "job_modeq", {"T": 1000}),
    ("cusp table", "job_table1", {}),
    ("radu bounds", "job_radu", {}),
    ("z = 1 + 5x", "job_z_relation", {"T": 2000}),
    ("h tables", "job_h_table_checks", {"m_max": 25, "n_max": 15}),
    ("route agreement", "job_routes", {}),
    ("h congruences", "job_h_congruences", {}),
    ("t_hat and aggregates", "job_that", {}),
    ("induction alpha <= 4", "job_main2", {"alpha_max": 4}),
    ("isolated congruences", "job_sturm", {}),
)


def _run_unit(unit) -> tuple[list[dict], float]:
    _, fn, kw = unit
    t0 = time.perf_counter()
    checks = getattr(R, fn)(**kw)
    return [c.to_json() for c in checks], time.perf_counter() - t0


def run_all(jobs: int | None) -> tuple[list[dict], list[tuple[str, float]]]:
    workers = jobs or os.cpu_count() or 1
    if workers <= 1:
        results = [_run_unit(u) for u in SUITE]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_unit, SUITE))
    checks = [c for cs, _ in results for c in cs]
    timings = [(u[0], t) for u, (_, t) in zip(SUITE, results)]
    return checks, timings


def _dispatch(cfg: JobConfig) -> list[R.Check]:
    c = cfg.command
    if c == "expand":
        return R.job_expand(cfg.eta[0] if cfg.eta else "Phi", _opt(cfg.precision, 50))
    if c == "eta-check":
        return R.job_eta_check(cfg.eta or ["Phi", "x", "z"])
    if c == "cusp-orders":
        return R.job_cusp_orders(cfg.eta[0] if cfg.eta else "Phi")
    if c == "table1":
        return R.job_table1()
    if c == "radu-bounds":
        return R.job_radu()
    if c == "ladder-verify":
        return R.job_ladder(_opt(cfg.alpha, 1), _opt(cfg.n_max, 200), cfg.modulus)
    if c == "xpoly":
        return R.job_xpoly(_opt(cfg.alpha, 1)) + R.job_z_relation(_opt(cfg.precision, 2000))
    if c == "appendix-a":
        return R.job_appendix_a()
    if c == "modeq":
        return R.job_modeq(_opt(cfg.precision, 1000))
    if c == "h-table":
        checks, tables = R.job_h_table(_opt(cfg.m_max, 25), _opt(cfg.n_max, 15))
        if cfg.csv:
            with open(cfg.csv, "w") as fh:
                for i in sorted(tables):
                    text = tables[i].to_csv()
                    fh.write(text if i == min(tables) else text.split("\n", 1)[1])
        return checks + R.job_routes()
    if c == "h-congruences":
        return R.job_h_congruences(_opt(cfg.m_max, 25))
    if c == "that-verify":
        return R.job_that(_opt(cfg.r_max, 500))
    if c == "main2-verify":
        return R.job_main2(_opt(cfg.alpha, 3))
    if c == "sturm-verify":
        return R.job_sturm()
    raise ValueError(f"unknown command {c!r}")


COMMANDS = (
    "expand", "eta-check", "cusp-orders", "table1", "radu-bounds", "ladder-verify", "xpoly",
    "appendix-a", "modeq", "h-table", "h-congruences", "that-verify", "main2-verify",
    "sturm-verify", "all",
)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    lines = [f"# {report['schema']}\t{report['command']}\t{report['status']}"]
    for c in report["checks"]:
        lines.append(f"{c['status']}\t{c['name']}\t{json.dumps(c['detail'], separators=(',', ':'))}")
    return "\n".join(lines) + "\n"


def run(cfg: JobConfig) -> tuple[int, dict]:
    """Execute one job; returns the exit status and the report."""
    if cfg.command == "all":
        checks, timings = run_all(cfg.jobs)
        rep = {
            "schema": R.SCHEMA,
            "command": "all",
            "config": cfg.params(),
            "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
            "checks": checks,
        }
        total = sum(t for _, t in timings)
        for name, t in timings:
            print(f"{t:9.1f}s  {name}", file=sys.stderr)
        print(f"{total:9.1f}s  total", file=sys.stderr)
    else:
        rep = R.report(cfg.command, cfg.params(), _dispatch(cfg))
    text = render(rep, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return (EXIT_PASS if rep["status"] == "pass" else EXIT_FAIL), rep


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcong", description="Exact verification jobs for the a_3 congruence family.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("eta", nargs="*", help="eta-quotients as 'N: d^r ...' or one of Phi, x, z")
    p.add_argument("--precision", "-T", type=_positive, help="series precision")
    p.add_argument("--alpha", type=_positive, help="ladder index (upper limit for main2-verify)")
    p.add_argument("--nmax", type=_positive, dest="n_max", help="largest n checked / largest n in h tables")
    p.add_argument("--modulus", type=_positive, help="override 5^alpha in ladder-verify")
    p.add_argument("--mmax", type=_positive, dest="m_max", help="largest m in h tables")
    p.add_argument("--rmax", type=_positive, dest="r_max", help="largest r in the inequality scan")
    p.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--csv", help="h-table: also write the h arrays as CSV")
    p.add_argument("--jobs", type=_positive, help="all: worker processes (default: CPU count)")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    cfg = JobConfig(**vars(ns))
    try:
        status, _ = run(cfg)
    except QcongError as exc:
        print(f"qcong: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, KeyError) as exc:
        print(f"qcong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return status


if __name__ == "__main__":
    sys.exit(main())
