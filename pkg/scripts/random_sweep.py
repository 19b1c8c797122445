"""Sweep random instances and report worst-case errors of every check.

Writes one JSON line per instance when ``--jsonl`` is given.
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

import numpy as np

from trigmoment.analysis import Tolerances, analyze
from trigmoment.errors import MomentError
from trigmoment.instances import random_contraction, random_instance, random_unitary
from trigmoment.lft import disk_grid, evaluate_transform, resolvent_oracle, taylor_moments


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 0
    instances: int = 300
    points: int = 20
    max_n: int = 3
    max_d: int = 3
    rank_tol: float = Tolerances.rank_tol
    jsonl: str | None = None


def run_instance(rng, cfg: SweepConfig) -> dict:
    m, _ = random_instance(rng, max_n=cfg.max_n, max_d=cfg.max_d)
    a = analyze(m, Tolerances(rank_tol=cfg.rank_tol))
    b = a.basis
    row = {"N": m.N, "d": m.d, "rho": b.rho, "tau": b.tau, "delta": b.delta,
           "borderline": bool(b.borderline or a.report.borderline)}
    S = m.S
    if a.determinate:
        mu = a.unique_solution()
        row["moment_err"] = max(float(np.abs(mu.moment(n) - S[n]).max()) for n in range(m.d + 1))
        return row
    c = a.coefficients
    F = random_contraction(rng, b.delta)
    zs = 0.95 * np.sqrt(rng.uniform(size=cfg.points)) * np.exp(2j * np.pi * rng.uniform(size=cfg.points))
    R = evaluate_transform(c, F, zs)
    row["oracle_err"] = max(float(np.abs(Rz - resolvent_oracle(b, a.gram, F, z)).max())
                            for z, Rz in zip(zs, R))
    row["taylor_err"] = float(np.abs(taylor_moments(c, F, m.d + 1) - S.transpose(0, 2, 1)).max())
    H = 2 * evaluate_transform(c, F, disk_grid()) - S[0].T
    row["caratheodory_min"] = float(np.linalg.eigvalsh((H + np.conj(np.swapaxes(H, -1, -2))) / 2).min())
    mu = a.extension(random_unitary(rng, b.delta))
    row["extension_err"] = max(float(np.abs(mu.moment(n) - S[n]).max()) for n in range(m.d + 1))
    return row


def main(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    rows, failures = [], []
    start = time.perf_counter()
    for i in range(cfg.instances):
        try:
            rows.append(run_instance(rng, cfg))
        except MomentError as exc:
            failures.append((i, exc.code, str(exc)))
    elapsed = time.perf_counter() - start
    if cfg.jsonl:
        with open(cfg.jsonl, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r) + "\n")
    det = sum("moment_err" in r for r in rows)
    print(f"config {asdict(cfg)}")
    print(f"{len(rows)} instances in {elapsed:.1f}s: {det} determinate, {len(rows) - det} indeterminate, "
          f"{sum(r['borderline'] for r in rows)} borderline, {len(failures)} errors")
    for key in ("oracle_err", "taylor_err", "extension_err", "moment_err"):
        vals = [r[key] for r in rows if key in r]
        if vals:
            print(f"  max {key}: {max(vals):.3e}")
    vals = [r["caratheodory_min"] for r in rows if "caratheodory_min" in r]
    if vals:
        print(f"  min caratheodory eigenvalue: {min(vals):.3e}")
    for f in failures:
        print("  error", *f)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default) if default is not None else str,
                       default=default)
    main(SweepConfig(**vars(p.parse_args())))
