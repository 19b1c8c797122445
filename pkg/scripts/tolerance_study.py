"""Failure rate of the rank decisions as a function of ``rank_tol``.

Too small a tolerance lets floating-point residuals (about sqrt(eps) relative
for a seminorm computed from a quadratic form) pass as genuine directions.
"""
import argparse
from collections import Counter
from dataclasses import dataclass

import numpy as np

from trigmoment.analysis import Tolerances, analyze
from trigmoment.errors import MomentError
from trigmoment.instances import random_instance


@dataclass(frozen=True)
class StudyConfig:
    seed: int = 1
    instances: int = 400
    tolerances: tuple = (1e-10, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4)


def main(cfg: StudyConfig):
    data = [random_instance(np.random.default_rng([cfg.seed, i]))[0] for i in range(cfg.instances)]
    print(f"{'rank_tol':>9}  {'ok':>5}  {'borderline':>10}  errors")
    for tol in cfg.tolerances:
        errors, ok, border = Counter(), 0, 0
        for m in data:
            try:
                a = analyze(m, Tolerances(rank_tol=tol))
            except MomentError as exc:
                errors[exc.code] += 1
                continue
            ok += 1
            border += bool(a.basis.borderline)
        print(f"{tol:9.0e}  {ok:5d}  {border:10d}  {dict(errors)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=StudyConfig.seed)
    p.add_argument("--instances", type=int, default=StudyConfig.instances)
    args = p.parse_args()
    main(StudyConfig(seed=args.seed, instances=args.instances))
