"""Walk through the three-by-three indeterminate example and print every intermediate."""
import argparse
from dataclasses import dataclass

import numpy as np

from trigmoment.analysis import analyze
from trigmoment.cli import format_matrix
from trigmoment.instances import example_moments
from trigmoment.lft import evaluate_transform


@dataclass(frozen=True)
class Config:
    zeta: complex = 0.5 + 0.2j
    param: float = 1.0


def main(cfg: Config):
    a = analyze(example_moments())
    b, c = a.basis, a.coefficients
    np.set_printoptions(precision=6, suppress=True)
    print("Gram matrix:\n", a.gram.gamma.real)
    print(f"omega1 {b.omega1}  omega2 {b.omega2}  rho {b.rho}  tau {b.tau}  delta {b.delta}")
    print("n_norms", b.n_norms, " m_norms", b.m_norms)
    print("route (C) residuals", a.report.condition_c_residuals)
    print("h coefficients", c.h.real)
    for name in ("W", "T_mat", "K_mat", "G0", "C1"):
        print(f"{name}:\n{getattr(c, name).real}")
    for name in ("A_poly", "B_poly", "C_poly", "D_poly"):
        print(f"{name} coefficients (ascending):\n{getattr(c, name).coeffs.real}")
    F = np.array([[cfg.param]])
    print(f"transform of M^T at zeta = {cfg.zeta}, F = {cfg.param}:")
    print(format_matrix(evaluate_transform(c, F, cfg.zeta)))
    if abs(abs(cfg.param) - 1) < 1e-12:
        mu = a.extension(F)
        for t, m in mu.atoms:
            print(f"atom t = {t:.12f}\n{m.real}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--zeta", type=complex, default=Config.zeta)
    p.add_argument("--param", type=float, default=Config.param)
    args = p.parse_args()
    main(Config(zeta=args.zeta, param=args.param))
