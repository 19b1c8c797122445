"""Command line front end.

Exit status: 0 success, 1 error, 2 moments not solvable, 3 ``solve`` on an
indeterminate problem, 4 ``verify`` found an error above tolerance.  Errors are
reported on stderr as a single ``error[<code>]: <message>`` line.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import fileio
from .analysis import Analysis, Tolerances, analyze
from .errors import MomentError, NotUnitary
from .gram_space import DEFAULT_RANK_TOL
from .instances import random_contraction
from .lft import SchurParameter, evaluate_transform, resolvent_oracle, taylor_moments
from .moments import DEFAULT_PSD_TOL
from .determinacy import DEFAULT_DET_TOL

EXIT_OK, EXIT_ERROR, EXIT_NOT_SOLVABLE, EXIT_NOT_DETERMINATE, EXIT_VERIFY_FAILED = 0, 1, 2, 3, 4
COMMANDS = ("check", "solve", "coeffs", "evaluate", "extend", "verify")
VERIFY_TOL = 1e-8


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    param_path: str | None = None
    zeta: complex | None = None
    rank_tol: float = DEFAULT_RANK_TOL
    psd_tol: float = DEFAULT_PSD_TOL
    det_tol: float = DEFAULT_DET_TOL
    output_path: str | None = None
    seed: int | None = None
    measure_path: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command == "evaluate" and (self.zeta is None or self.param_path is None):
            raise ValueError("evaluate needs --zeta and --param")
        if self.command == "extend" and self.param_path is None:
            raise ValueError("extend needs --param (a constant unitary matrix)")


class _Failure(Exception):
    def __init__(self, status: int, code: str, message: str, report: str = ""):
        super().__init__(message)
        self.status, self.code, self.report = status, code, report


def _fmt(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def format_matrix(m) -> str:
    return "\n".join("  " + "  ".join(_fmt(complex(x)) for x in row) for row in np.asarray(m))


def _check_report(a: Analysis) -> list[str]:
    lines = [f"N: {a.moments.N}", f"d: {a.moments.d}",
             f"solvable: {str(a.solvability.solvable).lower()}",
             f"min_eigenvalue: {a.solvability.min_eigenvalue:.6e}"]
    if a.basis is None:
        return lines
    b, r = a.basis, a.report
    lines += [f"rho: {b.rho}", f"tau: {b.tau}", f"delta: {b.delta}",
              f"omega1: {list(b.omega1)}", f"omega2: {list(b.omega2)}",
              f"determinate: {str(r.determinate).lower()}",
              f"route_b_defect: {r.defect}",
              "route_c_residuals: [" + ", ".join(f"{x:.3e}" for x in r.condition_c_residuals) + "]",
              f"routes_agree: {str(r.agree).lower()}"]
    if b.borderline or r.borderline:
        lines.append("warning: a rank decision lies within a factor 10 of its tolerance")
    return lines


def _require_solvable(a: Analysis, lines: list[str]):
    if not a.solvability.solvable:
        raise _Failure(EXIT_NOT_SOLVABLE, "not-solvable",
                       f"block Toeplitz matrix is not PSD (min eigenvalue "
                       f"{a.solvability.min_eigenvalue:.6e})", "\n".join(lines))


def _load_param(cfg: RunConfig, validate=True) -> SchurParameter:
    return fileio.parse_parameter(fileio.read_text(cfg.param_path), cfg.param_path, validate)


def _emit(cfg: RunConfig, text: str, lines: list[str], what: str):
    if cfg.output_path:
        Path(cfg.output_path).write_text(text + "\n")
        lines.append(f"wrote {what}: {cfg.output_path}")
    else:
        lines.append(text)


def _moment_error(mu, S) -> float:
    return max(float(np.abs(mu.moment(n) - S[n]).max()) for n in range(len(S)))


def _verify(cfg: RunConfig, a: Analysis, lines: list[str]) -> bool:
    S = a.moments.S
    tol = VERIFY_TOL * max(1.0, float(np.linalg.norm(S[0])))
    rng = np.random.default_rng(0 if cfg.seed is None else cfg.seed)
    worst = 0.0
    if cfg.measure_path:
        mu = fileio.parse_measure(fileio.read_text(cfg.measure_path), cfg.measure_path)
        if mu.N != a.moments.N:
            raise MomentError(f"measure has N = {mu.N}, moments have N = {a.moments.N}")
        worst = _moment_error(mu, S)
        lines.append(f"measure_file_moment_error: {worst:.3e}")
    elif a.determinate:
        mu = a.unique_solution()
        err = _moment_error(mu, S)
        zs = 0.9 * np.sqrt(rng.uniform(size=10)) * np.exp(2j * np.pi * rng.uniform(size=10))
        empty = np.zeros((0, 0))
        terr = max(float(np.abs(mu.herglotz(z).T - resolvent_oracle(a.basis, a.gram, empty, z)).max())
                   for z in zs)
        lines += [f"unique_solution_atoms: {len(mu.t)}",
                  f"unique_solution_moment_error: {err:.3e}",
                  f"unique_solution_transform_error: {terr:.3e}"]
        worst = max(err, terr)
    else:
        c = a.coefficients
        if cfg.param_path:
            params = [("file", _load_param(cfg))]
        else:
            params = [("zero", SchurParameter.constant(np.zeros((c.delta, c.delta)))),
                      ("identity", SchurParameter.constant(np.eye(c.delta))),
                      ("random", SchurParameter.constant(random_contraction(rng, c.delta)))]
        ST = S.transpose(0, 2, 1)
        for name, F in params:
            tm = taylor_moments(c, F, a.moments.d + 1)
            err = float(np.abs(tm - ST).max())
            worst = max(worst, err)
            lines.append(f"parameter {name}: taylor_moment_error: {err:.3e}")
            F0 = F.coeffs[0]
            if F.is_constant and np.allclose(F0.conj().T @ F0, np.eye(c.delta), atol=1e-9, rtol=0):
                mu = a.extension(F0)
                merr = _moment_error(mu, S)
                worst = max(worst, merr)
                lines.append(f"parameter {name}: measure_atoms: {len(mu.t)} "
                             f"measure_moment_error: {merr:.3e}")
    lines.append(f"max_moment_error: {worst:.3e}")
    lines.append(f"tolerance: {tol:.3e}")
    ok = worst <= tol
    lines.append(f"verified: {str(ok).lower()}")
    return ok


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, report text)``.

    Package errors propagate as exceptions so library callers see them;
    :func:`main` turns them into exit codes.
    """
    m = fileio.parse_moments(fileio.read_text(cfg.input_path), cfg.input_path)
    a = analyze(m, Tolerances(psd_tol=cfg.psd_tol, rank_tol=cfg.rank_tol, det_tol=cfg.det_tol))
    lines = _check_report(a)
    if cfg.command == "check":
        if not a.solvability.solvable:
            return EXIT_NOT_SOLVABLE, "\n".join(lines)
        return EXIT_OK, "\n".join(lines)
    _require_solvable(a, lines)
    status = EXIT_OK
    if cfg.command == "solve":
        if not a.determinate:
            raise _Failure(EXIT_NOT_DETERMINATE, "not-determinate",
                           f"problem is indeterminate (defect {a.basis.delta}); use coeffs/extend",
                           "\n".join(lines))
        _emit(cfg, fileio.dump_measure(a.unique_solution()), lines, "measure")
    elif cfg.command == "coeffs":
        if a.determinate:
            raise _Failure(EXIT_NOT_DETERMINATE, "not-indeterminate",
                           "problem is determinate; use solve", "\n".join(lines))
        _emit(cfg, fileio.dump_coefficients(a.coefficients), lines, "coefficients")
    elif cfg.command == "evaluate":
        if a.determinate:
            raise _Failure(EXIT_NOT_DETERMINATE, "not-indeterminate",
                           "problem is determinate; use solve", "\n".join(lines))
        F = _load_param(cfg)
        R = evaluate_transform(a.coefficients, F, cfg.zeta)
        lines += [f"zeta: {_fmt(cfg.zeta)}",
                  "transform_of_M_transpose (raw):", format_matrix(R),
                  "transform_of_M (transposed):", format_matrix(R.T)]
    elif cfg.command == "extend":
        if a.determinate:
            raise _Failure(EXIT_NOT_DETERMINATE, "not-indeterminate",
                           "problem is determinate; use solve", "\n".join(lines))
        F = _load_param(cfg, validate=False)
        if not F.is_constant:
            raise NotUnitary("extend needs a constant parameter")
        _emit(cfg, fileio.dump_measure(a.extension(F.coeffs[0])), lines, "measure")
    elif cfg.command == "verify":
        if not _verify(cfg, a, lines):
            status = EXIT_VERIFY_FAILED
    return status, "\n".join(lines)


def _parse_zeta(text: str) -> complex:
    try:
        re_, im_ = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None
    return complex(re_, im_)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trigmoment",
                                description="Truncated matrix trigonometric moment problem")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="moment file (JSON)")
    p.add_argument("--param", help="Schur parameter file (JSON)")
    p.add_argument("--zeta", type=_parse_zeta, help="evaluation point as RE,IM")
    p.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL)
    p.add_argument("--psd-tol", type=float, default=DEFAULT_PSD_TOL)
    p.add_argument("--det-tol", type=float, default=DEFAULT_DET_TOL)
    p.add_argument("--output", help="write the produced file here instead of stdout")
    p.add_argument("--seed", type=int, help="seed for the random parameter used by verify")
    p.add_argument("--measure", help="verify: check this measure file against the moments")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, input_path=args.input, param_path=args.param,
                        zeta=args.zeta, rank_tol=args.rank_tol, psd_tol=args.psd_tol,
                        det_tol=args.det_tol, output_path=args.output, seed=args.seed,
                        measure_path=args.measure)
    except ValueError as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        status, report = run(cfg)
    except _Failure as exc:
        if exc.report:
            print(exc.report)
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return exc.status
    except MomentError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(report)
    return status


if __name__ == "__main__":
    sys.exit(main())
