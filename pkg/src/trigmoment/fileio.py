"""JSON file formats.

Every complex number is a two-element array ``[re, im]`` and every matrix a
list of rows of such pairs.  Atom positions are radians.

Moment file::

    {"N": 2, "d": 1, "S": [S_0, S_1]}

Measure file::

    {"N": 2, "atoms": [{"t": 0.0, "mass": [[...], [...]]}, ...]}

Parameter file (matrix polynomial ``F(z) = sum_k coeffs[k] z^k``)::

    {"delta": 1, "coeffs": [F_0, F_1, ...]}

Coefficient export: ``N, rho, tau, delta``, the convention note, ``h`` (list of
complex numbers, ascending powers), ``A, B, C, D`` (lists of coefficient
matrices, ascending powers) and the constant matrices ``W, T, K, G0, C1``.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .lft import NevanlinnaCoefficients, SchurParameter
from .measures import MatrixMeasure
from .moments import MomentSequence

TRANSPOSE_NOTE = ("R(z) = int 1/(1 - z e^{it}) dM^T(t): the transform is that of the "
                  "TRANSPOSED measure, R(0) = S_0^T")


def encode_complex(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def encode_matrix(m) -> list:
    return [[encode_complex(x) for x in row] for row in np.asarray(m)]


def _decode_complex(obj, where: str) -> complex:
    if (not isinstance(obj, list) or len(obj) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj)):
        raise ParseError(f"{where}: expected [re, im] pair of numbers, got {obj!r}")
    return complex(obj[0], obj[1])


def decode_matrix(obj, rows: int, cols: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != rows:
        got = len(obj) if isinstance(obj, list) else type(obj).__name__
        raise ParseError(f"{where}: expected {rows} rows, got {got}")
    out = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ParseError(f"{where} row {i}: expected {cols} entries, got {got}")
        for j, x in enumerate(row):
            out[i, j] = _decode_complex(x, f"{where}[{i}][{j}]")
    return out


def _dumps(doc: dict) -> str:
    """One top-level field per line; list-valued fields one element per line."""
    parts = []
    for key, val in doc.items():
        if isinstance(val, list) and val and isinstance(val[0], (list, dict)):
            inner = ",\n  ".join(json.dumps(x) for x in val)
            parts.append(f" {json.dumps(key)}: [\n  {inner}\n ]")
        else:
            parts.append(f" {json.dumps(key)}: {json.dumps(val)}")
    return "{\n" + ",\n".join(parts) + "\n}"


def _load(text: str, source: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: top level must be an object")
    return obj


def _int_field(obj: dict, key: str, source: str, minimum: int) -> int:
    val = obj.get(key)
    if not isinstance(val, int) or isinstance(val, bool) or val < minimum:
        raise ParseError(f"{source}: field {key!r} must be an integer >= {minimum}, got {val!r}")
    return val


def parse_moments(text: str, source: str = "<moments>") -> MomentSequence:
    obj = _load(text, source)
    N = _int_field(obj, "N", source, 1)
    d = _int_field(obj, "d", source, 1)
    S = obj.get("S")
    if not isinstance(S, list) or len(S) != d + 1:
        got = len(S) if isinstance(S, list) else type(S).__name__
        raise ParseError(f"{source}: field 'S' must hold d+1 = {d + 1} matrices, got {got}")
    mats = [decode_matrix(m, N, N, f"{source}: S[{n}]") for n, m in enumerate(S)]
    return MomentSequence(np.array(mats))


def dump_moments(m: MomentSequence) -> str:
    return _dumps({"N": m.N, "d": m.d, "S": [encode_matrix(s) for s in m.S]})


def parse_measure(text: str, source: str = "<measure>") -> MatrixMeasure:
    obj = _load(text, source)
    N = _int_field(obj, "N", source, 1)
    atoms = obj.get("atoms")
    if not isinstance(atoms, list):
        raise ParseError(f"{source}: field 'atoms' must be a list")
    ts, ms = [], []
    for p, atom in enumerate(atoms):
        if not isinstance(atom, dict) or not isinstance(atom.get("t"), (int, float)):
            raise ParseError(f"{source}: atoms[{p}] needs a numeric 't'")
        ts.append(float(atom["t"]))
        ms.append(decode_matrix(atom.get("mass"), N, N, f"{source}: atoms[{p}].mass"))
    try:
        return MatrixMeasure(N=N, t=np.array(ts), masses=np.array(ms).reshape(len(ts), N, N))
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from exc


def dump_measure(mu: MatrixMeasure) -> str:
    atoms = [{"t": float(t), "mass": encode_matrix(m)} for t, m in mu.atoms]
    return _dumps({"N": mu.N, "atoms": atoms})


def parse_parameter(text: str, source: str = "<parameter>", validate: bool = True) -> SchurParameter:
    obj = _load(text, source)
    delta = _int_field(obj, "delta", source, 0)
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError(f"{source}: field 'coeffs' must be a non-empty list of matrices")
    mats = [decode_matrix(c, delta, delta, f"{source}: coeffs[{k}]") for k, c in enumerate(coeffs)]
    return SchurParameter(delta=delta, coeffs=np.array(mats),
                          validate=validate)


def dump_parameter(F: SchurParameter) -> str:
    return _dumps({"delta": F.delta, "coeffs": [encode_matrix(c) for c in F.coeffs]})


def dump_coefficients(c: NevanlinnaCoefficients) -> str:
    def poly(p):
        return [encode_matrix(m) for m in p.coeffs]

    doc = {
        "N": c.N, "rho": c.rho, "tau": c.tau, "delta": c.delta,
        "convention": TRANSPOSE_NOTE,
        "h": [encode_complex(x) for x in c.h],
        "A": poly(c.A_poly), "B": poly(c.B_poly), "C": poly(c.C_poly), "D": poly(c.D_poly),
        "W": encode_matrix(c.W), "T": encode_matrix(c.T_mat), "K": encode_matrix(c.K_mat),
        "G0": encode_matrix(c.G0), "C1": encode_matrix(c.C1),
    }
    return _dumps(doc)


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
