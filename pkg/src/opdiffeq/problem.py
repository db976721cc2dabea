"""JSON problem descriptions: loading, validation and value serialization.

See ``docs/problem_schema.md`` for the document layout.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from .backend import ConstantFamily, OperatorFamily, PeriodicFamily, TableFamily
from .diffdiff import LiftedFamily, PolyVector
from .errors import DimensionMismatch, InvalidConfig, SchemaError
from .m_family import MFamilyConfig, parity_families
from .solver import CauchyProblem



def parse_complex(value: Any) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        return complex(value[0], value[1])
    raise SchemaError(f"expected a complex scalar [re, im], got {value!r}")


def encode_complex(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def parse_matrix(value: Any, N: int) -> np.ndarray:
    if not isinstance(value, list) or len(value) != N:
        raise SchemaError(f"expected a {N}x{N} matrix (list of {N} rows)")
    rows = []
    for row in value:
        if not isinstance(row, list) or len(row) != N:
            raise SchemaError(f"matrix rows must have {N} entries")
        rows.append([parse_complex(x) for x in row])
    return np.array(rows, dtype=complex)


def _parse_family(doc: Any, N: int, key: str) -> tuple[OperatorFamily, Optional[MFamilyConfig]]:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaError(f"{key} must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "table":
        maps = doc.get("maps")
        if not isinstance(maps, dict):
            raise SchemaError(f"{key}.maps must be an object keyed by index")
        try:
            table = {int(k): parse_matrix(m, N) for k, m in maps.items()}
        except ValueError as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"{key}.maps keys must be integers") from exc
        default = doc.get("default")
        return TableFamily(table, None if default is None else parse_matrix(default, N)), None
    if kind == "periodic":
        maps = doc.get("maps")
        if not isinstance(maps, list) or not maps:
            raise SchemaError(f"{key}.maps must be a non-empty list")
        period = doc.get("period", len(maps))
        if period != len(maps):
            raise SchemaError(f"{key}.period is {period} but {len(maps)} maps were given")
        return PeriodicFamily([parse_matrix(m, N) for m in maps]), None
    if kind == "constant":
        return ConstantFamily(parse_matrix(doc.get("matrix"), N)), None
    if kind == "m_parity":
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list):
            raise SchemaError(f"{key}.coeffs must be a list")
        if N != 2 * len(coeffs):
            raise SchemaError(f"m_parity needs dimension = 2 * len(coeffs), got {N} and {len(coeffs)}")
        role = doc.get("role")
        if role not in ("L0", "L1"):
            raise SchemaError(f"{key}.role must be 'L0' or 'L1'")
        try:
            cfg = MFamilyConfig(N, [parse_complex(c) for c in coeffs], doc.get("rho"))
        except InvalidConfig as exc:
            raise SchemaError(f"{key}: {exc}") from exc
        fam0, fam1 = parity_families(cfg)
        return (fam0 if role == "L0" else fam1), cfg
    raise SchemaError(f"{key}.kind must be one of table, periodic, constant, m_parity; got {kind!r}")


def parse_vector(value: Any, N: int, scalar: str) -> Union[np.ndarray, PolyVector]:
    if not isinstance(value, list) or len(value) != N:
        raise SchemaError(f"expected a vector with {N} components")
    if scalar == "complex":
        return np.array([parse_complex(x) for x in value], dtype=complex)
    comps = []
    for comp in value:
        if not isinstance(comp, list):
            raise SchemaError("polynomial components must be lists of [re, im] coefficients")
        if not all(isinstance(c, list) for c in comp):
            raise SchemaError("polynomial coefficients must be [re, im] pairs")
        comps.append([parse_complex(c) for c in comp])
    return PolyVector.from_components(comps)


def encode_vector(vec: Union[np.ndarray, PolyVector]) -> list:
    if isinstance(vec, PolyVector):
        return [[encode_complex(c) for c in row] for row in vec.coeffs]
    vec = np.asarray(vec)
    if vec.ndim == 2:
        return encode_vector(PolyVector(vec))
    return [encode_complex(z) for z in vec]


@dataclass(frozen=True)
class Problem:
    """A parsed problem document.

    For ``scalar == "polynomial"`` the families are :class:`LiftedFamily`
    instances and ``Y0``/``Y1`` are :class:`PolyVector`.
    """

    dimension: int
    scalar: str
    fam0: OperatorFamily
    fam1: OperatorFamily
    Y0: Union[np.ndarray, PolyVector]
    Y1: Union[np.ndarray, PolyVector]
    m_config: Optional[MFamilyConfig] = None

    def cauchy(self) -> CauchyProblem:
        if self.scalar == "polynomial":
            width = max(self.Y0.coeffs.shape[1], self.Y1.coeffs.shape[1], 1)
            return CauchyProblem(self.fam0, self.fam1, self.Y0.padded(width), self.Y1.padded(width))
        return CauchyProblem(self.fam0, self.fam1, self.Y0, self.Y1)

    def wrap(self, raw: np.ndarray) -> Union[np.ndarray, PolyVector]:
        return PolyVector(raw) if self.scalar == "polynomial" else raw


def parse_problem(doc: Any) -> Problem:
    if not isinstance(doc, dict):
        raise SchemaError("problem document must be a JSON object")
    for key in ("dimension", "family0", "family1", "Y0", "Y1"):
        if key not in doc:
            raise SchemaError(f"missing required field {key!r}")
    N = doc["dimension"]
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise SchemaError(f"dimension must be a positive integer, got {N!r}")
    scalar = doc.get("scalar", "complex")
    if scalar not in ("complex", "polynomial"):
        raise SchemaError(f"scalar must be 'complex' or 'polynomial', got {scalar!r}")
    try:
        fam0, cfg0 = _parse_family(doc["family0"], N, "family0")
        fam1, cfg1 = _parse_family(doc["family1"], N, "family1")
    except DimensionMismatch as exc:
        raise SchemaError(str(exc)) from exc
    if scalar == "polynomial":
        fam0 = LiftedFamily(fam0, bool(doc["family0"].get("differentiate", True)))
        fam1 = LiftedFamily(fam1, bool(doc["family1"].get("differentiate", False)))
    Y0 = parse_vector(doc["Y0"], N, scalar)
    Y1 = parse_vector(doc["Y1"], N, scalar)
    return Problem(N, scalar, fam0, fam1, Y0, Y1, cfg0 or cfg1)


def load_problem(path: Union[str, Path]) -> Problem:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    return parse_problem(doc)
