"""Polynomial-in-t unknowns with ``L0(n) = L~0(n) d/dt``.

A :class:`PolyVector` stores its coefficients as an ``(N, K)`` complex array,
column ``k`` holding the coefficient of ``t**k``. The solver runs unchanged on
that array because the matrix mixing acts on the first axis only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from . import solver
from .backend import OperatorFamily, StateVector
from .errors import DimensionMismatch, InvalidConfig
from .m_family import MFamilyConfig, build_operators, parity_families
from .ordered_products import Factor, Letter

PolyScalar = Polynomial


def _trim(coeffs: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(np.any(coeffs != 0, axis=0))
    width = nonzero[-1] + 1 if nonzero.size else 0
    return coeffs[:, :width]


def derivative_coeffs(coeffs: np.ndarray) -> np.ndarray:
    """Formal d/dt of an ``(N, K)`` coefficient array (shape is kept)."""
    out = np.zeros_like(coeffs, dtype=complex)
    K = coeffs.shape[1]
    if K > 1:
        out[:, :-1] = coeffs[:, 1:] * np.arange(1, K)
    return out


@dataclass(frozen=True)
class PolyVector:
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise DimensionMismatch(f"PolyVector coefficients must be (N, K), got {arr.shape}")
        arr = _trim(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_components(cls, components: Sequence[Sequence[complex]]) -> "PolyVector":
        """Build from per-component ascending coefficient lists."""
        width = max((len(c) for c in components), default=0)
        arr = np.zeros((len(components), max(width, 1)), dtype=complex)
        for i, c in enumerate(components):
            arr[i, : len(c)] = c
        return cls(arr)

    @classmethod
    def zeros(cls, N: int) -> "PolyVector":
        return cls(np.zeros((N, 0), dtype=complex))

    @property
    def dimension(self) -> int:
        return self.coeffs.shape[0]

    @property
    def degree(self) -> int:
        """Highest power present; -1 for the null vector."""
        return self.coeffs.shape[1] - 1

    def components(self) -> list[PolyScalar]:
        return [Polynomial(row).trim() if row.size else Polynomial([0]) for row in self.coeffs]

    def padded(self, width: int) -> np.ndarray:
        out = np.zeros((self.dimension, max(width, self.coeffs.shape[1])), dtype=complex)
        out[:, : self.coeffs.shape[1]] = self.coeffs
        return out

    def __call__(self, t: complex) -> np.ndarray:
        return self.padded(1) @ (t ** np.arange(max(self.coeffs.shape[1], 1)))

    def allclose(self, other: "PolyVector", atol: float = 1e-9) -> bool:
        width = max(self.coeffs.shape[1], other.coeffs.shape[1])
        return self.dimension == other.dimension and np.allclose(
            self.padded(width), other.padded(width), rtol=0, atol=atol
        )


def differentiate(p: PolyVector) -> PolyVector:
    return PolyVector(derivative_coeffs(p.coeffs))


class LiftedFamily(OperatorFamily):
    """Family acting on polynomial vectors, optionally differentiating before mixing."""

    def __init__(self, base: OperatorFamily, differentiate: bool) -> None:
        self.base = base
        self.differentiate = differentiate
        self.dimension = base.dimension

    def __call__(self, n: int):
        return self.base(n)

    def act(self, n: int, vec: StateVector) -> StateVector:
        if vec.ndim != 2:
            raise DimensionMismatch("lifted families act on (N, K) polynomial coefficient arrays")
        if self.differentiate:
            vec = derivative_coeffs(vec)
        return self.base.act(n, vec)

    def __repr__(self) -> str:
        return f"LiftedFamily({self.base!r}, differentiate={self.differentiate})"


def apply_lifted(f: Factor, lifted0: LiftedFamily, lifted1: LiftedFamily, vec: PolyVector) -> PolyVector:
    fam = lifted0 if f.which is Letter.L0 else lifted1
    return PolyVector(fam.act(f.arg, vec.padded(1)))


def _problem(lifted0, lifted1, Y0: PolyVector, Y1: PolyVector) -> solver.CauchyProblem:
    width = max(Y0.coeffs.shape[1], Y1.coeffs.shape[1], 1)
    return solver.CauchyProblem(lifted0, lifted1, Y0.padded(width), Y1.padded(width))


def solve_diffdiff(lifted0: LiftedFamily, lifted1: LiftedFamily, Y0: PolyVector, Y1: PolyVector, n: int) -> PolyVector:
    return PolyVector(solver.solve_general(_problem(lifted0, lifted1, Y0, Y1), n))


def recurse_diffdiff(lifted0: LiftedFamily, lifted1: LiftedFamily, Y0: PolyVector, Y1: PolyVector, n: int) -> PolyVector:
    return PolyVector(solver.recurse_oracle(_problem(lifted0, lifted1, Y0, Y1), n))


def lifted_parity_families(cfg: MFamilyConfig) -> tuple[LiftedFamily, LiftedFamily]:
    fam0, fam1 = parity_families(cfg)
    return LiftedFamily(fam0, True), LiftedFamily(fam1, False)


def closed_form_lifted_case_I(cfg: MFamilyConfig, n: int, Y1bar: PolyVector) -> PolyVector:
    """Case-I solution of the lifted parity problem at unit modulus.

    Even ``n > 2`` gives ``(D+ d/dt + M-) Y1``, odd ``n > 2`` gives
    ``(D+ + M- d/dt) Y1``.
    """
    if cfg.rho is None or abs(cfg.rho - 1.0) > 1e-12:
        raise InvalidConfig("the lifted closed form holds for rho = 1 only")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    ops = build_operators(cfg)
    y = Y1bar.padded(1)
    dy = derivative_coeffs(y)
    if n == 0:
        return PolyVector.zeros(Y1bar.dimension)
    if n == 1:
        return Y1bar
    if n == 2:
        return PolyVector(ops.M_minus @ y)
    if n % 2 == 0:
        return PolyVector(ops.D_plus @ dy + ops.M_minus @ y)
    return PolyVector(ops.D_plus @ y + ops.M_minus @ dy)
