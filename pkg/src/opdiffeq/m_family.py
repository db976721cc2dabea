"""Anti-diagonal raising/lowering family ``M+, M-, D+, D-, M0, D_N``.

Basis labels run ``1..N``; storage is 0-based. The only conversion point is
:func:`_ket`, which maps label ``i`` to array position ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .backend import LinearMap, PeriodicFamily, StateVector, linear_map
from .errors import InvalidConfig

RHO_TOL = 1e-12


def _ket(label: int) -> int:
    return label - 1


@dataclass(frozen=True)
class MFamilyConfig:
    N: int
    coeffs: tuple[complex, ...]
    rho: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if self.N < 2 or self.N % 2:
            raise InvalidConfig(f"N must be a positive even integer, got {self.N}")
        if len(self.coeffs) != self.N // 2:
            raise InvalidConfig(f"need N/2 = {self.N // 2} coefficients, got {len(self.coeffs)}")
        if self.rho is not None:
            if self.rho < 0:
                raise InvalidConfig(f"rho must be non-negative, got {self.rho}")
            bad = [c for c in self.coeffs if abs(abs(c) - self.rho) > RHO_TOL]
            if bad:
                raise InvalidConfig(f"coefficients {bad} do not have modulus rho={self.rho}")

    @classmethod
    def constant_modulus(cls, rho: float, phases: Sequence[float]) -> "MFamilyConfig":
        """Config with ``c_i = rho * exp(i * phase_i)``."""
        coeffs = tuple(rho * np.exp(1j * ph) for ph in phases)
        return cls(2 * len(coeffs), coeffs, rho)

    def require_rho(self) -> float:
        if self.rho is None:
            raise InvalidConfig("closed forms need a constant-modulus config (rho set)")
        return self.rho


@dataclass(frozen=True)
class MOperators:
    M_plus: LinearMap
    M_minus: LinearMap
    D_plus: LinearMap
    D_minus: LinearMap
    M0: LinearMap
    D_N: LinearMap


def build_operators(cfg: MFamilyConfig) -> MOperators:
    N = cfg.N
    m_plus = np.zeros((N, N), dtype=complex)
    d_plus = np.zeros((N, N), dtype=complex)
    d_minus = np.zeros((N, N), dtype=complex)
    for i, c in enumerate(cfg.coeffs, start=1):
        # c_i |i><N-i+1|
        m_plus[_ket(i), _ket(N - i + 1)] = c
        d_plus[_ket(i), _ket(i)] = abs(c) ** 2
    for i in range(N // 2 + 1, N + 1):
        d_minus[_ket(i), _ket(i)] = abs(cfg.coeffs[_ket(N - i + 1)]) ** 2
    return MOperators(
        M_plus=linear_map(m_plus),
        M_minus=linear_map(m_plus.conj().T),
        D_plus=linear_map(d_plus),
        D_minus=linear_map(d_minus),
        M0=linear_map(d_plus - d_minus),
        D_N=linear_map(d_plus + d_minus),
    )


# name -> (needs constant modulus, lhs, rhs) built from the operators and rho
def _identities(ops: MOperators, rho2: float):
    Mp, Mm, Dp, Dm = ops.M_plus, ops.M_minus, ops.D_plus, ops.D_minus
    zero = np.zeros_like(Mp)
    return {
        "M+^2 = 0": (False, Mp @ Mp, zero),
        "M-^2 = 0": (False, Mm @ Mm, zero),
        "[M+, M-] = M0": (False, Mp @ Mm - Mm @ Mp, ops.M0),
        "M+M- = D+": (False, Mp @ Mm, Dp),
        "M-M+ = D-": (False, Mm @ Mp, Dm),
        "M+D+ = 0": (False, Mp @ Dp, zero),
        "D+M- = 0": (False, Dp @ Mm, zero),
        "M-D- = 0": (False, Mm @ Dm, zero),
        "D-M+ = 0": (False, Dm @ Mp, zero),
        "M-D+ = rho^2 M-": (True, Mm @ Dp, rho2 * Mm),
        "D+M+ = rho^2 M+": (True, Dp @ Mp, rho2 * Mp),
        "M+D- = rho^2 M+": (True, Mp @ Dm, rho2 * Mp),
        "D-M- = rho^2 M-": (True, Dm @ Mm, rho2 * Mm),
    }


@dataclass
class PropertyReport:
    results: dict[str, str]  # identity -> "pass" | "fail" | "skip"
    max_error: dict[str, float]

    @property
    def ok(self) -> bool:
        return all(v != "fail" for v in self.results.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if v == "fail"]


def check_properties(cfg: MFamilyConfig, atol: float = 1e-12) -> PropertyReport:
    """Check the algebraic identities of the family; rho-scaled ones only if ``cfg.rho`` is set."""
    ops = build_operators(cfg)
    rho2 = 0.0 if cfg.rho is None else cfg.rho**2
    results, errors = {}, {}
    for name, (needs_rho, lhs, rhs) in _identities(ops, rho2).items():
        if needs_rho and cfg.rho is None:
            results[name] = "skip"
            continue
        err = float(np.max(np.abs(lhs - rhs)))
        errors[name] = err
        results[name] = "pass" if err <= atol else "fail"
    return PropertyReport(results, errors)


def parity_families(cfg: MFamilyConfig) -> tuple[PeriodicFamily, PeriodicFamily]:
    """``L0(n)`` is M+ for even n and M- for odd n; ``L1(n)`` the other way round."""
    ops = build_operators(cfg)
    return PeriodicFamily([ops.M_plus, ops.M_minus]), PeriodicFamily([ops.M_minus, ops.M_plus])


def closed_form_case_I(cfg: MFamilyConfig, n: int, Y1bar: StateVector) -> StateVector:
    rho = cfg.require_rho()
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    ops = build_operators(cfg)
    y = np.asarray(Y1bar, dtype=complex)
    if n == 0:
        return np.zeros_like(y)
    if n == 1:
        return y.copy()
    if n == 2:
        return ops.M_minus @ y
    if n % 2 == 0:
        return (rho ** (n - 4) * ops.D_plus + rho ** (n - 2) * ops.M_minus) @ y
    return rho ** (n - 3) * ((ops.D_plus + ops.M_minus) @ y)


def closed_form_case_II(cfg: MFamilyConfig, n: int, Y0bar: StateVector) -> StateVector:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    y = np.asarray(Y0bar, dtype=complex)
    if n == 0:
        return y.copy()
    if n == 2:
        return build_operators(cfg).M_plus @ y
    return np.zeros_like(y)


def closed_form_general(cfg: MFamilyConfig, n: int, Y0bar: StateVector, Y1bar: StateVector) -> StateVector:
    cfg.require_rho()
    return closed_form_case_II(cfg, n, Y0bar) + closed_form_case_I(cfg, n, Y1bar)
