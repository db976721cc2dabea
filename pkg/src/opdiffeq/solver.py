"""Closed-form evaluation of ``Y_{n+2} = L0(n) Y_n + L1(n) Y_{n+1}`` and the recursion oracle."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import OperatorFamily, StateVector, apply_braced_sum
from .compositions import count_total
from .errors import DimensionMismatch
from .ordered_products import BracedSpec, Constraint, OrderedProduct, expand_braced


@dataclass(frozen=True)
class CauchyProblem:
    fam0: OperatorFamily
    fam1: OperatorFamily
    Y0: StateVector
    Y1: StateVector

    def __post_init__(self) -> None:
        y0 = np.asarray(self.Y0, dtype=complex)
        y1 = np.asarray(self.Y1, dtype=complex)
        object.__setattr__(self, "Y0", y0)
        object.__setattr__(self, "Y1", y1)
        if y0.shape != y1.shape:
            raise DimensionMismatch(f"Y0 has shape {y0.shape} but Y1 has shape {y1.shape}")
        for fam in (self.fam0, self.fam1):
            dim = getattr(fam, "dimension", None)
            if dim is not None and dim != y0.shape[0]:
                raise DimensionMismatch(f"family of dimension {dim} but vectors of dimension {y0.shape[0]}")

    @property
    def dimension(self) -> int:
        return self.Y0.shape[0]

    def with_initial(self, Y0, Y1) -> "CauchyProblem":
        return CauchyProblem(self.fam0, self.fam1, Y0, Y1)


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def recurse_oracle(p: CauchyProblem, n: int) -> StateVector:
    """Iterate the recurrence from the initial data; ``n + 1`` steps at most."""
    _check_n(n)
    prev, cur = p.Y0, p.Y1
    if n == 0:
        return prev.copy()
    for k in range(n - 1):
        prev, cur = cur, p.fam0.act(k, prev) + p.fam1.act(k, cur)
    return cur.copy()


def case_I_specs(n: int) -> list[BracedSpec]:
    """Braced sums whose total acting on ``Y1`` gives ``Y_n`` when ``Y0 = 0``."""
    _check_n(n)
    return [BracedSpec(t, n - 1 - 2 * t, 1) for t in range(abs(n - 1) // 2 + 1)]


def case_II_specs(n: int) -> list[BracedSpec]:
    """Braced sums whose total acting on ``Y0`` gives ``Y_n`` when ``Y1 = 0``, for ``n >= 2``."""
    if n < 2:
        raise ValueError(f"case II expansion is defined for n >= 2, got {n}")
    return [
        BracedSpec(t + 1, n - 2 - 2 * t, 2, Constraint.ENDS_WITH_L0)
        for t in range((n - 2) // 2 + 1)
    ]


def solution_terms(n: int) -> tuple[list[OrderedProduct], list[OrderedProduct]]:
    """Ordered products acting on ``Y0`` and on ``Y1`` in the closed-form ``Y_n``.

    For ``n`` in {0, 1} the initial data are returned directly, represented
    by the identity product on the matching side.
    """
    _check_n(n)
    identity = OrderedProduct(())
    if n == 0:
        return [identity], []
    if n == 1:
        return [], [identity]
    on_y0 = [prod for spec in case_II_specs(n) for prod in expand_braced(spec)]
    on_y1 = [prod for spec in case_I_specs(n) for prod in expand_braced(spec)]
    return on_y0, on_y1


def _sum_specs(specs, p: CauchyProblem, vec: StateVector) -> StateVector:
    total = np.zeros_like(vec, dtype=complex)
    for spec in specs:
        total = total + apply_braced_sum(spec, p.fam0, p.fam1, vec)
    return total


def solve_case_I(p: CauchyProblem, n: int) -> StateVector:
    if np.any(p.Y0 != 0):
        raise ValueError("case I requires Y0 to be the null vector")
    return _sum_specs(case_I_specs(n), p, p.Y1)


def solve_case_II(p: CauchyProblem, n: int) -> StateVector:
    if np.any(p.Y1 != 0):
        raise ValueError("case II requires Y1 to be the null vector")
    _check_n(n)
    if n == 0:
        return p.Y0.copy()
    if n == 1:
        return np.zeros_like(p.Y0)
    return _sum_specs(case_II_specs(n), p, p.Y0)


def solve_general(p: CauchyProblem, n: int) -> StateVector:
    """``Y_n`` from the closed-form expansion, superposing the two Cauchy problems."""
    _check_n(n)
    if n == 0:
        return p.Y0.copy()
    if n == 1:
        return p.Y1.copy()
    return _sum_specs(case_II_specs(n), p, p.Y0) + _sum_specs(case_I_specs(n), p, p.Y1)


def term_census(n: int) -> list[tuple[int, int, int, int]]:
    """``(t, u, v, number of products)`` for every braced sum in the case-I expansion."""
    return [(s.u, s.u, s.v, count_total(s.u, s.v)) for s in case_I_specs(n)]
