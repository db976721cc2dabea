"""Dense complex linear-algebra backend.

State vectors are complex numpy arrays whose first axis has length ``N``.
A plain vector has shape ``(N,)``; polynomial-valued vectors use shape
``(N, K)`` with one column per power of ``t``, so the same matrix action
serves both. Linear maps are ``(N, N)`` complex arrays.
"""
from __future__ import annotations

from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, UnresolvedIndex
from .ordered_products import BracedSpec, Factor, Letter, OrderedProduct, expand_braced

StateVector = np.ndarray
LinearMap = np.ndarray


def state_vector(components) -> StateVector:
    vec = np.array(components, dtype=complex)
    if vec.ndim not in (1, 2) or vec.shape[0] < 1:
        raise DimensionMismatch(f"state vector must have shape (N,) or (N, K), got {vec.shape}")
    return vec


def linear_map(entries) -> LinearMap:
    mat = np.array(entries, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise DimensionMismatch(f"linear map must be square, got shape {mat.shape}")
    mat.setflags(write=False)
    return mat


class OperatorFamily:
    """A rule ``n -> LinearMap``; subclasses implement :meth:`__call__`."""

    dimension: int

    def __call__(self, n: int) -> LinearMap:
        raise NotImplementedError

    def act(self, n: int, vec: StateVector) -> StateVector:
        mat = self(n)
        if vec.shape[0] != mat.shape[1]:
            raise DimensionMismatch(
                f"map of dimension {mat.shape[1]} applied to vector of dimension {vec.shape[0]}"
            )
        return mat @ vec


class ConstantFamily(OperatorFamily):
    def __init__(self, matrix) -> None:
        self.matrix = linear_map(matrix)
        self.dimension = self.matrix.shape[0]

    def __call__(self, n: int) -> LinearMap:
        return self.matrix

    def __repr__(self) -> str:
        return f"ConstantFamily(dim={self.dimension})"


class TableFamily(OperatorFamily):
    """Explicit table of maps, with an optional default for unlisted indices."""

    def __init__(self, maps: Mapping[int, object], default=None) -> None:
        self.maps = {int(k): linear_map(m) for k, m in maps.items()}
        self.default = None if default is None else linear_map(default)
        shapes = {m.shape for m in self.maps.values()}
        if self.default is not None:
            shapes.add(self.default.shape)
        if len(shapes) != 1:
            raise DimensionMismatch(f"table maps have inconsistent shapes {sorted(shapes)}")
        self.dimension = shapes.pop()[0]

    def __call__(self, n: int) -> LinearMap:
        mat = self.maps.get(n, self.default)
        if mat is None:
            raise UnresolvedIndex(f"no map registered for index {n}")
        return mat

    def __repr__(self) -> str:
        return f"TableFamily(indices={sorted(self.maps)}, default={self.default is not None})"


class PeriodicFamily(OperatorFamily):
    """``n -> maps[n % period]``."""

    def __init__(self, maps: Sequence[object]) -> None:
        if not maps:
            raise ValueError("periodic family needs at least one map")
        self.maps = tuple(linear_map(m) for m in maps)
        if len({m.shape for m in self.maps}) != 1:
            raise DimensionMismatch("periodic maps have inconsistent shapes")
        self.period = len(self.maps)
        self.dimension = self.maps[0].shape[0]

    def __call__(self, n: int) -> LinearMap:
        return self.maps[n % self.period]

    def __repr__(self) -> str:
        return f"PeriodicFamily(period={self.period}, dim={self.dimension})"


def apply_factor(f: Factor, fam0: OperatorFamily, fam1: OperatorFamily, vec: StateVector) -> StateVector:
    fam = fam0 if f.which is Letter.L0 else fam1
    return fam.act(f.arg, vec)


def apply_product(p: OrderedProduct, fam0: OperatorFamily, fam1: OperatorFamily, vec: StateVector) -> StateVector:
    """Apply the factors right to left, so the rightmost factor acts first."""
    out = vec
    for f in reversed(p.factors):
        out = apply_factor(f, fam0, fam1, out)
    return out


def apply_braced_sum(
    spec: BracedSpec,
    fam0: OperatorFamily,
    fam1: OperatorFamily,
    vec: StateVector,
    products: Optional[Sequence[OrderedProduct]] = None,
) -> StateVector:
    """Sum of every product of ``spec`` applied to ``vec``, accumulated in canonical order.

    ``products`` may carry a precomputed ``expand_braced(spec)``.
    """
    if products is None:
        products = expand_braced(spec)
    total = np.zeros_like(vec, dtype=complex)
    for p in products:
        total = total + apply_product(p, fam0, fam1, vec)
    return total
