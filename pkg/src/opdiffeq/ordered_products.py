"""Index-decorated ordered products and braced sums of them.

Each letter of a word is evaluated at a concrete index. A running counter
starts at ``k_q = 2u + v - q`` on the leftmost letter; every L0 letter takes
the current value and lowers the counter by 2, every L1 letter lowers it by 1.
The leftmost factor acts last on a vector.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .compositions import CompositionPair, enumerate_compositions
from .errors import NegativeIndex


class Letter(enum.Enum):
    L0 = "L0"
    L1 = "L1"

    @property
    def step(self) -> int:
        return 2 if self is Letter.L0 else 1


class Constraint(enum.Enum):
    NONE = "none"
    FIRST_L0_BLOCK_POSITIVE = "first_L0_block_positive"
    FIRST_L0_BLOCK_ZERO = "first_L0_block_zero"
    ENDS_WITH_L0 = "ends_with_L0"

    def admits(self, comp: CompositionPair) -> bool:
        if self is Constraint.NONE:
            return True
        if self is Constraint.FIRST_L0_BLOCK_POSITIVE:
            return comp.tau[0] > 0
        if self is Constraint.FIRST_L0_BLOCK_ZERO:
            return comp.tau[0] == 0
        # last run of L1 empty and the word really ends on an L0 letter
        return comp.s[-1] == 0 and comp.tau[-1] >= 1


@dataclass(frozen=True)
class Factor:
    which: Letter
    arg: int

    def __post_init__(self) -> None:
        if self.arg < 0:
            raise NegativeIndex(f"{self.which.value} evaluated at negative index {self.arg}")

    def __str__(self) -> str:
        return f"{self.which.value}({self.arg})"


@dataclass(frozen=True)
class OrderedProduct:
    factors: tuple[Factor, ...]
    # (u, v, q, composition) the product was built from; not part of equality
    provenance: Optional[tuple[int, int, int, CompositionPair]] = field(
        default=None, compare=False, repr=False
    )

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return render_product(self)

    def concat(self, other: "OrderedProduct") -> "OrderedProduct":
        return OrderedProduct(self.factors + other.factors)


@dataclass(frozen=True)
class BracedSpec:
    u: int
    v: int
    q: int = 1
    constraint: Constraint = Constraint.NONE

    def __post_init__(self) -> None:
        if self.q not in (1, 2):
            raise ValueError(f"q must be 1 or 2, got {self.q}")


def build_ordered_product(comp: CompositionPair, u: int, v: int, q: int) -> OrderedProduct:
    if q not in (1, 2):
        raise ValueError(f"q must be 1 or 2, got {q}")
    if not comp.is_valid(u, v):
        raise ValueError(f"{comp} is not a valid composition for u={u}, v={v}")
    counter = 2 * u + v - q
    factors = []
    for tau_i, s_i in zip(comp.tau, comp.s):
        for letter, run in ((Letter.L0, tau_i), (Letter.L1, s_i)):
            for _ in range(run):
                factors.append(Factor(letter, counter))
                counter -= letter.step
    return OrderedProduct(tuple(factors), provenance=(u, v, q, comp))


def expand_braced(spec: BracedSpec) -> list[OrderedProduct]:
    """Ordered products of every admitted word, ascending length then composition order.

    Negative exponents denote the zero operator and expand to nothing.
    Raises NegativeIndex when ``q = 2`` is paired with words ending on L1.
    """
    u, v = spec.u, spec.v
    if u < 0 or v < 0:
        return []
    out = []
    for r in range(1, min(u, v) + 2):
        for comp in enumerate_compositions(u, v, r):
            if spec.constraint.admits(comp):
                out.append(build_ordered_product(comp, u, v, spec.q))
    return out


def render_product(p: OrderedProduct) -> str:
    if not p.factors:
        return "I"
    return " ".join(str(f) for f in p.factors)


def composition_of(p: OrderedProduct) -> CompositionPair:
    """Recover the run-length composition from the letter pattern of a product."""
    tau: list[int] = []
    s: list[int] = []
    expect = Letter.L0
    count = 0
    for f in p.factors:
        if f.which is not expect:
            (tau if expect is Letter.L0 else s).append(count)
            expect, count = f.which, 0
        count += 1
    (tau if expect is Letter.L0 else s).append(count)
    if len(s) < len(tau):
        s.append(0)
    return CompositionPair(tuple(tau), tuple(s))
