"""Run-length compositions indexing the words of a braced operator sum.

A word with ``u`` L0-letters and ``v`` L1-letters is written in run-length
form as ``L0^tau_1 L1^s_1 ... L0^tau_r L1^s_r``. For ``r >= 2`` the first L0
run and the last L1 run may be empty while every other run is non-empty;
for ``r == 1`` the single pair is always ``(u, v)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class CompositionPair:
    tau: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", tuple(int(x) for x in self.tau))
        object.__setattr__(self, "s", tuple(int(x) for x in self.s))
        if len(self.tau) != len(self.s) or not self.tau:
            raise ValueError("tau and s must be non-empty and of equal length")

    @property
    def r(self) -> int:
        return len(self.tau)

    def is_valid(self, u: int, v: int) -> bool:
        """Check the run-length constraints for a word with ``u`` L0 and ``v`` L1 letters."""
        r = self.r
        if sum(self.tau) != u or sum(self.s) != v:
            return False
        if any(x < 0 for x in self.tau + self.s):
            return False
        if r == 1:
            return True
        if r > min(u, v) + 1:
            return False
        return all(t >= 1 for t in self.tau[1:]) and all(x >= 1 for x in self.s[:-1])


def _runs(total: int, minima: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # tuples with entry i >= minima[i] summing to total, in lexicographic order
    if not minima:
        if total == 0:
            yield ()
        return
    head, rest = minima[0], minima[1:]
    for first in range(head, total - sum(rest) + 1):
        for tail in _runs(total - first, rest):
            yield (first,) + tail


def enumerate_compositions(u: int, v: int, r: int) -> list[CompositionPair]:
    """All composition pairs of length ``r`` for ``(u, v)``.

    Ordered lexicographically on ``tau + s``. Infeasible arguments (negative
    exponents, ``r < 1`` or ``r > min(u, v) + 1``) give an empty list.
    """
    if u < 0 or v < 0 or r < 1 or r > min(u, v) + 1:
        return []
    if r == 1:
        return [CompositionPair((u,), (v,))]
    taus = list(_runs(u, [0] + [1] * (r - 1)))
    ss = list(_runs(v, [1] * (r - 1) + [0]))
    return [CompositionPair(tau, s) for tau in taus for s in ss]


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def count_by_length(u: int, v: int, r: int) -> int:
    if u < 0 or v < 0 or r < 1:
        return 0
    return binomial(u, r - 1) * binomial(v, r - 1)


def count_total(u: int, v: int) -> int:
    """Number of distinct words with ``u`` L0-letters and ``v`` L1-letters."""
    if u < 0 or v < 0:
        return 0
    return binomial(u + v, min(u, v))
