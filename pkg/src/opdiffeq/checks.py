"""Self-verification suites run by ``opdiffeq verify``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .backend import TableFamily
from .compositions import count_by_length, count_total, enumerate_compositions
from .diffdiff import PolyVector, closed_form_lifted_case_I, lifted_parity_families, recurse_diffdiff, solve_diffdiff
from .m_family import MFamilyConfig, check_properties, closed_form_general, parity_families
from .ordered_products import BracedSpec, expand_braced, render_product
from .problem import Problem
from .solver import CauchyProblem, recurse_oracle, solution_terms, solve_general

REL_TOL = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def relative_deviation(value: np.ndarray, reference: np.ndarray) -> float:
    """``||value - reference|| / (1 + ||reference||)`` in the Frobenius norm."""
    value, reference = np.asarray(value), np.asarray(reference)
    width = max(value.shape[-1], reference.shape[-1]) if value.ndim == 2 else None
    if width is not None:
        value = np.pad(value, ((0, 0), (0, width - value.shape[1])))
        reference = np.pad(reference, ((0, 0), (0, width - reference.shape[1])))
    return float(np.linalg.norm(value - reference) / (1.0 + np.linalg.norm(reference)))


def random_complex(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_table_problem(rng: np.random.Generator, dim: int, n_max: int) -> CauchyProblem:
    """Families with an independent random map at every index ``0..n_max``.

    Maps are scaled by ``1/sqrt(dim)`` so products of a dozen factors stay O(1).
    """
    scale = 1.0 / np.sqrt(dim)
    fam0 = TableFamily({k: scale * random_complex(rng, (dim, dim)) for k in range(n_max + 1)})
    fam1 = TableFamily({k: scale * random_complex(rng, (dim, dim)) for k in range(n_max + 1)})
    return CauchyProblem(fam0, fam1, random_complex(rng, dim), random_complex(rng, dim))


def check_counting(limit: int = 10) -> CheckResult:
    for u in range(limit + 1):
        for v in range(limit + 1):
            total = 0
            for r in range(1, min(u, v) + 2):
                n_r = len(enumerate_compositions(u, v, r))
                if n_r != count_by_length(u, v, r):
                    return CheckResult("counting", False, f"u={u} v={v} r={r}: {n_r} enumerated")
                total += n_r
            if total != count_total(u, v):
                return CheckResult("counting", False, f"u={u} v={v}: total {total}")
    return CheckResult("counting", True, f"0 <= u, v <= {limit}")


GOLDEN_EQ11 = ["L0(4) L0(2) L1(0)", "L1(4) L0(3) L0(1)", "L0(4) L1(2) L0(1)"]
GOLDEN_Y5 = {"L1(3) L1(2) L1(1) L0(0)", "L0(3) L1(1) L0(0)", "L1(3) L0(2) L0(0)"}


def check_golden() -> CheckResult:
    eq11 = [render_product(p) for p in expand_braced(BracedSpec(2, 1, 1))]
    if eq11 != GOLDEN_EQ11:
        return CheckResult("golden expansions", False, f"got {eq11}")
    on_y0, _ = solution_terms(5)
    y5 = [render_product(p) for p in on_y0]
    if set(y5) != GOLDEN_Y5 or len(y5) != 3:
        return CheckResult("golden expansions", False, f"Y5 terms {y5}")
    return CheckResult("golden expansions", True, "{L0^(2)L1^(1)}_1 and Y_5")


def check_oracle(rng: np.random.Generator, trials: int, n_max: int) -> CheckResult:
    worst = 0.0
    for i in range(trials):
        dim = int(rng.integers(1, 7))
        n = i % (n_max + 1)
        p = random_table_problem(rng, dim, n_max)
        worst = max(worst, relative_deviation(solve_general(p, n), recurse_oracle(p, n)))
    return CheckResult("oracle equivalence", worst <= REL_TOL, f"{trials} instances, max rel dev {worst:.2e}")


def check_shift(rng: np.random.Generator, trials: int, n_max: int) -> CheckResult:
    worst = 0.0
    for _ in range(trials):
        dim = int(rng.integers(1, 5))
        p = random_table_problem(rng, dim, n_max)
        ys = [solve_general(p, n) for n in range(n_max + 1)]
        for n in range(n_max - 1):
            step = p.fam0.act(n, ys[n]) + p.fam1.act(n, ys[n + 1])
            worst = max(worst, relative_deviation(ys[n + 2], step))
    return CheckResult("shift consistency", worst <= REL_TOL, f"{trials} instances, max rel dev {worst:.2e}")


def random_m_config(rng: np.random.Generator, N: int, rho: Optional[float]) -> MFamilyConfig:
    if rho is None:
        coeffs = rng.uniform(0.2, 2.0, N // 2) * np.exp(1j * rng.uniform(0, 2 * np.pi, N // 2))
        return MFamilyConfig(N, coeffs)
    return MFamilyConfig.constant_modulus(rho, rng.uniform(0, 2 * np.pi, N // 2))


def check_m_identities(rng: np.random.Generator, trials: int) -> CheckResult:
    for i in range(trials):
        N = int(rng.choice([2, 4, 6, 8]))
        cfg = random_m_config(rng, N, float(rng.uniform(0.1, 2.0)))
        report = check_properties(cfg)
        if not report.ok:
            return CheckResult("M-family identities", False, f"config {i}: {report.failures()}")
        loose = check_properties(random_m_config(rng, N, None))
        if not loose.ok:
            return CheckResult("M-family identities", False, f"non-constant modulus {i}: {loose.failures()}")
    return CheckResult("M-family identities", True, f"{trials} constant- and {trials} free-modulus configs")


def check_m_closed_forms(rng: np.random.Generator, n_max: int) -> CheckResult:
    worst = 0.0
    for N in (2, 4, 6, 8):
        for rho in (0.5, 1.0, 1.3):
            cfg = random_m_config(rng, N, rho)
            fam0, fam1 = parity_families(cfg)
            p = CauchyProblem(fam0, fam1, random_complex(rng, N), random_complex(rng, N))
            for n in range(n_max + 1):
                closed = closed_form_general(cfg, n, p.Y0, p.Y1)
                worst = max(
                    worst,
                    relative_deviation(closed, solve_general(p, n)),
                    relative_deviation(closed, recurse_oracle(p, n)),
                )
    return CheckResult("M-family closed forms", worst <= REL_TOL, f"n <= {n_max}, max rel dev {worst:.2e}")


def check_constant_solution(rng: np.random.Generator, n_max: int) -> CheckResult:
    worst = 0.0
    for N in (2, 4, 6, 8):
        cfg = random_m_config(rng, N, 1.0)
        fam0, fam1 = parity_families(cfg)
        p = CauchyProblem(fam0, fam1, np.zeros(N, complex), random_complex(rng, N))
        ref = solve_general(p, 3)
        for n in range(3, n_max + 1):
            worst = max(worst, relative_deviation(solve_general(p, n), ref))
    return CheckResult("constant solution at rho=1", worst <= REL_TOL, f"3 <= n <= {n_max}")


def check_diffdiff(rng: np.random.Generator, n_max: int) -> CheckResult:
    worst = 0.0
    for N in (2, 4):
        cfg = random_m_config(rng, N, 1.0)
        lifted0, lifted1 = lifted_parity_families(cfg)
        zero = PolyVector.zeros(N)
        y1 = PolyVector(random_complex(rng, (N, 6)))
        for n in range(3, max(n_max, 3) + 1):
            got = solve_diffdiff(lifted0, lifted1, zero, y1, n)
            for ref in (closed_form_lifted_case_I(cfg, n, y1), recurse_diffdiff(lifted0, lifted1, zero, y1, n)):
                worst = max(worst, relative_deviation(got.padded(1), ref.padded(1)))
    return CheckResult("difference-differential", worst <= REL_TOL, f"max rel dev {worst:.2e}")


def check_problem(problem: Problem, n_max: int) -> CheckResult:
    p = problem.cauchy()
    worst = 0.0
    for n in range(n_max + 1):
        worst = max(worst, relative_deviation(solve_general(p, n), recurse_oracle(p, n)))
    return CheckResult("problem file", worst <= REL_TOL, f"n <= {n_max}, max rel dev {worst:.2e}")


def run_all(n_max: int = 12, trials: int = 100, seed: int = 0, problem: Optional[Problem] = None) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    suites: list[Callable[[], CheckResult]] = [
        check_counting,
        check_golden,
        lambda: check_oracle(rng, trials, n_max),
        lambda: check_shift(rng, max(1, trials // 10), min(n_max, 10)),
        lambda: check_m_identities(rng, trials),
        lambda: check_m_closed_forms(rng, n_max),
        lambda: check_constant_solution(rng, n_max),
        lambda: check_diffdiff(rng, min(n_max, 10)),
    ]
    if problem is not None:
        suites.append(lambda: check_problem(problem, n_max))
    return [suite() for suite in suites]
