import numpy as np
import pytest
import sympy as sp

from opdiffeq.backend import ConstantFamily, TableFamily
from opdiffeq.diffdiff import (
    LiftedFamily,
    PolyVector,
    apply_lifted,
    closed_form_lifted_case_I,
    differentiate,
    lifted_parity_families,
    recurse_diffdiff,
    solve_diffdiff,
)
from opdiffeq.errors import DimensionMismatch, InvalidConfig
from opdiffeq.m_family import MFamilyConfig, build_operators
from opdiffeq.ordered_products import Factor, Letter

t = sp.Symbol("t")
UNITS = [1, 1j, -1, -1j]


def pv(*components):
    return PolyVector.from_components(components)


def exact(z):
    """Gaussian integer as an exact sympy number."""
    z = complex(z)
    assert z.real.is_integer() and z.imag.is_integer()
    return sp.Integer(int(z.real)) + sp.I * sp.Integer(int(z.imag))


def exact_matrix(m):
    return sp.Matrix([[exact(x) for x in row] for row in np.asarray(m)])


def to_sympy(vec):
    return [sp.expand(sum(exact(c) * t**k for k, c in enumerate(row))) for row in vec.coeffs]


def sympy_coeffs(exprs):
    out = []
    for e in exprs:
        poly = sp.Poly(e, t)
        out.append([complex(c) for c in reversed(poly.all_coeffs())])
    return out


def exact_recursion(mats0, mats1, y0, y1, n):
    """Y(k+2) = L~0(k) dY(k)/dt + L~1(k) Y(k+1) with exact sympy arithmetic."""
    seq = [sp.Matrix(y0), sp.Matrix(y1)]
    for k in range(n - 1):
        nxt = mats0(k) * seq[k].diff(t) + mats1(k) * seq[k + 1]
        seq.append(nxt.applyfunc(sp.expand))
    return list(seq[n])


def assert_poly_close(vec, exprs, tol=1e-9):
    expected = PolyVector.from_components(sympy_coeffs(exprs))
    assert vec.allclose(expected, atol=tol * (1 + np.abs(expected.coeffs).max(initial=0)))


@pytest.mark.parametrize(
    "vec, expected",
    [
        (pv([0, 0, 1], [0, 1]), pv([0, 2], [1])),
        (pv([3], [2j]), PolyVector.zeros(2)),
        (pv([3, 0, 0, 4], [0]), pv([0, 0, 12], [0])),
    ],
)
def test_differentiate(vec, expected):
    assert differentiate(vec).allclose(expected)


def test_trailing_zeros_trimmed():
    v = pv([1, 2, 0, 0], [0, 0])
    assert v.degree == 1 and v.coeffs.shape == (2, 2)
    assert PolyVector.zeros(3).degree == -1
    assert [c.coef.tolist() for c in v.components()] == [[1, 2], [0]]


def test_pure_derivative():
    eye = LiftedFamily(ConstantFamily([[1]]), True)
    out = apply_lifted(Factor(Letter.L0, 0), eye, eye, pv([0, 0, 1]))
    assert out.allclose(pv([0, 2]))


def test_plain_mixing_without_derivative():
    m = np.array([[0, 2], [1, 0]])
    plain = LiftedFamily(ConstantFamily(m), False)
    out = apply_lifted(Factor(Letter.L1, 3), plain, plain, pv([1, 1], [5]))
    assert out.allclose(pv([10], [1, 1]))


def test_raising_after_derivative():
    lifted0, lifted1 = lifted_parity_families(MFamilyConfig(2, [1], 1.0))
    out = apply_lifted(Factor(Letter.L0, 0), lifted0, lifted1, pv([0], [0, 0, 0, 1]))
    assert out.allclose(pv([0, 0, 3], [0]))


def test_dimension_mismatch():
    fam = LiftedFamily(ConstantFamily(np.eye(2)), True)
    with pytest.raises(DimensionMismatch):
        apply_lifted(Factor(Letter.L0, 0), fam, fam, pv([1], [1], [1]))
    with pytest.raises(DimensionMismatch):
        fam.act(0, np.ones(2))


def test_odd_row_example():
    cfg = MFamilyConfig(2, [1], 1.0)
    lifted = lifted_parity_families(cfg)
    y1 = pv([0, 0, 1], [0, 1])
    for n in (3, 5, 7, 9):
        got = solve_diffdiff(*lifted, PolyVector.zeros(2), y1, n)
        assert got.allclose(pv([0, 0, 1], [0, 2]))


def test_even_row_example():
    cfg = MFamilyConfig(2, [1], 1.0)
    ops = build_operators(cfg)
    lifted = lifted_parity_families(cfg)
    y1 = pv([0, 0, 1], [0, 1])
    # (D+ d/dt + M-) applied to (t^2, t) = (2t, 0) + (0, t^2)
    expected = PolyVector(ops.D_plus @ differentiate(y1).padded(3) + ops.M_minus @ y1.padded(3))
    assert expected.allclose(pv([0, 2], [0, 0, 1]))
    for n in (4, 6, 8, 10):
        assert solve_diffdiff(*lifted, PolyVector.zeros(2), y1, n).allclose(expected)


def test_constant_inputs_kill_l0_terms(rng):
    m0 = rng.standard_normal((3, 3))
    m1 = rng.standard_normal((3, 3))
    lifted0 = LiftedFamily(ConstantFamily(m0), True)
    lifted1 = LiftedFamily(ConstantFamily(m1), False)
    y0, y1 = pv([1], [2], [3]), pv([1j], [0], [-1])
    for n in range(2, 9):
        got = solve_diffdiff(lifted0, lifted1, y0, y1, n)
        expected = np.linalg.matrix_power(m1, n - 1) @ y1.padded(1)
        assert got.allclose(PolyVector(expected), atol=1e-9 * (1 + np.abs(expected).max()))


def test_closed_form_requires_unit_modulus():
    with pytest.raises(InvalidConfig):
        closed_form_lifted_case_I(MFamilyConfig(2, [0.5], 0.5), 3, pv([1], [1]))


def test_closed_form_low_rows():
    cfg = MFamilyConfig(4, [1, 1j], 1.0)
    ops = build_operators(cfg)
    y1 = pv([1, 2], [0, 0, 3], [1j], [4])
    assert closed_form_lifted_case_I(cfg, 0, y1).degree == -1
    assert closed_form_lifted_case_I(cfg, 1, y1).allclose(y1)
    assert closed_form_lifted_case_I(cfg, 2, y1).allclose(PolyVector(ops.M_minus @ y1.padded(1)))


@pytest.mark.parametrize("N", [2, 4])
def test_parity_lift_against_exact_recursion(rng, N):
    coeffs = [UNITS[i] for i in rng.integers(0, 4, N // 2)]
    cfg = MFamilyConfig(N, coeffs, 1.0)
    ops = build_operators(cfg)
    ints = lambda: (rng.integers(-3, 4, (N, 6)) + 1j * rng.integers(-3, 4, (N, 6)))
    y0, y1 = PolyVector(ints()), PolyVector(ints())
    sym_m = {0: exact_matrix(ops.M_plus), 1: exact_matrix(ops.M_minus)}
    mats0 = lambda k: sym_m[k % 2]
    mats1 = lambda k: sym_m[(k + 1) % 2]
    lifted = lifted_parity_families(cfg)
    zero = PolyVector.zeros(N)
    for n in range(11):
        expected = exact_recursion(mats0, mats1, to_sympy(y0), to_sympy(y1), n)
        assert_poly_close(solve_diffdiff(*lifted, y0, y1, n), expected)
        case_I = exact_recursion(mats0, mats1, [0] * N, to_sympy(y1), n)
        assert_poly_close(closed_form_lifted_case_I(cfg, n, y1), case_I)
        assert_poly_close(solve_diffdiff(*lifted, zero, y1, n), case_I)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_general_tables_against_exact_recursion(rng, N):
    tables0 = [rng.integers(-1, 2, (N, N)) for _ in range(10)]
    tables1 = [rng.integers(-1, 2, (N, N)) + 1j * rng.integers(-1, 2, (N, N)) for _ in range(10)]
    lifted0 = LiftedFamily(TableFamily(dict(enumerate(tables0))), True)
    lifted1 = LiftedFamily(TableFamily(dict(enumerate(tables1))), False)
    y0 = PolyVector(rng.integers(-4, 5, (N, 6)).astype(complex))
    y1 = PolyVector(rng.integers(-4, 5, (N, 6)) + 1j * rng.integers(-4, 5, (N, 6)))
    sym0 = [exact_matrix(m) for m in tables0]
    sym1 = [exact_matrix(m) for m in tables1]
    for n in range(11):
        expected = exact_recursion(sym0.__getitem__, sym1.__getitem__, to_sympy(y0), to_sympy(y1), n)
        got = solve_diffdiff(lifted0, lifted1, y0, y1, n)
        assert_poly_close(got, expected)
        assert got.degree <= 5


def test_degree_drops_by_one_per_derivative():
    eye = LiftedFamily(ConstantFamily(np.eye(2)), True)
    v = pv([1, 1, 1, 1], [0, 2])
    for expected in (2, 1, 0, -1):
        v = apply_lifted(Factor(Letter.L0, 0), eye, eye, v)
        assert v.degree == expected


def test_recursion_helper_agrees(rng):
    cfg = MFamilyConfig.constant_modulus(1.0, rng.uniform(0, 6, 2))
    lifted = lifted_parity_families(cfg)
    y0 = PolyVector(rng.standard_normal((4, 5)))
    y1 = PolyVector(rng.standard_normal((4, 3)))
    for n in range(10):
        a = solve_diffdiff(*lifted, y0, y1, n)
        assert a.allclose(recurse_diffdiff(*lifted, y0, y1, n))


def test_evaluation_does_not_commute_with_solving():
    # evaluating at t0 first loses the derivative information carried by L0
    lifted = lifted_parity_families(MFamilyConfig(2, [1], 1.0))
    y1 = pv([0, 0, 1], [0, 1])
    solved_then_evaluated = solve_diffdiff(*lifted, PolyVector.zeros(2), y1, 3)(2.0)
    assert np.allclose(solved_then_evaluated, [4, 4])
    evaluated_first = pv([y1(2.0)[0]], [y1(2.0)[1]])
    assert np.allclose(solve_diffdiff(*lifted, PolyVector.zeros(2), evaluated_first, 3)(2.0), [4, 0])
