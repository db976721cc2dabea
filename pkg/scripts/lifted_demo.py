"""Difference-differential example: Y(n+2)(t) = L~0(n) dY(n)/dt + L~1(n) Y(n+1)(t)."""

from opdiffeq.diffdiff import PolyVector, closed_form_lifted_case_I, lifted_parity_families, solve_diffdiff
from opdiffeq.m_family import MFamilyConfig


def show(vec: PolyVector) -> str:
    parts = []
    for comp in vec.components():
        terms = [f"{c.real:g}t^{k}" for k, c in enumerate(comp.coef) if c != 0]
        parts.append(" + ".join(terms) or "0")
    return "(" + ", ".join(parts) + ")"


if __name__ == "__main__":
    cfg = MFamilyConfig(2, [1], 1.0)
    lifted = lifted_parity_families(cfg)
    y1 = PolyVector.from_components([[0, 0, 1], [0, 1]])
    print("Y1 =", show(y1))
    for n in range(2, 9):
        solved = solve_diffdiff(*lifted, PolyVector.zeros(2), y1, n)
        closed = closed_form_lifted_case_I(cfg, n, y1)
        assert solved.allclose(closed)
        print(f"Y{n} = {show(solved)}")
