"""Exact noniterative solution of second-order operator difference equations.

Solves ``Y(n+2) = L0(n) Y(n) + L1(n) Y(n+1)`` where ``L0(n)``, ``L1(n)`` are
noncommuting linear maps, by summing index-ordered operator products over
constrained run-length compositions, and checks the result against direct
recursion.
"""
from .backend import (
    ConstantFamily,
    OperatorFamily,
    PeriodicFamily,
    TableFamily,
    apply_braced_sum,
    apply_factor,
    apply_product,
    linear_map,
    state_vector,
)
from .compositions import CompositionPair, count_by_length, count_total, enumerate_compositions
from .diffdiff import LiftedFamily, PolyVector, apply_lifted, differentiate, solve_diffdiff
from .errors import DimensionMismatch, InvalidConfig, NegativeIndex, SchemaError, UnresolvedIndex
from .m_family import (
    MFamilyConfig,
    build_operators,
    check_properties,
    closed_form_case_I,
    closed_form_general,
    parity_families,
)
from .ordered_products import (
    BracedSpec,
    Constraint,
    Factor,
    Letter,
    OrderedProduct,
    build_ordered_product,
    expand_braced,
    render_product,
)
from .solver import (
    CauchyProblem,
    recurse_oracle,
    solve_case_I,
    solve_case_II,
    solve_general,
    term_census,
)

__version__ = "0.1.0"
