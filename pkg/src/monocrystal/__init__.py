"""Monomial realization of type A_n crystals and products of fundamental crystals."""
from ._backend import BACKEND
from .crystal import (
    Component,
    CrystalGraph,
    Decomposition,
    MonomialCrystal,
    TensorCrystal,
    TensorElement,
    Violation,
    decompose,
    generate_component,
    tensor_product,
    to_dot,
    validate_axioms,
)
from .decomposition import (
    DecompositionReport,
    ProductSpec,
    classify_highest_pairs,
    fundamental_crystal,
    multi_product,
    predicted_product_decomposition,
    predicted_tensor_decomposition,
    product_set,
    prop42_member,
    verify_case,
    verify_tensor_case,
    weight_monomials_in_fundamental,
)
from .errors import (
    CrystalError,
    MonomialParseError,
    NodeBudgetExceeded,
    NotClosedError,
    RankMismatchError,
    TheoremViolation,
    UncoveredError,
    UnsupportedWeight,
)
from .monomial import (
    Convention,
    Monomial,
    a_monomial,
    e_tilde,
    f_tilde,
    is_highest,
    parse,
    render,
    x_monomial,
)
from .tableaux import ssyt_count
from .weights import RankedCartan, Weight, format_weight, from_epsilon_basis, is_dominant, pairing, simple_root

__version__ = "0.1.0"
