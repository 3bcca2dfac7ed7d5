"""evenzeta: exact Bernoulli numbers and even zeta values, three independent ways.

An operator recursion over exact rational polynomials, a weighted sum over
plane trees, and the classical Bernoulli recursion all produce the same
numbers; the package computes each route exactly and cross-checks them.
"""

from .polynomials import InexactDivisionError, Polynomial
from .rationals import (
    Rational,
    double_factorial_odd,
    double_factorial_product,
    format_rational,
    parse_rational,
)
from .recursion import (
    ConsistencyError,
    IndexSet,
    apply_step,
    basis_coefficients,
    expand_basis,
    expand_step,
    factor_product,
    first_indices,
    numerator_polynomial,
    shifted_product_identity,
    translated_polynomial,
    zeta_numerator,
)
from .sequences import ODD_NUMBERS, SequenceSpec
from .symmetric import (
    Permutation,
    VariableSet,
    cycle_index_elementary,
    elementary_symmetric,
    newton_girard_check,
    power_sum,
    symmetric_group,
)
from .trees import (
    KERNEL_BACKEND,
    PlaneTree,
    TreeData,
    catalan,
    enumerate_trees,
    generalized_transform,
    numerator_via_trees,
    polynomial_via_trees,
    tree_data,
)
from .zeta import (
    PiMultiple,
    bernoulli_classical,
    bernoulli_even,
    elementary_zeta,
    newton_partial_closed,
    newton_partial_sum,
    zeta_even_rational,
)

__version__ = "0.1.0"
