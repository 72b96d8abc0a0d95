"""nslab: an exact computational laboratory for numerical semigroups."""

from .core import (
    AperySet,
    NumericalSemigroup,
    apery_set,
    from_generators,
    has_canonical_reduction,
    interval_completion,
    invariants,
    is_almost_symmetric,
    is_max_edim,
    is_nearly_gorenstein,
    is_symmetric,
    naturals,
    pseudo_frobenius,
    semigroup_type,
)
from .errors import (
    InternalConsistencyError,
    InvalidInput,
    NotCofinite,
    NotMember,
    ResourceLimit,
    SemigroupError,
)
from .factorization import (
    Presentation,
    Relation,
    betti_elements,
    factorization_graph_components,
    factorizations,
    minimal_presentation,
    order,
    order_table,
    rho,
)
from .resolution import (
    BettiTable,
    SimplicialComplex,
    bound_C,
    bound_D,
    divisor_complex,
    graded_betti,
    macaulay_lower,
    macaulay_upper,
    max_betti_bound,
    reduced_homology_dims,
    regularity,
)

__version__ = "0.1.0"
