from .algebra import (
    LieAlgebra, Subspace, InnerProduct, SemidirectSum, ad, bracket,
    derived_series, lower_central_series, is_solvable, is_nilpotent, center,
    is_unimodular, killing_form, normalizer, derivations, is_derivation,
    orthogonal_derivations, semidirect_sum, direct_sum, change_basis, subalgebra,
)
from .weights import (
    WeightData, triangularize, weight_data, is_completely_solvable, nilradical,
    max_completely_solvable_ideal,
)
