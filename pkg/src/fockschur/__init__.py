"""Exact truncated bosonic Fock-space algebra and the Laurent expansion of
vertex operators into operator-valued Schur coefficients."""

from .combinatorics import Cutoffs, TuplePair, count_pq, enumerate_pq
from .expansion import (
    LaurentSlice,
    SchurOperator,
    SchurTerm,
    apply_schur,
    elementary_schur,
    exp_partial_sum,
    matrix_element_closed,
    matrix_element_expansion,
    power_matrix_element,
    schur_terms,
    verify_lemma_term,
)
from .fock import (
    BasisConfig,
    FockVector,
    MultiIndex,
    OneParticleVector,
    VACUUM_INDEX,
    annihilate,
    check_multiplicability,
    coherent,
    exp_annihilate,
    fock_mul,
    inner,
    multiindex_factorial,
    power_annihilate_coherent,
)
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = [
    "BasisConfig",
    "Cutoffs",
    "FockVector",
    "LaurentSlice",
    "MultiIndex",
    "OneParticleVector",
    "Scalar",
    "SchurOperator",
    "SchurTerm",
    "TuplePair",
    "VACUUM_INDEX",
    "annihilate",
    "apply_schur",
    "check_multiplicability",
    "coherent",
    "count_pq",
    "elementary_schur",
    "enumerate_pq",
    "exp_annihilate",
    "exp_partial_sum",
    "fock_mul",
    "inner",
    "matrix_element_closed",
    "matrix_element_expansion",
    "multiindex_factorial",
    "power_annihilate_coherent",
    "power_matrix_element",
    "schur_terms",
    "verify_lemma_term",
    "__version__",
]
