"""Exact Lawrence-Krammer and Burau braid representations, the invariant
Hermitian form and its definiteness regime, eigenvalue bookkeeping, Weyl
dimensions, and conjugacy-class trace experiments."""

from .braids import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    full_twist,
    include,
    invert,
    parse_braid,
    permutation_of,
    random_word,
)
from .laurent import LaurentPoly2, ONE, Q, T, ZERO
from .reps import (
    PairBasis,
    RepMatrix,
    alt_square,
    burau_gen,
    charpoly,
    exact_det,
    exact_inverse,
    lk_gen,
    lk_vs_sym2_burau,
    mu_factor,
    normalize_su,
    perm_rep,
    rep_of_word,
    rep_of_word_numeric,
    sym_square,
)
from .forms import (
    FormNotFoundError,
    HermitianForm,
    default_definite_point,
    definiteness_scan,
    invariant_form,
    is_definite,
    scan_point,
    unitarize,
)
from .spectra import (
    EigMultiset,
    alt2_multiset,
    commutant_dimension,
    conjugation_closed,
    eigen_multiset,
    full_twist_torus_independent,
    kronecker_factorizations,
    lk_generator_spectrum,
    lk_spectrum_via_recursion,
    square_root_multisets,
    sym2_multiset,
)
from .lie_dims import (
    DynkinLabeling,
    RootSystem,
    e6_dimension_direct,
    enumerate_irreps_below,
    is_asymmetric,
    positive_roots,
    weyl_dimension,
)
from .density import (
    ExperimentConfig,
    TraceSample,
    random_conjugate,
    restricted_rep_check,
    run_experiment,
    scalar_burau_check,
    stabilized_trace,
    subgroup_irreducibility,
    subgroup_words,
)

__version__ = "0.1.0"
