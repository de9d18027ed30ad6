"""Computational toolkit for finite operator groupoids satisfying the
left invertive law: law deciders, ideal-like subset families,
intra-regularity witnesses, an executable theorem suite, and exhaustive
enumeration up to isomorphism."""

from .fileformat import (
    ModelFormatError,
    model_from_json_obj,
    model_to_json_obj,
    parse_model,
    parse_models,
    serialize_model,
)
from .fixtures import paper_example, paper_example_text
from .ideals import (
    IdealKind,
    NotAnIdealError,
    ideal_family,
    is_bi_ideal,
    is_elementwise_semiprime,
    is_generalized_bi_ideal,
    is_idempotent_subset,
    is_interior_ideal,
    is_left_ideal,
    is_one_two_ideal,
    is_prime,
    is_quasi_ideal,
    is_right_ideal,
    is_semiprime,
    is_strongly_irreducible,
    is_subgroupoid,
    is_two_sided_ideal,
    kind_predicate,
    two_sided_ideals,
)
from .model import (
    AxiomProfile,
    GammaGroupoid,
    LawCheck,
    all_models,
    axiom_profile,
    is_ag_star_star,
    is_left_invertive,
    is_medial,
    is_paramedial,
    left_identities,
)
from .regularity import (
    IntraRegularityReport,
    IntraWitness,
    format_witness,
    intra_oracle,
    intra_witness,
    is_intra_regular,
)
from .search import (
    HuntResult,
    SearchResult,
    SearchSpec,
    SizeGuardError,
    are_isomorphic,
    canonical_model,
    canonicalize,
    count_models,
    enumerate_models,
    find_counterexample,
    naive_enumerate,
    naive_enumerate_direct,
    run_search,
)
from .subsets import (
    CapacityError,
    CarrierMismatchError,
    EmptySubsetError,
    Subset,
    all_nonempty_subsets,
    generated_left_ideal,
    generated_right_ideal,
    generated_two_sided_ideal,
    list_subsets_satisfying,
    square,
    subset_product,
    sweep_cap,
)
from .theorems import (
    Counterexample,
    TheoremId,
    TheoremReport,
    model_hash,
    revalidate_counterexample,
    run_check,
    run_suite,
    suite_exit_code,
    suite_to_json_obj,
)

__version__ = "0.1.0"
