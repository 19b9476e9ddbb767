"""Finite hypergroupoids, their ideals and fuzzy ideals, and an exhaustive theorem harness."""
from .classes import (
    RegularityWitness,
    intra_regular_witnesses,
    is_intra_regular,
    is_intra_regular_sandwich,
    is_intra_regular_subsets,
    is_regular,
    is_regular_sandwich,
    is_regular_subsets,
    regular_witnesses,
)
from .document import parse_structure, serialize_structure
from .errors import *  # noqa: F401,F403
from .fuzzy import (
    FuzzySubset,
    LevelSetResult,
    characteristic,
    enumerate_rank_profiles,
    is_fuzzy_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_interior_simple,
    is_fuzzy_left_ideal,
    is_fuzzy_right_ideal,
    is_fuzzy_simple,
    level_set,
    profile_grades,
)
from .hypercore import (
    FIXTURES,
    L2,
    N2,
    T2,
    Z2,
    HyperTable,
    decompose_membership,
    hyper_product,
    is_hypersemigroup,
    mask,
    members,
    product_chain,
    relabel,
    subset_product,
    validate_table,
)
from .ideals import (
    IdealKind,
    PropertyReport,
    is_ideal,
    is_interior_ideal,
    is_left_ideal,
    is_right_ideal,
    is_simple,
    is_simple_elementwise,
    is_subidempotent_interior_ideal,
    is_subsemigroup,
    list_substructures,
    principal_sandwich,
    property_report,
)
from .search import (
    CanonicalForm,
    Sample,
    VerifyReport,
    are_isomorphic,
    canonical_form,
    enumerate_hypergroupoids,
    enumerate_hypersemigroups,
    find_witness,
    verify_corpus,
)
from .theorems import TheoremId

__version__ = "0.1.0"
