"""Exact folding, mutation and finite-type tools for skew-symmetrizable exchange matrices."""

from .canonical import canonical_form, find_isomorphism
from .characters import CharacterTable, character_table, load_table
from .cluster import (
    ExchangeGraph,
    Seed,
    check_linear_independence,
    cluster_monomials,
    explore,
    initial_seed,
    is_finite_type,
    mutate_seed,
    ntheta_matrix,
    specialize,
    specialize_graph,
)
from .cyclotomic import Cyclo
from .dynkin import DynkinProduct, DynkinType, cartan_matrix, finite_types, recognize_dynkin
from .equivariant import build_q_gamma, check_double_commutes
from .errors import ClusterFoldError
from .folding import fold_cartan, fold_exchange, fold_roots, unfold_cartan, unfold_exchange
from .groups import (
    AdmissibilityReport,
    OrbitPartition,
    VertexGroupAction,
    enumerate_group,
    orbits,
    stabilizer,
    trivial_action,
    validate_admissible,
)
from .laurent import LaurentPoly
from .matrices import (
    CartanDatum,
    ExchangeMatrix,
    cartan_counterpart,
    left_skew_symmetrizer,
    skew_symmetrizer,
    symmetrizer,
)
from .mutation import (
    CommutationResult,
    check_commutation,
    mutate,
    mutate_sequence,
    orbit_mutate,
    random_orbit_sequences,
)
from .quiver import Quiver, double_quiver, quivers_isomorphic
from .weyl import (
    FlagCase,
    ReducedWord,
    build_bik,
    classify_flag_case,
    full_rank_witness,
    is_reduced,
    longest_word_with_parabolic_prefix,
    positive_roots,
)

__version__ = "0.1.0"
