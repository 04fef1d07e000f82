"""Exact equivariant cohomology of pure string motion groups.

The degree-k rational cohomology of the group of motions of n unknotted,
unlinked circles (with each circle returning to its place and orientation)
has a basis of rooted labelled forests on [n] with k edges, acted on by the
signed permutation group W_n.  This package computes those representations
exactly: character tables, irreducible decompositions, stable names,
stability onsets, invariant subspaces, and an independent reconstruction
from the presentation of the cohomology ring.
"""

from .errors import (
    ConsistencyError,
    CyclicProductError,
    ResourceLimitError,
    StringMotionError,
)
from .partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    enumerate_double_partitions,
    enumerate_partitions,
    format_stable,
    hook_dimension,
    irreducible_dimension,
    pad_stable,
    stable_name,
    wn_dimension,
)
from .signedperm import SignedPermutation, signed_cycle_type
from .classtables import ConjClass, ConjClassTable, class_table, group_order
from .characters import (
    CharacterTable,
    ClassFunction,
    character_table,
    epsilon_value,
    induced_character,
    mn_character,
    wn_character,
)
from .forests import (
    count_forests_enumerated,
    enumerate_forests,
    forest_count,
    from_wedge,
    materialize_forests,
    read_forests,
    stabilize,
    to_wedge,
    write_forests,
)
from .action import (
    act,
    cohomology_character,
    find_negating_involution,
    sn_cohomology_character,
    symmetrize_over_sn,
    trivial_multiplicity,
)
from .decompose import (
    MultiplicityVector,
    StabilityReport,
    decompose,
    decompose_class_function,
    induction_character_check,
    pieri_induce,
    restrict_to_sn,
    stability_scan,
)
from .oracle import (
    build_relation_matrix,
    oracle_action_sign,
    quotient_rank,
    verify_forest_basis,
)
from .verify import VerifyCaps, run_verification

__version__ = "0.1.0"
