"""
Reverse-pass stack sorting of permutations.

A restricted stack pops an entry only when it is the next value the sorted
output needs; leftover stack contents return to the input reversed and the
pass repeats.  The number of returns is the permutation's rev-tier.  This
package computes rev-tier by machine simulation and by the separated-pair
characterization, mines the finite bases of the bounded-tier classes,
realizes the bijection between maximal-tier permutations and alternating
permutations, and assembles the exact counting series, with brute-force
oracles throughout.
"""

from .permutation import (
    Perm,
    PermutationError,
    InversionProfile,
    as_permutation,
    parse_permutation,
    format_permutation,
    identity,
    reverse,
    inverse,
    contains_pattern,
    delete_entry,
    insert_min,
    inversion_profile,
    rank,
    unrank,
    enumerate_sn,
)
from .pairs import (
    Orientation,
    SeparatedPairProfile,
    pair_orientation,
    orientation_profile,
    rev_tier_by_pairs,
    rev_tier_by_pairs_dp,
    classify,
    separated_pair_profile,
    witness_pair_from_pattern,
    max_tier_witness,
)
from .sorting import (
    PassRecord,
    SortTrace,
    SeriesMachineState,
    single_pass,
    rev_tier_by_simulation,
    sortable_within,
    series_machine_sort,
)
from .tables import (
    TierCountTable,
    RefinedCountTable,
    exact_tier_table,
    cumulative_tier_table,
    refined_counts_bruteforce,
    refined_counts_recurrence,
    eta_closed_form,
)
from .basis import (
    BasisReport,
    is_basis_element,
    compute_basis,
    avoids_all,
    enumerate_av,
)
from .entringer import (
    EntringerTable,
    MaximalTierFamily,
    entringer_table,
    is_alternating_downup,
    enumerate_alternating,
    maximal_tier_family,
    bijection_f,
    bijection_f_inverse,
)
from .series import (
    TruncatedSeries,
    catalan_series,
    catalan_compositions,
    mu_u_series,
    tier_series,
    wilf_series,
)

__version__ = "0.1.0"
