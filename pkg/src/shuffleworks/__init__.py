"""In-place k-way perfect shuffles and two-round swap factorizations."""

from .involution_factor import (
    InvolutionPair,
    brute_force_factorization_count,
    brute_force_factorizations,
    circular_involution,
    enumerate_circular_factorizations,
    factor_cyclic,
    factor_permutation,
)
from .network import (
    SwapNetwork,
    apply_network,
    build_network,
    check_disjoint,
    emit_dot,
    emit_text,
    network_permutation,
    parse_text,
)
from .oracle import (
    enumerate_involutions,
    inshuffle_permutation,
    oracle_apply,
    oracle_shuffle,
    telephone_number,
)
from .perm_core import (
    CycleDecomposition,
    Involution,
    Permutation,
    apply_involution_in_place,
    apply_pair_in_place,
    compose,
    cycle_decompose,
    cycle_notation,
    identity,
    inverse,
    is_involution,
    parse_cycle_notation,
    permutation_from_cycles,
)
from .shuffle_bitrev import (
    GeneralShuffleStats,
    KaryCounter,
    RotationPlan,
    ShuffleSpec,
    exact_log,
    power_table,
    rev_digits,
    rev_next,
    rotate_left,
    rotation_cost,
    rotation_plan,
    ruler_increment,
    revswap_round,
    shuffle_general_k2,
    shuffle_power,
    swap_counts,
)
from .shuffle_modinv import (
    ModContext,
    OpCounter,
    compose_j,
    ext_gcd,
    j_map,
    mod_inverse,
    op_count_profile,
    shuffle_modinv,
    swap_count_modinv,
)

__version__ = "0.1.0"

__all__ = [
    "CycleDecomposition",
    "GeneralShuffleStats",
    "Involution",
    "InvolutionPair",
    "KaryCounter",
    "ModContext",
    "OpCounter",
    "Permutation",
    "RotationPlan",
    "ShuffleSpec",
    "SwapNetwork",
    "apply_involution_in_place",
    "apply_network",
    "apply_pair_in_place",
    "brute_force_factorization_count",
    "brute_force_factorizations",
    "build_network",
    "check_disjoint",
    "circular_involution",
    "compose",
    "compose_j",
    "cycle_decompose",
    "cycle_notation",
    "emit_dot",
    "emit_text",
    "enumerate_circular_factorizations",
    "enumerate_involutions",
    "exact_log",
    "ext_gcd",
    "factor_cyclic",
    "factor_permutation",
    "identity",
    "inshuffle_permutation",
    "inverse",
    "is_involution",
    "j_map",
    "mod_inverse",
    "network_permutation",
    "op_count_profile",
    "oracle_apply",
    "oracle_shuffle",
    "parse_cycle_notation",
    "parse_text",
    "permutation_from_cycles",
    "power_table",
    "rev_digits",
    "rev_next",
    "revswap_round",
    "rotate_left",
    "rotation_cost",
    "rotation_plan",
    "ruler_increment",
    "shuffle_general_k2",
    "shuffle_modinv",
    "shuffle_power",
    "swap_count_modinv",
    "swap_counts",
    "telephone_number",
]
