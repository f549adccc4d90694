"""Exact computation around partition codes and nilpotent commutators.

The package ties together five layers:

* ``partitions`` — partitions, frequency sequences, spreads, dominance;
* ``burge`` — the code-word correspondence and the descent map;
* ``oblak`` — the greedy evaluation/annihilation process and its chains;
* ``boxes`` / ``words`` — descent-map fibers as coordinate boxes, and the
  Foata / lattice-path route to diagonal hook lengths;
* ``gfp`` / ``oracle`` — an exact GF(p) matrix oracle that checks the
  combinatorics against actual commuting nilpotent matrices.
"""

from .boxes import (
    coordinates_of,
    delta,
    fiber,
    fiber_bijection,
    fiber_code,
    max_parts_partition,
    symmetry_map,
)
from .burge import (
    BurgeChain,
    apply_a,
    apply_b,
    apply_del,
    burge_chain,
    characterize_superdistinct,
    decode,
    des,
    descent_map,
    descent_set,
    encode,
    in_class_b,
    maj,
)
from .errors import BudgetError
from .gfp import MatrixGFp
from .oblak import (
    OblakChain,
    annihilate,
    check_commuting_square,
    del_chain,
    equivalent_indices,
    evaluate,
    left_admissible,
    maximal_indices,
    oblak,
    oblak_all_chains,
    oblak_chain,
    right_admissible,
)
from .oracle import (
    jordan_matrix,
    jordan_type,
    pivots,
    random_commuting,
    restriction_type,
    scan_max_type,
    verify_restriction,
    witness_matrix,
)
from .partitions import (
    Spread,
    as_frequency,
    as_partition,
    dominates,
    format_partition,
    is_super_distinct,
    left_set,
    length,
    parse_partition,
    partitions_of,
    reduced,
    right_set,
    size,
    spreads,
    to_frequency,
    to_partition,
    two_measure,
)
from .words import diagonal_hooks, durfee, foata_fiber, inversions, path_to_partition

__version__ = "0.1.0"
