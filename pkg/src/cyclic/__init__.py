"""Exact combinatorics of periodic orbits of the circle maps x -> kx (mod 1)."""

from .cycles import (
    CombinatorialType,
    Cycle,
    all_cycles,
    canonical_representative,
    combinatorial_type,
    conjugate_by_rotation,
    cycle_from_cycle_notation,
    cycle_from_table,
    descent,
    enumerate_types,
    parse_cycle,
    rho,
    rotation_cycle,
    symmetry_order,
)
from .errors import (
    BudgetExceeded,
    CycleParseError,
    CyclicError,
    DegreeTooSmall,
    InvariantError,
    NotAdmissible,
    NotRealizable,
    RotationCycleError,
    ShiftOutOfRange,
)
from .oracle import OrbitCatalog, classify, enumerate_orbits, verify_counts
from .realization import (
    DepVector,
    FixVector,
    Orbit,
    count_cycle_realizations,
    count_type_realizations,
    dep_to_fix,
    enumerate_admissible,
    fix_to_dep,
    realize_from_dep,
    realize_general,
    realize_minimal,
    rotated_type_realizations,
)
from .spectral import stationary_by_iteration, stationary_vector, verify_eigen
from .transition import (
    Signature,
    TransitionMatrix,
    matrix_power,
    pair_matrix,
    regularity_index,
    signature,
    signature_rotate,
    transition_matrix,
)

__version__ = "0.1.0"
