"""eisenlat: exact arithmetic on even integer lattices and order-3
isometries, with the fixed-locus classification tables for non-symplectic
order-3 automorphisms of K3 surfaces."""

from .classification import (
    FixedLocusType,
    LatticePair,
    RowReport,
    build_pair,
    enumerate_table1,
    invariants_from_nk,
    is_admissible,
    k12_factor_check,
    lefschetz_check,
    rs_exists,
    verify_row,
)
from .eisenstein import (
    EisNum,
    EModule,
    as_e_module,
    hermitian_det,
    hermitian_form,
    hermitian_gram,
    is_unimodular_over_E,
)
from .fibration import (
    FiberConfig,
    FibrationReport,
    analyze_config,
    enumerate_valid_configs,
    fixed_curves_in_fiber,
    genus_double_section,
    kodaira_from_multiplicity,
)
from .intmat import smith_normal_form
from .isometry import (
    Isometry,
    IsometryCheck,
    acts_trivially_on_discriminant,
    coinvariant_sublattice,
    direct_sum_isometry,
    find_order3_isometry,
    fixed_sublattice,
    make_isometry,
    standard_isometry,
    verify_isometry,
)
from .lattice import (
    DiscriminantGroup,
    FiniteQuadraticForm,
    Lattice,
    Signature,
    a_invariant,
    direct_sum,
    discriminant_form,
    discriminant_group,
    dual_scaled,
    enumerate_vectors_of_norm,
    is_p_elementary,
    is_primitive,
    lattice_from_descriptor,
    make_lattice,
    orthogonal_complement,
    saturation,
    signature,
    standard_lattice,
    twist,
)

__version__ = "0.1.0"
