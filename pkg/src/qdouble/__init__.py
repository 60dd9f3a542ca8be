"""Exact-arithmetic cleft extensions of k^G_omega, twisted quantum
doubles, admissible central quotients, and the simple-current modularity
criterion."""

from .catalog import (
    cyclic_group,
    dihedral_group,
    direct_product,
    klein_four,
    quaternion_group,
)
from .cleft import (
    BetaCocycle,
    CleftObject,
    GroupLike,
    GroupLikeData,
    HElement,
    QuasiHopfAlgebra,
    build_algebra,
    central_group_likes,
    check_cleft_morphism,
    gamma_trivial_subgroup,
    group_like_structure,
    group_likes,
    trivial_cleft,
    validate_cleft,
    verify_canonical_maps,
    verify_quasi_hopf,
)
from .cochains import (
    Cochain,
    coboundary,
    cyclic_cocycle,
    inflate,
    is_normalized_cocycle,
    solve_coboundary,
    solve_modulus,
    zero_cochain,
)
from .currents import (
    EMData,
    PairingTable,
    SCGroup,
    SimpleCurrent,
    admissible_pairing,
    bicharacter,
    em_data,
    independence_check,
    is_nondegenerate,
    modularity_verdict,
    sc_dual,
    sc_tensor,
    simple_currents,
)
from .double import (
    DoubleContext,
    build_double,
    c_omega_center,
    canonical_cleft,
    h2_order,
)
from .groups import (
    Character,
    FiniteGroup,
    GroupAction,
    QuotientData,
    Subgroup,
    character_homomorphisms,
    characters,
    conjugation_action,
    invariant_characters,
    load_group,
    quotient_with_section,
    subgroup_generated,
    trivial_action,
    validate_action,
)
from .quotient import (
    AdmissibilityCertificate,
    FailureReason,
    QuotientBuild,
    build_quotient,
    enumerate_nu,
    is_admissible,
    twist_relation_holds,
    verify_quotient,
)
from .scalars import CycloInt
from .smith import LinearSystemSolution, NoSolution, smith_normal_form, smith_solve

__version__ = "0.1.0"
