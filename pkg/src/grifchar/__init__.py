"""Exact computations with root data of reductive groups: weight
systems of representations, the graded module and determinant character
attached to a cocharacter, weight-pairing sums, and cocharacter
predicates (orbitally p-close, quasi-constant, minuscule)."""

from .errors import (
    CentralKernelViolated,
    CentralMu,
    DimensionMismatch,
    EmptySystem,
    EquivalenceViolated,
    GrifcharError,
    IllegalRank,
    InvalidPair,
    InvalidPrime,
    InvariantViolated,
    NotDominant,
    SweepOverflow,
)
from .rootdata import (
    Root,
    RootSystem,
    RootSystemSpec,
    bilinear,
    build_root_system,
    coroot_pairing,
    coxeter_number,
    reflect,
    root_string,
    root_system,
    weyl_orbit,
)
from .repweights import (
    WeightSystem,
    adjoint_weight_system,
    has_central_kernel,
    irrep_weight_system,
    sum_weight_systems,
    weyl_dimension,
)
from .griffiths import (
    GriffithsModule,
    GriffithsReport,
    coweight,
    deligne_gram,
    deligne_pairing,
    grif_pairings_closed,
    grif_pairings_direct,
    griffiths_module,
    length_invariant,
    mu_pairing,
    mu_weight_extremes,
    proportionality,
    weight_pairing_sum,
)
from .cochar import (
    EMPTY_AUTS,
    AutomorphismSet,
    automorphism_set,
    dominant_normalize,
    grif_p_close_equiv,
    is_minuscule,
    levi_type,
    max_orbit_ratio,
    minimal_admissible_prime,
    orbitally_p_close,
    quasi_constant,
)
from .sweep import SweepConfig, SweepReport, run_checks

__version__ = "0.1.0"
