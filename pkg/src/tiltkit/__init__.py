"""tiltkit: exact-arithmetic computations in the tilting theory of bound
quiver algebras.

All core arithmetic is exact rational; every operation is deterministic
(pseudo-random choices take a documented seed, overridable through the
``TILTKIT_SEED`` environment variable).
"""

from .errors import (
    ActionsDontCommute,
    AmbiguousBasis,
    DecompositionStall,
    MalformedRelation,
    NonAdmissible,
    NotProjectiveComponents,
    NotSplit,
    RelationViolated,
    TiltkitError,
    UnsupportedAlgebra,
)
from .quiver import (
    AlgebraMorphism,
    BoundQuiverAlgebra,
    Quiver,
    Relation,
    build_algebra,
    check_ring_epimorphism,
    is_hereditary,
    opposite_algebra,
)
from .modules import (
    FiniteAlgebra,
    ModuleMap,
    Representation,
    decompose,
    direct_sum,
    duality_D,
    end_algebra,
    enumerate_indecomposables,
    euler_form,
    hom_dim,
    hom_dimension_matrix,
    hom_space,
    injective,
    injective_cogenerator,
    is_indecomposable,
    is_injective_module,
    is_isomorphic,
    is_projective_module,
    is_sincere,
    projective,
    radical_submodule,
    regular_module,
    simple,
    socle,
    top,
    trace_of,
    zero_module,
)
from .homological import (
    Resolution,
    ext,
    injective_dimension,
    injective_envelope,
    projective_cover,
    projective_dimension,
    projective_resolution,
)
from .tilting import (
    GenVerdict,
    cancel_summands,
    gen_n_membership,
    is_classical_cotilting,
    is_classical_tilting,
    is_large_partial_tilting,
    is_partial_tilting,
    is_selforthogonal,
    is_tilting,
)
from .bimodules import (
    Bimodule,
    EvaluationReport,
    bimodule_indecomposable,
    check_bad_case,
    check_good_case,
    count_reflexive,
    delta_left,
    delta_right,
    extension_solve,
    extension_verify,
    faithfully_balanced,
    hom_from_bimodule,
    make_bimodule,
    reflexivity,
    regular_bimodule,
    render_picture,
)
from .complexes import (
    BoundedComplex,
    classify_elementary,
    condition_b,
    from_resolution,
    hom_homotopy_dim,
    homology,
    is_resolution_shape,
    two_term,
)
from .suite import run_suite

__version__ = "0.1.0"
