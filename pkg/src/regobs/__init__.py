"""Exact verification of generalized inverses, n-regular cocycles and their
idempotent obstructions, with monoidal, algebraic and TQFT-style checks.

All arithmetic is over the rationals; maps are ``Matrix`` objects acting on
column vectors.
"""

from .algebra import (
    AlmostBialgebra,
    ObstructedAlgebra,
    ObstructedCoalgebra,
    check_almost_hopf,
    check_regular_algebra,
    check_regular_coalgebra,
    check_regular_comodule,
    check_regular_module,
    convolution,
    dual_comodule,
    dual_module,
    dualize_algebra,
    dualize_bialgebra,
    dualize_coalgebra,
    hom_m_check,
)
from .chains import (
    StarChain,
    build_default_chain,
    check_star_chain,
    higher_projector,
    reduce_4_to_2,
)
from .cocycle import (
    Cocycle,
    CocycleReport,
    LiftData,
    MorphismKind,
    ObstructionStructure,
    RepresentedCategory,
    category_from_cycle,
    cocycle_morphism_check,
    lift_construct,
    obstruction_degree,
    obstruction_relations,
    verify_cocycle,
)
from .errors import InputError, RegObsError
from .geninverse import (
    generalized_inverse,
    is_generalized_inverse,
    is_inner_inverse,
    is_outer_inverse,
    lemma3_report,
    projector_identities,
    reflexive_from_inner,
)
from .linalg import Matrix, Subspace, compose, image, kernel, projector_onto
from .monoidal import (
    FunctorData,
    dual_cocycle,
    functor_check,
    natural_transformation_check,
    pairing_check,
    tensor_cocycles,
)
from .scenario import Scenario, dump_scenario, load_scenario, parse_scenario
from .tqft import (
    Boundary,
    Generator,
    Interaction,
    Signature,
    TqftAssignment,
    check_n_regular_tqft,
    evaluate,
    glue,
    opposite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
