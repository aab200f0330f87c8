"""
Structures package initialization
Provides centralized access to the finite structures and their checks
"""

from .errors import (
    StructureError, CategoryError, FunctorError, LatticeError,
    VCategoryError, MulticategoryError, DescentDataError
)
from .results import DescentLevel, DescentClass, Check, LEVEL_LABELS
from .finbase import (
    FinSet, FinFunction, Pullback, Coequalizer,
    pullback, coequalizer, kernel_pair, mediating_function,
    bijection_check, classify_set_function
)
from .posets import (
    FinPoset, MonotoneMap, PosetPullback, PosetCoequalizer,
    poset_pullback, poset_coequalizer, enumerate_posets, monotone_maps
)
from .fincat import (
    FinCategory, FinFunctor, ChainTable,
    validate_category, validate_functor, identity_functor, compose_functors,
    enumerate_chains, chain_surjective, chain_criteria_report,
    pullback_category, kernel_pair_functor,
    fully_faithful_check, essentially_surjective_check, equivalence_check,
    slice_category, product_category, poset_category, monoid_category,
    functor_between_posets
)
from .lattice import LatticeV, from_hasse, named_lattice, NAMED_LATTICES
from .famv import (
    FamObject, FamMorphism, Cover, make_cover, fam_pullback,
    decompose_covers, coproduct_of_covers, fam_isomorphic, cover_join,
    enumerate_connected_descent_data, classify_cover_thin, effective_cover_check,
    kernel_colimit, fam_coequalizer_of_kernel, is_regular_by_coequalizer
)
from .enriched import (
    VCategory, VFunctor, VFunctorReport,
    validate_vcategory, validate_vfunctor, hom_chain_cover, classify_vfunctor,
    join_condition_check, poset_chain_lift_check,
    vcategory_from_poset, vfunctor_from_monotone
)
from .multicat import (
    FinMulticategory, MultiFunctor, ChainObject, MultiFunctorReport,
    validate_multicategory, validate_multifunctor, identity_multifunctor,
    compose_multifunctors, chain_object, chain_object_via_pullback,
    classify_multifunctor, reflexive_graph_transfer, free_monoid_pullback_check,
    graded_reduction, multicategory_from_category, multifunctor_from_functor
)
from .cauchy import (
    Idempotent, KaroubiEnvelope, LaxEpiVerdict,
    idempotents, idempotent_splits, karoubi_envelope, karoubi_extend,
    classify_ff_lax_epi
)
from .catalog import Catalog

# Create singleton instances
catalog = Catalog()

__all__ = [
    'StructureError', 'CategoryError', 'FunctorError', 'LatticeError',
    'VCategoryError', 'MulticategoryError', 'DescentDataError',
    'DescentLevel', 'DescentClass', 'Check', 'LEVEL_LABELS',
    'FinSet', 'FinFunction', 'Pullback', 'Coequalizer',
    'pullback', 'coequalizer', 'kernel_pair', 'mediating_function',
    'bijection_check', 'classify_set_function',
    'FinPoset', 'MonotoneMap', 'PosetPullback', 'PosetCoequalizer',
    'poset_pullback', 'poset_coequalizer', 'enumerate_posets', 'monotone_maps',
    'FinCategory', 'FinFunctor', 'ChainTable',
    'validate_category', 'validate_functor', 'identity_functor', 'compose_functors',
    'enumerate_chains', 'chain_surjective', 'chain_criteria_report',
    'pullback_category', 'kernel_pair_functor',
    'fully_faithful_check', 'essentially_surjective_check', 'equivalence_check',
    'slice_category', 'product_category', 'poset_category', 'monoid_category',
    'functor_between_posets',
    'LatticeV', 'from_hasse', 'named_lattice', 'NAMED_LATTICES',
    'FamObject', 'FamMorphism', 'Cover', 'make_cover', 'fam_pullback',
    'decompose_covers', 'coproduct_of_covers', 'fam_isomorphic', 'cover_join',
    'enumerate_connected_descent_data', 'classify_cover_thin', 'effective_cover_check',
    'kernel_colimit', 'fam_coequalizer_of_kernel', 'is_regular_by_coequalizer',
    'VCategory', 'VFunctor', 'VFunctorReport',
    'validate_vcategory', 'validate_vfunctor', 'hom_chain_cover', 'classify_vfunctor',
    'join_condition_check', 'poset_chain_lift_check',
    'vcategory_from_poset', 'vfunctor_from_monotone',
    'FinMulticategory', 'MultiFunctor', 'ChainObject', 'MultiFunctorReport',
    'validate_multicategory', 'validate_multifunctor', 'identity_multifunctor',
    'compose_multifunctors', 'chain_object', 'chain_object_via_pullback',
    'classify_multifunctor', 'reflexive_graph_transfer', 'free_monoid_pullback_check',
    'graded_reduction', 'multicategory_from_category', 'multifunctor_from_functor',
    'Idempotent', 'KaroubiEnvelope', 'LaxEpiVerdict',
    'idempotents', 'idempotent_splits', 'karoubi_envelope', 'karoubi_extend',
    'classify_ff_lax_epi',
    'Catalog', 'catalog'
]
