"""
Exceptions raised when a structure fails to validate
"""


class StructureError(ValueError):
    """Input data does not describe a valid structure"""


class CategoryError(StructureError):
    """Category axioms fail"""


class FunctorError(StructureError):
    """Functor or map laws fail"""


class LatticeError(StructureError):
    """Hasse diagram does not describe a (Heyting) lattice"""


class VCategoryError(StructureError):
    """Enriched unit or composition inequality fails"""


class MulticategoryError(StructureError):
    """Multicategory laws fail"""


class DescentDataError(StructureError):
    """Malformed bundle or gluing"""
