"""
Descent package initialization
Provides the descent oracle and the bases it runs over
"""

from .bases import SetBase, PosetBase
from . import engine
from .engine import (
    KernelPairData,
    BundleMorphism,
    DescentDatum,
    OracleVerdict,
    kernel_pair,
    comparison_datum,
    validate_descent_datum,
    enumerate_descent_data,
    essential_image_witness,
    classify,
    pullback_along,
    is_descent_by_lifting
)

# Create singleton instances
set_base = SetBase()
poset_base = PosetBase()

__all__ = [
    'engine',
    'SetBase',
    'PosetBase',
    'set_base',
    'poset_base',
    'KernelPairData',
    'BundleMorphism',
    'DescentDatum',
    'OracleVerdict',
    'kernel_pair',
    'comparison_datum',
    'validate_descent_datum',
    'enumerate_descent_data',
    'essential_image_witness',
    'classify',
    'pullback_along',
    'is_descent_by_lifting'
]
