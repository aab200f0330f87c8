"""
Utility functions package
Common helper functions and validators
"""

from .helpers import (
    encode_tuple,
    encode_list,
    encode_class,
    quote_atom,
    format_chain,
    format_mapping,
    format_count
)

from .validators import (
    validate_atom,
    validate_distinct,
    validate_total,
    validate_bound,
    validate_chain_length
)

__all__ = [
    'encode_tuple',
    'encode_list',
    'encode_class',
    'quote_atom',
    'format_chain',
    'format_mapping',
    'format_count',
    'validate_atom',
    'validate_distinct',
    'validate_total',
    'validate_bound',
    'validate_chain_length'
]
