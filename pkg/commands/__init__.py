"""
Commands package initialization
All command groups are imported here and registered in app.py
"""

from .sets import classify_fn, pullback_command, coequalizer_command
from .posets import classify_poset
from .categories import classify_functor, chains, karoubi
from .enriched import classify_vfunctor_command, join_check, classify_cover
from .multicat import classify_multifunctor_command
from .workspace import dump_command
from .common import RunSettings

ALL_COMMANDS = [
    classify_fn,
    classify_poset,
    classify_functor,
    classify_vfunctor_command,
    join_check,
    classify_cover,
    classify_multifunctor_command,
    karoubi,
    pullback_command,
    coequalizer_command,
    chains,
    dump_command,
]

__all__ = ['ALL_COMMANDS', 'RunSettings']
