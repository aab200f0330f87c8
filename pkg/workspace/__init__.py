"""
Workspace package initialization
Document ingestion and report rendering for the command line
"""

from .document import (
    DocumentError, Declaration, WorkspaceDocument, KINDS,
    load, loads, dump, dumps
)
from .report import (
    Criterion, Report, exit_code_for,
    HOLDS, FAILS, UNDECIDED, USAGE_ERROR
)

__all__ = [
    'DocumentError',
    'Declaration',
    'WorkspaceDocument',
    'KINDS',
    'load',
    'loads',
    'dump',
    'dumps',
    'Criterion',
    'Report',
    'exit_code_for',
    'HOLDS',
    'FAILS',
    'UNDECIDED',
    'USAGE_ERROR'
]
