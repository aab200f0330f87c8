"""
Command reports
Verdicts, criteria and certificates rendered through Jinja2 templates
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

# Exit statuses
HOLDS = 0
FAILS = 1
UNDECIDED = 2
USAGE_ERROR = 64

TEMPLATES = {
    'text': 'report.txt.j2',
    'machine': 'report.kv.j2',
}

_environment = Environment(
    loader=FileSystemLoader(str(Path(__file__).parent / 'templates')),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    autoescape=False,
)


@dataclass(frozen=True)
class Criterion:
    """One named condition of a report"""

    name: str
    holds: Optional[bool]
    certificate: str = ''
    failures: Tuple[str, ...] = ()

    @property
    def mark(self):
        if self.holds is None:
            return '?'
        return '✓' if self.holds else '✗'

    @property
    def status(self):
        if self.holds is None:
            return 'undecided'
        return 'true' if self.holds else 'false'


@dataclass
class Report:
    """Outcome of one command on one subject"""

    command: str
    subject: str
    verdict: str
    exit_code: int
    certificate: str = ''
    criteria: List[Criterion] = field(default_factory=list)
    details: List[Tuple[str, str]] = field(default_factory=list)
    bound: Optional[int] = None

    def add(self, name, holds, certificate='', failures=()):
        self.criteria.append(Criterion(name, holds, certificate, tuple(failures)))
        return self

    def detail(self, key, value):
        self.details.append((key, str(value)))
        return self

    def render(self, fmt='text'):
        if fmt not in TEMPLATES:
            raise ValueError(f"unknown report format '{fmt}'")
        return _environment.get_template(TEMPLATES[fmt]).render(report=self)


def exit_code_for(holds):
    """0 when the property holds, 1 when it fails, 2 when undecided"""
    if holds is None:
        return UNDECIDED
    return HOLDS if holds else FAILS
