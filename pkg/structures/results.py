"""
Verdict types shared by every classifier
"""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Optional


class DescentLevel(IntEnum):
    """Totally ordered descent levels"""

    NOT_ALMOST = 0
    ALMOST = 1
    DESCENT = 2
    EFFECTIVE_UP_TO_BOUND = 3
    EFFECTIVE = 4


LEVEL_LABELS = {
    DescentLevel.NOT_ALMOST: 'NotAlmost',
    DescentLevel.ALMOST: 'Almost',
    DescentLevel.DESCENT: 'Descent',
    DescentLevel.EFFECTIVE_UP_TO_BOUND: 'EffectiveUpToBound',
    DescentLevel.EFFECTIVE: 'Effective',
}


@dataclass(frozen=True)
class DescentClass:
    """A descent level together with a human-readable certificate"""

    level: DescentLevel
    certificate: str = ''
    bound: Optional[int] = None

    def __post_init__(self):
        if self.level == DescentLevel.EFFECTIVE_UP_TO_BOUND and self.bound is None:
            raise ValueError("EffectiveUpToBound requires the search bound")

    @property
    def label(self):
        name = LEVEL_LABELS[self.level]
        if self.level == DescentLevel.EFFECTIVE_UP_TO_BOUND:
            return f"{name}({self.bound})"
        return name

    @property
    def is_almost(self):
        return self.level >= DescentLevel.ALMOST

    @property
    def is_descent(self):
        return self.level >= DescentLevel.DESCENT

    @property
    def is_effective(self):
        return self.level >= DescentLevel.EFFECTIVE_UP_TO_BOUND

    def __lt__(self, other):
        return self.level < other.level

    def __le__(self, other):
        return self.level <= other.level

    def __str__(self):
        if self.certificate:
            return f"{self.label}: {self.certificate}"
        return self.label


@dataclass(frozen=True)
class Check:
    """Outcome of a decision procedure: a boolean plus its certificate"""

    holds: bool
    certificate: str = ''
    witness: Any = None
    failures: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.holds

    def __str__(self):
        verdict = 'holds' if self.holds else 'fails'
        return f"{verdict}: {self.certificate}" if self.certificate else verdict
