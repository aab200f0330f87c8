"""
Finite lattices used as enrichment bases
Ingested from a Hasse diagram; meet, join and implication are tabulated once
"""

import itertools
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from .errors import LatticeError, StructureError
from .posets import FinPoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LatticeV:
    """A finite lattice with precomputed operation tables"""

    name: str
    poset: FinPoset
    meet_table: Mapping[Tuple[str, str], str]
    join_table: Mapping[Tuple[str, str], str]
    top: str
    bottom: str
    heyting: Optional[Mapping[Tuple[str, str], str]] = None

    @property
    def elements(self):
        return self.poset.carrier

    def le(self, a, b):
        return self.poset.le(a, b)

    def meet(self, a, b):
        return self.meet_table[(a, b)]

    def join(self, a, b):
        return self.join_table[(a, b)]

    def meet_all(self, values):
        """Meet of a finite family; the empty meet is top"""
        result = self.top
        for v in values:
            result = self.meet_table[(result, v)]
        return result

    def join_all(self, values):
        """Join of a finite family; the empty join is bottom"""
        result = self.bottom
        for v in values:
            result = self.join_table[(result, v)]
        return result

    def implies(self, a, b):
        if self.heyting is None:
            raise LatticeError(f"lattice '{self.name}' is not Heyting")
        return self.heyting[(a, b)]

    @property
    def is_heyting(self):
        return self.heyting is not None

    def below(self, y):
        """Elements z ≤ y, in element order"""
        return [z for z in self.elements if self.le(z, y)]

    def __len__(self):
        return len(self.poset)

    def __iter__(self):
        return iter(self.poset)

    def __eq__(self, other):
        if not isinstance(other, LatticeV):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    def __repr__(self):
        return f"LatticeV({self.name}, {len(self)} elements)"


def _extremum(poset, candidates, greatest):
    for c in candidates:
        if all((poset.le(d, c) if greatest else poset.le(c, d)) for d in candidates):
            return c
    return None


def from_hasse(name, elements, edges):
    """
    Build a lattice from its Hasse diagram

    Args:
        name: name used in reports and documents
        elements: element atoms in display order
        edges: covering pairs (a, b) meaning a < b

    Returns:
        LatticeV: with meet, join and (when it exists) implication tables
    """
    try:
        poset = FinPoset.from_relations(elements, edges)
    except StructureError as e:
        raise LatticeError(f"lattice '{name}': {e}") from e

    if not len(poset):
        raise LatticeError(f"lattice '{name}' has no elements")

    meet, join = {}, {}
    for a, b in itertools.product(poset.carrier, repeat=2):
        lower = [c for c in poset.carrier if poset.le(c, a) and poset.le(c, b)]
        upper = [c for c in poset.carrier if poset.le(a, c) and poset.le(b, c)]
        m = _extremum(poset, lower, greatest=True)
        j = _extremum(poset, upper, greatest=False)
        if m is None:
            raise LatticeError(f"lattice '{name}' has no meet for {a} and {b}")
        if j is None:
            raise LatticeError(f"lattice '{name}' has no join for {a} and {b}")
        meet[(a, b)] = m
        join[(a, b)] = j

    top = _extremum(poset, list(poset.carrier), greatest=True)
    bottom = _extremum(poset, list(poset.carrier), greatest=False)

    heyting = _implication_table(poset, meet, join, bottom)
    if heyting is None:
        logger.debug("Lattice %s is not Heyting", name)

    return LatticeV(
        name, poset,
        MappingProxyType(meet), MappingProxyType(join),
        top, bottom,
        MappingProxyType(heyting) if heyting is not None else None
    )


def _implication_table(poset, meet, join, bottom):
    """a⇒b as the largest c with c∧a ≤ b, or None when one is missing"""
    table = {}
    for a, b in itertools.product(poset.carrier, repeat=2):
        candidate = bottom
        for c in poset.carrier:
            if poset.le(meet[(c, a)], b):
                candidate = join[(candidate, c)]
        if not poset.le(meet[(candidate, a)], b):
            return None
        table[(a, b)] = candidate
    return table


def adjunction_check(v):
    """
    Check a∧b ≤ c ⇔ a ≤ (b⇒c) on every triple

    Returns:
        tuple: (is_valid, error_message)
    """
    if not v.is_heyting:
        return False, f"lattice '{v.name}' has no implication table"
    for a, b, c in itertools.product(v.elements, repeat=3):
        if v.le(v.meet(a, b), c) != v.le(a, v.implies(b, c)):
            return False, f"adjunction fails at ({a},{b},{c})"
    return True, None


def two():
    """The two-element lattice 0 < 1"""
    return from_hasse('2', ['0', '1'], [('0', '1')])


def chain(k, name=None):
    """Chain with k elements 0 < 1 < … < k-1"""
    elements = [str(i) for i in range(k)]
    return from_hasse(name or f"chain{k}", elements, list(zip(elements, elements[1:])))


def chain3():
    """The chain 0 < ½ < 1"""
    return from_hasse('chain3', ['0', '1/2', '1'], [('0', '1/2'), ('1/2', '1')])


def boolean(n):
    """
    The Boolean lattice 2^n

    Elements are bit strings, bit i read left to right, so boolean(2) has
    elements 00, 10, 01, 11.
    """
    elements = [''.join('1' if index >> i & 1 else '0' for i in range(n)) for index in range(2 ** n)]
    edges = []
    for a in elements:
        for i in range(n):
            if a[i] == '0':
                edges.append((a, a[:i] + '1' + a[i + 1:]))
    return from_hasse('2^' + str(n), elements, edges)


def m3():
    """The diamond: three pairwise incomparable atoms between 0 and 1"""
    return from_hasse('M3', ['0', 'a', 'b', 'c', '1'],
                      [('0', 'a'), ('0', 'b'), ('0', 'c'), ('a', '1'), ('b', '1'), ('c', '1')])


def n5():
    """The pentagon 0 < a < b < 1 with c incomparable to a and b"""
    return from_hasse('N5', ['0', 'a', 'b', 'c', '1'],
                      [('0', 'a'), ('a', 'b'), ('b', '1'), ('0', 'c'), ('c', '1')])


NAMED_LATTICES = {
    '2': two,
    '2^2': lambda: boolean(2),
    '2^3': lambda: boolean(3),
    'chain3': chain3,
    'M3': m3,
    'N5': n5,
}


def named_lattice(name):
    """A bundled lattice by name, or None"""
    factory = NAMED_LATTICES.get(name)
    return factory() if factory else None

