"""
Families over a finite lattice
The free coproduct completion Fam(V) for thin V: families, pullbacks,
covers and their descent classification
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from utils import format_mapping
from .errors import LatticeError, StructureError
from .finbase import FinFunction, FinSet, coequalizer, pullback
from .lattice import LatticeV
from .results import Check, DescentClass, DescentLevel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FamObject:
    """A finite family (X_j) of lattice elements"""

    lattice: LatticeV
    index: FinSet
    fiber: Mapping[str, str]

    def __post_init__(self):
        for j in self.index:
            if j not in self.fiber:
                raise StructureError(f"family undefined at '{j}'")
            if self.fiber[j] not in self.lattice.elements:
                raise LatticeError(f"'{self.fiber[j]}' is not an element of {self.lattice.name}")
        object.__setattr__(self, 'fiber', MappingProxyType({j: self.fiber[j] for j in self.index}))

    def __len__(self):
        return len(self.index)

    def __eq__(self, other):
        if not isinstance(other, FamObject):
            return NotImplemented
        return (self.lattice == other.lattice and self.index == other.index
                and dict(self.fiber) == dict(other.fiber))

    def __hash__(self):
        return hash((self.index, tuple(self.fiber.items())))

    def __repr__(self):
        return f"FamObject({format_mapping(self.fiber)})"


@dataclass(frozen=True)
class FamMorphism:
    """(f, φ_j): an index map with X_j ≤ Y_f(j) for every j"""

    dom: FamObject
    cod: FamObject
    index_map: FinFunction

    def __post_init__(self):
        if self.dom.lattice != self.cod.lattice:
            raise StructureError("families live over different lattices")
        if self.index_map.dom != self.dom.index or self.index_map.cod != self.cod.index:
            raise StructureError("index map does not match the families")
        v = self.dom.lattice
        for j in self.dom.index:
            k = self.index_map(j)
            if not v.le(self.dom.fiber[j], self.cod.fiber[k]):
                raise StructureError(
                    f"component at '{j}' fails: {self.dom.fiber[j]} ≰ {self.cod.fiber[k]}"
                )

    @property
    def lattice(self):
        return self.dom.lattice


@dataclass(frozen=True)
class Cover(FamMorphism):
    """A family morphism into a single lattice element"""

    def __post_init__(self):
        super().__post_init__()
        if len(self.cod.index) != 1:
            raise StructureError(f"a cover needs a one-element codomain index, got {len(self.cod.index)}")

    @property
    def target(self):
        return self.cod.fiber[self.cod.index.elements[0]]

    @property
    def fibers(self):
        return [self.dom.fiber[j] for j in self.dom.index]


@dataclass(frozen=True)
class FamPullback:
    apex: FamObject
    proj_1: FamMorphism
    proj_2: FamMorphism


@dataclass(frozen=True)
class JoinResult:
    value: str
    empty: bool = False


@dataclass(frozen=True)
class ConnectedDescentDatum:
    """A family W_j ≤ X_j with W_j ∧ X_i = X_j ∧ W_i"""

    family: Mapping[str, str]

    def glue(self, v):
        return v.join_all(self.family.values())

    def __repr__(self):
        return f"ConnectedDescentDatum({format_mapping(self.family)})"


@dataclass(frozen=True)
class FamCoequalizer:
    quotient: FamObject
    q: FamMorphism


def make_cover(v, fibers, target, index=None, name='*'):
    """
    Build a cover (X_j) ≤ Y

    Args:
        v: LatticeV
        fibers: lattice elements X_j in index order
        target: lattice element Y
        index: index atoms (default j0, j1, …)
        name: the single codomain index atom

    Returns:
        Cover
    """
    fibers = list(fibers)
    index = list(index) if index is not None else [f"j{i}" for i in range(len(fibers))]
    if len(index) != len(fibers):
        raise StructureError("cover index and fibers differ in length")

    dom = FamObject(v, FinSet(tuple(index)), dict(zip(index, fibers)))
    cod = FamObject(v, FinSet.of(name), {name: target})
    return Cover(dom, cod, FinFunction(dom.index, cod.index, {j: name for j in index}))


def fam_pullback(m1, m2):
    """
    Pullback of two family morphisms with a common codomain

    The index is the pullback of the index maps and the fiber at (j,k)
    is X_j ∧ X'_k.
    """
    if m1.cod != m2.cod:
        raise StructureError("pullback requires a common codomain")

    v = m1.lattice
    pb = pullback(m1.index_map, m2.index_map)
    fiber = {key: v.meet(m1.dom.fiber[j], m2.dom.fiber[k]) for key, (j, k) in pb.pairs.items()}
    apex = FamObject(v, pb.apex, fiber)
    return FamPullback(
        apex,
        FamMorphism(apex, m1.dom, pb.proj_f),
        FamMorphism(apex, m2.dom, pb.proj_g)
    )


def decompose_covers(m):
    """One cover per codomain index, restricting m to each preimage"""
    v = m.lattice
    covers = []
    for k in m.cod.index:
        part = m.index_map.fiber(k)
        dom = FamObject(v, FinSet(tuple(part)), {j: m.dom.fiber[j] for j in part})
        cod = FamObject(v, FinSet.of(k), {k: m.cod.fiber[k]})
        covers.append(Cover(dom, cod, FinFunction(dom.index, cod.index, {j: k for j in part})))
    return covers


def coproduct_of_covers(covers, lattice=None):
    """Coproduct of a sequence of covers with disjoint index atoms"""
    if not covers and lattice is None:
        raise StructureError("coproduct of no covers needs an explicit lattice")
    v = lattice or covers[0].lattice

    dom_index, dom_fiber, cod_index, cod_fiber, mapping = [], {}, [], {}, {}
    for c in covers:
        k = c.cod.index.elements[0]
        cod_index.append(k)
        cod_fiber[k] = c.target
        for j in c.dom.index:
            dom_index.append(j)
            dom_fiber[j] = c.dom.fiber[j]
            mapping[j] = k

    dom = FamObject(v, FinSet(tuple(dom_index)), dom_fiber)
    cod = FamObject(v, FinSet(tuple(cod_index)), cod_fiber)
    return FamMorphism(dom, cod, FinFunction(dom.index, cod.index, mapping))


def _signature(m):
    parts = []
    for k in m.cod.index:
        fibers = tuple(sorted(m.dom.fiber[j] for j in m.index_map.fiber(k)))
        parts.append((m.cod.fiber[k], fibers))
    return Counter(parts)


def fam_isomorphic(m1, m2):
    """
    Whether two family morphisms are isomorphic as arrows

    Over thin V this holds exactly when the codomain points can be matched
    with equal fibers and equal multisets of preimage fibers.
    """
    if m1.lattice != m2.lattice:
        return False
    return _signature(m1) == _signature(m2)


def cover_join(v, c):
    """
    ⋁ X_j of a cover, the colimit of its kernel diagram

    Returns:
        JoinResult: bottom with empty=True for an empty family
    """
    _require_thin(v)
    if not len(c.dom.index):
        logger.warning("Join of an empty family taken as bottom")
        return JoinResult(v.bottom, empty=True)
    return JoinResult(v.join_all(c.fibers))


def _require_thin(v):
    if not isinstance(v, LatticeV):
        raise LatticeError("the cover classification needs a finite lattice")


def _distributivity_failure(v, c):
    for z in v.below(c.target):
        spread = v.join_all(v.meet(z, x) for x in c.fibers)
        if spread != z:
            return z, spread
    return None


def enumerate_connected_descent_data(v, c):
    """
    Every family W_j ≤ X_j with W_j ∧ X_i = X_j ∧ W_i for all i, j

    Returns:
        list: ConnectedDescentDatum values in lexicographic element order
    """
    _require_thin(v)
    index = c.dom.index.elements
    fibers = c.dom.fiber
    data = []
    for choice in itertools.product(*(v.below(fibers[j]) for j in index)):
        family = dict(zip(index, choice))
        if all(v.meet(family[j], fibers[i]) == v.meet(fibers[j], family[i])
               for i, j in itertools.combinations(index, 2)):
            data.append(ConnectedDescentDatum(MappingProxyType(family)))
    logger.debug("Cover %r has %d connected descent data", c.dom, len(data))
    return data


def _gluing_failure(v, c):
    for datum in enumerate_connected_descent_data(v, c):
        glued = datum.glue(v)
        for j in c.dom.index:
            if v.meet(c.dom.fiber[j], glued) != datum.family[j]:
                return datum, j, glued
    return None


def classify_cover_thin(v, c, use_heyting_shortcut=False):
    """
    Descent level of a cover over a thin lattice

    Almost iff the family is nonempty. Descent iff additionally the
    join is the target and every Z ≤ Y is the join of Z ∧ X_j. Effective
    iff additionally every connected descent datum glues along its join.

    Args:
        v: LatticeV
        c: Cover
        use_heyting_shortcut: skip the distributivity sweep when v is Heyting

    Returns:
        DescentClass
    """
    _require_thin(v)
    if not len(c.dom.index):
        return DescentClass(DescentLevel.NOT_ALMOST, "empty family")

    joined = v.join_all(c.fibers)
    if joined != c.target:
        return DescentClass(DescentLevel.ALMOST, f"join of the family is {joined}, not {c.target}")

    if not (use_heyting_shortcut and v.is_heyting):
        failure = _distributivity_failure(v, c)
        if failure:
            z, spread = failure
            return DescentClass(
                DescentLevel.ALMOST,
                f"pullback along {z} ≤ {c.target} is not regular: the meets join to {spread}"
            )

    failure = _gluing_failure(v, c)
    if failure:
        datum, j, glued = failure
        return DescentClass(
            DescentLevel.DESCENT,
            f"datum {format_mapping(datum.family)} does not glue at {j} (join {glued})"
        )
    return DescentClass(DescentLevel.EFFECTIVE, f"join {joined}, every datum glues")


def effective_cover_check(v, c):
    """
    Whether every connected descent datum of a Descent cover glues along its join

    Returns:
        Check: the witness is a violating ConnectedDescentDatum
    """
    if classify_cover_thin(v, c).level < DescentLevel.DESCENT:
        raise StructureError("cover is not a descent morphism")

    failure = _gluing_failure(v, c)
    if failure:
        datum, j, glued = failure
        return Check(False, f"X_{j} ∧ {glued} ≠ {datum.family[j]}", witness=datum)
    return Check(True, "every connected descent datum glues")


def kernel_colimit(v, fibers):
    """
    Colimit in V of the kernel diagram of a family, by exhaustive search

    The diagram has the X_j and the X_i ∧ X_j with their inclusions; in a
    thin V a cocone is any upper bound of the X_j, so the colimit is the
    least one.
    """
    fibers = list(fibers)
    cocones = [z for z in v.elements if all(v.le(x, z) for x in fibers)]
    for z in cocones:
        if all(v.le(z, w) for w in cocones):
            return z
    raise LatticeError(f"kernel diagram has no colimit in {v.name}")


def fam_coequalizer_of_kernel(v, c):
    """
    Coequalizer in Fam(V) of the kernel pair of a cover

    Returns:
        FamCoequalizer: index = coequalizer of the index projections,
        fiber at each class = colimit of its members
    """
    _require_thin(v)
    kp = fam_pullback(c, c)
    coeq = coequalizer(kp.proj_1.index_map, kp.proj_2.index_map)
    fiber = {atom: kernel_colimit(v, [c.dom.fiber[j] for j in members])
             for atom, members in coeq.classes.items()}
    quotient = FamObject(v, coeq.quotient, fiber)
    return FamCoequalizer(quotient, FamMorphism(c.dom, quotient, coeq.q))


def is_regular_by_coequalizer(v, c):
    """Whether the comparison from the kernel coequalizer to the target is an isomorphism"""
    coeq = fam_coequalizer_of_kernel(v, c)
    if len(coeq.quotient.index) != 1:
        return False
    return coeq.quotient.fiber[coeq.quotient.index.elements[0]] == c.target
