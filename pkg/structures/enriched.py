"""
Categories enriched in a finite lattice
V-categories with ⊗ = ∧, V-functors, chain covers and the join condition
"""

import itertools
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from utils import encode_tuple, format_chain, validate_distinct, validate_total
from .errors import LatticeError, VCategoryError
from .famv import classify_cover_thin, make_cover
from .finbase import FinFunction, FinSet
from .lattice import LatticeV, two
from .results import Check, DescentLevel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class VCategory:
    """Objects with hom-values in a finite lattice"""

    lattice: LatticeV
    objects: FinSet
    hom: Mapping[Tuple[str, str], str]

    def chain_hom(self, xs):
        """C(x_0, …, x_n): the meet of consecutive homs"""
        return self.lattice.meet_all(self.hom[(a, b)] for a, b in zip(xs, xs[1:]))

    def __eq__(self, other):
        if not isinstance(other, VCategory):
            return NotImplemented
        return (self.lattice == other.lattice and self.objects == other.objects
                and dict(self.hom) == dict(other.hom))

    def __hash__(self):
        return hash((self.objects, tuple(sorted(self.hom.items()))))

    def __repr__(self):
        return f"VCategory({self.lattice.name}, {len(self.objects)} objects)"


@dataclass(frozen=True)
class VFunctor:
    """An object map with hom(x,y) ≤ hom(Fx,Fy)"""

    dom: VCategory
    cod: VCategory
    obj_map: FinFunction

    def __call__(self, x):
        return self.obj_map(x)

    def lifts(self, ys):
        """Every tuple (x_0, …, x_n) with F x_i = y_i"""
        return list(itertools.product(*(self.obj_map.fiber(y) for y in ys)))


@dataclass(frozen=True)
class VFunctorReport:
    """Chain-cover conditions at levels 1–3"""

    sufficient: bool
    levels: Mapping[int, Check]
    heyting: bool


LEVEL_REQUIREMENTS = {
    1: (DescentLevel.EFFECTIVE, 'effective descent'),
    2: (DescentLevel.DESCENT, 'descent'),
    3: (DescentLevel.ALMOST, 'almost descent'),
}


def validate_vcategory(lattice, objects, hom):
    """
    Build a V-category, rejecting it if a unit or composition inequality fails

    Args:
        lattice: LatticeV
        objects: object atoms
        hom: dict (x, y) → lattice element, total on pairs

    Returns:
        VCategory
    """
    objects = list(objects)
    is_valid, message = validate_distinct(objects, 'object')
    if not is_valid:
        raise VCategoryError(message)

    pairs = [(x, y) for x in objects for y in objects]
    for pair in pairs:
        if pair not in hom:
            raise VCategoryError(f"hom undefined at {encode_tuple(*pair)}")
        if hom[pair] not in lattice.elements:
            raise VCategoryError(f"hom {encode_tuple(*pair)} = '{hom[pair]}' is not in {lattice.name}")

    for x in objects:
        if hom[(x, x)] != lattice.top:
            raise VCategoryError(f"unit fails at {x}")

    for x0, x1, x2 in itertools.product(objects, repeat=3):
        if not lattice.le(lattice.meet(hom[(x1, x2)], hom[(x0, x1)]), hom[(x0, x2)]):
            raise VCategoryError(f"composition fails at {encode_tuple(x0, x1, x2)}")

    return VCategory(lattice, FinSet(tuple(objects)), MappingProxyType({pair: hom[pair] for pair in pairs}))


def validate_vfunctor(dom, cod, obj_map):
    """Build a V-functor, rejecting it if some hom inequality fails"""
    if dom.lattice != cod.lattice:
        raise VCategoryError("V-functor between categories over different lattices")
    is_valid, message = validate_total(obj_map, dom.objects, cod.objects, 'object map')
    if not is_valid:
        raise VCategoryError(message)

    v = dom.lattice
    for x, y in itertools.product(dom.objects, repeat=2):
        if not v.le(dom.hom[(x, y)], cod.hom[(obj_map[x], obj_map[y])]):
            raise VCategoryError(f"V-functor fails at {encode_tuple(x, y)}")
    return VFunctor(dom, cod, FinFunction(dom.objects, cod.objects, obj_map))


def hom_chain_cover(F, n, targets):
    """
    The cover of D(y_0, …, y_n) by the chain homs of all lifts

    Args:
        F: VFunctor
        n: chain length 1..3
        targets: n+1 objects of cod(F)

    Returns:
        Cover: indexed by lifts, encoded "(x_0,…,x_n)"
    """
    targets = tuple(targets)
    if len(targets) != n + 1:
        raise VCategoryError(f"{n}-chain cover needs {n + 1} target objects")
    for y in targets:
        if y not in F.cod.objects:
            raise VCategoryError(f"unknown object '{y}'")

    lifts = F.lifts(targets)
    return make_cover(
        F.dom.lattice,
        [F.dom.chain_hom(xs) for xs in lifts],
        F.cod.chain_hom(targets),
        index=[encode_tuple(*xs) for xs in lifts],
        name=encode_tuple(*targets)
    )


def classify_vfunctor(F):
    """
    Chain-cover report for a V-functor

    Level 1 covers must be effective, level 2 covers descent and level 3
    covers almost descent, over every tuple of target objects. All three
    together suffice for effective descent.

    Returns:
        VFunctorReport: each level lists every failing tuple
    """
    v = F.dom.lattice
    if not v.is_heyting:
        logger.warning("Lattice %s is not Heyting; chain covers are still classified exactly", v.name)

    levels = {}
    for n, (required, noun) in LEVEL_REQUIREMENTS.items():
        failures = []
        for targets in itertools.product(F.cod.objects, repeat=n + 1):
            verdict = classify_cover_thin(v, hom_chain_cover(F, n, targets))
            if verdict.level < required:
                failures.append(targets)
        if failures:
            first = encode_tuple(*failures[0])
            levels[n] = Check(False, f"{n}-chain cover at {first} is not {noun}",
                              witness=failures[0], failures=tuple(failures))
        else:
            levels[n] = Check(True, f"every {n}-chain cover is {noun}")

    sufficient = all(check.holds for check in levels.values())
    return VFunctorReport(sufficient, MappingProxyType(levels), v.is_heyting)


def join_condition_check(F):
    """
    Whether ⋁ C(x_0,x_1) ∧ C(x_1,x_2) over lifts equals D(y_0,y_1) ∧ D(y_1,y_2)
    for every triple of objects of cod(F)

    Returns:
        Check: failures lists every failing triple
    """
    v = F.dom.lattice
    if not v.is_heyting:
        raise LatticeError(f"join condition needs a Heyting lattice, {v.name} is not")

    failures = []
    for ys in itertools.product(F.cod.objects, repeat=3):
        joined = v.join_all(F.dom.chain_hom(xs) for xs in F.lifts(ys))
        if joined != F.cod.chain_hom(ys):
            failures.append(ys)

    if failures:
        return Check(False, f"join condition fails at {encode_tuple(*failures[0])}",
                     witness=failures[0], failures=tuple(failures))
    return Check(True, "join condition holds")


def poset_chain_lift_check(m):
    """
    Whether every a ≤ b ≤ c of cod(m) lifts to a' ≤ b' ≤ c' of dom(m)

    Args:
        m: MonotoneMap

    Returns:
        Check: failures lists every 2-chain without a lift
    """
    lifted = {(m(a), m(b), m(c)) for a, b, c in m.dom.two_chains()}
    failures = [chain for chain in m.cod.two_chains() if chain not in lifted]
    # Strict chains first
    failures.sort(key=lambda chain: len(set(chain)) < 3)
    if failures:
        return Check(False, f"no lift of {format_chain(failures[0])}",
                     witness=failures[0], failures=tuple(failures))
    return Check(True, "every 2-chain lifts")


def vcategory_from_poset(poset, lattice=None):
    """A poset as a category enriched in 2"""
    v = lattice or two()
    hom = {(x, y): v.top if poset.le(x, y) else v.bottom for x in poset for y in poset}
    return validate_vcategory(v, list(poset.carrier), hom)


def vfunctor_from_monotone(m, lattice=None):
    """A monotone map as a 2-enriched functor"""
    v = lattice or two()
    return validate_vfunctor(
        vcategory_from_poset(m.dom, v),
        vcategory_from_poset(m.cod, v),
        dict(m.fn.mapping)
    )
