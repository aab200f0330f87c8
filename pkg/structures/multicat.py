"""
Finite multicategories
Multicategories internal to finite sets through the free monoid: reflexive
graphs, chain objects and the chain-surjectivity criteria for multifunctors
"""

import itertools
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from utils import encode_list, encode_tuple, validate_distinct, validate_total
from .errors import FunctorError, MulticategoryError, StructureError
from .finbase import FinFunction, FinSet, bijection_check, pullback
from .fincat import chain_criteria_report, compose_functors
from .results import Check

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FinMulticategory:
    """
    Objects x0, multimorphisms x1 with a list of source objects and one
    target, units, and composition f∘(g_1, …, g_k)
    """

    objs: FinSet
    mors: FinSet
    dom_list: Mapping[str, Tuple[str, ...]]
    cod: Mapping[str, str]
    unit: Mapping[str, str]
    comp: Mapping[Tuple[Tuple[str, ...], str], str]

    def into(self, x):
        """Multimorphisms with target x, in morphism order"""
        return [m for m in self.mors if self.cod[m] == x]

    def arguments(self, objects):
        """Every list of multimorphisms whose targets are the given objects"""
        return itertools.product(*(self.into(x) for x in objects))

    def flat_domain(self, ms):
        """Concatenated source lists of a list of multimorphisms"""
        return tuple(x for m in ms for x in self.dom_list[m])

    def is_unary(self):
        return all(len(self.dom_list[m]) == 1 for m in self.mors)

    def __repr__(self):
        return f"FinMulticategory({len(self.objs)} objects, {len(self.mors)} multimorphisms)"


@dataclass(frozen=True)
class MultiFunctor:
    dom: FinMulticategory
    cod: FinMulticategory
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]

    def on_list(self, ms):
        return tuple(self.mor_map[m] for m in ms)


@dataclass(frozen=True)
class ChainObject:
    """x2 as pairs (L, f); x3 as triples (M, L, f) with M flattened"""

    n: int
    elements: Tuple[tuple, ...]

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class MultiFunctorReport:
    """Surjectivity of p on multimorphisms, x2 and x3"""

    sufficient: bool
    levels: Mapping[int, Check]


def _format_element(element):
    parts = [encode_list(part) if isinstance(part, tuple) else part for part in element]
    return encode_tuple(*parts)


def _check_multicategory(objs, mors, dom_list, cod, unit, comp):
    for x in objs:
        u = unit[x]
        if dom_list[u] != (x,) or cod[u] != x:
            return False, f"unit {u} of {x} is not a loop on {x}"

    for (ms, f), h in comp.items():
        if tuple(cod[m] for m in ms) != dom_list[f]:
            return False, f"composition entry ({encode_list(ms)},{f}) does not match"
        flat = tuple(x for m in ms for x in dom_list[m])
        if dom_list[h] != flat or cod[h] != cod[f]:
            return False, f"composite at ({encode_list(ms)},{f}) has the wrong type"

    for f in mors:
        for ms in itertools.product(*([m for m in mors if cod[m] == x] for x in dom_list[f])):
            if (ms, f) not in comp:
                return False, f"comp undefined at ({encode_list(ms)},{f})"

    for f in mors:
        if comp[((f,), unit[cod[f]])] != f:
            return False, f"left unit law fails at {f}"
        if comp[(tuple(unit[x] for x in dom_list[f]), f)] != f:
            return False, f"right unit law fails at {f}"

    for f in mors:
        for ms in itertools.product(*([m for m in mors if cod[m] == x] for x in dom_list[f])):
            flat = tuple(x for m in ms for x in dom_list[m])
            for ns in itertools.product(*([m for m in mors if cod[m] == x] for x in flat)):
                outer = comp[(ns, comp[(ms, f)])]
                inner, start = [], 0
                for m in ms:
                    width = len(dom_list[m])
                    inner.append(comp[(ns[start:start + width], m)])
                    start += width
                if comp[(tuple(inner), f)] != outer:
                    return False, f"associativity fails at ({encode_list(ns)},{encode_list(ms)},{f})"

    return True, None


def validate_multicategory(objects, morphisms, units, composition, fill_units=True):
    """
    Build a finite multicategory, rejecting it if any law fails

    Args:
        objects: object atoms
        morphisms: dict multimorphism → (source list, target)
        units: dict object → unit multimorphism
        composition: iterable of (argument list, f, composite)
        fill_units: add composites with units that are not listed

    Returns:
        FinMulticategory
    """
    objects, morphisms = list(objects), dict(morphisms)
    for atoms, what in ((objects, 'object'), (list(morphisms), 'multimorphism')):
        is_valid, message = validate_distinct(atoms, what)
        if not is_valid:
            raise MulticategoryError(message)

    objs, mors = FinSet(tuple(objects)), FinSet(tuple(morphisms))
    dom_list = {m: tuple(src) for m, (src, _) in morphisms.items()}
    cod = {m: tgt for m, (_, tgt) in morphisms.items()}
    for m in mors:
        for x in dom_list[m] + (cod[m],):
            if x not in objs:
                raise MulticategoryError(f"multimorphism {m} mentions unknown object '{x}'")
    is_valid, message = validate_total(units, objs, mors, 'unit')
    if not is_valid:
        raise MulticategoryError(message)

    comp = {}
    for ms, f, h in composition:
        key = (tuple(ms), f)
        if key in comp and comp[key] != h:
            raise MulticategoryError(f"composition entry ({encode_list(ms)},{f}) is listed twice")
        for m in key[0] + (f, h):
            if m not in mors:
                raise MulticategoryError(f"composition mentions unknown multimorphism '{m}'")
        comp[key] = h

    if fill_units:
        for f in mors:
            comp.setdefault(((f,), units[cod[f]]), f)
            comp.setdefault((tuple(units[x] for x in dom_list[f]), f), f)

    is_valid, message = _check_multicategory(objs, mors, dom_list, cod, units, comp)
    if not is_valid:
        raise MulticategoryError(message)

    return FinMulticategory(
        objs, mors,
        MappingProxyType(dom_list), MappingProxyType(cod),
        MappingProxyType(dict(units)), MappingProxyType(comp)
    )


def validate_multifunctor(dom, cod, obj_map, mor_map):
    """Build a multifunctor, rejecting it if it fails to preserve structure"""
    for mapping, source, target, what in ((obj_map, dom.objs, cod.objs, 'object map'),
                                          (mor_map, dom.mors, cod.mors, 'multimorphism map')):
        is_valid, message = validate_total(mapping, source, target, what)
        if not is_valid:
            raise FunctorError(message)

    for m in dom.mors:
        image = mor_map[m]
        if cod.dom_list[image] != tuple(obj_map[x] for x in dom.dom_list[m]):
            raise FunctorError(f"multifunctor does not preserve the sources of {m}")
        if cod.cod[image] != obj_map[dom.cod[m]]:
            raise FunctorError(f"multifunctor does not preserve the target of {m}")
    for x in dom.objs:
        if mor_map[dom.unit[x]] != cod.unit[obj_map[x]]:
            raise FunctorError(f"multifunctor does not preserve the unit of {x}")
    for (ms, f), h in dom.comp.items():
        if cod.comp[(tuple(mor_map[m] for m in ms), mor_map[f])] != mor_map[h]:
            raise FunctorError(f"multifunctor does not preserve the composite ({encode_list(ms)},{f})")

    return MultiFunctor(dom, cod, MappingProxyType(dict(obj_map)), MappingProxyType(dict(mor_map)))


def identity_multifunctor(x):
    return MultiFunctor(x, x, MappingProxyType({o: o for o in x.objs}),
                        MappingProxyType({m: m for m in x.mors}))


def compose_multifunctors(q, p):
    """q∘p"""
    if p.cod.objs != q.dom.objs or p.cod.mors != q.dom.mors:
        raise FunctorError("cannot compose multifunctors with mismatched ends")
    return validate_multifunctor(
        p.dom, q.cod,
        {o: q.obj_map[p.obj_map[o]] for o in p.dom.objs},
        {m: q.mor_map[p.mor_map[m]] for m in p.dom.mors}
    )


def chain_object(x, n):
    """
    The chain object x2 or x3 by direct enumeration

    Args:
        x: FinMulticategory
        n: 2 or 3

    Returns:
        ChainObject: x2 holds (L, f) with the targets of L the sources
        of f; x3 holds (M, L, f) with (L, f) in x2 and the targets of
        the flat list M the concatenated sources of L
    """
    if n not in (2, 3):
        raise StructureError(f"chain object level {n} is not 2 or 3")

    pairs = [(ms, f) for f in x.mors for ms in x.arguments(x.dom_list[f])]
    if n == 2:
        return ChainObject(2, tuple(pairs))

    triples = [(ns, ms, f) for ms, f in pairs for ns in x.arguments(x.flat_domain(ms))]
    return ChainObject(3, tuple(triples))


def _lists(atoms, lengths):
    return [combo for k in sorted(lengths) for combo in itertools.product(atoms, repeat=k)]


def _free_monoid_map(fn, lengths, source_lists):
    """M(fn) restricted to the given lists, as a FinFunction on encoded lists"""
    targets = {}
    for combo in _lists(fn.cod.elements, lengths):
        targets[encode_list(combo)] = combo
    mapping = {encode_list(combo): encode_list(tuple(fn(a) for a in combo)) for combo in source_lists}
    return FinFunction(FinSet(tuple(encode_list(c) for c in source_lists)), FinSet(tuple(targets)), mapping)


def chain_object_via_pullback(x, n):
    """
    The chain object x2 or x3 as a set-level pullback

    x2 is the pullback of M d0 along d1; x3 is the pullback of M d0
    along the map x2 → M x0 sending (L, f) to the concatenated sources of L.
    Lists are materialized only at the lengths that occur.

    Returns:
        ChainObject: same elements as chain_object, in pullback order
    """
    if n not in (2, 3):
        raise StructureError(f"chain object level {n} is not 2 or 3")

    d0 = FinFunction(x.mors, x.objs, dict(x.cod))
    lengths = {len(x.dom_list[f]) for f in x.mors}
    source = _lists(x.mors.elements, lengths)
    md0 = _free_monoid_map(d0, lengths, source)
    d1 = FinFunction(x.mors, md0.cod, {f: encode_list(x.dom_list[f]) for f in x.mors})
    decode = {encode_list(c): c for c in source}

    pb2 = pullback(md0, d1)
    x2 = [(decode[a], f) for a, f in pb2.pairs.values()]
    if n == 2:
        return ChainObject(2, tuple(x2))

    lengths3 = {len(x.flat_domain(ms)) for ms, _ in x2}
    source3 = _lists(x.mors.elements, lengths3)
    md0_3 = _free_monoid_map(d0, lengths3, source3)
    keys = {encode_tuple(encode_list(ms), f): (ms, f) for ms, f in x2}
    flat = FinFunction(FinSet(tuple(keys)), md0_3.cod,
                       {k: encode_list(x.flat_domain(ms)) for k, (ms, _) in keys.items()})
    decode3 = {encode_list(c): c for c in source3}

    pb3 = pullback(md0_3, flat)
    x3 = [(decode3[a],) + keys[k] for a, k in pb3.pairs.values()]
    return ChainObject(3, tuple(x3))


def _image(p, element, n):
    if n == 1:
        return p.mor_map[element]
    return tuple(p.on_list(part) if isinstance(part, tuple) else p.mor_map[part] for part in element)


def classify_multifunctor(p):
    """
    Sufficient condition for effective descent of a multifunctor

    p must be surjective on multimorphisms, on x2 and on x3. The same
    report serves Set-enriched finite multicategories.

    Returns:
        MultiFunctorReport: each failing level names an unhit element
    """
    levels = {}
    for n in (1, 2, 3):
        if n == 1:
            source, target = list(p.dom.mors), list(p.cod.mors)
        else:
            source, target = chain_object(p.dom, n).elements, chain_object(p.cod, n).elements
        hit = {_image(p, element, n) for element in source}
        missed = [element for element in target if element not in hit]
        if missed:
            shown = missed[0] if n == 1 else _format_element(missed[0])
            levels[n] = Check(False, f"level {n}: {shown} not hit", witness=missed[0])
        else:
            levels[n] = Check(True, f"level {n}: surjective")

    sufficient = all(check.holds for check in levels.values())
    logger.info("Multifunctor sufficient condition %s", 'holds' if sufficient else 'fails')
    return MultiFunctorReport(sufficient, MappingProxyType(levels))


def reflexive_graph_transfer(p):
    """
    Surjectivity on multimorphisms forces surjectivity on objects

    Returns:
        Check: a failure names an unhit object and indicates corrupted input
    """
    if set(p.mor_map.values()) != set(p.cod.mors):
        return Check(True, "vacuous: not surjective on multimorphisms")
    hit = set(p.obj_map.values())
    for y in p.cod.objs:
        if y not in hit:
            return Check(False, f"object {y} not hit although every multimorphism is", witness=y)
    return Check(True, "surjective on objects")


def free_monoid_pullback_check(f, g, length):
    """
    Whether the free monoid preserves the pullback of f and g on lists up to a length

    Compares lists of pullback pairs with pairs of lists having equal
    image lists.

    Returns:
        Check
    """
    if f.cod != g.cod:
        raise StructureError("pullback requires a common codomain")

    lengths = set(range(length + 1))
    pb = pullback(f, g)
    lhs = _lists(pb.apex.elements, lengths)

    mf = _free_monoid_map(f, lengths, _lists(f.dom.elements, lengths))
    mg = _free_monoid_map(g, lengths, _lists(g.dom.elements, lengths))
    rhs = pullback(mf, mg)

    index = {ab: k for k, ab in rhs.pairs.items()}
    mapping = {}
    for combo in lhs:
        firsts = encode_list(tuple(pb.pairs[k][0] for k in combo))
        seconds = encode_list(tuple(pb.pairs[k][1] for k in combo))
        mapping[encode_list(combo)] = index[(firsts, seconds)]

    comparison = FinFunction(FinSet(tuple(encode_list(c) for c in lhs)), rhs.apex, mapping)
    check = bijection_check(comparison)
    if not check.holds:
        return Check(False, f"comparison is not a bijection: {check.certificate}")
    return Check(True, f"both sides have {len(lhs)} elements")


def graded_reduction(F, over_dom, over_cod):
    """
    Chain criteria for a functor over a base category

    Args:
        F: FinFunctor A → B
        over_dom: FinFunctor A → C
        over_cod: FinFunctor B → C with over_cod∘F = over_dom

    Returns:
        tuple: chain_criteria_report of the underlying functor
    """
    composite = compose_functors(over_cod, F)
    for m in F.dom.morphisms:
        if composite.mor_map[m] != over_dom.mor_map[m]:
            raise FunctorError(f"triangle does not commute at {m}")
    for x in F.dom.objects:
        if composite.obj_map[x] != over_dom.obj_map[x]:
            raise FunctorError(f"triangle does not commute at {x}")
    return chain_criteria_report(F)


def multicategory_from_category(c):
    """A finite category as a multicategory with unary multimorphisms only"""
    return validate_multicategory(
        list(c.objects),
        {m: ((c.src[m],), c.tgt[m]) for m in c.morphisms},
        dict(c.ident),
        [((g,), f, h) for (f, g), h in c.comp.items()],
        fill_units=False
    )


def multifunctor_from_functor(F, dom=None, cod=None):
    """A functor between finite categories as a multifunctor"""
    return validate_multifunctor(
        dom or multicategory_from_category(F.dom),
        cod or multicategory_from_category(F.cod),
        dict(F.obj_map), dict(F.mor_map)
    )
