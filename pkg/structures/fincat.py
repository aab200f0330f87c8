"""
Finite categories and functors
Explicit composition tables, n-chains, categorical pullbacks and kernel
pairs, equivalences and slices
"""

import itertools
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from utils import encode_tuple, format_chain, validate_chain_length, validate_distinct, validate_total
from .errors import CategoryError, FunctorError, StructureError
from .finbase import FinSet
from .results import Check

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FinCategory:
    """A finite category given by its full composition table"""

    objects: FinSet
    morphisms: FinSet
    src: Mapping[str, str]
    tgt: Mapping[str, str]
    ident: Mapping[str, str]
    comp: Mapping[Tuple[str, str], str]

    def hom(self, x, y):
        """Morphisms x → y, in morphism order"""
        return [m for m in self.morphisms if self.src[m] == x and self.tgt[m] == y]

    def compose(self, g, f):
        """g∘f"""
        return self.comp[(g, f)]

    def composable(self, g, f):
        return self.src[g] == self.tgt[f]

    def endomorphisms(self, x):
        return self.hom(x, x)

    def inverse(self, m):
        """An inverse of m, or None"""
        for n in self.hom(self.tgt[m], self.src[m]):
            if self.comp[(n, m)] == self.ident[self.src[m]] and \
                    self.comp[(m, n)] == self.ident[self.tgt[m]]:
                return n
        return None

    def isomorphic(self, x, y):
        return any(self.inverse(m) is not None for m in self.hom(x, y))

    def describe(self):
        return f"{len(self.objects)} objects, {len(self.morphisms)} morphisms"

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.objects == other.objects and self.morphisms == other.morphisms
                and dict(self.src) == dict(other.src) and dict(self.tgt) == dict(other.tgt)
                and dict(self.ident) == dict(other.ident) and dict(self.comp) == dict(other.comp))

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    def __repr__(self):
        return f"FinCategory({self.describe()})"


@dataclass(frozen=True, eq=False)
class FinFunctor:
    """A functor between finite categories"""

    dom: FinCategory
    cod: FinCategory
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]

    def __call__(self, m):
        return self.mor_map[m]

    def __repr__(self):
        return f"FinFunctor({self.dom.describe()} → {self.cod.describe()})"


@dataclass(frozen=True)
class ChainTable:
    """All composable n-tuples (m_n, …, m_1) of a finite category"""

    n: int
    chains: Tuple[Tuple[str, ...], ...]

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)


@dataclass(frozen=True)
class CategoryPullback:
    apex: FinCategory
    proj_f: FinFunctor
    proj_g: FinFunctor


@dataclass(frozen=True)
class CategoryKernelPair:
    apex: FinCategory
    d1: FinFunctor
    d0: FinFunctor
    diagonal: FinFunctor


def _check_category(objects, morphisms, src, tgt, ident, comp):
    """
    Check every category axiom

    Returns:
        tuple: (is_valid, error_message) naming the first violation
    """
    is_valid, message = validate_total(src, morphisms, objects, 'source')
    if not is_valid:
        return False, message
    is_valid, message = validate_total(tgt, morphisms, objects, 'target')
    if not is_valid:
        return False, message
    is_valid, message = validate_total(ident, objects, morphisms, 'identity')
    if not is_valid:
        return False, message

    for x in objects:
        m = ident[x]
        if src[m] != x or tgt[m] != x:
            return False, f"identity {m} of {x} is not an endomorphism of {x}"

    for (g, f), h in comp.items():
        if g not in morphisms or f not in morphisms or h not in morphisms:
            return False, f"composition entry ({g},{f}) mentions an unknown morphism"
        if src[g] != tgt[f]:
            return False, f"composition entry ({g},{f}) is not composable"
        if src[h] != src[f] or tgt[h] != tgt[g]:
            return False, f"composite {g}∘{f} = {h} has the wrong type"

    for g in morphisms:
        for f in morphisms:
            if src[g] == tgt[f] and (g, f) not in comp:
                return False, f"composition undefined at ({g},{f})"

    for f in morphisms:
        if comp[(ident[tgt[f]], f)] != f:
            return False, f"left unit law fails at {f}"
        if comp[(f, ident[src[f]])] != f:
            return False, f"right unit law fails at {f}"

    for h in morphisms:
        for g in morphisms:
            if src[h] != tgt[g]:
                continue
            for f in morphisms:
                if src[g] != tgt[f]:
                    continue
                if comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                    return False, f"associativity fails at ({h},{g},{f})"

    return True, None


def validate_category(objects, morphisms, identities, composition, fill_units=True):
    """
    Build a category from raw data, rejecting it if any axiom fails

    Args:
        objects: sequence of object atoms
        morphisms: dict morphism → (source, target), in morphism order
        identities: dict object → identity morphism
        composition: iterable of (g, f, g∘f) triples
        fill_units: add composites with identities that are not listed

    Returns:
        FinCategory: the validated category
    """
    is_valid, message = validate_distinct(list(objects), 'object')
    if not is_valid:
        raise CategoryError(message)
    is_valid, message = validate_distinct(list(morphisms), 'morphism')
    if not is_valid:
        raise CategoryError(message)

    obj_set = FinSet(tuple(objects))
    mor_set = FinSet(tuple(morphisms))
    src = {m: st[0] for m, st in morphisms.items()}
    tgt = {m: st[1] for m, st in morphisms.items()}
    ident = dict(identities)

    comp = {}
    for g, f, h in composition:
        if (g, f) in comp and comp[(g, f)] != h:
            raise CategoryError(f"composition entry ({g},{f}) is listed twice with different results")
        comp[(g, f)] = h

    if fill_units:
        for f in mor_set:
            if tgt[f] in ident:
                comp.setdefault((ident[tgt[f]], f), f)
            if src[f] in ident:
                comp.setdefault((f, ident[src[f]]), f)

    is_valid, message = _check_category(obj_set, mor_set, src, tgt, ident, comp)
    if not is_valid:
        raise CategoryError(message)

    return FinCategory(
        obj_set, mor_set,
        MappingProxyType(src), MappingProxyType(tgt),
        MappingProxyType(ident), MappingProxyType(comp)
    )


def _check_functor(dom, cod, obj_map, mor_map):
    is_valid, message = validate_total(obj_map, dom.objects, cod.objects, 'object map')
    if not is_valid:
        return False, message
    is_valid, message = validate_total(mor_map, dom.morphisms, cod.morphisms, 'morphism map')
    if not is_valid:
        return False, message

    for m in dom.morphisms:
        if cod.src[mor_map[m]] != obj_map[dom.src[m]] or cod.tgt[mor_map[m]] != obj_map[dom.tgt[m]]:
            return False, f"functor does not preserve the type of {m}"
    for x in dom.objects:
        if mor_map[dom.ident[x]] != cod.ident[obj_map[x]]:
            return False, f"functor does not preserve the identity of {x}"
    for (g, f), h in dom.comp.items():
        if cod.comp[(mor_map[g], mor_map[f])] != mor_map[h]:
            return False, f"functor does not preserve the composite {g}∘{f}"
    return True, None


def validate_functor(dom, cod, obj_map, mor_map):
    """Build a functor, rejecting it if it fails to preserve structure"""
    is_valid, message = _check_functor(dom, cod, obj_map, mor_map)
    if not is_valid:
        raise FunctorError(message)
    return FinFunctor(dom, cod, MappingProxyType(dict(obj_map)), MappingProxyType(dict(mor_map)))


def identity_functor(c):
    return FinFunctor(c, c, MappingProxyType({x: x for x in c.objects}),
                      MappingProxyType({m: m for m in c.morphisms}))


def compose_functors(g, f):
    """G∘F"""
    if f.cod != g.dom:
        raise FunctorError("cannot compose functors with mismatched ends")
    return validate_functor(
        f.dom, g.cod,
        {x: g.obj_map[f.obj_map[x]] for x in f.dom.objects},
        {m: g.mor_map[f.mor_map[m]] for m in f.dom.morphisms}
    )


def enumerate_chains(c, n):
    """
    All composable n-tuples of a finite category

    Args:
        c: FinCategory
        n: chain length, 0..3

    Returns:
        ChainTable: n = 0 gives objects, n = 1 morphisms; each chain is
        stored as (m_n, …, m_1) and chains are ordered lexicographically
        by (m_1, …, m_n) in morphism order
    """
    is_valid, message = validate_chain_length(n)
    if not is_valid:
        raise StructureError(message)

    if n == 0:
        return ChainTable(0, tuple((x,) for x in c.objects))

    paths = [(m,) for m in c.morphisms]
    for _ in range(n - 1):
        paths = [path + (m,) for path in paths for m in c.morphisms
                 if c.src[m] == c.tgt[path[-1]]]
    return ChainTable(n, tuple(tuple(reversed(path)) for path in paths))


def chain_surjective(F, n):
    """
    Whether F is surjective on n-chains

    Returns:
        Check: on failure the witness is an unhit codomain chain
    """
    target = enumerate_chains(F.cod, n)
    if n == 0:
        hit = {(F.obj_map[x],) for x in F.dom.objects}
    else:
        hit = {tuple(F.mor_map[m] for m in chain) for chain in enumerate_chains(F.dom, n)}

    for chain in target:
        if chain not in hit:
            shown = format_chain(chain, '∘') if n else chain[0]
            return Check(False, f"{n}-chain {shown} not hit", witness=chain)
    return Check(True, f"surjective on {n}-chains")


def chain_criteria_report(F):
    """
    Chain-surjectivity levels 1–3 of a functor between finite categories

    In finite sets, descent = effective descent = surjective, so the
    criteria reduce to surjectivity on 1-, 2- and 3-chains. Surjectivity
    on objects follows from level 1 through identities.

    Returns:
        tuple: (sufficient, {level: Check})
    """
    levels = {n: chain_surjective(F, n) for n in (1, 2, 3)}
    sufficient = all(check.holds for check in levels.values())
    return sufficient, levels


def pullback_category(F, G):
    """
    Pullback of functors F: A → C and G: B → C, computed componentwise

    Returns:
        CategoryPullback: apex category with its two projection functors
    """
    if F.cod != G.cod:
        raise StructureError("pullback requires functors into a common category")

    objs = {}
    for a in F.dom.objects:
        for b in G.dom.objects:
            if F.obj_map[a] == G.obj_map[b]:
                objs[encode_tuple(a, b)] = (a, b)
    mors = {}
    for f in F.dom.morphisms:
        for g in G.dom.morphisms:
            if F.mor_map[f] == G.mor_map[g]:
                mors[encode_tuple(f, g)] = (f, g)

    A, B = F.dom, G.dom
    src = {k: encode_tuple(A.src[f], B.src[g]) for k, (f, g) in mors.items()}
    tgt = {k: encode_tuple(A.tgt[f], B.tgt[g]) for k, (f, g) in mors.items()}
    ident = {k: encode_tuple(A.ident[a], B.ident[b]) for k, (a, b) in objs.items()}
    comp = {}
    for k2, (f2, g2) in mors.items():
        for k1, (f1, g1) in mors.items():
            if src[k2] == tgt[k1]:
                comp[(k2, k1)] = encode_tuple(A.comp[(f2, f1)], B.comp[(g2, g1)])

    apex = FinCategory(
        FinSet(tuple(objs)), FinSet(tuple(mors)),
        MappingProxyType(src), MappingProxyType(tgt),
        MappingProxyType(ident), MappingProxyType(comp)
    )
    proj_f = FinFunctor(apex, A, MappingProxyType({k: ab[0] for k, ab in objs.items()}),
                        MappingProxyType({k: fg[0] for k, fg in mors.items()}))
    proj_g = FinFunctor(apex, B, MappingProxyType({k: ab[1] for k, ab in objs.items()}),
                        MappingProxyType({k: fg[1] for k, fg in mors.items()}))
    return CategoryPullback(apex, proj_f, proj_g)


def kernel_pair_functor(F):
    """
    Kernel pair of a functor with its projections and diagonal section

    Returns:
        CategoryKernelPair: d1 and d0 are the first and second projections
    """
    pb = pullback_category(F, F)
    diagonal = validate_functor(
        F.dom, pb.apex,
        {x: encode_tuple(x, x) for x in F.dom.objects},
        {m: encode_tuple(m, m) for m in F.dom.morphisms}
    )
    for m in F.dom.morphisms:
        if pb.proj_f.mor_map[diagonal.mor_map[m]] != m or pb.proj_g.mor_map[diagonal.mor_map[m]] != m:
            raise FunctorError(f"diagonal is not a section at {m}")
    return CategoryKernelPair(pb.apex, pb.proj_f, pb.proj_g, diagonal)


def fully_faithful_check(F):
    """Whether every hom-set map of F is a bijection"""
    for x in F.dom.objects:
        for y in F.dom.objects:
            source = F.dom.hom(x, y)
            image = [F.mor_map[m] for m in source]
            target = F.cod.hom(F.obj_map[x], F.obj_map[y])
            if len(set(image)) != len(source) or len(image) != len(target):
                return Check(False, f"hom ({x},{y}) not bijective", witness=(x, y))
    return Check(True, "fully faithful")


def essentially_surjective_check(F):
    """Whether every codomain object is isomorphic to an image object"""
    images = {F.obj_map[x] for x in F.dom.objects}
    for d in F.cod.objects:
        if d in images:
            continue
        if not any(F.cod.isomorphic(y, d) for y in images):
            return Check(False, f"not essentially surjective: {d} has no isomorphic image", witness=d)
    return Check(True, "essentially surjective")


def equivalence_check(F):
    """
    Whether F is an equivalence of categories

    Returns:
        Check: certificate names the failing hom-set or object
    """
    ff = fully_faithful_check(F)
    if not ff.holds:
        return ff
    es = essentially_surjective_check(F)
    if not es.holds:
        return es
    return Check(True, "fully faithful and essentially surjective")


def slice_category(c, x):
    """
    Slice c↓x: objects are morphisms into x, morphisms commuting triangles

    A morphism k from m to m' (with m'∘k = m) is encoded as "(k,m,m')".
    """
    if x not in c.objects:
        raise StructureError(f"unknown object '{x}'")

    objs = [m for m in c.morphisms if c.tgt[m] == x]
    mors = {}
    for m in objs:
        for m2 in objs:
            for k in c.hom(c.src[m], c.src[m2]):
                if c.comp[(m2, k)] == m:
                    mors[encode_tuple(k, m, m2)] = (k, m, m2)

    src = {t: km[1] for t, km in mors.items()}
    tgt = {t: km[2] for t, km in mors.items()}
    ident = {m: encode_tuple(c.ident[c.src[m]], m, m) for m in objs}
    comp = {}
    for t2, (k2, a2, b2) in mors.items():
        for t1, (k1, a1, b1) in mors.items():
            if a2 == b1:
                comp[(t2, t1)] = encode_tuple(c.comp[(k2, k1)], a1, b2)

    return FinCategory(
        FinSet(tuple(objs)), FinSet(tuple(mors)),
        MappingProxyType(src), MappingProxyType(tgt),
        MappingProxyType(ident), MappingProxyType(comp)
    )


def product_category(c, d):
    """Product of two finite categories"""
    objs = {encode_tuple(x, y): (x, y) for x in c.objects for y in d.objects}
    mors = {encode_tuple(f, g): (f, g) for f in c.morphisms for g in d.morphisms}
    return validate_category(
        list(objs),
        {k: (encode_tuple(c.src[f], d.src[g]), encode_tuple(c.tgt[f], d.tgt[g]))
         for k, (f, g) in mors.items()},
        {k: encode_tuple(c.ident[x], d.ident[y]) for k, (x, y) in objs.items()},
        [(encode_tuple(f2, g2), encode_tuple(f1, g1),
          encode_tuple(c.comp[(f2, f1)], d.comp[(g2, g1)]))
         for f2, g2 in mors.values() for f1, g1 in mors.values()
         if c.src[f2] == c.tgt[f1] and d.src[g2] == d.tgt[g1]],
        fill_units=False
    )


def poset_category(poset):
    """A finite poset viewed as a category; a≤b becomes the morphism "a≤b" """
    mors = {f"{a}≤{b}": (a, b) for a, b in poset.comparable_pairs()}
    return validate_category(
        list(poset.carrier),
        mors,
        {x: f"{x}≤{x}" for x in poset.carrier},
        [(f"{b}≤{c}", f"{a}≤{b}", f"{a}≤{c}") for a, b, c in poset.two_chains()],
        fill_units=False
    )


def monoid_category(elements, table, unit, obj='•'):
    """A finite monoid viewed as a one-object category"""
    return validate_category(
        [obj],
        {m: (obj, obj) for m in elements},
        {obj: unit},
        [(g, f, table[(g, f)]) for g, f in itertools.product(elements, repeat=2)],
        fill_units=False
    )


def functor_between_posets(monotone, dom_cat=None, cod_cat=None):
    """Monotone map viewed as a functor between poset categories"""
    dom_cat = dom_cat or poset_category(monotone.dom)
    cod_cat = cod_cat or poset_category(monotone.cod)
    return validate_functor(
        dom_cat, cod_cat,
        {x: monotone(x) for x in monotone.dom},
        {f"{a}≤{b}": f"{monotone(a)}≤{monotone(b)}" for a, b in monotone.dom.comparable_pairs()}
    )
