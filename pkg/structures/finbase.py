"""
Finite sets and functions
Pullbacks, coequalizers and the descent classification of functions
"""

import itertools
import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Tuple

from networkx.utils import UnionFind

from utils import encode_tuple, encode_class, validate_distinct, validate_total
from .errors import StructureError, FunctorError
from .results import Check, DescentClass, DescentLevel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinSet:
    """A finite sequence of distinct opaque atoms"""

    elements: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        is_valid, message = validate_distinct(self.elements)
        if not is_valid:
            raise StructureError(message)
        object.__setattr__(self, '_members', frozenset(self.elements))

    @classmethod
    def of(cls, *atoms):
        return cls(tuple(atoms))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, atom):
        return atom in self._members

    def index(self, atom):
        return self.elements.index(atom)

    def __repr__(self):
        return 'FinSet{' + ', '.join(self.elements) + '}'


@dataclass(frozen=True, eq=False)
class FinFunction:
    """A total function between finite sets"""

    dom: FinSet
    cod: FinSet
    mapping: Mapping[str, str]

    def __post_init__(self):
        is_valid, message = validate_total(self.mapping, self.dom, self.cod, 'function')
        if not is_valid:
            raise FunctorError(message)
        ordered = {x: self.mapping[x] for x in self.dom}
        object.__setattr__(self, 'mapping', MappingProxyType(ordered))

    def __call__(self, atom):
        return self.mapping[atom]

    def __eq__(self, other):
        if not isinstance(other, FinFunction):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and dict(self.mapping) == dict(other.mapping))

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(self.mapping.items())))

    def image(self):
        """Image atoms, in codomain order"""
        hit = set(self.mapping.values())
        return [y for y in self.cod if y in hit]

    def missed(self):
        """Codomain atoms outside the image"""
        hit = set(self.mapping.values())
        return [y for y in self.cod if y not in hit]

    def is_surjective(self):
        return not self.missed()

    def is_injective(self):
        return len(set(self.mapping.values())) == len(self.dom)

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def fiber(self, y):
        return [x for x in self.dom if self.mapping[x] == y]

    def __repr__(self):
        body = ', '.join(f"{x}↦{y}" for x, y in self.mapping.items())
        return f"FinFunction({body})"


@dataclass(frozen=True)
class Pullback:
    """Apex of a pullback with both projections and the decoded pairs"""

    apex: FinSet
    proj_f: FinFunction
    proj_g: FinFunction
    pairs: Mapping[str, Tuple[str, str]]


@dataclass(frozen=True)
class Coequalizer:
    """Quotient set with its projection and the decoded classes"""

    quotient: FinSet
    q: FinFunction
    classes: Mapping[str, Tuple[str, ...]]


def identity(s):
    """Identity function on a finite set"""
    return FinFunction(s, s, {x: x for x in s})


def compose(g, f):
    """Composite g∘f"""
    if f.cod != g.dom:
        raise FunctorError("cannot compose: codomain of the first map is not the domain of the second")
    return FinFunction(f.dom, g.cod, {x: g(f(x)) for x in f.dom})


def all_functions(dom, cod):
    """Every function dom → cod, in lexicographic order of images"""
    for images in itertools.product(cod.elements, repeat=len(dom)):
        yield FinFunction(dom, cod, dict(zip(dom.elements, images)))


def pullback(f, g):
    """
    Pullback of a cospan of finite functions

    Args:
        f: function A → C
        g: function B → C

    Returns:
        Pullback: apex {(a,b) | f(a) = g(b)} with its projections
    """
    if f.cod != g.cod:
        raise StructureError("pullback requires a common codomain")

    pairs = {}
    for a in f.dom:
        for b in g.dom:
            if f(a) == g(b):
                pairs[encode_tuple(a, b)] = (a, b)

    apex = FinSet(tuple(pairs))
    proj_f = FinFunction(apex, f.dom, {k: ab[0] for k, ab in pairs.items()})
    proj_g = FinFunction(apex, g.dom, {k: ab[1] for k, ab in pairs.items()})
    return Pullback(apex, proj_f, proj_g, MappingProxyType(pairs))


def mediating_function(pb, cone_f, cone_g):
    """
    The unique map into a pullback apex induced by a commuting cone

    Args:
        pb: Pullback of f and g
        cone_f: function Z → A
        cone_g: function Z → B with f∘cone_f = g∘cone_g

    Returns:
        FinFunction: Z → apex
    """
    if cone_f.dom != cone_g.dom:
        raise StructureError("cone legs must share a domain")

    index = {ab: k for k, ab in pb.pairs.items()}
    mapping = {}
    for z in cone_f.dom:
        key = (cone_f(z), cone_g(z))
        if key not in index:
            raise StructureError(f"cone does not commute at '{z}'")
        mapping[z] = index[key]
    return FinFunction(cone_f.dom, pb.apex, mapping)


def coequalizer(f, g):
    """
    Coequalizer of a parallel pair of finite functions

    Args:
        f: function A → B
        g: function A → B

    Returns:
        Coequalizer: B modulo the equivalence generated by f(x) ~ g(x)
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("coequalizer requires a parallel pair")

    classes = UnionFind(f.cod.elements)
    for x in f.dom:
        classes.union(f(x), g(x))

    # Class order follows the first member in codomain order
    members = {}
    for y in f.cod:
        members.setdefault(classes[y], []).append(y)

    decoded = {}
    assignment = {}
    for group in members.values():
        atom = encode_class(group)
        decoded[atom] = tuple(group)
        for y in group:
            assignment[y] = atom

    quotient = FinSet(tuple(decoded))
    q = FinFunction(f.cod, quotient, assignment)
    return Coequalizer(quotient, q, MappingProxyType(decoded))


def kernel_pair(p):
    """Set-level kernel pair of p: the pullback of p against itself"""
    return pullback(p, p)


def classify_set_function(p, bound=3, stability_bound=None):
    """
    Descent classification of a function between finite sets

    Args:
        p: FinFunction to classify
        bound: fiber bound used by the cross-checking oracle
        stability_bound: test-object size for the oracle (default min(bound, 3))

    Returns:
        DescentClass: Effective iff p is surjective, NotAlmost otherwise
    """
    missed = p.missed()
    if missed:
        result = DescentClass(DescentLevel.NOT_ALMOST, f"{missed[0]} not hit")
    else:
        result = DescentClass(DescentLevel.EFFECTIVE, "surjective")

    # Cross-check against the brute-force oracle
    from descent import engine, set_base

    verdict = engine.classify(p, bound=bound, stability_bound=stability_bound or min(bound, 3), base=set_base)
    if verdict.descent_class.level != result.level:
        logger.error("Oracle disagreement on %r: %s vs %s", p, verdict.descent_class, result)
        raise RuntimeError(
            f"oracle disagreement: {verdict.descent_class.label} vs {result.label}"
        )

    logger.info("Classified %r as %s", p, result.label)
    return result


def bijection_check(f):
    """Check whether f is a bijection, naming a witness when it is not"""
    missed = f.missed()
    if missed:
        return Check(False, f"{missed[0]} not hit")
    if not f.is_injective():
        seen = {}
        for x in f.dom:
            y = f(x)
            if y in seen:
                return Check(False, f"{seen[y]} and {x} both map to {y}")
            seen[y] = x
    return Check(True, "bijective")
