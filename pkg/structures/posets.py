"""
Finite partial orders and monotone maps
Carrier of the FinPoset descent base; discrete posets model finite sets
"""

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Tuple

import networkx as nx

from utils import encode_tuple, encode_class
from .errors import StructureError, FunctorError
from .finbase import FinSet, FinFunction, identity


@dataclass(frozen=True)
class FinPoset:
    """A finite set with a reflexive, transitive, antisymmetric relation"""

    carrier: FinSet
    leq: FrozenSet[Tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, 'leq', frozenset(self.leq))
        for a, b in self.leq:
            if a not in self.carrier or b not in self.carrier:
                raise StructureError(f"relation {a}≤{b} mentions an unknown element")
        for x in self.carrier:
            if (x, x) not in self.leq:
                raise StructureError(f"order is not reflexive at {x}")
        for a, b in self.leq:
            if a != b and (b, a) in self.leq:
                raise StructureError(f"order is not antisymmetric: {a}≤{b}≤{a}")
        for a, b in self.leq:
            for c in self.carrier:
                if (b, c) in self.leq and (a, c) not in self.leq:
                    raise StructureError(f"order is not transitive at {a}≤{b}≤{c}")

    @classmethod
    def from_relations(cls, elements, relations=()):
        """Poset generated by the given relations (reflexive-transitive closure)"""
        carrier = elements if isinstance(elements, FinSet) else FinSet(tuple(elements))
        graph = nx.DiGraph()
        graph.add_nodes_from(carrier)
        graph.add_edges_from(relations)
        unknown = [x for x in graph.nodes if x not in carrier]
        if unknown:
            raise StructureError(f"relation mentions unknown element '{unknown[0]}'")
        closure = nx.transitive_closure(graph, reflexive=True)
        return cls(carrier, frozenset(closure.edges))

    @classmethod
    def discrete(cls, elements):
        carrier = elements if isinstance(elements, FinSet) else FinSet(tuple(elements))
        return cls(carrier, frozenset((x, x) for x in carrier))

    @classmethod
    def chain(cls, elements):
        elements = tuple(elements)
        return cls.from_relations(elements, zip(elements, elements[1:]))

    def le(self, a, b):
        return (a, b) in self.leq

    def is_discrete(self):
        return all(a == b for a, b in self.leq)

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def strict_pairs(self):
        """Pairs a<b in carrier order"""
        return [(a, b) for a in self.carrier for b in self.carrier
                if a != b and (a, b) in self.leq]

    def comparable_pairs(self):
        """Pairs a≤b (1-chains, degenerate ones included) in carrier order"""
        return [(a, b) for a in self.carrier for b in self.carrier if (a, b) in self.leq]

    def two_chains(self):
        """Triples a≤b≤c in carrier order"""
        return [(a, b, c) for a, b in self.comparable_pairs()
                for c in self.carrier if (b, c) in self.leq]

    def hasse_edges(self):
        """Covering relations"""
        return [(a, b) for a, b in self.strict_pairs()
                if not any((a, c) in self.leq and (c, b) in self.leq
                           for c in self.carrier if c not in (a, b))]

    def to_graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.carrier)
        graph.add_edges_from(self.strict_pairs())
        return graph

    def __repr__(self):
        return 'FinPoset(' + ', '.join(f"{a}<{b}" for a, b in self.hasse_edges()) + ')'


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    """An order-preserving function between finite posets"""

    dom: FinPoset
    cod: FinPoset
    fn: FinFunction

    def __post_init__(self):
        if self.fn.dom != self.dom.carrier or self.fn.cod != self.cod.carrier:
            raise FunctorError("underlying function does not match the posets")
        for a, b in self.dom.leq:
            if not self.cod.le(self.fn(a), self.fn(b)):
                raise FunctorError(
                    f"map is not monotone: {a}≤{b} but {self.fn(a)}≰{self.fn(b)}"
                )

    @classmethod
    def build(cls, dom, cod, mapping):
        return cls(dom, cod, FinFunction(dom.carrier, cod.carrier, mapping))

    def __call__(self, atom):
        return self.fn(atom)

    def __eq__(self, other):
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.fn == other.fn

    def __hash__(self):
        return hash((self.dom, self.cod, self.fn))

    def is_surjective(self):
        return self.fn.is_surjective()

    def is_order_embedding(self):
        return all(self.dom.le(a, b) == self.cod.le(self.fn(a), self.fn(b))
                   for a in self.dom for b in self.dom)

    def is_isomorphism(self):
        return self.fn.is_bijective() and self.is_order_embedding()

    def __repr__(self):
        return f"MonotoneMap({self.fn!r})"


@dataclass(frozen=True)
class PosetPullback:
    apex: FinPoset
    proj_f: MonotoneMap
    proj_g: MonotoneMap
    pairs: Mapping[str, Tuple[str, str]]


@dataclass(frozen=True)
class PosetCoequalizer:
    quotient: FinPoset
    q: MonotoneMap
    classes: Mapping[str, Tuple[str, ...]]


def identity_map(x):
    return MonotoneMap(x, x, identity(x.carrier))


def compose_maps(g, f):
    if f.cod != g.dom:
        raise FunctorError("cannot compose monotone maps with mismatched ends")
    return MonotoneMap.build(f.dom, g.cod, {a: g(f(a)) for a in f.dom})


def poset_pullback(f, g):
    """Pullback of monotone maps: set-level pullback with componentwise order"""
    if f.cod != g.cod:
        raise StructureError("pullback requires a common codomain")

    pairs = {}
    for a in f.dom:
        for b in g.dom:
            if f(a) == g(b):
                pairs[encode_tuple(a, b)] = (a, b)

    leq = [(k1, k2) for k1, (a1, b1) in pairs.items() for k2, (a2, b2) in pairs.items()
           if f.dom.le(a1, a2) and g.dom.le(b1, b2)]
    apex = FinPoset(FinSet(tuple(pairs)), frozenset(leq))
    proj_f = MonotoneMap.build(apex, f.dom, {k: ab[0] for k, ab in pairs.items()})
    proj_g = MonotoneMap.build(apex, g.dom, {k: ab[1] for k, ab in pairs.items()})
    return PosetPullback(apex, proj_f, proj_g, MappingProxyType(pairs))


def poset_coequalizer(f, g):
    """
    Coequalizer of a parallel pair of monotone maps

    Quotients the underlying set, takes the transitive closure of the
    induced relation, then collapses the cycles it creates.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("coequalizer requires a parallel pair")

    graph = nx.DiGraph()
    graph.add_nodes_from(f.cod.carrier)
    graph.add_edges_from(f.cod.strict_pairs())
    for x in f.dom:
        graph.add_edge(f(x), g(x))
        graph.add_edge(g(x), f(x))

    condensed = nx.condensation(graph)
    members = condensed.graph['mapping']

    order = {y: i for i, y in enumerate(f.cod.carrier)}
    groups = {}
    for component, data in condensed.nodes(data=True):
        groups[component] = sorted(data['members'], key=order.__getitem__)
    ranked = sorted(groups, key=lambda c: order[groups[c][0]])

    atoms = {c: encode_class(groups[c]) for c in ranked}
    reach = nx.transitive_closure_dag(condensed)
    leq = {(atoms[c], atoms[c]) for c in ranked}
    leq.update((atoms[a], atoms[b]) for a, b in reach.edges)

    quotient = FinPoset(FinSet(tuple(atoms[c] for c in ranked)), frozenset(leq))
    q = MonotoneMap.build(f.cod, quotient, {y: atoms[members[y]] for y in f.cod})
    decoded = {atoms[c]: tuple(groups[c]) for c in ranked}
    return PosetCoequalizer(quotient, q, MappingProxyType(decoded))


def enumerate_labeled_posets(elements):
    """Every partial order on the given atoms"""
    carrier = elements if isinstance(elements, FinSet) else FinSet(tuple(elements))
    pairs = [(a, b) for a in carrier for b in carrier if a != b]
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        strict = {pair for pair, keep in zip(pairs, chosen) if keep}
        if any((b, a) in strict for a, b in strict):
            continue
        if any((b, c) in strict and (a, c) not in strict
               for a, b in strict for c in carrier if c != a):
            continue
        yield FinPoset(carrier, frozenset(strict | {(x, x) for x in carrier}))


def enumerate_posets(n, prefix='x'):
    """Posets on n points, one per isomorphism class"""
    carrier = FinSet(tuple(f"{prefix}{i}" for i in range(n)))
    representatives = []
    for poset in enumerate_labeled_posets(carrier):
        graph = poset.to_graph()
        if not any(nx.is_isomorphic(graph, other.to_graph()) for other in representatives):
            representatives.append(poset)
    return representatives


def monotone_maps(x, y):
    """Every monotone map x → y"""
    for images in itertools.product(y.carrier.elements, repeat=len(x)):
        mapping = dict(zip(x.carrier.elements, images))
        if all(y.le(mapping[a], mapping[b]) for a, b in x.leq):
            yield MonotoneMap.build(x, y, mapping)
