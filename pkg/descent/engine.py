"""
Descent oracle
Kernel pairs, descent data over them, the comparison datum of a bundle,
bounded enumeration of descent data and the classification of a morphism
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match
from networkx.utils import UnionFind

from structures.errors import DescentDataError, StructureError
from structures.finbase import FinSet
from structures.posets import FinPoset, MonotoneMap, poset_pullback
from structures.results import Check, DescentClass, DescentLevel
from utils import encode_class, encode_tuple, format_chain, format_count, format_mapping, validate_bound
from .bases import PosetBase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelPairData:
    """Kernel pair of p truncated at triples"""

    apex: FinPoset
    d1: MonotoneMap
    d0: MonotoneMap
    diagonal: MonotoneMap
    pairs: Mapping[str, Tuple[str, str]]
    triple_apex: FinPoset
    triples: Mapping[str, Tuple[str, str, str]]
    faces: Tuple[MonotoneMap, MonotoneMap, MonotoneMap]


@dataclass(frozen=True)
class BundleMorphism:
    """A bundle: a base object with a morphism into x"""

    total: FinPoset
    proj: MonotoneMap

    def __post_init__(self):
        if self.proj.dom != self.total:
            raise DescentDataError("bundle projection does not start at its total object")

    @property
    def base(self):
        return self.proj.cod

    def fiber(self, x):
        return self.proj.fn.fiber(x)

    def __len__(self):
        return len(self.total)


@dataclass(frozen=True)
class DescentDatum:
    """
    A bundle over dom(p) with a gluing over the kernel pair

    glue maps each kernel-pair element (x, x') to a bijection from the
    fiber over x to the fiber over x'.
    """

    bundle: BundleMorphism
    glue: Mapping[Tuple[str, str], Mapping[str, str]]
    multiplicity: Optional[Mapping[str, int]] = field(default=None, compare=False)

    def describe(self):
        if self.multiplicity is not None:
            return format_mapping(self.multiplicity)
        return f"{len(self.bundle)} points"


@dataclass(frozen=True)
class OracleVerdict:
    descent_class: DescentClass
    faithful_witness: str
    full_witness: str
    image_witness: Optional[DescentDatum]
    bound_used: int
    data_checked: int = 0


def kernel_pair(p):
    """
    Kernel pair of a monotone map with its diagonal and triple apex

    Args:
        p: MonotoneMap e → b

    Returns:
        KernelPairData: apex of pairs with equal image, the projections
        d1 (first) and d0 (second), the diagonal, and the triples
        with their three faces
    """
    pb = poset_pullback(p, p)
    diagonal = MonotoneMap.build(p.dom, pb.apex, {x: encode_tuple(x, x) for x in p.dom})

    triples = {}
    for x in p.dom:
        for x1 in p.dom:
            if p(x1) != p(x):
                continue
            for x2 in p.dom:
                if p(x2) == p(x):
                    triples[encode_tuple(x, x1, x2)] = (x, x1, x2)

    leq = [(k, k2) for k, t in triples.items() for k2, t2 in triples.items()
           if all(p.dom.le(a, b) for a, b in zip(t, t2))]
    triple_apex = FinPoset(FinSet(tuple(triples)), frozenset(leq))
    faces = tuple(
        MonotoneMap.build(triple_apex, pb.apex,
                          {k: encode_tuple(t[i], t[j]) for k, t in triples.items()})
        for i, j in ((0, 1), (1, 2), (0, 2))
    )

    logger.debug("Kernel pair: %d pairs, %d triples", len(pb.apex), len(triple_apex))
    return KernelPairData(
        pb.apex, pb.proj_f, pb.proj_g, diagonal, pb.pairs,
        triple_apex, MappingProxyType(triples), faces
    )


def _kernel_pairs(p):
    return [(x, x1) for x in p.dom for x1 in p.dom if p(x) == p(x1)]


def pullback_along(p, g):
    """
    The pullback of p along g: T → cod(p), as a morphism into T

    Returns:
        MonotoneMap: e ×_b T → T
    """
    return poset_pullback(p, g).proj_g


def comparison_datum(p, f):
    """
    The descent datum K^p(f) of a bundle over cod(p)

    Args:
        p: MonotoneMap e → b
        f: BundleMorphism over b

    Returns:
        DescentDatum: p*f with the gluing (x, w) ↦ (x', w)
    """
    if f.base != p.cod:
        raise DescentDataError("bundle is not over the codomain")

    pb = poset_pullback(p, f.proj)
    bundle = BundleMorphism(pb.apex, pb.proj_f)
    glue = {}
    for x, x1 in _kernel_pairs(p):
        glue[(x, x1)] = MappingProxyType({
            encode_tuple(x, w): encode_tuple(x1, w) for w in f.fiber(p(x))
        })
    return DescentDatum(bundle, MappingProxyType(glue))


def validate_descent_datum(p, d):
    """
    Check that a gluing is an isomorphism over the kernel pair satisfying
    reflexivity and transitivity

    Returns:
        Check: certificate names the first failed equation
    """
    total = d.bundle.total
    if d.bundle.base != p.dom:
        return Check(False, "bundle is not over the domain")

    fibers = {x: d.bundle.fiber(x) for x in p.dom}
    for x, x1 in _kernel_pairs(p):
        g = d.glue.get((x, x1))
        if g is None:
            return Check(False, f"gluing undefined at ({x},{x1})", witness=(x, x1))
        if set(g) != set(fibers[x]) or sorted(g.values()) != sorted(fibers[x1]):
            return Check(False, f"gluing at ({x},{x1}) is not a bijection", witness=(x, x1))

    pairs = _kernel_pairs(p)
    for (x, x1), (z, z1) in itertools.product(pairs, repeat=2):
        if not (p.dom.le(x, z) and p.dom.le(x1, z1)):
            continue
        g, h = d.glue[(x, x1)], d.glue[(z, z1)]
        for u in fibers[x]:
            for v in fibers[z]:
                if total.le(u, v) != total.le(g[u], h[v]):
                    return Check(
                        False,
                        f"gluing is not an order isomorphism at ({x},{x1})≤({z},{z1})",
                        witness=(u, v)
                    )

    for x in p.dom:
        g = d.glue[(x, x)]
        if any(g[u] != u for u in fibers[x]):
            return Check(False, f"reflexivity fails at {x}", witness=x)

    for x, x1 in pairs:
        for x2 in p.dom:
            if p(x2) != p(x):
                continue
            first, second, direct = d.glue[(x, x1)], d.glue[(x1, x2)], d.glue[(x, x2)]
            if any(second[first[u]] != direct[u] for u in fibers[x]):
                return Check(False, f"transitivity fails at ({x},{x1},{x2})", witness=(x, x1, x2))

    return Check(True, "reflexive and transitive gluing")


def _liftable(p):
    """Image pairs and image 2-chains that lift to the domain, in codomain order"""
    order = {y: i for i, y in enumerate(p.cod)}
    pairs = sorted({(p(a), p(b)) for a, b in p.dom.comparable_pairs()},
                   key=lambda yy: (yy[0] != yy[1], order[yy[0]], order[yy[1]]))
    chains = sorted({(p(a), p(b), p(c)) for a, b, c in p.dom.two_chains()},
                    key=lambda t: tuple(order[y] for y in t))
    return pairs, chains


def _normal_form_datum(p, multiplicity, relations):
    """Build the trivialized datum with fibers {(x,i)} and index-preserving gluing"""
    labels = {}
    for x in p.dom:
        labels[x] = [encode_tuple(x, str(i)) for i in range(multiplicity[p(x)])]

    elements = [u for x in p.dom for u in labels[x]]
    leq = set()
    for a, b in p.dom.comparable_pairs():
        for i, j in relations[(p(a), p(b))]:
            leq.add((labels[a][i], labels[b][j]))

    total = FinPoset(FinSet(tuple(elements)), frozenset(leq))
    proj = MonotoneMap.build(total, p.dom, {u: x for x in p.dom for u in labels[x]})
    glue = {}
    for x, x1 in _kernel_pairs(p):
        glue[(x, x1)] = MappingProxyType(dict(zip(labels[x], labels[x1])))
    return DescentDatum(BundleMorphism(total, proj), MappingProxyType(glue),
                        MappingProxyType(dict(multiplicity)))


def _fiber_graph(multiplicity, relations):
    graph = nx.DiGraph()
    for y, n in multiplicity.items():
        for i in range(n):
            graph.add_node((y, i), fiber=y)
    for (y1, y2), rel in relations.items():
        for i, j in rel:
            graph.add_edge((y1, i), (y2, j))
    return graph


def _graph_key(graph, multiplicity):
    degrees = []
    for y in multiplicity:
        nodes = [n for n, data in graph.nodes(data=True) if data['fiber'] == y]
        degrees.append(tuple(sorted((graph.in_degree(n), graph.out_degree(n)) for n in nodes)))
    if not graph:
        return tuple(degrees), ''
    return tuple(degrees), nx.weisfeiler_lehman_graph_hash(graph, node_attr='fiber')


def _relation_choices(base, multiplicity, pair):
    y1, y2 = pair
    if y1 == y2:
        return base.fiber_orders(multiplicity[y1])
    cells = list(itertools.product(range(multiplicity[y1]), range(multiplicity[y2])))
    return [frozenset(c for c, keep in zip(cells, chosen) if keep)
            for chosen in itertools.product((False, True), repeat=len(cells))]


def _data_for_multiplicity(p, base, multiplicity, pairs, chains):
    """All normal-form data with the given fiber sizes, deduplicated"""
    index = {pair: k for k, pair in enumerate(pairs)}
    closing = {k: [] for k in range(len(pairs))}
    for y1, y2, y3 in chains:
        keys = (index[(y1, y2)], index[(y2, y3)], index[(y1, y3)])
        closing[max(keys)].append(keys)

    choices = [_relation_choices(base, multiplicity, pair) for pair in pairs]
    assigned = [None] * len(pairs)
    found = []
    buckets = {}

    def composes(keys):
        first, second, direct = (assigned[k] for k in keys)
        return all((i, k) in direct for i, j in first for j2, k in second if j == j2)

    def search(k):
        if k == len(pairs):
            relations = dict(zip(pairs, assigned))
            graph = _fiber_graph(multiplicity, relations)
            key = _graph_key(graph, multiplicity)
            for other in buckets.get(key, []):
                if nx.is_isomorphic(graph, other, node_match=categorical_node_match('fiber', None)):
                    return
            buckets.setdefault(key, []).append(graph)
            found.append(_normal_form_datum(p, multiplicity, relations))
            return
        for relation in choices[k]:
            assigned[k] = relation
            if all(composes(keys) for keys in closing[k]):
                search(k + 1)
        assigned[k] = None

    search(0)
    return found


def _multiplicities(p, bound):
    image = p.fn.image()
    vectors = list(itertools.product(range(bound + 1), repeat=len(image)))
    vectors.sort(key=lambda v: (sum(v), v))
    return [dict(zip(image, v)) for v in vectors]


def iter_descent_data(p, bound, base=None):
    """
    Lazily yield descent data of p, smallest total first

    Every datum is in normal form: the fiber over x is {(x,i) | i < n}
    where n ≤ bound depends only on p(x), and the gluing keeps i.
    """
    base = base or PosetBase()
    is_valid, message = validate_bound(bound)
    if not is_valid:
        raise StructureError(message)

    pairs, chains = _liftable(p)
    for multiplicity in _multiplicities(p, bound):
        yield from _data_for_multiplicity(p, base, multiplicity, pairs, chains)


def enumerate_descent_data(p, bound, base=None, parallel=False, max_workers=4):
    """
    All descent data of p with fiber multiplicity at most bound, up to isomorphism

    Args:
        p: MonotoneMap
        bound: largest number of points over any point of dom(p)
        base: SetBase or PosetBase (default: posets)
        parallel: spread fiber-size vectors over a thread pool
        max_workers: pool size

    Returns:
        list: DescentDatum values in canonical order
    """
    base = base or PosetBase()
    if not parallel:
        data = list(iter_descent_data(p, bound, base))
    else:
        is_valid, message = validate_bound(bound)
        if not is_valid:
            raise StructureError(message)
        pairs, chains = _liftable(p)
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            batches = pool.map(
                lambda m: _data_for_multiplicity(p, base, m, pairs, chains),
                _multiplicities(p, bound)
            )
            data = [d for batch in batches for d in batch]

    logger.debug("Enumerated %s for %r at bound %d", format_count(len(data), 'datum'), p, bound)
    return data


def essential_image_witness(p, d, bound):
    """
    A bundle f over cod(p) with p*f isomorphic to d, or None

    The candidate is the set of gluing orbits ordered by the transitive
    closure of the image of the datum's order; a witness exists exactly
    when this candidate is antisymmetric and pulls back to d.

    Returns:
        BundleMorphism or None: None also when some fiber exceeds bound
    """
    total = d.bundle.total
    a = d.bundle.proj

    orbits = UnionFind(total.carrier.elements)
    for g in d.glue.values():
        for u, v in g.items():
            orbits.union(u, v)

    members = {}
    for u in total:
        members.setdefault(orbits[u], []).append(u)
    atoms = {root: encode_class(group) for root, group in members.items()}
    of = {u: atoms[orbits[u]] for u in total}

    graph = nx.DiGraph()
    graph.add_nodes_from(atoms.values())
    graph.add_edges_from((of[u], of[v]) for u, v in total.strict_pairs() if of[u] != of[v])
    if not nx.is_directed_acyclic_graph(graph):
        logger.debug("Gluing quotient of %s is not antisymmetric", d.describe())
        return None

    witness = FinPoset.from_relations(list(atoms.values()), graph.edges)
    proj = MonotoneMap.build(witness, p.cod, {of[u]: p(a(u)) for u in total})

    for y in p.cod:
        if len(proj.fn.fiber(y)) > bound:
            logger.debug("Witness needs %d points over %s, above bound %d",
                         len(proj.fn.fiber(y)), y, bound)
            return None

    for u in total:
        for v in total:
            pulled = p.dom.le(a(u), a(v)) and witness.le(of[u], of[v])
            if pulled != total.le(u, v):
                return None

    return BundleMorphism(witness, proj)


def bundles_isomorphic(f, g):
    """Whether two bundles over the same object are isomorphic over it"""
    if f.base != g.base or len(f) != len(g):
        return False
    graphs = []
    for bundle in (f, g):
        graph = nx.DiGraph()
        for u in bundle.total:
            graph.add_node(u, over=bundle.proj(u))
        graph.add_edges_from(bundle.total.strict_pairs())
        graphs.append(graph)
    return nx.is_isomorphic(*graphs, node_match=categorical_node_match('over', None))


def data_isomorphic(d1, d2):
    """Whether two descent data are isomorphic: bundle isomorphism commuting with gluing"""
    if d1.bundle.base != d2.bundle.base or len(d1.bundle) != len(d2.bundle):
        return False
    graphs = []
    for d in (d1, d2):
        graph = nx.DiGraph()
        for u in d.bundle.total:
            graph.add_node(u, over=d.bundle.proj(u))
        kinds = {}
        for u, v in d.bundle.total.strict_pairs():
            kinds.setdefault((u, v), set()).add('le')
        for (x, x1), g in d.glue.items():
            if x == x1:
                continue
            for u, v in g.items():
                kinds.setdefault((u, v), set()).add('glue')
        for (u, v), k in kinds.items():
            graph.add_edge(u, v, kinds='+'.join(sorted(k)))
        graphs.append(graph)
    return nx.is_isomorphic(
        *graphs,
        node_match=categorical_node_match('over', None),
        edge_match=categorical_edge_match('kinds', None)
    )


def _describe_test(g):
    return format_mapping(g.fn.mapping)


def is_descent_by_lifting(p):
    """
    Whether every comparable pair of cod(p) lifts to a comparable pair of dom(p)

    For finite posets this characterizes descent morphisms; used to
    cross-check the oracle.
    """
    lifted = {(p(a), p(b)) for a, b in p.dom.comparable_pairs()}
    for y1, y2 in p.cod.comparable_pairs():
        if (y1, y2) not in lifted:
            return Check(False, f"no lift of {format_chain((y1, y2))}", witness=(y1, y2))
    return Check(True, "every 1-chain lifts")


def classify(p, bound=3, stability_bound=3, base=None, parallel=False, max_workers=4):
    """
    Decide the descent level of p by brute force

    Almost: p is a pullback-stable epimorphism. Descent: p is a
    pullback-stable regular epimorphism. Effective: every enumerated
    descent datum lies in the essential image of the comparison.
    Stability is tested against every morphism into cod(p) from test
    objects with at most stability_bound points.

    Args:
        p: morphism of the base
        bound: fiber multiplicity bound for the descent-data search
        stability_bound: size of the test objects
        base: SetBase or PosetBase (default: posets)

    Returns:
        OracleVerdict
    """
    base = base or PosetBase()
    p = base.lift(p)
    for value, name in ((bound, 'bound'), (stability_bound, 'stability bound')):
        is_valid, message = validate_bound(value, name)
        if not is_valid:
            raise StructureError(message)

    tests = [(None, p)]
    for t in base.test_objects(stability_bound):
        for g in base.morphisms(t, p.cod):
            tests.append((g, pullback_along(p, g)))
    logger.debug("Stability tests for %r: %d", p, len(tests))

    # Almost descent
    for g, q in tests:
        missed = q.fn.missed()
        if missed:
            if g is None:
                certificate = f"{missed[0]} not hit"
            else:
                certificate = f"pullback along {_describe_test(g)} misses {missed[0]}"
            result = DescentClass(DescentLevel.NOT_ALMOST, certificate)
            logger.info("Classified %r as %s", p, result.label)
            return OracleVerdict(result, certificate, '', None, bound)
    faithful = f"pullback-stable epimorphism ({format_count(len(tests), 'test')})"

    # Descent
    for g, q in tests:
        if not base.is_regular_epi(q):
            if g is None:
                certificate = "not the coequalizer of its kernel pair"
            else:
                certificate = f"pullback along {_describe_test(g)} is not a regular epimorphism"
            result = DescentClass(DescentLevel.ALMOST, certificate)
            logger.info("Classified %r as %s", p, result.label)
            return OracleVerdict(result, faithful, certificate, None, bound)
    full = f"pullback-stable regular epimorphism ({format_count(len(tests), 'test')})"

    # Effectiveness within the bound
    if parallel:
        data = enumerate_descent_data(p, bound, base, parallel=True, max_workers=max_workers)
    else:
        data = iter_descent_data(p, bound, base)

    checked = 0
    for d in data:
        checked += 1
        if essential_image_witness(p, d, bound) is None:
            certificate = f"descent datum with fiber sizes {d.describe()} is outside the essential image"
            result = DescentClass(DescentLevel.DESCENT, certificate)
            logger.info("Classified %r as %s", p, result.label)
            return OracleVerdict(result, faithful, full, d, bound, checked)

    certificate = f"{format_count(checked, 'datum')} up to multiplicity {bound}, none outside the essential image"
    if base.exact:
        result = DescentClass(DescentLevel.EFFECTIVE, certificate)
    else:
        result = DescentClass(DescentLevel.EFFECTIVE_UP_TO_BOUND, certificate, bound=bound)
    logger.info("Classified %r as %s", p, result.label)
    return OracleVerdict(result, faithful, full, None, bound, checked)
