"""
Descent bases
The two finite bases the oracle works over: finite sets and finite posets.
Both present their morphisms as monotone maps; finite sets are the discrete posets.
"""

import logging

from structures.finbase import FinFunction
from structures.posets import (
    FinPoset, MonotoneMap,
    enumerate_labeled_posets, enumerate_posets, monotone_maps,
    poset_coequalizer, poset_pullback
)
from structures.errors import StructureError

logger = logging.getLogger(__name__)


class PosetBase:
    """Finite posets and monotone maps"""

    kind = 'FinPoset'
    exact = False

    def lift(self, morphism):
        """Present a morphism of this base as a monotone map"""
        if not isinstance(morphism, MonotoneMap):
            raise StructureError(f"{self.kind} expects a monotone map, got {type(morphism).__name__}")
        return morphism

    def pullback(self, f, g):
        return poset_pullback(f, g)

    def coequalizer(self, f, g):
        return poset_coequalizer(f, g)

    def test_objects(self, max_size):
        """Objects used for pullback-stability tests, one per isomorphism class"""
        for n in range(1, max_size + 1):
            yield from enumerate_posets(n, prefix='t')

    def morphisms(self, source, target):
        return monotone_maps(source, target)

    def fiber_orders(self, n):
        """
        Admissible orders on a fiber of size n, as sets of index pairs

        Returns:
            list: every partial order on range(n)
        """
        atoms = [str(i) for i in range(n)]
        orders = []
        for poset in enumerate_labeled_posets(atoms):
            orders.append(frozenset((int(a), int(b)) for a, b in poset.leq))
        return orders

    def is_regular_epi(self, p):
        """
        Whether p is the coequalizer of its own kernel pair

        Returns:
            bool: True when the induced map from the coequalizer is an isomorphism
        """
        kp = poset_pullback(p, p)
        coeq = poset_coequalizer(kp.proj_f, kp.proj_g)
        comparison = {}
        for atom, members in coeq.classes.items():
            images = {p(x) for x in members}
            if len(images) != 1:
                return False
            comparison[atom] = images.pop()
        try:
            induced = MonotoneMap.build(coeq.quotient, p.cod, comparison)
        except StructureError:
            return False
        return induced.is_isomorphism()

    def __repr__(self):
        return f"{type(self).__name__}()"


class SetBase(PosetBase):
    """Finite sets, embedded as discrete posets"""

    kind = 'FinSet'
    exact = True

    def lift(self, morphism):
        if isinstance(morphism, MonotoneMap):
            if not (morphism.dom.is_discrete() and morphism.cod.is_discrete()):
                raise StructureError("FinSet expects a map between discrete posets")
            return morphism
        if not isinstance(morphism, FinFunction):
            raise StructureError(f"FinSet expects a function, got {type(morphism).__name__}")
        return MonotoneMap(
            FinPoset.discrete(morphism.dom),
            FinPoset.discrete(morphism.cod),
            morphism
        )

    def test_objects(self, max_size):
        for n in range(1, max_size + 1):
            yield FinPoset.discrete([f"t{i}" for i in range(n)])

    def fiber_orders(self, n):
        return [frozenset((i, i) for i in range(n))]
