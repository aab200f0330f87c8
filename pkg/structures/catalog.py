"""
Bundled corpus of small structures
Categories, posets, lattices and multicategories used by the reports and tests
"""

from .fincat import (
    identity_functor, monoid_category, poset_category,
    validate_category, validate_functor
)
from .lattice import NAMED_LATTICES
from .multicat import validate_multicategory
from .posets import FinPoset, MonotoneMap


class Catalog:
    """Small named structures"""

    # Categories

    def terminal(self):
        return validate_category(['*'], {'id': ('*', '*')}, {'*': 'id'}, [])

    def discrete(self, n=2):
        objects = [str(i) for i in range(n)]
        return validate_category(objects, {f"id{x}": (x, x) for x in objects},
                                 {x: f"id{x}" for x in objects}, [])

    def interval(self):
        """The category 2: 0 → 1"""
        return validate_category(
            ['0', '1'],
            {'id0': ('0', '0'), 'id1': ('1', '1'), 'f': ('0', '1')},
            {'0': 'id0', '1': 'id1'},
            []
        )

    def iso_pair(self):
        """Two objects joined by an isomorphism u with inverse v"""
        return validate_category(
            ['a', 'b'],
            {'ida': ('a', 'a'), 'idb': ('b', 'b'), 'u': ('a', 'b'), 'v': ('b', 'a')},
            {'a': 'ida', 'b': 'idb'},
            [('v', 'u', 'ida'), ('u', 'v', 'idb')]
        )

    def parallel_pair(self):
        return validate_category(
            ['0', '1'],
            {'id0': ('0', '0'), 'id1': ('1', '1'), 'f': ('0', '1'), 'g': ('0', '1')},
            {'0': 'id0', '1': 'id1'},
            []
        )

    def idempotent_monoid(self):
        """The monoid {1, e} with e∘e = e"""
        return monoid_category(['1', 'e'], {('1', '1'): '1', ('1', 'e'): 'e',
                                            ('e', '1'): 'e', ('e', 'e'): 'e'}, '1')

    def cyclic_monoid(self):
        """The group of order 2"""
        return monoid_category(['1', 's'], {('1', '1'): '1', ('1', 's'): 's',
                                            ('s', '1'): 's', ('s', 's'): '1'}, '1')

    def retract(self):
        """y a retract of x: r∘s = id_y, s∘r = e"""
        return validate_category(
            ['x', 'y'],
            {'idx': ('x', 'x'), 'idy': ('y', 'y'), 'r': ('x', 'y'), 's': ('y', 'x'), 'e': ('x', 'x')},
            {'x': 'idx', 'y': 'idy'},
            [('s', 'r', 'e'), ('r', 's', 'idy'), ('e', 'e', 'e'), ('r', 'e', 'r'), ('e', 's', 's')]
        )

    def chain_category(self):
        return poset_category(FinPoset.chain(['0', '1', '2']))

    def categories(self):
        """Every bundled category with at most 3 objects and 8 morphisms, by name"""
        return {
            'terminal': self.terminal(),
            'discrete2': self.discrete(2),
            'interval': self.interval(),
            'iso_pair': self.iso_pair(),
            'parallel_pair': self.parallel_pair(),
            'idempotent_monoid': self.idempotent_monoid(),
            'cyclic_monoid': self.cyclic_monoid(),
            'retract': self.retract(),
            'chain3': self.chain_category(),
        }

    # Functors

    def skeleton_collapse(self):
        """iso_pair → terminal, an equivalence that is not injective on objects"""
        source, target = self.iso_pair(), self.terminal()
        return validate_functor(source, target, {'a': '*', 'b': '*'},
                                {m: 'id' for m in source.morphisms})

    def skeleton_inclusion(self):
        """terminal → iso_pair at a, an equivalence that is not surjective on objects"""
        source, target = self.terminal(), self.iso_pair()
        return validate_functor(source, target, {'*': 'a'}, {'id': 'ida'})

    def discrete_into_interval(self):
        """The non-full inclusion of the discrete category on 0, 1 into 2"""
        source, target = self.discrete(2), self.interval()
        return validate_functor(source, target, {'0': '0', '1': '1'},
                                {'id0': 'id0', 'id1': 'id1'})

    def equivalences(self):
        return [identity_functor(c) for c in self.categories().values()] + [
            self.skeleton_collapse(), self.skeleton_inclusion()
        ]

    # Posets

    def interval_poset(self):
        return FinPoset.chain(['0', '1'])

    def abc(self):
        return FinPoset.chain(['a', 'b', 'c'])

    def two_component_map(self):
        """(a'≤b') ⊔ (b''≤c'') → a≤b≤c; the 1-chain a≤c has no lift"""
        dom = FinPoset.from_relations(["a'", "b'", "b''", "c''"], [("a'", "b'"), ("b''", "c''")])
        return MonotoneMap.build(dom, self.abc(), {"a'": 'a', "b'": 'b', "b''": 'b', "c''": 'c'})

    def n_poset_map(self):
        """{a'≤b', a'≤c', b''≤c'} → a≤b≤c; every 1-chain lifts, a≤b≤c does not"""
        dom = FinPoset.from_relations(["a'", "b'", "b''", "c'"],
                                      [("a'", "b'"), ("a'", "c'"), ("b''", "c'")])
        return MonotoneMap.build(dom, self.abc(), {"a'": 'a', "b'": 'b', "b''": 'b', "c'": 'c'})

    def doubled_chain_map(self):
        """Two copies of a≤b≤c folded onto one"""
        dom = FinPoset.from_relations(['a1', 'b1', 'c1', 'a2', 'b2', 'c2'],
                                      [('a1', 'b1'), ('b1', 'c1'), ('a2', 'b2'), ('b2', 'c2')])
        return MonotoneMap.build(dom, self.abc(), {'a1': 'a', 'b1': 'b', 'c1': 'c',
                                                   'a2': 'a', 'b2': 'b', 'c2': 'c'})

    # Lattices

    def lattices(self):
        return {name: factory() for name, factory in NAMED_LATTICES.items()}

    # Multicategories

    def constant_multicategory(self):
        """One object *, the unit id and a nullary k with id∘[k] = k"""
        return validate_multicategory(
            ['*'],
            {'id': (['*'], '*'), 'k': ([], '*')},
            {'*': 'id'},
            [(['k'], 'id', 'k'), ([], 'k', 'k')]
        )
