import itertools

import pytest

from structures import LatticeError, from_hasse, named_lattice
from structures.lattice import adjunction_check, boolean, chain, chain3, m3, n5, two


class TestConstruction:
    def test_two(self):
        v = two()
        assert (v.bottom, v.top) == ('0', '1')
        assert v.meet('0', '1') == '0' and v.join('0', '1') == '1'

    def test_boolean_elements(self):
        v = boolean(2)
        assert list(v.elements) == ['00', '10', '01', '11']
        assert v.meet('10', '01') == '00'
        assert v.join('10', '01') == '11'

    def test_chain(self):
        v = chain(4)
        assert v.top == '3' and v.bottom == '0'
        assert v.meet('1', '2') == '1'

    def test_missing_join_rejected(self):
        with pytest.raises(LatticeError, match='no join for a and b'):
            from_hasse('V', ['0', 'a', 'b'], [('0', 'a'), ('0', 'b')])

    def test_missing_meet_rejected(self):
        with pytest.raises(LatticeError, match='no meet for a and b'):
            from_hasse('Λ', ['a', 'b', '1'], [('a', '1'), ('b', '1')])

    def test_cycle_rejected(self):
        with pytest.raises(LatticeError):
            from_hasse('bad', ['a', 'b'], [('a', 'b'), ('b', 'a')])

    def test_named(self):
        assert named_lattice('N5').name == 'N5'
        assert named_lattice('Q7') is None

    def test_empty_meet_and_join(self, lattice):
        assert lattice.meet_all([]) == lattice.top
        assert lattice.join_all([]) == lattice.bottom


class TestHeyting:
    @pytest.mark.parametrize('factory, heyting', [
        (two, True), (lambda: boolean(2), True), (lambda: boolean(3), True),
        (chain3, True), (m3, False), (n5, False)
    ])
    def test_distributive_lattices_are_heyting(self, factory, heyting):
        assert factory().is_heyting == heyting

    def test_adjunction(self, lattice):
        is_valid, message = adjunction_check(lattice)
        assert is_valid == lattice.is_heyting
        if not is_valid:
            assert 'no implication table' in message

    def test_chain3_implication(self):
        v = chain3()
        assert v.implies('1', '1/2') == '1/2'
        assert v.implies('1/2', '0') == '0'
        assert v.implies('0', '0') == '1'

    def test_implies_on_non_heyting(self):
        with pytest.raises(LatticeError, match='not Heyting'):
            m3().implies('a', 'b')

    def test_lattice_laws(self, lattice):
        for a, b, c in itertools.product(lattice.elements, repeat=3):
            assert lattice.meet(a, lattice.meet(b, c)) == lattice.meet(lattice.meet(a, b), c)
            assert lattice.join(a, lattice.meet(a, b)) == a
            assert lattice.le(a, b) == (lattice.meet(a, b) == a)
