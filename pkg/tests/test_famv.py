import itertools

import pytest

from structures import DescentLevel, LatticeError, StructureError
from structures.famv import (
    classify_cover_thin, coproduct_of_covers, cover_join, decompose_covers,
    effective_cover_check, enumerate_connected_descent_data, fam_isomorphic,
    fam_pullback, is_regular_by_coequalizer, kernel_colimit, make_cover
)
from structures.lattice import boolean, chain3, m3, n5, two


def covers_of_top(v, max_size=3):
    for n in range(max_size + 1):
        for fibers in itertools.product(v.elements, repeat=n):
            yield make_cover(v, fibers, v.top)


class TestFamilies:
    def test_component_must_be_below_target(self):
        with pytest.raises(StructureError, match="component at 'j0' fails: 1 ≰ 0"):
            make_cover(two(), ['1'], '0')

    def test_unknown_element_rejected(self):
        with pytest.raises(LatticeError, match="'x' is not an element of 2"):
            make_cover(two(), ['x'], '1')

    def test_pullback_fibers_are_meets(self):
        v = boolean(2)
        c1 = make_cover(v, ['10', '01'], '11')
        c2 = make_cover(v, ['11'], '11')
        pb = fam_pullback(c1, c2)
        assert len(pb.apex) == 2
        assert sorted(pb.apex.fiber.values()) == ['01', '10']

    def test_decompose_coproduct(self):
        v = boolean(2)
        parts = [
            make_cover(v, ['10', '01'], '11', index=['p', 'q'], name='u'),
            make_cover(v, ['11'], '11', index=['r'], name='w'),
        ]
        m = coproduct_of_covers(parts)
        split = decompose_covers(m)
        assert [c.fibers for c in split] == [['10', '01'], ['11']]
        assert [c.target for c in split] == ['11', '11']
        assert fam_isomorphic(coproduct_of_covers(split), m)

    def test_coproduct_of_nothing_needs_a_lattice(self):
        with pytest.raises(StructureError, match='explicit lattice'):
            coproduct_of_covers([])
        assert len(coproduct_of_covers([], lattice=two()).cod) == 0

    def test_isomorphism_ignores_index_names(self):
        v = boolean(2)
        c = make_cover(v, ['10', '01'], '11')
        assert fam_isomorphic(c, make_cover(v, ['01', '10'], '11', index=['x', 'y']))
        assert not fam_isomorphic(c, make_cover(v, ['10', '10'], '11'))


class TestJoins:
    def test_empty_join_is_bottom(self, lattice):
        c = make_cover(lattice, [], lattice.top)
        result = cover_join(lattice, c)
        assert result.empty and result.value == lattice.bottom
        assert kernel_colimit(lattice, []) == lattice.bottom

    def test_kernel_colimit_is_the_join(self, lattice):
        for a, b in itertools.product(lattice.elements, repeat=2):
            assert kernel_colimit(lattice, [a, b]) == lattice.join(a, b)

    def test_regular_iff_join_is_target(self, lattice):
        for c in covers_of_top(lattice, 2):
            expected = bool(c.fibers) and lattice.join_all(c.fibers) == c.target
            assert is_regular_by_coequalizer(lattice, c) == expected, c.fibers


class TestClassifyCover:
    def test_empty_family_is_not_almost(self, lattice):
        result = classify_cover_thin(lattice, make_cover(lattice, [], lattice.top))
        assert result.level == DescentLevel.NOT_ALMOST
        assert result.certificate == 'empty family'

    def test_short_join_is_almost(self):
        result = classify_cover_thin(chain3(), make_cover(chain3(), ['1/2'], '1'))
        assert result.level == DescentLevel.ALMOST
        assert result.certificate == 'join of the family is 1/2, not 1'

    def test_diamond_fails_distributivity(self):
        result = classify_cover_thin(m3(), make_cover(m3(), ['a', 'b'], '1'))
        assert result.level == DescentLevel.ALMOST
        assert result.certificate == 'pullback along c ≤ 1 is not regular: the meets join to 0'

    def test_pentagon_is_descent_not_effective(self):
        v = n5()
        c = make_cover(v, ['b', 'c'], '1')
        assert classify_cover_thin(v, c).level == DescentLevel.DESCENT
        check = effective_cover_check(v, c)
        assert not check
        assert dict(check.witness.family) == {'j0': 'a', 'j1': 'c'}
        assert check.certificate == 'X_j0 ∧ 1 ≠ a'

    def test_effective_check_requires_descent(self):
        with pytest.raises(StructureError, match='not a descent morphism'):
            effective_cover_check(m3(), make_cover(m3(), ['a', 'b'], '1'))

    def test_top_is_effective(self, lattice):
        result = classify_cover_thin(lattice, make_cover(lattice, [lattice.top], lattice.top))
        assert result.level == DescentLevel.EFFECTIVE

    def test_connected_data_of_doubled_top(self):
        v = boolean(2)
        data = enumerate_connected_descent_data(v, make_cover(v, ['11', '11'], '11'))
        assert len(data) == 4
        assert all(d.family['j0'] == d.family['j1'] for d in data)

    def test_heyting_descent_covers_are_effective(self, lattice):
        if not lattice.is_heyting:
            pytest.skip('needs a Heyting lattice')
        for c in covers_of_top(lattice):
            level = classify_cover_thin(lattice, c).level
            assert level != DescentLevel.DESCENT, c.fibers

    def test_heyting_shortcut_agrees(self, lattice):
        for c in covers_of_top(lattice, 2):
            slow = classify_cover_thin(lattice, c)
            fast = classify_cover_thin(lattice, c, use_heyting_shortcut=True)
            assert slow.level == fast.level

    def test_level_never_exceeds_regularity(self, lattice):
        for c in covers_of_top(lattice, 2):
            if classify_cover_thin(lattice, c).level >= DescentLevel.DESCENT:
                assert is_regular_by_coequalizer(lattice, c)

    def test_requires_a_lattice(self):
        c = make_cover(two(), ['1'], '1')
        with pytest.raises(LatticeError, match='finite lattice'):
            classify_cover_thin(object(), c)
