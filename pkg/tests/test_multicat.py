import pytest
from hypothesis import given, settings

from structures import (
    FinFunction, FinSet, FunctorError, MulticategoryError, StructureError, chain_surjective
)
from structures.fincat import identity_functor, validate_functor
from structures.multicat import (
    MultiFunctor, chain_object, chain_object_via_pullback, classify_multifunctor,
    compose_multifunctors, free_monoid_pullback_check, graded_reduction,
    identity_multifunctor, multicategory_from_category, multifunctor_from_functor,
    reflexive_graph_transfer, validate_multicategory, validate_multifunctor
)
from tests.strategies import cospans


def unit_multicategory():
    return validate_multicategory(['*'], {'id': (['*'], '*')}, {'*': 'id'}, [])


class TestValidateMulticategory:
    def test_constant_multicategory(self, cat):
        k = cat.constant_multicategory()
        assert k.comp[(('k',), 'id')] == 'k'
        assert k.comp[((), 'k')] == 'k'
        assert not k.is_unary()

    def test_unit_must_be_a_loop(self):
        with pytest.raises(MulticategoryError, match=r'unit id of \* is not a loop on \*'):
            validate_multicategory(['*'], {'id': ([], '*')}, {'*': 'id'}, [])

    def test_unknown_object(self):
        with pytest.raises(MulticategoryError, match="mentions unknown object 'z'"):
            validate_multicategory(['*'], {'id': (['*'], 'z')}, {'*': 'id'}, [])

    def test_missing_composite(self):
        with pytest.raises(MulticategoryError, match=r'comp undefined at \(\[id\],id\)'):
            validate_multicategory(['*'], {'id': (['*'], '*')}, {'*': 'id'}, [], fill_units=False)

    def test_conflicting_composites(self):
        with pytest.raises(MulticategoryError, match='listed twice'):
            validate_multicategory(
                ['*'],
                {'id': (['*'], '*'), 'k': ([], '*')},
                {'*': 'id'},
                [(['k'], 'id', 'k'), (['k'], 'id', 'id')]
            )

    def test_category_is_unary(self, cat):
        x = multicategory_from_category(cat.retract())
        assert x.is_unary()
        assert x.comp[(('s',), 'r')] == 'idy'


class TestChainObjects:
    def test_sizes_for_constant_multicategory(self, cat):
        k = cat.constant_multicategory()
        assert len(chain_object(k, 2)) == 3
        assert len(chain_object(k, 3)) == 4

    @pytest.mark.parametrize('n', [2, 3])
    def test_pullback_construction_agrees(self, cat, n):
        for x in (cat.constant_multicategory(), multicategory_from_category(cat.retract())):
            direct = chain_object(x, n)
            via_pullback = chain_object_via_pullback(x, n)
            assert set(direct.elements) == set(via_pullback.elements)
            assert len(direct) == len(via_pullback)

    def test_level_out_of_range(self, cat):
        with pytest.raises(StructureError, match='not 2 or 3'):
            chain_object(cat.constant_multicategory(), 4)

    def test_free_monoid_preserves_an_example_pullback(self):
        f = FinFunction(FinSet(('x', 'y')), FinSet(('0', '1')), {'x': '0', 'y': '1'})
        g = FinFunction(FinSet(('u', 'v', 'w')), FinSet(('0', '1')), {'u': '0', 'v': '0', 'w': '1'})
        check = free_monoid_pullback_check(f, g, 2)
        assert check
        assert check.certificate == 'both sides have 13 elements'

    @settings(max_examples=25, deadline=None)
    @given(cospans(max_size=2))
    def test_free_monoid_preserves_pullbacks(self, cospan):
        f, g = cospan
        assert free_monoid_pullback_check(f, g, 3).holds


class TestMultifunctors:
    def test_identity_is_sufficient(self, cat):
        report = classify_multifunctor(identity_multifunctor(cat.constant_multicategory()))
        assert report.sufficient

    def test_unit_into_constant_misses_k(self, cat):
        k = cat.constant_multicategory()
        p = validate_multifunctor(unit_multicategory(), k, {'*': '*'}, {'id': 'id'})
        report = classify_multifunctor(p)
        assert not report.sufficient
        assert report.levels[1].certificate == 'level 1: k not hit'
        assert report.levels[2].certificate == 'level 2: ([k],id) not hit'

    def test_sources_must_be_preserved(self, cat):
        k = cat.constant_multicategory()
        with pytest.raises(FunctorError, match='sources of k'):
            validate_multifunctor(k, k, {'*': '*'}, {'id': 'id', 'k': 'id'})

    def test_composition_with_identity(self, cat):
        k = cat.constant_multicategory()
        p = validate_multifunctor(unit_multicategory(), k, {'*': '*'}, {'id': 'id'})
        q = compose_multifunctors(identity_multifunctor(k), p)
        assert dict(q.mor_map) == {'id': 'id'}

    @pytest.mark.parametrize('name', ['skeleton_collapse', 'skeleton_inclusion', 'discrete_into_interval'])
    def test_unary_levels_match_chain_surjectivity(self, cat, name):
        F = getattr(cat, name)()
        report = classify_multifunctor(multifunctor_from_functor(F))
        for n in (1, 2, 3):
            assert report.levels[n].holds == chain_surjective(F, n).holds

    def test_reflexive_graph_transfer(self, cat):
        k = cat.constant_multicategory()
        assert reflexive_graph_transfer(identity_multifunctor(k)).holds
        corrupted = MultiFunctor(k, k, {'*': 'elsewhere'}, {'id': 'id', 'k': 'k'})
        check = reflexive_graph_transfer(corrupted)
        assert not check
        assert check.witness == '*'

    def test_graded_reduction(self, cat):
        F = cat.discrete_into_interval()
        over_cod = identity_functor(F.cod)
        sufficient, _ = graded_reduction(F, F, over_cod)
        assert not sufficient

        shifted = validate_functor(F.dom, F.cod, {'0': '1', '1': '1'}, {'id0': 'id1', 'id1': 'id1'})
        with pytest.raises(FunctorError, match='triangle does not commute at id0'):
            graded_reduction(F, shifted, over_cod)
