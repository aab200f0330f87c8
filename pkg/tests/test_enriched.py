import pytest

from structures import DescentLevel, FinPoset, LatticeError, MonotoneMap, VCategoryError
from structures.enriched import (
    classify_vfunctor, hom_chain_cover, join_condition_check, poset_chain_lift_check,
    validate_vcategory, validate_vfunctor, vcategory_from_poset, vfunctor_from_monotone
)
from structures.famv import classify_cover_thin
from structures.lattice import chain3, m3
from structures.posets import identity_map


def chain3_hom(**overrides):
    hom = {('x', 'x'): '1', ('y', 'y'): '1', ('x', 'y'): '1/2', ('y', 'x'): '0'}
    hom.update({tuple(k.split('_')): v for k, v in overrides.items()})
    return hom


class TestValidateVCategory:
    def test_valid_fuzzy_order(self):
        c = validate_vcategory(chain3(), ['x', 'y'], chain3_hom())
        assert c.hom[('x', 'y')] == '1/2'
        assert c.chain_hom(['x', 'y', 'x']) == '0'

    def test_unit_inequality(self):
        with pytest.raises(VCategoryError, match='unit fails at x'):
            validate_vcategory(chain3(), ['x', 'y'], chain3_hom(x_x='1/2'))

    def test_unknown_hom_value(self):
        with pytest.raises(VCategoryError, match=r"hom \(x,y\) = 'q' is not in chain3"):
            validate_vcategory(chain3(), ['x', 'y'], chain3_hom(x_y='q'))

    def test_missing_hom(self):
        hom = chain3_hom()
        del hom[('y', 'x')]
        with pytest.raises(VCategoryError, match=r'hom undefined at \(y,x\)'):
            validate_vcategory(chain3(), ['x', 'y'], hom)

    def test_composition_inequality(self):
        objects = ['x', 'y', 'z']
        hom = {(a, b): '1' if a == b else '0' for a in objects for b in objects}
        hom.update({('x', 'y'): '1', ('y', 'z'): '1'})
        with pytest.raises(VCategoryError, match=r'composition fails at \(x,y,z\)'):
            validate_vcategory(chain3(), objects, hom)

    def test_vfunctor_must_respect_homs(self):
        chain = vcategory_from_poset(FinPoset.chain(['a', 'b']))
        discrete = vcategory_from_poset(FinPoset.discrete(['a', 'b']))
        with pytest.raises(VCategoryError, match=r'V-functor fails at \(a,b\)'):
            validate_vfunctor(chain, discrete, {'a': 'a', 'b': 'b'})


class TestChainCovers:
    def test_two_chain_cover_of_two_component_map(self, cat):
        F = vfunctor_from_monotone(cat.two_component_map())
        c = hom_chain_cover(F, 2, ['a', 'b', 'c'])
        assert c.fibers == ['0', '0']
        assert c.target == '1'
        assert list(c.dom.index) == ["(a',b',c'')", "(a',b'',c'')"]
        assert classify_cover_thin(F.dom.lattice, c).level == DescentLevel.ALMOST

    def test_target_count_must_match(self, cat):
        F = vfunctor_from_monotone(cat.two_component_map())
        with pytest.raises(VCategoryError, match='needs 3 target objects'):
            hom_chain_cover(F, 2, ['a', 'b'])

    def test_unknown_target(self, cat):
        F = vfunctor_from_monotone(cat.two_component_map())
        with pytest.raises(VCategoryError, match="unknown object 'z'"):
            hom_chain_cover(F, 1, ['a', 'z'])


class TestClassifyVFunctor:
    def test_identity_is_sufficient(self, cat):
        report = classify_vfunctor(vfunctor_from_monotone(identity_map(cat.abc())))
        assert report.sufficient
        assert report.heyting
        assert set(report.levels) == {1, 2, 3}

    def test_two_component_map(self, cat):
        report = classify_vfunctor(vfunctor_from_monotone(cat.two_component_map()))
        assert not report.sufficient
        assert report.levels[1].failures == (('a', 'c'),)
        assert report.levels[1].certificate == '1-chain cover at (a,c) is not effective descent'
        assert ('a', 'b', 'c') in report.levels[2].failures
        assert report.levels[3].holds

    def test_doubled_chain_is_sufficient(self, cat):
        assert classify_vfunctor(vfunctor_from_monotone(cat.doubled_chain_map())).sufficient

    def test_non_surjective_map_fails_every_level(self, cat):
        m = MonotoneMap.build(cat.interval_poset(), cat.abc(), {'0': 'a', '1': 'b'})
        report = classify_vfunctor(vfunctor_from_monotone(m))
        assert not any(check.holds for check in report.levels.values())


class TestJoinCondition:
    @pytest.mark.parametrize('name', ['two_component_map', 'n_poset_map', 'doubled_chain_map'])
    def test_agrees_with_chain_lifting(self, cat, name):
        m = getattr(cat, name)()
        join = join_condition_check(vfunctor_from_monotone(m))
        lift = poset_chain_lift_check(m)
        assert join.holds == lift.holds
        assert set(join.failures) == set(lift.failures)

    def test_lift_certificate_names_strict_chain(self, cat):
        check = poset_chain_lift_check(cat.two_component_map())
        assert check.certificate == 'no lift of a≤b≤c'
        assert check.witness == ('a', 'b', 'c')

    def test_n_poset_fails_only_at_the_strict_chain(self, cat):
        check = poset_chain_lift_check(cat.n_poset_map())
        assert check.failures == (('a', 'b', 'c'),)

    def test_needs_heyting_lattice(self, cat):
        F = vfunctor_from_monotone(cat.n_poset_map(), lattice=m3())
        with pytest.raises(LatticeError, match='needs a Heyting lattice'):
            join_condition_check(F)
