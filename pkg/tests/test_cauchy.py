import pytest

from structures import equivalence_check, fully_faithful_check, identity_functor
from structures.cauchy import (
    classify_ff_lax_epi, idempotent_splits, idempotents, karoubi_envelope, karoubi_extend
)
from structures.fincat import validate_functor


class TestKaroubiEnvelope:
    def test_idempotent_monoid(self, cat):
        env = karoubi_envelope(cat.idempotent_monoid())
        assert list(env.category.objects) == ['(•,1)', '(•,e)']
        assert list(env.category.hom('(•,e)', '(•,e)')) == ['(e,e,e)']
        assert env.morphisms['(e,e,e)'] == ('e', 'e', 'e')

    def test_idempotent_does_not_split_before_completion(self, cat):
        c = cat.idempotent_monoid()
        e = next(i for i in idempotents(c) if i.endo == 'e')
        check = idempotent_splits(c, e)
        assert not check
        assert check.certificate == 'e on • does not split'

    @pytest.mark.parametrize('name', ['idempotent_monoid', 'retract', 'interval', 'cyclic_monoid'])
    def test_idempotents_split_in_envelope(self, cat, name):
        env = karoubi_envelope(cat.categories()[name]).category
        for e in idempotents(env):
            assert idempotent_splits(env, e).holds, e

    @pytest.mark.parametrize('name', ['idempotent_monoid', 'retract', 'iso_pair'])
    def test_unit_is_fully_faithful(self, cat, name):
        env = karoubi_envelope(cat.categories()[name])
        assert fully_faithful_check(env.unit).holds

    def test_envelope_is_idempotent(self, cat):
        env = karoubi_envelope(cat.idempotent_monoid())
        again = karoubi_envelope(env.category)
        assert len(again.category.objects) == 3
        assert equivalence_check(again.unit).holds

    def test_extension_of_identity(self, cat):
        c = cat.retract()
        extended = karoubi_extend(identity_functor(c))
        assert equivalence_check(extended).holds


class TestLaxEpi:
    def test_equivalences(self, cat):
        for F in cat.equivalences():
            verdict = classify_ff_lax_epi(F)
            assert verdict.holds and verdict.lax_epi, F

    def test_unit_into_envelope(self, cat):
        assert classify_ff_lax_epi(karoubi_envelope(cat.idempotent_monoid()).unit)

    def test_retract_generated_inclusion(self, cat):
        # y is a retract of x, so including the endomorphisms of x is enough
        F = validate_functor(cat.idempotent_monoid(), cat.retract(), {'•': 'x'}, {'1': 'idx', 'e': 'e'})
        assert fully_faithful_check(F).holds
        assert classify_ff_lax_epi(F).holds

    def test_missing_object_is_not_lax_epi(self, cat):
        F = validate_functor(cat.terminal(), cat.discrete(2), {'*': '0'}, {'id': 'id0'})
        verdict = classify_ff_lax_epi(F)
        assert not verdict
        assert verdict.lax_epi is False

    def test_non_full_functor_is_undecided(self, cat):
        verdict = classify_ff_lax_epi(cat.discrete_into_interval())
        assert not verdict
        assert verdict.lax_epi is None
        assert verdict.certificate.endswith('in envelope')
