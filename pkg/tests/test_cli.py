import pytest

from app import create_app, main

FAST = ['--bound', '2', '--stability-bound', '2']


@pytest.fixture
def invoke(runner, samples):
    cli = create_app()

    def run(*args, fmt=None):
        argv = ['--format', fmt] if fmt else []
        argv += [str(samples / a) if a.endswith('.json') else a for a in args]
        return runner.invoke(cli, argv)
    return run


class TestSetCommands:
    def test_surjection_is_effective(self, invoke):
        result = invoke('classify-fn', 'sets.json', 'surj', *FAST)
        assert result.exit_code == 0
        assert '  verdict: Effective' in result.stdout.splitlines()

    def test_constant_map_is_not_almost(self, invoke):
        result = invoke('classify-fn', 'sets.json', 'const', *FAST)
        assert result.exit_code == 1
        assert '  certificate: 1 not hit' in result.stdout.splitlines()

    def test_pullback(self, invoke):
        result = invoke('pullback', 'sets.json', 'surj', 'g', fmt='machine')
        assert result.exit_code == 0
        assert 'detail.size=3' in result.stdout.splitlines()

    def test_coequalizer(self, invoke):
        result = invoke('coequalizer', 'sets.json', 's', 't', fmt='machine')
        assert result.exit_code == 0
        assert 'detail.quotient={x,y}, {z}' in result.stdout.splitlines()

    def test_pullback_needs_common_codomain(self, invoke):
        result = invoke('pullback', 'sets.json', 'surj', 's')
        assert result.exit_code == 64
        assert 'do not share a codomain' in result.stderr


class TestPosetCommands:
    def test_two_component_map(self, invoke):
        result = invoke('classify-poset', 'posets.json', 'two_component', '--bound', '3', '--stability-bound', '2')
        assert result.exit_code == 1
        lines = result.stdout.splitlines()
        assert '  verdict: Almost' in lines
        assert '  [✗] 2-chain lifting: no lift of a≤b≤c' in lines

    def test_doubled_chain_is_effective(self, invoke):
        result = invoke('classify-poset', 'posets.json', 'fold', '--bound', '1', '--stability-bound', '2',
                        fmt='machine')
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert 'verdict=Effective' in lines
        assert 'certificate=effective by 2-chain lifting' in lines
        assert 'criterion.3.name=effective descent' in lines
        assert 'criterion.3.holds=true' in lines
        assert 'criterion.4.holds=true' in lines
        assert 'exit=0' in lines
        assert 'bound=1' in lines

    def test_verdict_line_matches_exit_code(self, invoke):
        for name in ('fold', 'n_poset', 'two_component', 'inc_ab'):
            result = invoke('classify-poset', 'posets.json', name, '--bound', '1', '--stability-bound', '2',
                            fmt='machine')
            lines = result.stdout.splitlines()
            verdict = next(line for line in lines if line.startswith('verdict='))
            assert (result.exit_code == 0) == (verdict == 'verdict=Effective'), name
            assert (result.exit_code == 2) == verdict.startswith('verdict=EffectiveUpToBound'), name

    def test_n_poset_is_descent(self, invoke):
        result = invoke('classify-poset', 'posets.json', 'n_poset', *FAST)
        assert result.exit_code == 1
        assert '  verdict: Descent' in result.stdout.splitlines()

    def test_monotone_pullback(self, invoke):
        result = invoke('pullback', 'posets.json', 'inc_ab', 'inc_bc', fmt='machine')
        assert result.exit_code == 0
        assert 'detail.apex=(b,b)' in result.stdout.splitlines()


class TestCategoryCommands:
    def test_collapse_is_ff_lax_epi(self, invoke):
        result = invoke('karoubi', 'categories.json', 'collapse', '--check-ff-lax-epi')
        assert result.exit_code == 0
        assert '  verdict: fully faithful lax epimorphism' in result.stdout.splitlines()

    def test_inclusion_is_undecided_but_fails(self, invoke):
        result = invoke('karoubi', 'categories.json', 'inclusion', '--check-ff-lax-epi', fmt='machine')
        assert result.exit_code == 1
        lines = result.stdout.splitlines()
        assert 'criterion.2.holds=false' in lines
        assert 'criterion.3.holds=undecided' in lines

    def test_envelope(self, invoke):
        result = invoke('karoubi', 'categories.json', 'idem', '--envelope', fmt='machine')
        assert result.exit_code == 0
        assert 'detail.objects=(•,1), (•,e)' in result.stdout.splitlines()

    def test_karoubi_needs_exactly_one_mode(self, invoke):
        result = invoke('karoubi', 'categories.json', 'idem')
        assert result.exit_code == 64
        assert 'choose exactly one' in result.stderr

    def test_classify_functor(self, invoke):
        assert invoke('classify-functor', 'categories.json', 'collapse').exit_code == 0
        result = invoke('classify-functor', 'categories.json', 'inclusion')
        assert result.exit_code == 1
        assert '  [✗] surjective on 1-chains: 1-chain f not hit' in result.stdout.splitlines()

    def test_chains(self, invoke):
        result = invoke('chains', 'categories.json', 'interval', '--n', '2', fmt='machine')
        assert result.exit_code == 0
        assert 'verdict=4 chains' in result.stdout.splitlines()

    def test_chain_length_out_of_range(self, invoke):
        result = invoke('chains', 'categories.json', 'interval', '--n', '5')
        assert result.exit_code == 64
        assert 'out of the supported range' in result.stderr


class TestEnrichedCommands:
    def test_two_component_vfunctor(self, invoke):
        result = invoke('classify-vfunctor', 'enriched.json', 'F', fmt='machine')
        assert result.exit_code == 1
        lines = result.stdout.splitlines()
        assert 'criterion.1.certificate=1-chain cover at (a,c) is not effective descent' in lines
        assert 'detail.heyting=yes' in lines

    def test_identity_vfunctor(self, invoke):
        assert invoke('classify-vfunctor', 'enriched.json', 'id_D').exit_code == 0
        assert invoke('join-check', 'enriched.json', 'id_D').exit_code == 0

    def test_join_check_failure(self, invoke):
        result = invoke('join-check', 'enriched.json', 'F', fmt='machine')
        assert result.exit_code == 1
        assert 'verdict=sufficient condition fails' in result.stdout.splitlines()

    @pytest.mark.parametrize('name, verdict, code', [
        ('pentagon_cover', 'Descent', 1),
        ('diamond_cover', 'Almost', 1),
        ('top_cover', 'Effective', 0),
        ('short_cover', 'Almost', 1),
        ('empty_cover', 'NotAlmost', 1),
    ])
    def test_covers(self, invoke, name, verdict, code):
        result = invoke('classify-cover', 'enriched.json', name, fmt='machine')
        assert result.exit_code == code
        assert f"verdict={verdict}" in result.stdout.splitlines()


class TestMulticategoryCommands:
    def test_identity(self, invoke):
        assert invoke('classify-multifunctor', 'multicat.json', 'id_K').exit_code == 0

    def test_unit_into_constant(self, invoke):
        result = invoke('classify-multifunctor', 'multicat.json', 'unit_into_K', fmt='machine')
        assert result.exit_code == 1
        assert 'criterion.1.certificate=level 1: k not hit' in result.stdout.splitlines()


class TestUsageErrors:
    def test_zero_bound(self, invoke):
        result = invoke('classify-fn', 'sets.json', 'surj', '--bound', '0')
        assert result.exit_code == 64
        assert 'bound must be positive, got 0' in result.stderr

    def test_kind_mismatch(self, invoke):
        result = invoke('classify-fn', 'posets.json', 'abc')
        assert result.exit_code == 64
        assert 'expected function, found poset' in result.stderr

    def test_unknown_name(self, invoke):
        result = invoke('classify-poset', 'posets.json', 'missing')
        assert result.exit_code == 64
        assert "unknown declaration 'missing'" in result.stderr

    def test_rejected_document(self, invoke):
        result = invoke('classify-functor', 'non_associative.json', 'broken')
        assert result.exit_code == 64
        assert 'associativity fails at (a,a,a)' in result.stderr

    def test_dump(self, invoke):
        result = invoke('dump', 'interval.json')
        assert result.exit_code == 0
        assert '"name": "id_I"' in result.stdout


class TestMain:
    def test_returns_report_status(self, samples, capsys):
        assert main(['classify-fn', str(samples / 'sets.json'), 'surj', *FAST]) == 0
        assert 'verdict: Effective' in capsys.readouterr().out

    def test_failing_status(self, samples):
        assert main(['classify-fn', str(samples / 'sets.json'), 'const', *FAST]) == 1

    def test_unknown_command(self):
        assert main(['no-such-command']) == 64

    def test_bad_bound(self, samples):
        assert main(['classify-fn', str(samples / 'sets.json'), 'surj', '--bound=-1']) == 64
