import pytest

from workspace import DocumentError, Report, dumps, load, loads
from workspace.report import FAILS, UNDECIDED, exit_code_for


class TestLoad:
    @pytest.mark.parametrize('name, size', [
        ('sets.json', 8), ('posets.json', 11), ('categories.json', 7),
        ('enriched.json', 10), ('multicat.json', 4), ('interval.json', 2)
    ])
    def test_samples_load(self, samples, name, size):
        assert len(load(samples / name)) == size

    def test_named_lattice_reference(self, samples):
        document = load(samples / 'enriched.json')
        assert document.value('N5', 'lattice').name == 'N5'
        assert document.value('pentagon_cover', 'cover').fibers == ['b', 'c']
        assert document.get('diamond_cover').refs == {'lattice': 'M3'}

    def test_non_associative_category(self, samples):
        with pytest.raises(DocumentError, match=r'broken: associativity fails at \(a,a,a\)') as info:
            load(samples / 'non_associative.json')
        assert info.value.declaration == 'broken'

    def test_unknown_lattice(self, samples):
        with pytest.raises(DocumentError, match="X: unknown lattice 'Q7'"):
            load(samples / 'unknown_lattice.json')

    def test_syntax_error_position(self):
        with pytest.raises(DocumentError) as info:
            loads('{"declarations": [\n  {"name": }\n]}')
        assert (info.value.line, info.value.column) == (2, 12)
        assert str(info.value).startswith('line 2, column 12: ')

    def test_missing_file(self, tmp_path):
        with pytest.raises(DocumentError, match='cannot read'):
            load(tmp_path / 'absent.json')

    def test_top_level_shape(self):
        with pytest.raises(DocumentError, match="'declarations' list"):
            loads('[]')

    def test_unknown_kind(self):
        with pytest.raises(DocumentError, match="w: unknown kind 'widget'"):
            loads('{"declarations": [{"name": "w", "kind": "widget"}]}')

    def test_declared_twice(self):
        text = '{"declarations": [{"name": "A", "kind": "set", "elements": []},' \
               ' {"name": "A", "kind": "set", "elements": ["x"]}]}'
        with pytest.raises(DocumentError, match='A: declared twice'):
            loads(text)

    def test_malformed_entry(self):
        with pytest.raises(DocumentError, match='A: malformed set'):
            loads('{"declarations": [{"name": "A", "kind": "set"}]}')

    def test_forward_reference(self):
        text = '{"declarations": [{"name": "f", "kind": "function", "dom": "A", "cod": "A", "map": {}}]}'
        with pytest.raises(DocumentError, match="unknown declaration 'A'"):
            loads(text)

    def test_kind_mismatch(self, samples):
        document = load(samples / 'sets.json')
        with pytest.raises(DocumentError, match='A: expected poset, found set'):
            document.get('A', 'poset')


class TestDump:
    @pytest.mark.parametrize('name', [
        'sets.json', 'posets.json', 'categories.json', 'enriched.json', 'multicat.json'
    ])
    def test_dump_is_idempotent(self, samples, name):
        once = dumps(load(samples / name))
        twice = dumps(loads(once))
        assert once == twice

    def test_dump_preserves_structure(self, samples):
        document = loads(dumps(load(samples / 'posets.json')))
        p = document.value('two_component', 'monotone')
        assert p.dom.le("a'", "b'")
        assert not p.dom.le("a'", "c''")


class TestReport:
    def report(self):
        report = Report('classify-fn', 'surj', 'Effective', 0)
        report.add('surjective', True, 'every point hit')
        report.add('lifting', False, 'no lift of a≤c', failures=['a≤c', 'a≤b≤c'])
        report.detail('image', '0, 1')
        return report

    def test_text(self):
        lines = self.report().render('text').splitlines()
        assert lines[0] == 'classify-fn surj'
        assert '  verdict: Effective' in lines
        assert '  [✓] surjective: every point hit' in lines
        assert '  [✗] lifting: no lift of a≤c' in lines
        assert '      failing: a≤c; a≤b≤c' in lines
        assert lines[-1] == '  exit: 0'

    def test_machine(self):
        lines = self.report().render('machine').splitlines()
        assert lines[:3] == ['command=classify-fn', 'subject=surj', 'verdict=Effective']
        assert 'criterion.1.holds=true' in lines
        assert 'criterion.2.holds=false' in lines
        assert 'criterion.2.failure.2=a≤b≤c' in lines
        assert 'detail.image=0, 1' in lines
        assert lines[-1] == 'exit=0'

    def test_rendering_is_deterministic(self):
        assert self.report().render('machine') == self.report().render('machine')

    def test_undecided_criterion(self):
        report = Report('classify-poset', 'fold', 'EffectiveUpToBound(1)', UNDECIDED, bound=1)
        report.add('effective descent', None)
        text = report.render('text')
        assert '  [?] effective descent' in text.splitlines()
        assert '  bound: 1' in text.splitlines()
        assert 'criterion.1.holds=undecided' in report.render('machine').splitlines()

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown report format 'xml'"):
            self.report().render('xml')

    def test_exit_codes(self):
        assert exit_code_for(True) == 0
        assert exit_code_for(False) == FAILS
        assert exit_code_for(None) == UNDECIDED
