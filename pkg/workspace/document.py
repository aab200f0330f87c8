"""
Workspace documents
One JSON file declares named lattices, sets, posets, categories,
V-categories, multicategories and the maps between them
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping

from structures import (
    StructureError, FinSet, FinFunction, FinPoset, MonotoneMap,
    validate_category, validate_functor, from_hasse, named_lattice,
    validate_vcategory, validate_vfunctor, make_cover,
    validate_multicategory, validate_multifunctor
)

logger = logging.getLogger(__name__)

KINDS = (
    'lattice', 'set', 'function', 'poset', 'monotone', 'category', 'functor',
    'vcategory', 'vfunctor', 'cover', 'multicategory', 'multifunctor'
)

# Kinds that map between two earlier declarations, with the kind of their ends
MAP_KINDS = {
    'function': 'set',
    'monotone': 'poset',
    'functor': 'category',
    'vfunctor': 'vcategory',
    'multifunctor': 'multicategory',
}


class DocumentError(ValueError):
    """A workspace document that cannot be parsed or validated"""

    def __init__(self, message, line=None, column=None, declaration=None):
        self.line = line
        self.column = column
        self.declaration = declaration
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        elif declaration is not None:
            message = f"{declaration}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Declaration:
    """A validated structure with the names it refers to"""

    name: str
    kind: str
    value: Any
    refs: Mapping[str, str] = field(default_factory=dict)
    named: str = None


class WorkspaceDocument:
    """Declarations in file order, looked up by name"""

    def __init__(self, source=None):
        self.source = source
        self.declarations: Dict[str, Declaration] = {}

    def __contains__(self, name):
        return name in self.declarations

    def __iter__(self):
        return iter(self.declarations.values())

    def __len__(self):
        return len(self.declarations)

    def add(self, declaration):
        if declaration.name in self.declarations:
            raise DocumentError("declared twice", declaration=declaration.name)
        self.declarations[declaration.name] = declaration

    def get(self, name, *kinds):
        """
        A declaration by name, optionally restricted to some kinds

        Raises:
            DocumentError: unknown name or kind mismatch
        """
        if name not in self.declarations:
            raise DocumentError(f"unknown declaration '{name}'")
        declaration = self.declarations[name]
        if kinds and declaration.kind not in kinds:
            raise DocumentError(
                f"expected {' or '.join(kinds)}, found {declaration.kind}", declaration=name
            )
        return declaration

    def value(self, name, *kinds):
        return self.get(name, *kinds).value


def load(path):
    """
    Load and validate a workspace document

    Args:
        path: UTF-8 JSON file

    Returns:
        WorkspaceDocument

    Raises:
        DocumentError: with line/column for syntax errors and the
        declaration name for validation errors
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from e
    return loads(text, source=str(path))


def loads(text, source=None):
    """Parse a workspace document from a string"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno, column=e.colno) from e

    if not isinstance(raw, dict) or not isinstance(raw.get('declarations'), list):
        raise DocumentError("a workspace is an object with a 'declarations' list")

    document = WorkspaceDocument(source)
    for position, entry in enumerate(raw['declarations']):
        if not isinstance(entry, dict) or 'name' not in entry or 'kind' not in entry:
            raise DocumentError(f"declaration #{position} needs a name and a kind")
        name, kind = str(entry['name']), entry['kind']
        if kind not in KINDS:
            raise DocumentError(f"unknown kind '{kind}'", declaration=name)
        try:
            document.add(_BUILDERS[kind](document, name, entry))
        except DocumentError:
            raise
        except StructureError as e:
            raise DocumentError(str(e), declaration=name) from e
        except (KeyError, TypeError, ValueError) as e:
            raise DocumentError(f"malformed {kind}: {e}", declaration=name) from e

    logger.debug("Loaded %d declarations from %s", len(document), source or '<string>')
    return document


# Builders

def _lattice_ref(document, name, entry):
    ref = entry['lattice']
    if ref in document:
        return document.value(ref, 'lattice'), ref
    bundled = named_lattice(ref)
    if bundled is None:
        raise DocumentError(f"unknown lattice '{ref}'", declaration=name)
    return bundled, ref


def _ends(document, entry, kind):
    end_kind = MAP_KINDS[kind]
    dom = document.value(entry['dom'], end_kind)
    cod = document.value(entry['cod'], end_kind)
    return dom, cod, {'dom': entry['dom'], 'cod': entry['cod']}


def _build_lattice(document, name, entry):
    if 'named' in entry:
        v = named_lattice(entry['named'])
        if v is None:
            raise DocumentError(f"unknown lattice '{entry['named']}'", declaration=name)
        return Declaration(name, 'lattice', v, named=entry['named'])
    v = from_hasse(name, entry['elements'], [tuple(edge) for edge in entry.get('hasse', [])])
    return Declaration(name, 'lattice', v)


def _build_set(document, name, entry):
    return Declaration(name, 'set', FinSet(tuple(entry['elements'])))


def _build_function(document, name, entry):
    dom, cod, refs = _ends(document, entry, 'function')
    return Declaration(name, 'function', FinFunction(dom, cod, dict(entry['map'])), refs)


def _build_poset(document, name, entry):
    relations = [tuple(pair) for pair in entry.get('relations', [])]
    return Declaration(name, 'poset', FinPoset.from_relations(entry['elements'], relations))


def _build_monotone(document, name, entry):
    dom, cod, refs = _ends(document, entry, 'monotone')
    return Declaration(name, 'monotone', MonotoneMap.build(dom, cod, dict(entry['map'])), refs)


def _build_category(document, name, entry):
    c = validate_category(
        entry['objects'],
        {m: tuple(ends) for m, ends in entry['morphisms'].items()},
        entry['identities'],
        [tuple(triple) for triple in entry.get('composition', [])]
    )
    return Declaration(name, 'category', c)


def _build_functor(document, name, entry):
    dom, cod, refs = _ends(document, entry, 'functor')
    F = validate_functor(dom, cod, entry['objects'], entry['morphisms'])
    return Declaration(name, 'functor', F, refs)


def _build_vcategory(document, name, entry):
    v, ref = _lattice_ref(document, name, entry)
    hom = {(x, y): value for x, row in entry['hom'].items() for y, value in row.items()}
    c = validate_vcategory(v, entry['objects'], hom)
    return Declaration(name, 'vcategory', c, {'lattice': ref})


def _build_vfunctor(document, name, entry):
    dom, cod, refs = _ends(document, entry, 'vfunctor')
    return Declaration(name, 'vfunctor', validate_vfunctor(dom, cod, dict(entry['map'])), refs)


def _build_cover(document, name, entry):
    v, ref = _lattice_ref(document, name, entry)
    c = make_cover(v, entry['fibers'], entry['target'], index=entry.get('index'),
                   name=entry.get('target_index', '*'))
    return Declaration(name, 'cover', c, {'lattice': ref})


def _build_multicategory(document, name, entry):
    x = validate_multicategory(
        entry['objects'],
        {m: (tuple(src), tgt) for m, (src, tgt) in entry['morphisms'].items()},
        entry['units'],
        [(tuple(args), f, h) for args, f, h in entry.get('composition', [])]
    )
    return Declaration(name, 'multicategory', x)


def _build_multifunctor(document, name, entry):
    dom, cod, refs = _ends(document, entry, 'multifunctor')
    p = validate_multifunctor(dom, cod, entry['objects'], entry['morphisms'])
    return Declaration(name, 'multifunctor', p, refs)


_BUILDERS = {
    'lattice': _build_lattice,
    'set': _build_set,
    'function': _build_function,
    'poset': _build_poset,
    'monotone': _build_monotone,
    'category': _build_category,
    'functor': _build_functor,
    'vcategory': _build_vcategory,
    'vfunctor': _build_vfunctor,
    'cover': _build_cover,
    'multicategory': _build_multicategory,
    'multifunctor': _build_multifunctor,
}


# Serialization

def _serialize(declaration):
    """Canonical JSON form of a declaration, built from the validated value"""
    d, value = declaration, declaration.value
    entry = {'name': d.name, 'kind': d.kind}
    entry.update(d.refs)

    if d.kind == 'lattice':
        if d.named:
            entry['named'] = d.named
        else:
            entry['elements'] = list(value.elements)
            entry['hasse'] = [list(edge) for edge in value.poset.hasse_edges()]
    elif d.kind == 'set':
        entry['elements'] = list(value)
    elif d.kind == 'function':
        entry['map'] = dict(value.mapping)
    elif d.kind == 'poset':
        entry['elements'] = list(value.carrier)
        entry['relations'] = [list(edge) for edge in value.hasse_edges()]
    elif d.kind == 'monotone':
        entry['map'] = dict(value.fn.mapping)
    elif d.kind == 'category':
        entry['objects'] = list(value.objects)
        entry['morphisms'] = {m: [value.src[m], value.tgt[m]] for m in value.morphisms}
        entry['identities'] = dict(value.ident)
        entry['composition'] = [[g, f, h] for (g, f), h in value.comp.items()]
    elif d.kind in ('functor', 'multifunctor'):
        entry['objects'] = dict(value.obj_map)
        entry['morphisms'] = dict(value.mor_map)
    elif d.kind == 'vcategory':
        entry['objects'] = list(value.objects)
        entry['hom'] = {x: {y: value.hom[(x, y)] for y in value.objects} for x in value.objects}
    elif d.kind == 'vfunctor':
        entry['map'] = dict(value.obj_map.mapping)
    elif d.kind == 'cover':
        entry['index'] = list(value.dom.index)
        entry['fibers'] = value.fibers
        entry['target'] = value.target
        entry['target_index'] = value.cod.index.elements[0]
    elif d.kind == 'multicategory':
        entry['objects'] = list(value.objs)
        entry['morphisms'] = {m: [list(value.dom_list[m]), value.cod[m]] for m in value.mors}
        entry['units'] = dict(value.unit)
        entry['composition'] = [[list(args), f, h] for (args, f), h in value.comp.items()]
    return entry


def dumps(document):
    """Deterministic JSON text; loading it back and dumping again gives the same text"""
    payload = {'declarations': [_serialize(d) for d in document]}
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def dump(document, path):
    Path(path).write_text(dumps(document), encoding='utf-8')
