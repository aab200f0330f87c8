"""
Helper utility functions
Atom encoding and formatting used across the toolkit
"""

RESERVED = ',()[]{}\\'
_OPENING = {')': '(', ']': '[', '}': '{'}


def _is_delimited(atom):
    """True when the atom is bracket-balanced with no top-level comma and no backslash"""
    stack = []
    for ch in atom:
        if ch == '\\':
            return False
        if ch in '([{':
            stack.append(ch)
        elif ch in _OPENING:
            if not stack or stack.pop() != _OPENING[ch]:
                return False
        elif ch == ',' and not stack:
            return False
    return not stack


def quote_atom(atom):
    """
    Quote an atom for use inside a composite atom

    Balanced atoms such as "(a,b)" or "[k]" pass through unchanged, so nested
    encodings stay readable. Any other atom carrying a reserved character gets
    every reserved character backslash-escaped ("a,b" becomes "a\\,b"), which
    keeps encode_tuple, encode_list and encode_class injective.

    Args:
        atom: atom to quote

    Returns:
        str: quoted atom
    """
    atom = str(atom)
    if _is_delimited(atom):
        return atom
    return ''.join('\\' + ch if ch in RESERVED else ch for ch in atom)


def _join(atoms):
    return ','.join(quote_atom(a) for a in atoms)


def encode_tuple(*atoms):
    """
    Encode a tuple of atoms as a single composite atom

    Args:
        atoms: atoms (strings) to combine

    Returns:
        str: deterministic encoding, e.g. "(a,b)"
    """
    return '(' + _join(atoms) + ')'


def encode_list(atoms):
    """
    Encode a finite list of atoms (an element of the free monoid)

    Args:
        atoms: sequence of atoms

    Returns:
        str: deterministic encoding, e.g. "[a,b]" or "[]"
    """
    return '[' + _join(atoms) + ']'


def encode_class(atoms):
    """
    Encode an equivalence class (in the given order) as a quotient atom

    Args:
        atoms: members of the class, already in canonical order

    Returns:
        str: e.g. "{a,b}"
    """
    return '{' + _join(atoms) + '}'


def format_chain(elements, relation='≤'):
    """
    Format a chain of elements, e.g. "a≤b≤c"

    Args:
        elements: sequence of atoms
        relation: symbol placed between consecutive atoms

    Returns:
        str: formatted chain
    """
    return relation.join(str(e) for e in elements)


def format_mapping(mapping, limit=8):
    """
    Format a finite association for certificates

    Args:
        mapping: dict-like association
        limit: maximum number of entries shown

    Returns:
        str: "a↦x, b↦y" (truncated with an ellipsis)
    """
    items = [f"{k}↦{v}" for k, v in mapping.items()]
    if len(items) > limit:
        items = items[:limit] + ['…']
    return ', '.join(items)


def format_count(count, noun):
    """
    Format a count with a naive plural

    Args:
        count: integer
        noun: singular noun

    Returns:
        str: e.g. "1 datum", "3 morphisms"
    """
    if count == 1:
        return f"1 {noun}"
    if noun.endswith('um'):
        return f"{count} {noun[:-2]}a"
    return f"{count} {noun}s"
