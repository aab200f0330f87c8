"""
Input validation functions
Validate user input and structural data before it reaches the structures
"""

import re

ATOM_PATTERN = re.compile(r'^\S(.*\S)?$')


def validate_atom(atom, what='atom'):
    """
    Validate an opaque atom

    Args:
        atom: candidate atom
        what: noun used in the error message

    Returns:
        tuple: (is_valid, error_message)
    """
    if not isinstance(atom, str):
        return False, f"{what} must be a string, got {type(atom).__name__}"

    if not atom:
        return False, f"{what} must not be empty"

    if not ATOM_PATTERN.match(atom):
        return False, f"{what} '{atom}' has leading or trailing whitespace"

    return True, None


def validate_distinct(atoms, what='element'):
    """
    Validate that a sequence of atoms has no duplicates

    Args:
        atoms: sequence of atoms
        what: noun used in the error message

    Returns:
        tuple: (is_valid, error_message)
    """
    seen = set()
    for atom in atoms:
        is_valid, message = validate_atom(atom, what)
        if not is_valid:
            return False, message
        if atom in seen:
            return False, f"duplicate {what} '{atom}'"
        seen.add(atom)
    return True, None


def validate_total(mapping, dom, cod, what='map'):
    """
    Validate that an association is total on dom with values in cod

    Args:
        mapping: dict-like association
        dom: iterable of atoms the map must be defined on
        cod: container of admissible values
        what: name used in the error message

    Returns:
        tuple: (is_valid, error_message)
    """
    dom = list(dom)
    for atom in dom:
        if atom not in mapping:
            return False, f"{what} undefined at '{atom}'"
        if mapping[atom] not in cod:
            return False, f"{what} sends '{atom}' to '{mapping[atom]}', which is not in the codomain"

    extra = sorted(set(mapping) - set(dom))
    if extra:
        return False, f"{what} defined outside its domain at '{extra[0]}'"

    return True, None


def validate_bound(value, name='bound'):
    """
    Validate a search bound

    Args:
        value: candidate bound
        name: flag or parameter name

    Returns:
        tuple: (is_valid, error_message)
    """
    if isinstance(value, bool) or not isinstance(value, int):
        return False, f"{name} must be an integer"

    if value < 1:
        return False, f"{name} must be positive, got {value}"

    return True, None


def validate_chain_length(n, low=0, high=3):
    """
    Validate a chain length against the supported range

    Args:
        n: requested chain length
        low: smallest supported value
        high: largest supported value

    Returns:
        tuple: (is_valid, error_message)
    """
    if isinstance(n, bool) or not isinstance(n, int):
        return False, "chain length must be an integer"

    if n < low or n > high:
        return False, f"chain length {n} is out of the supported range {low}..{high}"

    return True, None
