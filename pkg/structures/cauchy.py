"""
Cauchy completion of finite categories
The Karoubi envelope, its action on functors, and the test for fully
faithful lax epimorphisms
"""

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional

from utils import encode_tuple
from .fincat import equivalence_check, fully_faithful_check, validate_category, validate_functor
from .results import Check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Idempotent:
    """An endomorphism e of obj with e∘e = e"""

    obj: str
    endo: str

    @property
    def atom(self):
        return encode_tuple(self.obj, self.endo)


@dataclass(frozen=True)
class KaroubiEnvelope:
    """
    Objects are idempotents (x,e); a morphism (x,e) → (y,d) is a source
    morphism f with d∘f∘e = f, encoded "(e,f,d)"
    """

    category: object
    unit: object
    idempotents: Mapping[str, Idempotent]
    morphisms: Mapping[str, tuple]


@dataclass(frozen=True)
class LaxEpiVerdict:
    """Fully-faithful-lax-epimorphism verdict; lax_epi is None when undecided"""

    holds: bool
    certificate: str
    lax_epi: Optional[bool]

    def __bool__(self):
        return self.holds


def idempotents(c):
    """Every idempotent of c, by object then morphism order"""
    return [Idempotent(x, e) for x in c.objects for e in c.endomorphisms(x)
            if c.comp[(e, e)] == e]


def idempotent_splits(c, e):
    """
    Whether an idempotent splits: e = s∘r with r∘s the identity

    Args:
        c: FinCategory
        e: Idempotent of c

    Returns:
        Check: witness is (y, r, s)
    """
    x = e.obj
    for y in c.objects:
        for r in c.hom(x, y):
            for s in c.hom(y, x):
                if c.comp[(s, r)] == e.endo and c.comp[(r, s)] == c.ident[y]:
                    return Check(True, f"{e.endo} splits through {y}", witness=(y, r, s))
    return Check(False, f"{e.endo} on {x} does not split")


def karoubi_envelope(c):
    """
    The idempotent-splitting completion of c with its unit x ↦ (x, id_x)

    Returns:
        KaroubiEnvelope
    """
    objects = {i.atom: i for i in idempotents(c)}
    morphisms = {}
    for a in objects.values():
        for b in objects.values():
            for f in c.hom(a.obj, b.obj):
                if c.comp[(b.endo, c.comp[(f, a.endo)])] == f:
                    morphisms[encode_tuple(a.endo, f, b.endo)] = (a, f, b)

    composition = []
    for k2, (b2, g, c2) in morphisms.items():
        for k1, (a1, f, b1) in morphisms.items():
            if b1 == b2:
                composition.append((k2, k1, encode_tuple(a1.endo, c.comp[(g, f)], c2.endo)))

    envelope = validate_category(
        list(objects),
        {k: (a.atom, b.atom) for k, (a, _, b) in morphisms.items()},
        {atom: encode_tuple(i.endo, i.endo, i.endo) for atom, i in objects.items()},
        composition,
        fill_units=False
    )

    unit = validate_functor(
        c, envelope,
        {x: encode_tuple(x, c.ident[x]) for x in c.objects},
        {m: encode_tuple(c.ident[c.src[m]], m, c.ident[c.tgt[m]]) for m in c.morphisms}
    )
    logger.debug("Karoubi envelope of %r: %s", c, envelope.describe())
    decoded = {k: (a.endo, f, b.endo) for k, (a, f, b) in morphisms.items()}
    return KaroubiEnvelope(envelope, unit, MappingProxyType(objects), MappingProxyType(decoded))


def karoubi_extend(p, source=None, target=None):
    """
    The functor between envelopes: (x,e) ↦ (p x, p e), (e,f,d) ↦ (p e, p f, p d)

    Args:
        p: FinFunctor
        source, target: precomputed envelopes of dom(p) and cod(p)

    Returns:
        FinFunctor
    """
    source = source or karoubi_envelope(p.dom)
    target = target or karoubi_envelope(p.cod)
    obj_map = {atom: encode_tuple(p.obj_map[i.obj], p.mor_map[i.endo])
               for atom, i in source.idempotents.items()}

    mor_map = {}
    for m, (e, f, d) in source.morphisms.items():
        mor_map[m] = encode_tuple(p.mor_map[e], p.mor_map[f], p.mor_map[d])
    return validate_functor(source.category, target.category, obj_map, mor_map)


def classify_ff_lax_epi(p):
    """
    Whether p is a fully faithful lax epimorphism, decided by whether the
    induced functor between Karoubi envelopes is an equivalence

    Returns:
        LaxEpiVerdict: when the check fails, lax_epi is False for fully
        faithful p and None (undecided) otherwise
    """
    check = equivalence_check(karoubi_extend(p))
    if check.holds:
        return LaxEpiVerdict(True, "envelope functor is an equivalence", True)

    certificate = f"{check.certificate} in envelope"
    if fully_faithful_check(p).holds:
        return LaxEpiVerdict(False, certificate, False)
    logger.info("Lax epimorphism status undecided for a functor that is not fully faithful")
    return LaxEpiVerdict(False, certificate, None)
