"""
Gluing along covers of idealic semirings, and the open pieces of a spectrum.

A cover of ``s`` is a family ``s_i`` with ``s = ⊕ s_i``; sections over the pieces are
classes in the localizations ``R_{s_i}``.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from idemspec import logging
from idemspec.algebra.localization import element_mult_system, induced_map, localize, localize_at_element
from idemspec.algebra.semiring import FinSemiring
from idemspec.algebra.structure import PASS, Verdict, fail, is_hom
from idemspec.errors import GlueError, PreconditionError
from idemspec.topology.space import FinTop, closed_set_semiring, subspace
from idemspec.topology.spectrum import spec, spec_map


def glue(semiring: FinSemiring, s: int, parts: Sequence[Tuple[int, int]]) -> int:
    """The unique class of ``R_s`` restricting to ``f_i`` in every ``R_{s_i}``.

    ``parts`` holds pairs ``(s_i, f_i)`` with ``f_i`` a class index of ``R_{s_i}``.
    """
    if not semiring.is_idealic:
        raise PreconditionError("gluing needs an idealic semiring")
    covering = [si for si, _ in parts]
    if semiring.sum(covering) != s:
        raise GlueError("cover sums to s", (semiring.sum(covering), s))

    loc_s = localize_at_element(semiring, s)
    pieces = [localize_at_element(semiring, si) for si in covering]
    for i, (si, fi) in enumerate(parts):
        if not 0 <= fi < pieces[i].semiring.n:
            raise GlueError("section in carrier", (i, fi))

    lifts = [piece.result.lift(fi) for piece, (_, fi) in zip(pieces, parts)]
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            overlap = localize_at_element(semiring, semiring.times(covering[i], covering[j]))
            if overlap(lifts[i]) != overlap(lifts[j]):
                raise GlueError("sections agree on overlaps", (i, j))

    restrictions = [induced_map(loc_s, piece) for piece in pieces]
    targets = [fi for _, fi in parts]
    matches = [
        c for c in range(loc_s.semiring.n) if all(r[c] == t for r, t in zip(restrictions, targets))
    ]
    if len(matches) != 1:
        raise GlueError("unique glue", tuple(matches))

    exponent = semiring.n
    weighted = (semiring.times(semiring.power(si, exponent), lift) for si, lift in zip(covering, lifts))
    candidate = loc_s(semiring.sum(weighted))
    if candidate != matches[0]:
        raise GlueError("glue formula matches scan", (candidate, matches[0]))
    logging.debug(f"glued {len(parts)} sections over s={semiring.names[s]}")
    return candidate


def compatible_families(semiring: FinSemiring, covering: Sequence[int]) -> List[Tuple[int, ...]]:
    """All tuples of sections over the pieces that agree on every overlap."""
    pieces = [localize_at_element(semiring, si) for si in covering]
    families: List[Tuple[int, ...]] = [()]
    for i, piece in enumerate(pieces):
        extended = []
        for family in families:
            for fi in range(piece.semiring.n):
                lift_i = piece.result.lift(fi)
                ok = True
                for j, fj in enumerate(family):
                    overlap = localize_at_element(semiring, semiring.times(covering[i], covering[j]))
                    if overlap(lift_i) != overlap(pieces[j].result.lift(fj)):
                        ok = False
                        break
                if ok:
                    extended.append(family + (fi,))
        families = extended
    return families


def open_immersion_check(semiring: FinSemiring, f: int) -> Verdict:
    """Spec R_f -> Spec R is injective with image D(f) and carries the subspace topology."""
    loc = localize_at_element(semiring, f)
    inclusion = spec_map(loc.result.pi)
    whole = spec(semiring)
    image = frozenset(inclusion.mapping)
    if len(image) != len(inclusion.mapping):
        return fail("injective", inclusion.mapping)
    if image != whole.D(f):
        return fail("image is D(f)", tuple(sorted(image)))
    piece, members = subspace(whole.space, image)
    pulled = {frozenset(members.index(inclusion(x)) for x in c) for c in inclusion.source.closed}
    if pulled != set(piece.closed):
        return fail("subspace topology")
    return PASS


def tau_iso_check(space: FinTop, z: int) -> Verdict:
    """C(X)_Z is isomorphic to C(X ∖ Z) through ``class(C) -> C ∖ Z``; ``z`` indexes C(X)."""
    cs = closed_set_semiring(space)
    loc = localize(cs.semiring, element_mult_system(cs.semiring, z))
    rest, members = subspace(space, space.everything - cs.closed_sets[z])
    cs_rest = closed_set_semiring(rest)
    position = {x: i for i, x in enumerate(members)}
    mapping: List[int] = [-1] * loc.semiring.n
    for c, closed in enumerate(cs.closed_sets):
        image = cs_rest.index(frozenset(position[x] for x in closed if x in position))
        k = loc(c)
        if mapping[k] not in (-1, image):
            return fail("well defined", c)
        mapping[k] = image
    if sorted(mapping) != list(range(cs_rest.semiring.n)):
        return fail("bijective", tuple(mapping))
    return is_hom(loc.semiring, cs_rest.semiring, mapping)
