"""
Presheaves of finite algebras on the closed-set lattice C(X), the sheaf condition and
sheafification.

Lattice element ``z`` stands for a closed set and ``sections[z]`` are the sections over its
open complement. ``w <= z`` in C(X) means the complement of ``w`` lies inside the complement
of ``z``, so restrictions run from ``z`` down to ``w``. The bottom of C(X) is the whole space
as a closed set, i.e. the empty open set; the empty cover covers it.

The lattice is handed over as an idealic semiring with idempotent multiplication, so ``·`` is
the meet and gives the overlap of two pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from idemspec import logging
from idemspec.algebra.order import join_irreducibles
from idemspec.algebra.semiring import FinSemiring
from idemspec.algebra.structure import PASS, Verdict, compose, fail, is_bijective, is_hom
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.errors import GlueError, LawViolation
from idemspec.utils import subsets

Restrictions = Mapping[Tuple[int, int], Tuple[int, ...]]


@dataclass(frozen=True)
class Presheaf:
    lattice: FinSemiring
    sections: Tuple[Any, ...]
    restrictions: Restrictions = field(compare=False)

    def restrict(self, z: int, w: int, a: int) -> int:
        return self.restrictions[(z, w)][a]

    def below(self, z: int) -> Tuple[int, ...]:
        return tuple(w for w in range(self.lattice.n) if self.lattice.leq(w, z))

    @property
    def kind(self):
        return type(self.sections[0])


def check_presheaf(presheaf: Presheaf) -> Verdict:
    lattice = presheaf.lattice
    if not (lattice.is_idealic and lattice.is_idempotent_mult):
        return fail("lattice of closed sets")
    if len(presheaf.sections) != lattice.n:
        return fail("one section algebra per closed set", len(presheaf.sections), lattice.n)
    for z in range(lattice.n):
        if presheaf.restrictions.get((z, z)) != tuple(range(presheaf.sections[z].n)):
            return fail("restriction to itself is the identity", z)
        for w in presheaf.below(z):
            mapping = presheaf.restrictions.get((z, w))
            if mapping is None:
                return fail("restriction defined", z, w)
            if not is_hom(presheaf.sections[z], presheaf.sections[w], mapping):
                return fail("restriction is a homomorphism", z, w)
            for v in presheaf.below(w):
                direct = presheaf.restrictions[(z, v)]
                if compose(mapping, presheaf.restrictions[(w, v)]) != direct:
                    return fail("restrictions compose", z, w, v)
    return PASS


def constant_presheaf(lattice: FinSemiring, algebra) -> Presheaf:
    """Every section algebra is ``algebra`` and every restriction is the identity."""
    identity = tuple(range(algebra.n))
    restrictions = {
        (z, w): identity for z in range(lattice.n) for w in range(lattice.n) if lattice.leq(w, z)
    }
    return Presheaf(lattice, tuple(algebra for _ in range(lattice.n)), restrictions)


def covers(lattice: FinSemiring, z: int) -> Iterator[Tuple[int, ...]]:
    """Covers of ``z`` that can fail: the empty cover of the bottom, and antichains of two or more.

    A cover with comparable members glues exactly when the antichain of its maximal members does.
    """
    if z == lattice.zero:
        yield ()
        return
    below = [w for w in range(lattice.n) if w not in (z, lattice.zero) and lattice.leq(w, z)]
    for members in subsets(below):
        if len(members) < 2 or lattice.sum(members) != z:
            continue
        if any(lattice.leq(a, b) for a in members for b in members if a != b):
            continue
        yield members


def compatible_families(presheaf: Presheaf, cover: Sequence[int]) -> List[Tuple[int, ...]]:
    """Tuples of sections over ``cover`` agreeing on every pairwise overlap."""
    lattice = presheaf.lattice
    families: List[Tuple[int, ...]] = [()]
    for i, w in enumerate(cover):
        extended = []
        for family in families:
            for a in range(presheaf.sections[w].n):
                if all(
                    presheaf.restrict(w, lattice.times(w, v), a) == presheaf.restrict(v, lattice.times(w, v), b)
                    for v, b in zip(cover[:i], family)
                ):
                    extended.append(family + (a,))
        families = extended
    return families


def check_cover(presheaf: Presheaf, z: int, cover: Sequence[int]) -> Verdict:
    cover = tuple(cover)
    if not cover:
        if presheaf.sections[z].n != 1:
            return fail("empty cover: sections over the empty open are terminal", z, cover)
        return PASS
    seen: Dict[Tuple[int, ...], int] = {}
    for a in range(presheaf.sections[z].n):
        key = tuple(presheaf.restrict(z, w, a) for w in cover)
        if key in seen:
            return fail("uniqueness", z, cover, seen[key], a)
        seen[key] = a
    for family in compatible_families(presheaf, cover):
        if family not in seen:
            return fail("existence", z, cover, family)
    return PASS


def sheaf_check(presheaf: Presheaf) -> Verdict:
    """The equalizer condition for every closed set and every cover of it."""
    ensure_within(Guard.SHEAF_LATTICE, presheaf.lattice.n)
    check_presheaf(presheaf).raise_for_violation()
    for z in range(presheaf.lattice.n):
        for cover in covers(presheaf.lattice, z):
            verdict = check_cover(presheaf, z, cover)
            if not verdict:
                logging.debug(f"sheaf condition fails over {z} for cover {cover}: {verdict.law}")
                return verdict
    return PASS


def glue_section(presheaf: Presheaf, z: int, parts: Sequence[Tuple[int, int]]) -> int:
    """The unique section over ``z`` restricting to ``a`` over ``w`` for every ``(w, a)``."""
    matches = [c for c in range(presheaf.sections[z].n) if all(presheaf.restrict(z, w, c) == a for w, a in parts)]
    if len(matches) != 1:
        raise GlueError("unique glue", (z, tuple(parts), tuple(matches)))
    return matches[0]


def _family_algebra(kind, factors: Sequence[Any], families: Sequence[Tuple[int, ...]]):
    """Componentwise operations on a set of tuples closed under them."""
    index = {t: i for i, t in enumerate(families)}
    factor_ops = [f.operations() for f in factors]
    operations = {}
    for op in kind.OPERATION_NAMES:
        try:
            operations[op] = tuple(
                tuple(index[tuple(fo[op][a][b] for fo, a, b in zip(factor_ops, s, t))] for t in families)
                for s in families
            )
        except KeyError:
            raise LawViolation(f"matching families closed under {op}") from None
    constants = {c: index[tuple(f.constants()[c] for f in factors)] for c in kind.CONSTANT_NAMES}
    names = tuple("(" + ",".join(f.names[c] for f, c in zip(factors, t)) + ")" for t in families)
    return kind.from_operations(operations, constants, names)


@dataclass(frozen=True)
class PlusConstruction:
    presheaf: Presheaf
    supports: Tuple[Tuple[int, ...], ...]
    families: Tuple[Tuple[Tuple[int, ...], ...], ...]
    unit: Tuple[Tuple[int, ...], ...]


def plus(presheaf: Presheaf) -> PlusConstruction:
    """Matching families over the join-irreducibles below each closed set.

    Every covering sieve of ``z`` in a finite distributive lattice contains the join-irreducibles
    below ``z``, so their down-closure is the smallest covering sieve and the colimit over
    covering sieves is attained there.
    """
    lattice = presheaf.lattice
    irreducibles = join_irreducibles(lattice.add)
    kind = presheaf.kind
    supports = []
    all_families = []
    sections = []
    for z in range(lattice.n):
        support = tuple(j for j in irreducibles if lattice.leq(j, z))
        families = tuple(compatible_families(presheaf, support))
        sections.append(_family_algebra(kind, [presheaf.sections[j] for j in support], families))
        supports.append(support)
        all_families.append(families)

    positions = [{f: i for i, f in enumerate(families)} for families in all_families]
    restrictions = {}
    for z in range(lattice.n):
        for w in presheaf.below(z):
            keep = [supports[z].index(j) for j in supports[w]]
            restrictions[(z, w)] = tuple(
                positions[w][tuple(family[k] for k in keep)] for family in all_families[z]
            )
    unit = tuple(
        tuple(
            positions[z][tuple(presheaf.restrict(z, j, a) for j in supports[z])]
            for a in range(presheaf.sections[z].n)
        )
        for z in range(lattice.n)
    )
    result = Presheaf(lattice, tuple(sections), restrictions)
    return PlusConstruction(result, tuple(supports), tuple(all_families), unit)


@dataclass(frozen=True)
class Sheafification:
    sheaf: Presheaf
    unit: Tuple[Tuple[int, ...], ...]

    @property
    def is_iso(self) -> bool:
        return all(is_bijective(u, s.n) for u, s in zip(self.unit, self.sheaf.sections))


def sheafify(presheaf: Presheaf) -> Sheafification:
    """The plus construction applied twice; the first pass separates, the second glues."""
    ensure_within(Guard.SHEAF_LATTICE, presheaf.lattice.n)
    check_presheaf(presheaf).raise_for_violation()
    first = plus(presheaf)
    second = plus(first.presheaf)
    unit = tuple(compose(a, b) for a, b in zip(first.unit, second.unit))
    sizes = [s.n for s in second.presheaf.sections]
    logging.info(f"sheafified a presheaf on {presheaf.lattice.n} closed sets, section sizes {sizes}")
    return Sheafification(second.presheaf, unit)
