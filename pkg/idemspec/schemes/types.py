"""
Schematizable algebraic types.

A type tells the scheme machinery three things about an algebra kind:

- how to turn an algebra ``A`` into an idealic semiring with idempotent multiplication,
  ``α₁(A)``, together with the multiplicative map ``α₂: A -> α₁(A)``,
- how to localize ``A`` at a multiplicative subset,
- that these fit together: ``α₁(A_S) ≅ α₁(A)_{α₂(S)}`` (``gamma_check``).

``α₁`` is computed in two steps. ``ideal_semiring`` builds the semiring of ideals (for
semirings this is the semiring itself) and the quotient by ``(x², x)`` then forces idempotent
multiplication.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, ClassVar, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from idemspec import logging
from idemspec.algebra.congruence import (
    CongruencePartition,
    QuotientHom,
    UnionFind,
    factor_through,
    idempotent_quotient,
    quotient,
)
from idemspec.algebra.localization import check_mult_system, generated_mult_system, localize
from idemspec.algebra.order import FinCIM
from idemspec.algebra.semiring import FinSemiring, check_idealic, check_semiring
from idemspec.algebra.structure import PASS, Verdict, compose, fail, first_failure, is_bijective
from idemspec.config_manager import ensure_within
from idemspec.constants import AlgebraKind, Guard
from idemspec.errors import FormatError, LawViolation
from idemspec.schemes.algebras import FinMonoid, FinRing, check_monoid, check_ring

Ideal = FrozenSet[int]


@dataclass(frozen=True)
class IdealSemiring:
    """Ideals of an algebra as a semiring; ``principal[a]`` indexes the ideal generated by ``a``."""

    semiring: FinSemiring
    ideals: Tuple[Ideal, ...]
    principal: Tuple[int, ...]

    def index(self, ideal: Iterable[int]) -> int:
        return self.ideals.index(frozenset(ideal))


@dataclass(frozen=True)
class AlphaOne:
    algebra: Any
    ideals: IdealSemiring
    quotient: QuotientHom

    @property
    def semiring(self) -> FinSemiring:
        return self.quotient.quotient

    @cached_property
    def alpha2(self) -> Tuple[int, ...]:
        return compose(self.ideals.principal, self.quotient.projection)


def multiplicative_closure(algebra, generators: Iterable[int]) -> FrozenSet[int]:
    """The submonoid of ``(A, ·)`` generated by ``generators``."""
    mul = algebra.operations()["mul"]
    members = {algebra.constants()["one"]}
    frontier = list(generators)
    while frontier:
        a = frontier.pop()
        if a in members:
            continue
        members.add(a)
        frontier.extend(mul[a][b] for b in list(members))
    return frozenset(members)


def _ideal_semiring(
    ideals: Sequence[Ideal],
    plus: Callable[[Ideal, Ideal], Ideal],
    times: Callable[[Ideal, Ideal], Ideal],
    zero: Ideal,
    whole: Ideal,
    principal: Sequence[Ideal],
    names: Sequence[str],
) -> IdealSemiring:
    ideals = tuple(ideals)
    index: Dict[Ideal, int] = {ideal: k for k, ideal in enumerate(ideals)}
    add = tuple(tuple(index[plus(a, b)] for b in ideals) for a in ideals)
    mul = tuple(tuple(index[times(a, b)] for b in ideals) for a in ideals)
    carrier = FinCIM(add, index[zero], index[whole], tuple(names))
    check_semiring(carrier, mul, index[whole]).raise_for_violation()
    semiring = FinSemiring(carrier, mul, index[whole])
    return IdealSemiring(semiring, ideals, tuple(index[p] for p in principal))


class SchematizableType(ABC):
    kind: ClassVar[AlgebraKind]

    @abstractmethod
    def validate(self, algebra) -> Verdict: ...

    @abstractmethod
    def ideal_semiring(self, algebra) -> IdealSemiring: ...

    @abstractmethod
    def extend_ideal(
        self, mapping: Sequence[int], source: IdealSemiring, target_algebra, target: IdealSemiring
    ) -> Tuple[int, ...]:
        """The map of ideal semirings induced by a homomorphism ``mapping``."""

    @abstractmethod
    def localize(self, algebra, members: FrozenSet[int]) -> QuotientHom:
        """Localization at a multiplicative subset; finite localizations are quotients."""

    @abstractmethod
    def terminal(self): ...

    def alpha1(self, algebra) -> AlphaOne:
        ideals = self.ideal_semiring(algebra)
        return AlphaOne(algebra, ideals, idempotent_quotient(ideals.semiring))

    def alpha1_map(self, mapping: Sequence[int], source: AlphaOne, target: AlphaOne) -> Tuple[int, ...]:
        extended = self.extend_ideal(mapping, source.ideals, target.algebra, target.ideals)
        return factor_through(source.quotient, target.semiring, compose(extended, target.quotient.projection))

    def localize_at(self, algebra, generators: Iterable[int]) -> QuotientHom:
        return self.localize(algebra, multiplicative_closure(algebra, generators))

    def gamma_check(self, algebra, generators: Iterable[int]) -> Verdict:
        """``α₁(A_S) ≅ α₁(A)_{α₂(S)}`` through the map induced by ``A -> A_S``."""
        members = multiplicative_closure(algebra, generators)
        q = self.localize(algebra, members)
        source = self.alpha1(algebra)
        target = self.alpha1(q.quotient)
        try:
            lifted = self.alpha1_map(q.projection, source, target)
            sigma = generated_mult_system(source.semiring, [source.alpha2[s] for s in members])
            loc = localize(source.semiring, sigma)
            induced = factor_through(loc.result, target.semiring, lifted)
        except LawViolation as e:
            return fail(f"γ: {e.law}", *e.witness)
        if not is_bijective(induced, target.semiring.n):
            return fail("γ bijective", induced)
        return PASS


def _labels_from_relation(n: int, related: Callable[[int, int], bool]) -> Tuple[int, ...]:
    uf = UnionFind(n)
    for a in range(n):
        for b in range(a + 1, n):
            if related(a, b):
                uf.union(a, b)
    return uf.labels()


def ring_principal_ideal(ring: FinRing, a: int) -> Ideal:
    return frozenset(ring.times(r, a) for r in range(ring.n))


def ring_ideal_sum(ring: FinRing, first: Ideal, second: Ideal) -> Ideal:
    return frozenset(ring.plus(i, j) for i in first for j in second)


def ring_generated_ideal(ring: FinRing, generators: Iterable[int]) -> Ideal:
    ideal = frozenset({ring.zero})
    for g in generators:
        ideal = ring_ideal_sum(ring, ideal, ring_principal_ideal(ring, g))
    return ideal


def ring_ideals(ring: FinRing) -> Tuple[Ideal, ...]:
    """Every ideal, as sums of principal ideals; smallest first."""
    ensure_within(Guard.CARRIER, ring.n)
    principal = {ring_principal_ideal(ring, a) for a in range(ring.n)}
    found = {frozenset({ring.zero})}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for p in principal:
            joined = ring_ideal_sum(ring, current, p)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return tuple(sorted(found, key=lambda i: (len(i), sorted(i))))


def ring_ideal_name(ring: FinRing, ideal: Ideal) -> str:
    for a in sorted(ideal):
        if ring_principal_ideal(ring, a) == ideal:
            return f"({ring.names[a]})"
    generators: List[int] = []
    for a in sorted(ideal):
        if a not in ring_generated_ideal(ring, generators):
            generators.append(a)
    return "(" + ",".join(ring.names[g] for g in generators) + ")"


class RingType(SchematizableType):
    """Finite commutative rings: ``α₁`` from the ideal lattice, ``α₂(a) = (a)``."""

    kind = AlgebraKind.RING

    def validate(self, algebra) -> Verdict:
        if not isinstance(algebra, FinRing):
            return fail("ring input", type(algebra).__name__)
        return check_ring(algebra.add, algebra.mul, algebra.zero, algebra.one)

    def ideal_semiring(self, algebra: FinRing) -> IdealSemiring:
        ideals = ring_ideals(algebra)

        def times(first: Ideal, second: Ideal) -> Ideal:
            return ring_generated_ideal(algebra, {algebra.times(i, j) for i in first for j in second})

        return _ideal_semiring(
            ideals,
            lambda a, b: ring_ideal_sum(algebra, a, b),
            times,
            frozenset({algebra.zero}),
            frozenset(range(algebra.n)),
            [ring_principal_ideal(algebra, a) for a in range(algebra.n)],
            [ring_ideal_name(algebra, i) for i in ideals],
        )

    def extend_ideal(self, mapping, source, target_algebra: FinRing, target) -> Tuple[int, ...]:
        return tuple(
            target.index(ring_generated_ideal(target_algebra, {mapping[a] for a in ideal})) for ideal in source.ideals
        )

    def localize(self, algebra: FinRing, members: FrozenSet[int]) -> QuotientHom:
        def related(a: int, b: int) -> bool:
            difference = algebra.minus(a, b)
            return any(algebra.times(u, difference) == algebra.zero for u in members)

        labels = _labels_from_relation(algebra.n, related)
        return quotient(algebra, CongruencePartition(algebra, labels))

    def terminal(self) -> FinRing:
        return FinRing(((0,),), ((0,),), 0, 0, ("0",))


def monoid_principal_ideal(monoid: FinMonoid, a: int) -> Ideal:
    return frozenset(monoid.times(a, m) for m in range(monoid.n))


def monoid_ideals(monoid: FinMonoid) -> Tuple[Ideal, ...]:
    """The empty set plus every ideal, as unions of principal ideals; smallest first."""
    ensure_within(Guard.CARRIER, monoid.n)
    principal = {monoid_principal_ideal(monoid, a) for a in range(monoid.n)}
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        current = frontier.pop()
        for p in principal:
            joined = current | p
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return tuple(sorted(found, key=lambda i: (len(i), sorted(i))))


class MonoidType(SchematizableType):
    """Finite commutative monoids: ideals with the empty ideal adjoined as zero."""

    kind = AlgebraKind.MONOID

    def validate(self, algebra) -> Verdict:
        if not isinstance(algebra, FinMonoid):
            return fail("monoid input", type(algebra).__name__)
        return check_monoid(algebra.mul, algebra.one)

    def ideal_semiring(self, algebra: FinMonoid) -> IdealSemiring:
        ideals = monoid_ideals(algebra)

        def name(ideal: Ideal) -> str:
            if not ideal:
                return "∅"
            return "{" + ",".join(algebra.names[a] for a in sorted(ideal)) + "}"

        return _ideal_semiring(
            ideals,
            lambda a, b: a | b,
            lambda a, b: frozenset(algebra.times(i, j) for i in a for j in b),
            frozenset(),
            frozenset(range(algebra.n)),
            [monoid_principal_ideal(algebra, a) for a in range(algebra.n)],
            [name(i) for i in ideals],
        )

    def extend_ideal(self, mapping, source, target_algebra: FinMonoid, target) -> Tuple[int, ...]:
        return tuple(
            target.index({target_algebra.times(mapping[a], m) for a in ideal for m in range(target_algebra.n)})
            for ideal in source.ideals
        )

    def localize(self, algebra: FinMonoid, members: FrozenSet[int]) -> QuotientHom:
        def related(a: int, b: int) -> bool:
            return any(algebra.times(t, a) == algebra.times(t, b) for t in members)

        labels = _labels_from_relation(algebra.n, related)
        return quotient(algebra, CongruencePartition(algebra, labels))

    def terminal(self) -> FinMonoid:
        return FinMonoid(((0,),), 0, ("1",))


class SemiringType(SchematizableType):
    """Idealic semirings: ``α₁`` is the quotient by ``(x², x)``, localization inverts by collapsing to 1."""

    kind = AlgebraKind.SEMIRING

    def validate(self, algebra) -> Verdict:
        if not isinstance(algebra, FinSemiring):
            return fail("semiring input", type(algebra).__name__)
        return first_failure(
            lambda: check_semiring(algebra.add, algebra.mul, algebra.one),
            lambda: check_idealic(algebra),
        )

    def ideal_semiring(self, algebra: FinSemiring) -> IdealSemiring:
        return IdealSemiring(
            algebra,
            tuple(algebra.add.down_set(a) for a in range(algebra.n)),
            tuple(range(algebra.n)),
        )

    def extend_ideal(self, mapping, source, target_algebra, target) -> Tuple[int, ...]:
        return tuple(mapping)

    def localize(self, algebra: FinSemiring, members: FrozenSet[int]) -> QuotientHom:
        return localize(algebra, check_mult_system(algebra, members)).result

    def terminal(self) -> FinSemiring:
        return FinSemiring(FinCIM(((0,),), 0, 0, ("0",)), ((0,),), 0)


def type_ring() -> RingType:
    return RingType()


def type_monoid() -> MonoidType:
    return MonoidType()


def type_semiring() -> SemiringType:
    return SemiringType()


def algebra_type(kind) -> SchematizableType:
    kind = AlgebraKind(kind)
    logging.debug(f"using the {kind.value} type")
    if kind == AlgebraKind.RING:
        return type_ring()
    if kind == AlgebraKind.MONOID:
        return type_monoid()
    if kind == AlgebraKind.SEMIRING:
        return type_semiring()
    raise FormatError(f"unknown algebra type '{kind}'")
