"""
Spectra of finite idealic semirings and the duality with finite sober spaces.

Spec R has the primes of R as points and the sets ``V(a) = {p : a <= p}`` as closed sets.
For finite inputs ``a -> V(a)`` identifies R with C(Spec R) and ``x -> closure{x}``
identifies a T0 space X with Spec C(X).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from idemspec import logging
from idemspec.algebra.primes import is_prime, primes
from idemspec.algebra.semiring import FinSemiring, SemiringHom, check_hom
from idemspec.algebra.structure import PASS, Verdict, compose, fail, is_bijective
from idemspec.errors import LawViolation, PreconditionError
from idemspec.topology.space import (
    ClosedSetSemiring,
    ContinuousMap,
    FinTop,
    check_continuous,
    closed_set_map,
    closed_set_semiring,
    is_homeomorphism,
)


def vanishing_set(semiring: FinSemiring, a: int) -> FrozenSet[int]:
    """``V(a)`` as a set of prime elements of ``semiring``."""
    return frozenset(p for p in primes(semiring) if semiring.leq(a, p))


@dataclass(frozen=True)
class SpectrumResult:
    base: FinSemiring
    primes: Tuple[int, ...]
    space: FinTop
    vanishing: Tuple[FrozenSet[int], ...]

    def point_of(self, p: int) -> int:
        return self.primes.index(p)

    def V(self, a: int) -> FrozenSet[int]:
        return self.vanishing[a]

    def D(self, a: int) -> FrozenSet[int]:
        return self.space.everything - self.vanishing[a]


def spec(semiring: FinSemiring) -> SpectrumResult:
    if not semiring.is_idealic:
        raise PreconditionError("spectrum needs an idealic semiring")
    points = primes(semiring)
    vanishing = tuple(
        frozenset(i for i, p in enumerate(points) if semiring.leq(a, p)) for a in range(semiring.n)
    )
    space = FinTop(tuple(semiring.names[p] for p in points), frozenset(vanishing))
    logging.debug(f"spectrum of a {semiring.n}-element semiring has {len(points)} points")
    return SpectrumResult(semiring, points, space, vanishing)


def preimage_prime(f: SemiringHom, q: int) -> int:
    """``sup{x : f(x) <= q}`` in the source of ``f``."""
    source = f.source
    return source.sum(x for x in range(source.n) if f.target.leq(f(x), q))


def spec_map(f: SemiringHom) -> ContinuousMap:
    """Spec f : Spec B -> Spec A for ``f: A -> B``."""
    check_hom(f).raise_for_violation()
    spec_a, spec_b = spec(f.source), spec(f.target)
    mapping = []
    for q in spec_b.primes:
        p = preimage_prime(f, q)
        if not is_prime(f.source, p):
            raise LawViolation("preimage of a prime is prime", (f.target.names[q],))
        mapping.append(spec_a.point_of(p))
    result = ContinuousMap(spec_b.space, spec_a.space, tuple(mapping))
    check_continuous(result).raise_for_violation()
    return result


@dataclass(frozen=True)
class DualityWitness:
    mapping: Tuple[int, ...]
    verdict: Verdict

    def __bool__(self):
        return self.verdict.ok


def duality_check(semiring: FinSemiring) -> DualityWitness:
    """``a -> V(a)`` must be an isomorphism R -> C(Spec R)."""
    sp = spec(semiring)
    cs = closed_set_semiring(sp.space)
    mapping = tuple(cs.index(sp.V(a)) for a in range(semiring.n))
    if not is_bijective(mapping, cs.semiring.n):
        seen = {}
        for a, image in enumerate(mapping):
            if image in seen:
                return DualityWitness(mapping, fail("a -> V(a) injective", seen[image], a))
            seen[image] = a
        return DualityWitness(mapping, fail("a -> V(a) surjective", mapping))
    return DualityWitness(mapping, check_hom(SemiringHom(semiring, cs.semiring, mapping)))


def space_unit(space: FinTop, cs: Optional[ClosedSetSemiring] = None) -> ContinuousMap:
    """``x -> closure{x}`` as a map X -> Spec C(X)."""
    cs = cs or closed_set_semiring(space)
    sp = spec(cs.semiring)
    mapping = []
    for x in range(space.n):
        c = cs.index(space.point_closure(x))
        if c not in sp.primes:
            raise LawViolation("point closures are prime", (space.points[x],))
        mapping.append(sp.point_of(c))
    return ContinuousMap(space, sp.space, tuple(mapping))


def duality_check_space(space: FinTop) -> DualityWitness:
    """``x -> closure{x}`` must be a homeomorphism X -> Spec C(X)."""
    try:
        unit = space_unit(space)
    except LawViolation as e:
        return DualityWitness((), fail(e.law, *e.witness))
    if not is_homeomorphism(unit):
        return DualityWitness(unit.mapping, fail("x -> closure{x} is a homeomorphism", unit.mapping))
    return DualityWitness(unit.mapping, PASS)


def spec_c_triangles(semiring: FinSemiring) -> Verdict:
    """Triangle identities for Spec and C.

    - Spec(ε_R) ∘ η_{Spec R} = id on Spec R, with ε_R(a) = V(a) and η_X(x) = closure{x}
    - C(η_X) ∘ ε_{C(X)} = id on C(X) for X = Spec R
    """
    sp = spec(semiring)
    cs = closed_set_semiring(sp.space)
    epsilon = SemiringHom(semiring, cs.semiring, tuple(cs.index(sp.V(a)) for a in range(semiring.n)))
    eta = space_unit(sp.space, cs)
    # Spec(ε_R): Spec C(Spec R) -> Spec R
    spec_epsilon = spec_map(epsilon)
    round_trip = eta.then(spec_epsilon)
    if round_trip.mapping != tuple(range(sp.space.n)):
        return fail("Spec(ε) ∘ η = id", round_trip.mapping)

    epsilon_c = duality_check(cs.semiring)
    c_eta = closed_set_map(eta)
    composite = compose(epsilon_c.mapping, c_eta.mapping)
    if composite != tuple(range(cs.semiring.n)):
        return fail("C(η) ∘ ε = id", composite)
    return PASS
