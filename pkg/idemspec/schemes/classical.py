"""
The classical prime spectrum of a finite commutative ring, computed without ideal semirings,
for comparison with Spec over the ring type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from idemspec import logging
from idemspec.algebra.structure import PASS, Verdict, fail, find_isomorphism
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.schemes.algebras import FinRing
from idemspec.schemes.scheme import spec_scheme, stalk
from idemspec.schemes.types import ring_ideal_name, type_ring
from idemspec.topology.space import ContinuousMap, FinTop, is_homeomorphism
from idemspec.utils import subsets

Ideal = FrozenSet[int]


def is_ring_ideal(ring: FinRing, members: Ideal) -> bool:
    if ring.zero not in members:
        return False
    return all(ring.plus(a, b) in members for a in members for b in members) and all(
        ring.times(r, a) in members for r in range(ring.n) for a in members
    )


def ring_ideals_bruteforce(ring: FinRing) -> Tuple[Ideal, ...]:
    """Every subset closed under addition and scalar multiplication; smallest first."""
    ensure_within(Guard.CARRIER, ring.n)
    found = [frozenset(s) for s in subsets(range(ring.n)) if is_ring_ideal(ring, frozenset(s))]
    return tuple(sorted(found, key=lambda i: (len(i), sorted(i))))


def is_prime_ideal(ring: FinRing, ideal: Ideal) -> bool:
    if ring.one in ideal:
        return False
    return all(
        a in ideal or b in ideal for a in range(ring.n) for b in range(ring.n) if ring.times(a, b) in ideal
    )


def prime_ideals(ring: FinRing) -> Tuple[Ideal, ...]:
    return tuple(i for i in ring_ideals_bruteforce(ring) if is_prime_ideal(ring, i))


@dataclass(frozen=True)
class ClassicalSpectrum:
    ring: FinRing
    primes: Tuple[Ideal, ...]
    space: FinTop


def classical_spectrum(ring: FinRing) -> ClassicalSpectrum:
    """Prime ideals with the Zariski closed sets ``V(I) = {P : I ⊆ P}``."""
    primes = prime_ideals(ring)
    closed = frozenset(
        frozenset(k for k, p in enumerate(primes) if ideal <= p) for ideal in ring_ideals_bruteforce(ring)
    )
    space = FinTop(tuple(ring_ideal_name(ring, p) for p in primes), closed)
    return ClassicalSpectrum(ring, primes, space)


def classical_localization(ring: FinRing, prime: Ideal) -> FinRing:
    """Fractions ``a/s`` with ``s ∉ P``; ``a/s = b/t`` iff ``u(at - bs) = 0`` for some ``u ∉ P``."""
    outside = [s for s in range(ring.n) if s not in prime]
    fractions = [(a, s) for a in range(ring.n) for s in outside]

    def equal(x: Tuple[int, int], y: Tuple[int, int]) -> bool:
        difference = ring.minus(ring.times(x[0], y[1]), ring.times(y[0], x[1]))
        return any(ring.times(u, difference) == ring.zero for u in outside)

    classes: Dict[Tuple[int, int], int] = {}
    reps = []
    for x in fractions:
        for k, rep in enumerate(reps):
            if equal(x, rep):
                classes[x] = k
                break
        else:
            classes[x] = len(reps)
            reps.append(x)

    def add(x, y):
        return classes[(ring.plus(ring.times(x[0], y[1]), ring.times(y[0], x[1])), ring.times(x[1], y[1]))]

    def mul(x, y):
        return classes[(ring.times(x[0], y[0]), ring.times(x[1], y[1]))]

    add_table = tuple(tuple(add(x, y) for y in reps) for x in reps)
    mul_table = tuple(tuple(mul(x, y) for y in reps) for x in reps)
    names = tuple(ring.names[a] if s == ring.one else f"{ring.names[a]}/{ring.names[s]}" for a, s in reps)
    return FinRing(
        add_table, mul_table, classes[(ring.zero, ring.one)], classes[(ring.one, ring.one)], names
    )


def classical_comparison(ring: FinRing) -> Verdict:
    """Spec over the ring type and the classical spectrum agree on points and on stalks."""
    scheme = spec_scheme(type_ring(), ring)
    classical = classical_spectrum(ring)
    if scheme.space.n != classical.space.n:
        return fail("same number of points", scheme.space.n, classical.space.n)
    local_rings = [classical_localization(ring, p) for p in classical.primes]
    stalks = [stalk(scheme, x) for x in range(scheme.space.n)]
    for mapping in itertools.permutations(range(classical.space.n)):
        f = ContinuousMap(scheme.space, classical.space, tuple(mapping))
        if not is_homeomorphism(f):
            continue
        if all(find_isomorphism(stalks[x], local_rings[mapping[x]]) is not None for x in range(scheme.space.n)):
            logging.debug(f"spectra agree through {mapping}")
            return PASS
    return fail("homeomorphism matching stalks", scheme.space.points, classical.space.points)
