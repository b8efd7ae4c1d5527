"""
Localization of finite idealic semirings.

Localizing at a multiplicative system Σ is the quotient by the congruence generated by the
pairs ``(1, s)``. Every element of a finite semiring is compact, so conditions quantified over
compact elements are evaluated over all elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, NamedTuple, Tuple

from idemspec import logging
from idemspec.algebra.congruence import QuotientHom, congruence_closure, factor_through, quotient
from idemspec.algebra.primes import is_prime, maximal_non_units
from idemspec.algebra.semiring import FinSemiring
from idemspec.errors import LawViolation, PreconditionError
from idemspec.topology.spectrum import vanishing_set


@dataclass(frozen=True)
class MultSystem:
    base: FinSemiring
    members: FrozenSet[int]

    def __contains__(self, s: int) -> bool:
        return s in self.members

    def __iter__(self):
        return iter(sorted(self.members))


def check_mult_system(semiring: FinSemiring, members: Iterable[int]) -> MultSystem:
    members = frozenset(members)
    if semiring.one not in members:
        raise LawViolation("contains one", (semiring.one,))
    for a in members:
        for b in members:
            if semiring.times(a, b) not in members:
                raise LawViolation("closed under multiplication", (a, b))
    return MultSystem(semiring, members)


def generated_mult_system(semiring: FinSemiring, generators: Iterable[int]) -> MultSystem:
    """The submonoid of (R, ·) generated by ``generators``."""
    members = {semiring.one}
    frontier = list(generators)
    while frontier:
        a = frontier.pop()
        if a in members:
            continue
        members.add(a)
        frontier.extend(semiring.times(a, b) for b in list(members))
    return MultSystem(semiring, frozenset(members))


def element_mult_system(semiring: FinSemiring, f: int) -> MultSystem:
    """``{fⁿ}``, the full finite orbit of powers."""
    return MultSystem(semiring, frozenset(semiring.powers(f)))


def prime_mult_system(semiring: FinSemiring, p: int) -> MultSystem:
    if not is_prime(semiring, p):
        raise PreconditionError(f"{semiring.label(p)} is not prime")
    return MultSystem(semiring, frozenset(a for a in range(semiring.n) if not semiring.leq(a, p)))


@dataclass(frozen=True)
class Localization:
    sigma: MultSystem
    result: QuotientHom

    @property
    def semiring(self) -> FinSemiring:
        return self.result.quotient

    @property
    def projection(self) -> Tuple[int, ...]:
        return self.result.projection

    def __call__(self, a: int) -> int:
        return self.result.projection[a]


def localize(semiring: FinSemiring, sigma: MultSystem) -> Localization:
    cong = congruence_closure(semiring, [(semiring.one, s) for s in sigma])
    result = quotient(semiring, cong)
    logging.debug(f"localized {semiring.n} elements at {len(sigma.members)} units: {result.quotient.n} classes")
    return Localization(sigma, result)


def localize_at_element(semiring: FinSemiring, f: int) -> Localization:
    return localize(semiring, element_mult_system(semiring, f))


def localize_at_prime(semiring: FinSemiring, p: int) -> Localization:
    return localize(semiring, prime_mult_system(semiring, p))


def induced_map(source: Localization, target: Localization) -> Tuple[int, ...]:
    """``class(x) -> class(x)`` between two localizations of one semiring, when well defined."""
    return factor_through(source.result, target.semiring, target.projection)


def loc_relation_oracle(semiring: FinSemiring, sigma: MultSystem, f: int, g: int) -> bool:
    """Every ``x <= f`` has ``s ∈ Σ`` with ``s·x <= g``, and symmetrically."""

    def dominated(a: int, b: int) -> bool:
        return all(
            any(semiring.leq(semiring.times(s, x), b) for s in sigma)
            for x in range(semiring.n)
            if semiring.leq(x, a)
        )

    return dominated(f, g) and dominated(g, f)


def sigma_saturation(semiring: FinSemiring, sigma: MultSystem, a: int) -> int:
    return semiring.sum(
        x for x in range(semiring.n) if any(semiring.leq(semiring.times(s, x), a) for s in sigma)
    )


def radical(semiring: FinSemiring, a: int) -> int:
    return semiring.sum(x for x in range(semiring.n) if power_below(semiring, x, a))


def power_below(semiring: FinSemiring, x: int, a: int) -> bool:
    """Some ``xⁿ`` with ``n >= 1`` lies below ``a``; powers cycle, so the orbit is finite."""
    seen = set()
    y = x
    while y not in seen:
        if semiring.leq(y, a):
            return True
        seen.add(y)
        y = semiring.times(y, x)
    return False


class VEquivReport(NamedTuple):
    power_domination: bool
    radical_order: bool
    vanishing_containment: bool
    congruence_order: bool

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1


def v_equiv_check(semiring: FinSemiring, a: int, b: int) -> VEquivReport:
    power_domination = all(power_below(semiring, x, b) for x in range(semiring.n) if semiring.leq(x, a))
    radical_order = semiring.leq(radical(semiring, a), radical(semiring, b))
    vanishing_containment = vanishing_set(semiring, a) >= vanishing_set(semiring, b)
    generated_a = congruence_closure(semiring, [(semiring.one, a)])
    generated_b = congruence_closure(semiring, [(semiring.one, b)])
    congruence_order = generated_b.refines(generated_a)
    return VEquivReport(power_domination, radical_order, vanishing_containment, congruence_order)


def is_local_at_prime(semiring: FinSemiring, p: int) -> bool:
    """``R_p`` has ``π(p)`` as its unique maximal non-unit."""
    loc = localize_at_prime(semiring, p)
    return maximal_non_units(loc.semiring) == (loc(p),)


def mult_systems(semiring: FinSemiring) -> Tuple[MultSystem, ...]:
    """All multiplicative systems, as submonoids generated by subsets (deduplicated)."""
    found = {}
    frontier = [frozenset({semiring.one})]
    while frontier:
        members = frontier.pop()
        if members in found:
            continue
        found[members] = MultSystem(semiring, members)
        for a in range(semiring.n):
            if a not in members:
                frontier.append(generated_mult_system(semiring, set(members) | {a}).members)
    return tuple(found[m] for m in sorted(found, key=lambda m: (len(m), sorted(m))))

