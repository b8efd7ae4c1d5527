"""Prime and maximal elements of finite idealic semirings."""

from typing import Tuple

from idemspec.algebra.semiring import FinSemiring


def is_prime(semiring: FinSemiring, p: int) -> bool:
    """``{a : a ≰ p}`` contains 1 and is closed under multiplication."""
    if semiring.leq(semiring.one, p):
        return False
    outside = [a for a in range(semiring.n) if not semiring.leq(a, p)]
    return all(not semiring.leq(semiring.times(a, b), p) for a in outside for b in outside)


def primes(semiring: FinSemiring) -> Tuple[int, ...]:
    return tuple(p for p in range(semiring.n) if is_prime(semiring, p))


def maximal_non_units(semiring: FinSemiring) -> Tuple[int, ...]:
    """Maximal elements of ``R ∖ {1}``."""
    rest = [a for a in range(semiring.n) if a != semiring.one]
    return tuple(a for a in rest if not any(b != a and semiring.leq(a, b) for b in rest))


def is_local(semiring: FinSemiring) -> bool:
    return len(maximal_non_units(semiring)) == 1
