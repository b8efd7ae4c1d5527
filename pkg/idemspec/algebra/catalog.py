"""Named small semirings used throughout the checks and the verification suites."""

from typing import Dict, Sequence

from idemspec.algebra.semiring import FinSemiring, semiring_from_tables


def _chain_tables(n: int):
    add = [[max(a, b) for b in range(n)] for a in range(n)]
    mul = [[min(a, b) for b in range(n)] for a in range(n)]
    return add, mul


def chain(n: int, names: Sequence[str] = ()) -> FinSemiring:
    """The ``n``-element chain with ⊕ = max and · = min."""
    add, mul = _chain_tables(n)
    return semiring_from_tables(add, mul, 0, n - 1, names or [str(i) for i in range(n)])


def f1() -> FinSemiring:
    """The two-element initial idealic semiring."""
    return chain(2, ("0", "1"))


def chain3() -> FinSemiring:
    return chain(3, ("0", "m", "1"))


def diamond() -> FinSemiring:
    """The four-element Boolean lattice {0, a, b, 1} with · = meet."""
    # elements are bit masks over two atoms
    add = [[a | b for b in range(4)] for a in range(4)]
    mul = [[a & b for b in range(4)] for a in range(4)]
    return semiring_from_tables(add, mul, 0, 3, ("0", "a", "b", "1"))


def n_eps() -> FinSemiring:
    """The chain 0 < ε < 1 with ⊕ = max and ε² = 0."""
    add = [[max(a, b) for b in range(3)] for a in range(3)]
    mul = [
        [0, 0, 0],
        [0, 0, 1],
        [0, 1, 2],
    ]
    return semiring_from_tables(add, mul, 0, 2, ("0", "ε", "1"))


def zero_semiring() -> FinSemiring:
    return semiring_from_tables([[0]], [[0]], 0, 0, ("0",))


def corpus() -> Dict[str, FinSemiring]:
    return {
        "F1": f1(),
        "C3": chain3(),
        "B4": diamond(),
        "Neps": n_eps(),
    }
