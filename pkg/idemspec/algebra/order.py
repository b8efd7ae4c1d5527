"""
Finite complete idempotent monoids and their order.

A finite complete idempotent monoid (CIM) is a join table ``join`` on ``range(n)`` that is
idempotent, commutative and associative, with ``bottom`` as unit and ``top`` as absorbing
element. Its order is ``a <= b`` iff ``join[a][b] == b``; every subset has a supremum and an
infimum, so a finite CIM is a finite lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import ClassVar, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from idemspec import logging
from idemspec.algebra.structure import (
    PASS,
    Table,
    Verdict,
    check_absorbing,
    check_associative,
    check_commutative,
    check_idempotent,
    check_range,
    check_unit,
    default_names,
    fail,
    first_failure,
    freeze_table,
)
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.errors import FormatError
from idemspec.utils import bits, to_mask


@dataclass(frozen=True)
class FinCIM:
    OPERATION_NAMES: ClassVar[Tuple[str, ...]] = ("join",)
    CONSTANT_NAMES: ClassVar[Tuple[str, ...]] = ("bottom", "top")

    join: Table
    bottom: int
    top: int
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(len(self.join)))

    @property
    def n(self) -> int:
        return len(self.join)

    def operations(self) -> Dict[str, Table]:
        return {"join": self.join}

    def constants(self) -> Dict[str, int]:
        return {"bottom": self.bottom, "top": self.top}

    @classmethod
    def from_operations(cls, operations, constants, names) -> "FinCIM":
        return cls(operations["join"], constants["bottom"], constants["top"], tuple(names))

    def label(self, a: int) -> str:
        return self.names[a]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise FormatError(f"unknown element '{name}'") from None

    def leq(self, a: int, b: int) -> bool:
        return self.join[a][b] == b

    @cached_property
    def order(self) -> np.ndarray:
        """Read-only boolean matrix with ``order[a, b]`` iff ``a <= b``."""
        leq = np.array([[self.join[a][b] == b for b in range(self.n)] for a in range(self.n)], dtype=bool)
        leq.flags.writeable = False
        return leq

    def sup(self, subset: Iterable[int]) -> int:
        return reduce(lambda a, b: self.join[a][b], subset, self.bottom)

    def inf(self, subset: Iterable[int]) -> int:
        subset = list(subset)
        lower = [x for x in range(self.n) if all(self.join[x][s] == s for s in subset)]
        return self.sup(lower)

    @cached_property
    def meet(self) -> Table:
        return tuple(tuple(self.inf((a, b)) for b in range(self.n)) for a in range(self.n))

    def down_set(self, a: int) -> FrozenSet[int]:
        return frozenset(x for x in range(self.n) if self.join[x][a] == a)

    def up_set(self, a: int) -> FrozenSet[int]:
        return frozenset(x for x in range(self.n) if self.join[a][x] == x)

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Hasse diagram edges ``(a, b)`` with ``b`` covering ``a``."""
        lt = self.order.copy()
        np.fill_diagonal(lt, False)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        child = lt & ~between
        return tuple((int(a), int(b)) for a, b in zip(*np.nonzero(child)))


def check_cim(join: Table, bottom: int, top: int) -> Verdict:
    """Check the CIM laws on a square join table; the first failing law wins."""
    n = len(join)
    if not (0 <= bottom < n and 0 <= top < n):
        return fail("constants in carrier", bottom, top)
    verdict = first_failure(
        lambda: check_idempotent(join),
        lambda: check_commutative(join),
        lambda: check_associative(join),
        lambda: check_unit(join, bottom, law="bottom is unit"),
        lambda: check_absorbing(join, top, law="top is absorbing"),
    )
    if not verdict:
        return verdict
    # with a unit every pair of a finite semilattice has an infimum; checked anyway
    for a in range(n):
        for b in range(a + 1, n):
            lower = [x for x in range(n) if join[x][a] == a and join[x][b] == b]
            candidate = reduce(lambda x, y: join[x][y], lower, bottom)
            if join[candidate][a] != a or join[candidate][b] != b:
                return fail("infimum exists", a, b)
    return PASS


def build_cim(join, bottom: int, top: int, names: Optional[Sequence[str]] = None) -> FinCIM:
    """Validate raw tables and build a ``FinCIM``; raises ``LawViolation`` on the first failing law."""
    rows = list(join)
    table = freeze_table(rows, len(rows), name="join")
    check_range(table, len(table), name="join")
    if names is not None and len(names) != len(table):
        raise FormatError(f"{len(names)} names for {len(table)} elements")
    check_cim(table, bottom, top).raise_for_violation()
    return FinCIM(table, bottom, top, tuple(names) if names else ())


def cim_from_order(leq: np.ndarray, names: Optional[Sequence[str]] = None) -> FinCIM:
    """Build the CIM of a finite lattice given as a boolean order matrix."""
    n = leq.shape[0]
    join = []
    for a in range(n):
        row = []
        for b in range(n):
            uppers = [c for c in range(n) if leq[a, c] and leq[b, c]]
            least = [c for c in uppers if all(leq[c, d] for d in uppers)]
            if len(least) != 1:
                raise FormatError("order is not a lattice", row=a)
            row.append(least[0])
        join.append(row)
    bottoms = [a for a in range(n) if leq[a].all()]
    tops = [a for a in range(n) if leq[:, a].all()]
    if not bottoms or not tops:
        raise FormatError("order has no bottom or no top")
    return build_cim(join, bottoms[0], tops[0], names)


def order_of(cim: FinCIM) -> np.ndarray:
    return cim.order


def sup(cim: FinCIM, subset: Iterable[int]) -> int:
    return cim.sup(subset)


def inf(cim: FinCIM, subset: Iterable[int]) -> int:
    return cim.inf(subset)


def check_lattice(cim: FinCIM) -> Verdict:
    """Absorption laws between sup and inf."""
    for a in range(cim.n):
        for b in range(cim.n):
            if cim.join[a][cim.meet[a][b]] != a:
                return fail("absorption a ⊕ (a ∧ b) = a", a, b)
            if cim.meet[a][cim.join[a][b]] != a:
                return fail("absorption a ∧ (a ⊕ b) = a", a, b)
    return PASS


def join_irreducibles(cim: FinCIM) -> Tuple[int, ...]:
    irreducible = []
    for a in range(cim.n):
        if a == cim.bottom:
            continue
        below = [x for x in range(cim.n) if x != a and cim.leq(x, a)]
        if cim.sup(below) != a:
            irreducible.append(a)
    return tuple(irreducible)


def is_directed(cim: FinCIM, subset: Iterable[int]) -> bool:
    members = set(subset)
    return bool(members) and all(
        any(cim.leq(x, z) and cim.leq(y, z) for z in members) for x in members for y in members
    )


def is_compact(cim: FinCIM, a: int) -> bool:
    """``a <= sup D`` for a directed ``D`` only when ``a`` is below some member of ``D``.

    A finite directed set holds its own supremum, so on a lawful carrier every element is
    compact. A ``False`` means the join table does not compute suprema.
    """
    ensure_within(Guard.CARRIER, cim.n)
    for mask in range(1, 1 << cim.n):
        directed = list(bits(mask))
        if not is_directed(cim, directed) or not cim.leq(a, cim.sup(directed)):
            continue
        if not any(cim.leq(a, d) for d in directed):
            return False
    return True


@dataclass(frozen=True)
class IdealCompletion:
    """Ideals of a CIM ordered by inclusion, with the principal ideal embedding."""

    base: FinCIM
    ideals: Tuple[FrozenSet[int], ...]
    lattice: FinCIM
    principal: Tuple[int, ...]

    @property
    def compact(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.principal)))

    def is_isomorphism(self) -> bool:
        """The principal embedding ``a -> ↓a`` is an order isomorphism onto all ideals."""
        if len(set(self.principal)) != len(self.ideals):
            return False
        return all(
            self.base.leq(a, b) == self.lattice.leq(self.principal[a], self.principal[b])
            for a in range(self.base.n)
            for b in range(self.base.n)
        )


def down_sets(cim: FinCIM) -> Tuple[int, ...]:
    """All down-closed subsets as bit masks, grown as unions of principal down-sets."""
    principal = [to_mask(cim.down_set(a)) for a in range(cim.n)]
    found = {0}
    frontier = [0]
    while frontier:
        current = frontier.pop()
        for mask in principal:
            bigger = current | mask
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))


def ideal_completion(cim: FinCIM) -> IdealCompletion:
    """Enumerate the ideals (nonempty ⊕-closed down-sets) of ``cim``."""
    ensure_within(Guard.CARRIER, cim.n)
    ideals = []
    for mask in down_sets(cim):
        members = frozenset(bits(mask))
        if not members:
            continue
        if all(cim.join[a][b] in members for a in members for b in members):
            ideals.append(members)
    logging.debug(f"ideal completion of a {cim.n}-element CIM: {len(ideals)} ideals")

    index = {ideal: i for i, ideal in enumerate(ideals)}
    join = tuple(
        tuple(index[_generated_ideal(cim, ideals[i] | ideals[j])] for j in range(len(ideals)))
        for i in range(len(ideals))
    )
    bottom = index[frozenset({cim.bottom})]
    top = index[frozenset(range(cim.n))]
    names = tuple("{" + ",".join(cim.names[x] for x in sorted(ideal)) + "}" for ideal in ideals)
    lattice = FinCIM(join, bottom, top, names)
    principal = tuple(index[cim.down_set(a)] for a in range(cim.n))
    return IdealCompletion(cim, tuple(ideals), lattice, principal)


def _generated_ideal(cim: FinCIM, members: FrozenSet[int]) -> FrozenSet[int]:
    return cim.down_set(cim.sup(members))
