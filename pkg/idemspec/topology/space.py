"""
Finite topological spaces given by their closed sets.

A ``FinTop`` keeps point labels and the family of closed sets as frozensets of point
indices. The closed-set semiring C(X) has ⊕ = ∩, · = ∪, 0 = X and 1 = ∅, so its order is
reverse inclusion; element ``i`` of C(X) is ``closed_sets[i]`` of the accompanying
``ClosedSetSemiring``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from idemspec.algebra.order import FinCIM, ideal_completion
from idemspec.algebra.semiring import FinSemiring, SemiringHom
from idemspec.algebra.structure import PASS, Verdict, fail
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.errors import FormatError, LawViolation

PointSet = FrozenSet[int]


@dataclass(frozen=True)
class FinTop:
    points: Tuple[str, ...]
    closed: FrozenSet[PointSet]

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def everything(self) -> PointSet:
        return frozenset(range(self.n))

    @cached_property
    def closed_sets(self) -> Tuple[PointSet, ...]:
        """Closed sets from largest to smallest; ties broken by sorted members."""
        return tuple(sorted(self.closed, key=lambda c: (-len(c), sorted(c))))

    def index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise FormatError(f"unknown point '{label}'") from None

    def is_closed(self, subset: Iterable[int]) -> bool:
        return frozenset(subset) in self.closed

    def closure(self, subset: Iterable[int]) -> PointSet:
        subset = frozenset(subset)
        best = self.everything
        for c in self.closed:
            if subset <= c and len(c) < len(best):
                best = c
        return best

    def point_closure(self, x: int) -> PointSet:
        return self.closure({x})

    @cached_property
    def opens(self) -> Tuple[PointSet, ...]:
        return tuple(self.everything - c for c in self.closed_sets)

    @cached_property
    def specialization(self) -> np.ndarray:
        """``specialization[x, y]`` iff ``x`` lies in the closure of ``y``."""
        leq = np.zeros((self.n, self.n), dtype=bool)
        for y in range(self.n):
            for x in self.point_closure(y):
                leq[x, y] = True
        leq.flags.writeable = False
        return leq

    @property
    def is_t0(self) -> bool:
        return len({self.point_closure(x) for x in range(self.n)}) == self.n

    def is_irreducible(self, c: PointSet) -> bool:
        if not c or c not in self.closed:
            return False
        proper = [d for d in self.closed if d < c]
        return not any(a | b == c for a in proper for b in proper)

    @cached_property
    def irreducible_closed(self) -> Tuple[PointSet, ...]:
        return tuple(c for c in self.closed_sets if self.is_irreducible(c))

    def generic_points(self, c: PointSet) -> Tuple[int, ...]:
        return tuple(x for x in sorted(c) if self.point_closure(x) == c)

    @property
    def is_sober(self) -> bool:
        return all(len(self.generic_points(c)) == 1 for c in self.irreducible_closed)

    def describe_set(self, subset: Iterable[int]) -> str:
        return "{" + ",".join(self.points[x] for x in sorted(subset)) + "}"


def check_space(points: Sequence[str], closed: Iterable[Iterable[int]]) -> Verdict:
    everything = frozenset(range(len(points)))
    family = {frozenset(c) for c in closed}
    for c in family:
        if not c <= everything:
            return fail("closed sets inside the point set", tuple(sorted(c)))
    if frozenset() not in family:
        return fail("empty set is closed")
    if everything not in family:
        return fail("whole space is closed")
    for a, b in itertools.combinations(family, 2):
        if a | b not in family:
            return fail("closed under union", tuple(sorted(a)), tuple(sorted(b)))
        if a & b not in family:
            return fail("closed under intersection", tuple(sorted(a)), tuple(sorted(b)))
    return PASS


def build_space(points: Sequence[str], closed: Iterable[Iterable[int]]) -> FinTop:
    points = tuple(points)
    if len(set(points)) != len(points):
        raise FormatError("point labels must be unique")
    closed = [frozenset(c) for c in closed]
    check_space(points, closed).raise_for_violation()
    return FinTop(points, frozenset(closed))


def space_from_order(leq: np.ndarray, points: Optional[Sequence[str]] = None) -> FinTop:
    """Alexandrov space whose specialization order is ``leq``: closed sets are the down-sets."""
    n = leq.shape[0]
    points = tuple(points) if points else tuple(f"p{i}" for i in range(n))
    closed = set()
    for mask in range(1 << n):
        members = frozenset(i for i in range(n) if mask >> i & 1)
        if all(x in members for y in members for x in range(n) if leq[x, y]):
            closed.add(members)
    return FinTop(points, frozenset(closed))


def discrete(n: int) -> FinTop:
    points = tuple(f"p{i}" for i in range(n))
    closed = frozenset(
        frozenset(c) for size in range(n + 1) for c in itertools.combinations(range(n), size)
    )
    return FinTop(points, closed)


def indiscrete(n: int) -> FinTop:
    return FinTop(tuple(f"p{i}" for i in range(n)), frozenset({frozenset(), frozenset(range(n))}))


def sierpinski() -> FinTop:
    """Points ``c`` (closed) and ``o`` (open, generic)."""
    return FinTop(("c", "o"), frozenset({frozenset(), frozenset({0}), frozenset({0, 1})}))


def one_point() -> FinTop:
    return discrete(1)


@dataclass(frozen=True)
class ContinuousMap:
    source: FinTop
    target: FinTop
    mapping: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def preimage(self, subset: Iterable[int]) -> PointSet:
        subset = frozenset(subset)
        return frozenset(x for x in range(self.source.n) if self.mapping[x] in subset)

    def image(self, subset: Iterable[int]) -> PointSet:
        return frozenset(self.mapping[x] for x in subset)

    def then(self, other: "ContinuousMap") -> "ContinuousMap":
        return ContinuousMap(self.source, other.target, tuple(other.mapping[y] for y in self.mapping))


def check_continuous(f: ContinuousMap) -> Verdict:
    if len(f.mapping) != f.source.n:
        return fail("totality", len(f.mapping))
    for c in f.target.closed_sets:
        if not f.source.is_closed(f.preimage(c)):
            return fail("preimage of closed is closed", f.target.describe_set(c))
    return PASS


def is_homeomorphism(f: ContinuousMap) -> bool:
    if f.source.n != f.target.n or len(set(f.mapping)) != f.target.n:
        return False
    return all(f.target.is_closed(f.image(c)) for c in f.source.closed) and bool(check_continuous(f))


def continuous_maps(source: FinTop, target: FinTop) -> Tuple[ContinuousMap, ...]:
    out = []
    for mapping in itertools.product(range(target.n), repeat=source.n):
        f = ContinuousMap(source, target, tuple(mapping))
        if check_continuous(f):
            out.append(f)
    return tuple(out)


@dataclass(frozen=True)
class ClosedSetSemiring:
    space: FinTop
    semiring: FinSemiring
    closed_sets: Tuple[PointSet, ...]

    def index(self, c: Iterable[int]) -> int:
        return self.closed_sets.index(frozenset(c))


def closed_set_semiring(space: FinTop) -> ClosedSetSemiring:
    """C(X): ⊕ = ∩, · = ∪, 0 = X, 1 = ∅."""
    ensure_within(Guard.CLOSED_SETS, len(space.closed))
    sets = space.closed_sets
    index: Dict[PointSet, int] = {c: i for i, c in enumerate(sets)}
    add = tuple(tuple(index[a & b] for b in sets) for a in sets)
    mul = tuple(tuple(index[a | b] for b in sets) for a in sets)
    names = tuple(space.describe_set(c) for c in sets)
    zero = index[space.everything]
    one = index[frozenset()]
    semiring = FinSemiring(FinCIM(add, zero, one, names), mul, one)
    return ClosedSetSemiring(space, semiring, sets)


def closed_set_map(f: ContinuousMap) -> SemiringHom:
    """C(f): C(Y) -> C(X), Z -> f⁻¹(Z)."""
    check_continuous(f).raise_for_violation()
    cy = closed_set_semiring(f.target)
    cx = closed_set_semiring(f.source)
    mapping = tuple(cx.index(f.preimage(c)) for c in cy.closed_sets)
    return SemiringHom(cy.semiring, cx.semiring, mapping)


@dataclass(frozen=True)
class Soberification:
    space: FinTop
    irreducibles: Tuple[PointSet, ...]
    unit: ContinuousMap


def soberify(space: FinTop) -> Soberification:
    """Points are the irreducible closed sets; closed sets are ``{c ⊆ Z}`` for closed ``Z``."""
    irreducibles = space.irreducible_closed
    points = tuple(space.describe_set(c) for c in irreducibles)
    closed = frozenset(
        frozenset(i for i, c in enumerate(irreducibles) if c <= z) for z in space.closed
    )
    sob = FinTop(points, closed)
    unit = ContinuousMap(space, sob, tuple(irreducibles.index(space.point_closure(x)) for x in range(space.n)))
    check_continuous(unit).raise_for_violation()
    return Soberification(sob, irreducibles, unit)


@dataclass(frozen=True)
class PrimeFilterSpace:
    space: FinTop
    filters: Tuple[FrozenSet[int], ...]
    closed_semiring: ClosedSetSemiring
    unit: ContinuousMap

    def counit(self) -> Tuple[int, ...]:
        """For sober spaces: a prime filter goes to the generic point of its smallest closed set."""
        base = self.closed_semiring
        out = []
        for f in self.filters:
            smallest = frozenset.intersection(*[base.closed_sets[c] for c in f])
            generic = base.space.generic_points(smallest)
            if len(generic) != 1:
                raise LawViolation("unique generic point", (base.space.describe_set(smallest),))
            out.append(generic[0])
        return tuple(out)


def is_prime_filter(cs: ClosedSetSemiring, members: FrozenSet[int]) -> bool:
    r = cs.semiring
    if r.one in members:
        return False
    outside = [a for a in range(r.n) if a not in members]
    return all(r.times(a, b) not in members for a in outside for b in outside)


def prime_filter_space(space: FinTop) -> PrimeFilterSpace:
    """alg(X): proper prime filters of C(X) with closed sets ``{F : C ∈ F}``."""
    cs = closed_set_semiring(space)
    completion = ideal_completion(cs.semiring.add)
    filters = tuple(f for f in completion.ideals if is_prime_filter(cs, f))
    points = tuple("<" + ",".join(cs.semiring.names[c] for c in sorted(f)) + ">" for f in filters)
    closed = set()
    for c in range(cs.semiring.n):
        closed.add(frozenset(i for i, f in enumerate(filters) if c in f))
    alg = FinTop(points, frozenset(closed))
    unit_map = []
    for x in range(space.n):
        principal = frozenset(i for i, c in enumerate(cs.closed_sets) if x in c)
        unit_map.append(filters.index(principal))
    unit = ContinuousMap(space, alg, tuple(unit_map))
    return PrimeFilterSpace(alg, filters, cs, unit)


def subspace(space: FinTop, subset: Iterable[int]) -> Tuple[FinTop, Tuple[int, ...]]:
    """Subspace topology on ``subset``; returns the space and the inclusion of points."""
    members = tuple(sorted(set(subset)))
    position = {x: i for i, x in enumerate(members)}
    closed = frozenset(frozenset(position[x] for x in c if x in position) for c in space.closed)
    return FinTop(tuple(space.points[x] for x in members), closed), members
