"""
Congruences on finite algebras: closure from generating pairs, quotients and saturation.

Closure, quotient and kernel work for any table algebra (semirings, monoids, rings); the
order-theoretic parts (inverse images, saturation, the congruence semiring, semiorders) need
a ``FinSemiring``. On a finite carrier the infinite-sum condition of a congruence reduces to
binary sums, so compatibility is checked operation by operation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from idemspec import logging
from idemspec.algebra.order import FinCIM, is_directed
from idemspec.algebra.semiring import FinSemiring, SemiringHom
from idemspec.algebra.structure import (
    PASS,
    Verdict,
    classes_from_labels,
    fail,
    find_homs,
    is_hom,
    quotient_tables,
)
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.errors import FormatError, LawViolation
from idemspec.utils import bits


class UnionFind:
    """Array-backed union-find with path compression and union by rank."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return True

    def labels(self) -> Tuple[int, ...]:
        return classes_from_labels([self.find(x) for x in range(len(self.parent))])


@dataclass(frozen=True)
class CongruencePartition:
    """A congruence given by class labels; class ids are dense and ordered by minimum element."""

    base: Any
    class_of: Tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @cached_property
    def classes(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(x for x, c in enumerate(self.class_of) if c == k) for k in range(self.n_classes))

    def rep(self, k: int) -> int:
        return min(self.classes[k])

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        n = len(self.class_of)
        return tuple((a, b) for a in range(n) for b in range(n) if self.class_of[a] == self.class_of[b])

    def refines(self, other: "CongruencePartition") -> bool:
        """``self ⊆ other`` as relations."""
        return all(other.related(a, b) for a, b in self.pairs())

    @property
    def is_diagonal(self) -> bool:
        return self.n_classes == len(self.class_of)

    @property
    def is_total(self) -> bool:
        return self.n_classes <= 1

    def describe(self, names: Optional[Sequence[str]] = None) -> List[List[str]]:
        names = names or self.base.names
        return [[names[x] for x in sorted(c)] for c in self.classes]


def _check_pairs(algebra, pairs: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    checked = []
    for a, b in pairs:
        if not (0 <= a < algebra.n and 0 <= b < algebra.n):
            raise FormatError(f"pair ({a}, {b}) outside carrier of size {algebra.n}")
        checked.append((a, b))
    return checked


def congruence_closure(algebra, pairs: Iterable[Tuple[int, int]] = ()) -> CongruencePartition:
    """The least congruence containing ``pairs``, by worklist fixpoint over a union-find."""
    pairs = _check_pairs(algebra, pairs)
    uf = UnionFind(algebra.n)
    for a, b in pairs:
        uf.union(a, b)
    tables = list(algebra.operations().values())
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        # x ~ find(x) generates the current equivalence, so compatibility on these pairs suffices
        for x in range(algebra.n):
            root = uf.find(x)
            if root == x:
                continue
            for table in tables:
                for c in range(algebra.n):
                    if uf.union(table[x][c], table[root][c]):
                        changed = True
                    if uf.union(table[c][x], table[c][root]):
                        changed = True
    logging.debug(f"congruence closure of {len(pairs)} pairs stabilised after {rounds} rounds")
    return CongruencePartition(algebra, uf.labels())


def diagonal(algebra) -> CongruencePartition:
    return CongruencePartition(algebra, tuple(range(algebra.n)))


def total(algebra) -> CongruencePartition:
    return CongruencePartition(algebra, tuple(0 for _ in range(algebra.n)))


def check_congruence(algebra, class_of: Sequence[int]) -> Verdict:
    if len(class_of) != algebra.n:
        return fail("partition covers carrier", len(class_of), algebra.n)
    for name, table in algebra.operations().items():
        for a in range(algebra.n):
            for a2 in range(algebra.n):
                if class_of[a] != class_of[a2]:
                    continue
                for b in range(algebra.n):
                    if class_of[table[a][b]] != class_of[table[a2][b]]:
                        return fail(f"compatible with {name}", a, a2, b)
    return PASS


@dataclass(frozen=True)
class QuotientHom:
    cong: CongruencePartition
    quotient: Any
    projection: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.projection[a]

    @property
    def pi(self) -> SemiringHom:
        return SemiringHom(self.cong.base, self.quotient, self.projection)

    def lift(self, b: int) -> int:
        """Canonical representative of class ``b``."""
        return self.cong.rep(b)


def quotient(algebra, cong: CongruencePartition) -> QuotientHom:
    result, projection = quotient_tables(algebra, cong.class_of)
    is_hom(algebra, result, projection).raise_for_violation()
    return QuotientHom(cong, result, projection)


def quotient_by_pairs(algebra, pairs: Iterable[Tuple[int, int]]) -> QuotientHom:
    return quotient(algebra, congruence_closure(algebra, pairs))


def inverse_image(q: QuotientHom, b: int) -> int:
    """``sup{x : π(x) <= b}`` in the base semiring."""
    base: FinSemiring = q.cong.base
    return base.sum(x for x in range(base.n) if q.quotient.leq(q.projection[x], b))


def saturation(q: QuotientHom, a: int) -> int:
    return inverse_image(q, q.projection[a])


def check_saturation_laws(q: QuotientHom) -> Verdict:
    """Saturation is a closure compatible with ⊕ and ·."""
    base: FinSemiring = q.cong.base
    sat = [saturation(q, a) for a in range(base.n)]
    for a in range(base.n):
        if not base.leq(a, sat[a]):
            return fail("a <= sat(a)", a)
        if sat[sat[a]] != sat[a]:
            return fail("sat idempotent", a)
        for b in range(base.n):
            if sat[base.plus(sat[a], sat[b])] != sat[base.plus(a, b)]:
                return fail("sat(sat(a) ⊕ sat(b)) = sat(a ⊕ b)", a, b)
            if sat[base.times(sat[a], sat[b])] != sat[base.times(a, b)]:
                return fail("sat(sat(a) · sat(b)) = sat(a · b)", a, b)
    return PASS


def kernel(source, target, mapping: Sequence[int]) -> CongruencePartition:
    """The congruence ``{(a, b) : f(a) = f(b)}`` of a homomorphism."""
    is_hom(source, target, mapping).raise_for_violation()
    return CongruencePartition(source, classes_from_labels(mapping))


def factor_through(q: QuotientHom, target, mapping: Sequence[int]) -> Tuple[int, ...]:
    """The unique map ``g`` with ``g ∘ π = f``; raises when ``f`` does not respect the congruence."""
    induced: List[Optional[int]] = [None] * q.quotient.n
    for x, image in enumerate(mapping):
        k = q.projection[x]
        if induced[k] is None:
            induced[k] = image
        elif induced[k] != image:
            raise LawViolation("map respects congruence", (q.cong.rep(k), x))
    result = tuple(induced)  # type: ignore[arg-type]
    is_hom(q.quotient, target, result).raise_for_violation()
    return result


def homs_factoring(q: QuotientHom, target) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """Every hom ``R -> target`` killing the congruence, paired with its factorisation."""
    out = []
    for f in find_homs(q.cong.base, target):
        if all(f[a] == f[b] for a, b in q.cong.pairs()):
            out.append((f, factor_through(q, target, f)))
    return tuple(out)


def idempotent_quotient(semiring: FinSemiring) -> QuotientHom:
    """Quotient by ``(x², x)``: the universal map to a semiring with idempotent multiplication."""
    return quotient_by_pairs(semiring, [(semiring.times(x, x), x) for x in range(semiring.n)])


def all_congruences(algebra) -> Tuple[CongruencePartition, ...]:
    """Every congruence, as joins of principal congruences ``⟨(a, b)⟩``."""
    principal = {}
    for a, b in itertools.combinations(range(algebra.n), 2):
        cong = congruence_closure(algebra, [(a, b)])
        principal[cong.class_of] = cong
    found = {diagonal(algebra).class_of}
    frontier = [diagonal(algebra)]
    while frontier:
        current = frontier.pop()
        for gen in principal.values():
            joined = congruence_closure(algebra, current.pairs() + gen.pairs())
            if joined.class_of not in found:
                found.add(joined.class_of)
                frontier.append(joined)
    ordered = sorted(found, key=lambda labels: (-(max(labels) + 1 if labels else 0), labels))
    return tuple(CongruencePartition(algebra, labels) for labels in ordered)


@dataclass(frozen=True)
class CongruenceSemiring:
    semiring: FinSemiring
    congruences: Tuple[CongruencePartition, ...]
    embedding: Tuple[int, ...]
    embedding_is_hom: Verdict


def congruence_semiring(base: FinSemiring) -> CongruenceSemiring:
    """All congruences of ``base`` with ⊕ = generated union and the pair-set product."""
    ensure_within(Guard.CONGRUENCE_CARRIER, base.n)
    congruences = all_congruences(base)
    index = {c.class_of: i for i, c in enumerate(congruences)}
    k = len(congruences)
    logging.info(f"congruence semiring of a {base.n}-element semiring has {k} elements")

    def generated(pairs) -> int:
        return index[congruence_closure(base, pairs).class_of]

    add = tuple(
        tuple(generated(congruences[i].pairs() + congruences[j].pairs()) for j in range(k)) for i in range(k)
    )
    mul_rows = []
    for i in range(k):
        row = []
        for j in range(k):
            pairs = set()
            for a, a2 in congruences[i].pairs():
                for b, b2 in congruences[j].pairs():
                    left = base.plus(base.times(a, b), base.times(a2, b2))
                    right = base.plus(base.times(a, b2), base.times(a2, b))
                    pairs.add((left, right))
            row.append(generated(sorted(pairs)))
        mul_rows.append(tuple(row))
    zero = index[diagonal(base).class_of]
    one = index[total(base).class_of]
    names = tuple("|".join("".join(base.names[x] for x in sorted(c)) for c in cong.classes) for cong in congruences)
    top = index[total(base).class_of]
    semiring = FinSemiring(FinCIM(add, zero, top, names), tuple(mul_rows), one)
    embedding = tuple(generated([(a, base.zero)]) for a in range(base.n))
    return CongruenceSemiring(semiring, congruences, embedding, is_hom(base, semiring, embedding))


def check_semiorder(semiring: FinSemiring, rel: Sequence[Sequence[bool]]) -> Verdict:
    n = semiring.n
    if len(rel) != n or any(len(row) != n for row in rel):
        return fail("relation is square", n)
    for a in range(n):
        if not rel[a][a]:
            return fail("reflexive", a)
        for b in range(n):
            if semiring.leq(a, b) and not rel[a][b]:
                return fail("a <= b implies a ≺ b", a, b)
            if not rel[a][b]:
                continue
            for c in range(n):
                if rel[b][c] and not rel[a][c]:
                    return fail("transitive", a, b, c)
    for a, b in itertools.product(range(n), repeat=2):
        if not rel[a][b]:
            continue
        for c, d in itertools.product(range(n), repeat=2):
            if not rel[c][d]:
                continue
            if not rel[semiring.plus(a, c)][semiring.plus(b, d)]:
                return fail("sum compatible", a, b, c, d)
            if not rel[semiring.times(a, c)][semiring.times(b, d)]:
                return fail("product compatible", a, b, c, d)
    return PASS


def congruence_from_semiorder(semiring: FinSemiring, rel: Sequence[Sequence[bool]]) -> CongruencePartition:
    """The symmetric part of a semiorder; the quotient order then reflects ``rel`` exactly."""
    check_semiorder(semiring, rel).raise_for_violation()
    uf = UnionFind(semiring.n)
    for a in range(semiring.n):
        for b in range(semiring.n):
            if rel[a][b] and rel[b][a]:
                uf.union(a, b)
    cong = CongruencePartition(semiring, uf.labels())
    check_congruence(semiring, cong.class_of).raise_for_violation()
    q = quotient(semiring, cong)
    for a in range(semiring.n):
        for b in range(semiring.n):
            if q.quotient.leq(q(a), q(b)) != bool(rel[a][b]):
                raise LawViolation("quotient order reflects semiorder", (a, b))
    return cong


def semiideal_algebraic_check(semiring: FinSemiring, cong: CongruencePartition) -> bool:
    """Algebraicity of a congruence: ``a ⊕ sup D ~ sup D`` for a directed ``D`` is already
    witnessed by one member ``d`` of ``D`` with ``a ⊕ d ~ d``.

    A finite directed family contains its own sum, so this holds for every congruence of a
    finite semiring.
    """
    ensure_within(Guard.CARRIER, semiring.n)
    for mask in range(1, 1 << semiring.n):
        directed = list(bits(mask))
        if not is_directed(semiring.add, directed):
            continue
        top = semiring.sum(directed)
        for a in range(semiring.n):
            if not cong.related(semiring.plus(a, top), top):
                continue
            if not any(cong.related(semiring.plus(a, d), d) for d in directed):
                return False
    return True
