"""
Finite semirings with idempotent addition.

A ``FinSemiring`` pairs a finite CIM (the addition ⊕ and its order) with a commutative,
associative multiplication that has a unit, is absorbed by 0 and distributes over ⊕.
It is *idealic* when the multiplicative unit is the top of the additive order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import ClassVar, Dict, Iterable, Optional, Sequence, Tuple

from idemspec.algebra.order import FinCIM, build_cim
from idemspec.algebra.structure import (
    PASS,
    Table,
    Verdict,
    check_absorbing,
    check_associative,
    check_commutative,
    check_distributive,
    check_idempotent,
    check_range,
    check_unit,
    compose,
    fail,
    first_failure,
    freeze_table,
    is_hom,
    product,
    subalgebra,
)
from idemspec.errors import FormatError, LawViolation, PreconditionError


@dataclass(frozen=True)
class FinSemiring:
    OPERATION_NAMES: ClassVar[Tuple[str, ...]] = ("add", "mul")
    CONSTANT_NAMES: ClassVar[Tuple[str, ...]] = ("zero", "one")

    add: FinCIM
    mul: Table
    one: int

    @property
    def n(self) -> int:
        return self.add.n

    @property
    def zero(self) -> int:
        return self.add.bottom

    @property
    def top(self) -> int:
        return self.add.top

    @property
    def names(self) -> Tuple[str, ...]:
        return self.add.names

    def operations(self) -> Dict[str, Table]:
        return {"add": self.add.join, "mul": self.mul}

    def constants(self) -> Dict[str, int]:
        return {"zero": self.zero, "one": self.one}

    @classmethod
    def from_operations(cls, operations, constants, names) -> "FinSemiring":
        join = operations["add"]
        top = reduce(lambda a, b: join[a][b], range(len(join)), constants["zero"])
        return cls(FinCIM(join, constants["zero"], top, tuple(names)), operations["mul"], constants["one"])

    def label(self, a: int) -> str:
        return self.names[a]

    def index(self, name: str) -> int:
        return self.add.index(name)

    def plus(self, a: int, b: int) -> int:
        return self.add.join[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.add.leq(a, b)

    def sum(self, elements: Iterable[int]) -> int:
        return self.add.sup(elements)

    def product(self, elements: Iterable[int]) -> int:
        return reduce(lambda a, b: self.mul[a][b], elements, self.one)

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = self.mul[result][a]
        return result

    def powers(self, a: int) -> Tuple[int, ...]:
        """The orbit ``1, a, a², ...`` until it repeats."""
        seen = []
        x = self.one
        while x not in seen:
            seen.append(x)
            x = self.mul[x][a]
        return tuple(seen)

    @cached_property
    def is_idealic(self) -> bool:
        return self.one == self.top

    @cached_property
    def is_idempotent_mult(self) -> bool:
        return all(self.mul[a][a] == a for a in range(self.n))


def check_semiring(add: FinCIM, mul: Table, one: int) -> Verdict:
    n = add.n
    if len(mul) != n:
        return fail("multiplication table size", len(mul), n)
    if not 0 <= one < n:
        return fail("one in carrier", one)
    return first_failure(
        lambda: check_commutative(mul, law="multiplicative commutativity"),
        lambda: check_associative(mul, law="multiplicative associativity"),
        lambda: check_unit(mul, one, law="one is multiplicative unit"),
        lambda: check_absorbing(mul, add.bottom, law="zero is absorbing"),
        lambda: check_distributive(add.join, mul),
    )


def build_semiring(add: FinCIM, mul, one: int) -> FinSemiring:
    rows = list(mul)
    table = freeze_table(rows, add.n, name="mul")
    check_range(table, add.n, name="mul")
    check_semiring(add, table, one).raise_for_violation()
    return FinSemiring(add, table, one)


def semiring_from_tables(
    add, mul, zero: int, one: int, names: Optional[Sequence[str]] = None
) -> FinSemiring:
    """Convenience builder from raw ⊕ and · tables; top is derived from ⊕."""
    rows = list(add)
    table = freeze_table(rows, len(rows), name="add")
    check_range(table, len(table), name="add")
    top = reduce(lambda a, b: table[a][b], range(len(table)), zero)
    return build_semiring(build_cim(table, zero, top, names), mul, one)


def check_idealic(semiring: FinSemiring) -> Verdict:
    return PASS if semiring.is_idealic else fail("one is top", semiring.one, semiring.top)


def check_idempotent_mult(semiring: FinSemiring) -> Verdict:
    return check_idempotent(semiring.mul, law="multiplicative idempotency")


@dataclass(frozen=True)
class SemiringHom:
    source: FinSemiring
    target: FinSemiring
    mapping: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def then(self, other: "SemiringHom") -> "SemiringHom":
        """``other ∘ self``."""
        return SemiringHom(self.source, other.target, compose(self.mapping, other.mapping))

    @property
    def is_surjective(self) -> bool:
        return set(self.mapping) == set(range(self.target.n))

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)


def check_hom(hom: SemiringHom) -> Verdict:
    return is_hom(hom.source, hom.target, hom.mapping)


def build_hom(source: FinSemiring, target: FinSemiring, mapping: Sequence[int]) -> SemiringHom:
    mapping = tuple(mapping)
    if len(mapping) != source.n:
        raise FormatError(f"map has {len(mapping)} entries, expected {source.n}")
    hom = SemiringHom(source, target, mapping)
    check_hom(hom).raise_for_violation()
    return hom


def identity(semiring: FinSemiring) -> SemiringHom:
    return SemiringHom(semiring, semiring, tuple(range(semiring.n)))


def direct_product(first: FinSemiring, second: FinSemiring) -> FinSemiring:
    return product(FinSemiring, [first, second]).algebra


def product_projections(first: FinSemiring, second: FinSemiring) -> Tuple[SemiringHom, SemiringHom]:
    prod = product(FinSemiring, [first, second])
    return (
        SemiringHom(prod.algebra, first, prod.projections[0]),
        SemiringHom(prod.algebra, second, prod.projections[1]),
    )


@dataclass(frozen=True)
class BooleanCore:
    semiring: FinSemiring
    inclusion: SemiringHom
    negation: Tuple[int, ...]


def complement(semiring: FinSemiring, a: int) -> Optional[int]:
    for b in range(semiring.n):
        if semiring.plus(a, b) == semiring.one and semiring.times(a, b) == semiring.zero:
            return b
    return None


def boolean_core(semiring: FinSemiring) -> BooleanCore:
    """The complemented elements of an idealic semiring with idempotent multiplication."""
    if not semiring.is_idealic or not semiring.is_idempotent_mult:
        raise PreconditionError("boolean core needs an idealic semiring with idempotent multiplication")
    members = [a for a in range(semiring.n) if complement(semiring, a) is not None]
    try:
        core, inclusion = subalgebra(semiring, members)
    except LawViolation as e:
        # complemented elements of a distributive lattice are always closed
        raise LawViolation("boolean core closed", e.witness) from e
    position = {m: i for i, m in enumerate(inclusion)}
    negation = tuple(position[complement(semiring, m)] for m in inclusion)
    return BooleanCore(core, SemiringHom(core, semiring, inclusion), negation)
