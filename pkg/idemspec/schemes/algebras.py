"""
Finite commutative monoids and rings, the other two algebra kinds that get spectra.

Both follow the table-algebra protocol of ``idemspec.algebra.structure`` so congruences,
quotients, products and isomorphism search work on them unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Dict, Optional, Sequence, Tuple

from idemspec.algebra.structure import (
    Table,
    Verdict,
    check_associative,
    check_commutative,
    check_distributive,
    check_range,
    check_unit,
    default_names,
    fail,
    find_unit,
    first_failure,
    freeze_table,
)
from idemspec.errors import FormatError


@dataclass(frozen=True)
class FinMonoid:
    OPERATION_NAMES: ClassVar[Tuple[str, ...]] = ("mul",)
    CONSTANT_NAMES: ClassVar[Tuple[str, ...]] = ("one",)

    mul: Table
    one: int
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(len(self.mul)))

    @property
    def n(self) -> int:
        return len(self.mul)

    def operations(self) -> Dict[str, Table]:
        return {"mul": self.mul}

    def constants(self) -> Dict[str, int]:
        return {"one": self.one}

    @classmethod
    def from_operations(cls, operations, constants, names) -> "FinMonoid":
        return cls(operations["mul"], constants["one"], tuple(names))

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise FormatError(f"unknown element '{name}'") from None


def check_monoid(mul: Table, one: int) -> Verdict:
    if not 0 <= one < len(mul):
        return fail("one in carrier", one)
    return first_failure(
        lambda: check_commutative(mul),
        lambda: check_associative(mul),
        lambda: check_unit(mul, one, law="one is unit"),
    )


def build_monoid(mul, one: Optional[int] = None, names: Optional[Sequence[str]] = None) -> FinMonoid:
    rows = list(mul)
    table = freeze_table(rows, len(rows), name="mul")
    check_range(table, len(table), name="mul")
    if one is None:
        one = find_unit(table)
        if one is None:
            raise FormatError("multiplication has no unit")
    check_monoid(table, one).raise_for_violation()
    return FinMonoid(table, one, tuple(names) if names else ())


@dataclass(frozen=True)
class FinRing:
    OPERATION_NAMES: ClassVar[Tuple[str, ...]] = ("add", "mul")
    CONSTANT_NAMES: ClassVar[Tuple[str, ...]] = ("zero", "one")

    add: Table
    mul: Table
    zero: int
    one: int
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(len(self.add)))

    @property
    def n(self) -> int:
        return len(self.add)

    def operations(self) -> Dict[str, Table]:
        return {"add": self.add, "mul": self.mul}

    def constants(self) -> Dict[str, int]:
        return {"zero": self.zero, "one": self.one}

    @classmethod
    def from_operations(cls, operations, constants, names) -> "FinRing":
        return cls(operations["add"], operations["mul"], constants["zero"], constants["one"], tuple(names))

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def neg(self, a: int) -> int:
        return self.add[a].index(self.zero)

    def minus(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise FormatError(f"unknown element '{name}'") from None


def check_ring(add: Table, mul: Table, zero: int, one: int) -> Verdict:
    n = len(add)
    if len(mul) != n:
        return fail("multiplication table size", len(mul), n)
    for a in range(n):
        if zero not in add[a]:
            return fail("additive inverse", a)
    return first_failure(
        lambda: check_commutative(add, law="additive commutativity"),
        lambda: check_associative(add, law="additive associativity"),
        lambda: check_unit(add, zero, law="zero is additive unit"),
        lambda: check_commutative(mul, law="multiplicative commutativity"),
        lambda: check_associative(mul, law="multiplicative associativity"),
        lambda: check_unit(mul, one, law="one is multiplicative unit"),
        lambda: check_distributive(add, mul),
    )


def build_ring(add, mul, names: Optional[Sequence[str]] = None) -> FinRing:
    rows = list(add)
    add_table = freeze_table(rows, len(rows), name="add")
    n = len(add_table)
    mul_table = freeze_table(list(mul), n, name="mul")
    check_range(add_table, n, name="add")
    check_range(mul_table, n, name="mul")
    zero, one = find_unit(add_table), find_unit(mul_table)
    if zero is None or one is None:
        raise FormatError("ring tables need an additive and a multiplicative unit")
    check_ring(add_table, mul_table, zero, one).raise_for_violation()
    return FinRing(add_table, mul_table, zero, one, tuple(names) if names else ())


def cyclic_ring(n: int) -> FinRing:
    """ℤ/n with elements named by their residues."""
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FinRing(add, mul, 0, 1 % n, tuple(str(i) for i in range(n)))


def trivial_monoid() -> FinMonoid:
    return FinMonoid(((0,),), 0, ("1",))


def boolean_monoid() -> FinMonoid:
    """``{0, 1}`` under multiplication, the multiplicative monoid of ℤ/2."""
    return FinMonoid(((0, 0), (0, 1)), 1, ("0", "1"))


def truncated_monoid() -> FinMonoid:
    """``{1, x, y}`` with ``x² = y`` and ``y`` absorbing."""
    mul = (
        (0, 1, 2),
        (1, 2, 2),
        (2, 2, 2),
    )
    return FinMonoid(mul, 0, ("1", "x", "y"))


def cyclic_group(n: int) -> FinMonoid:
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FinMonoid(mul, 0, tuple("1" if i == 0 else f"g{i}" for i in range(n)))


def monoid_corpus() -> Dict[str, FinMonoid]:
    return {
        "trivial": trivial_monoid(),
        "Z2": boolean_monoid(),
        "T": truncated_monoid(),
    }


def ring_corpus() -> Dict[str, FinRing]:
    return {f"Z{n}": cyclic_ring(n) for n in (4, 6, 12)}
