"""
Shared machinery for finite algebras given by operation tables.

Every algebra kind (complete idempotent monoids, semirings, monoids, rings) exposes the same
small protocol:

- ``n``: carrier size, elements are ``range(n)``
- ``names``: display labels
- ``operations()``: binary operation tables keyed by name
- ``constants()``: distinguished elements keyed by name
- ``from_operations(operations, constants, names)``: rebuild an algebra of the same kind

With that protocol in hand, homomorphism checks, product, subalgebra and quotient
constructions and isomorphism search are written once here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, ClassVar, Dict, Iterator, List, Optional, Sequence, Tuple

from typing_extensions import Protocol

from idemspec.errors import FormatError, LawViolation

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law check. Truthy iff every law held."""

    ok: bool
    law: Optional[str] = None
    witness: Tuple[Any, ...] = ()

    def __bool__(self):
        return self.ok

    def raise_for_violation(self):
        if not self.ok:
            raise LawViolation(self.law or "unknown", self.witness)

    def to_dict(self):
        return {"ok": self.ok, "law": self.law, "witness": list(self.witness)}


PASS = Verdict(True)


def fail(law: str, *witness) -> Verdict:
    return Verdict(False, law, tuple(witness))


def first_failure(*checks: Callable[[], Verdict]) -> Verdict:
    """Run checks lazily in order and return the first failing verdict."""
    for check in checks:
        verdict = check()
        if not verdict:
            return verdict
    return PASS


class TableAlgebra(Protocol):
    OPERATION_NAMES: ClassVar[Tuple[str, ...]]
    CONSTANT_NAMES: ClassVar[Tuple[str, ...]]
    names: Tuple[str, ...]

    @property
    def n(self) -> int: ...

    def operations(self) -> Dict[str, Table]: ...

    def constants(self) -> Dict[str, int]: ...

    @classmethod
    def from_operations(
        cls, operations: Dict[str, Table], constants: Dict[str, int], names: Sequence[str]
    ) -> "TableAlgebra": ...


def freeze_table(rows, n: int, m: Optional[int] = None, name: str = "table") -> Table:
    """Check shape and range of a raw table and return it as nested tuples.

    ``n`` is the number of rows, ``m`` the number of columns (defaults to ``n``); entries must
    lie in ``range(m)`` unless the caller validates them separately.
    """
    m = n if m is None else m
    rows = list(rows)
    if len(rows) != n:
        raise FormatError(f"{name} has {len(rows)} rows, expected {n}")
    frozen = []
    for i, row in enumerate(rows):
        row = tuple(int(v) for v in row)
        if len(row) != m:
            raise FormatError(f"{name} row has {len(row)} entries, expected {m}", row=i)
        frozen.append(row)
    return tuple(frozen)


def check_range(table: Table, size: int, name: str = "table"):
    for i, row in enumerate(table):
        for v in row:
            if not 0 <= v < size:
                raise FormatError(f"{name} entry {v} outside carrier of size {size}", row=i)


def check_commutative(table: Table, law: str = "commutativity") -> Verdict:
    n = len(table)
    for a in range(n):
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                return fail(law, a, b)
    return PASS


def check_associative(table: Table, law: str = "associativity") -> Verdict:
    n = len(table)
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            for c in range(n):
                if table[ab][c] != row_a[table[b][c]]:
                    return fail(law, a, b, c)
    return PASS


def check_unit(table: Table, unit: int, law: str = "unit") -> Verdict:
    for a in range(len(table)):
        if table[unit][a] != a or table[a][unit] != a:
            return fail(law, a)
    return PASS


def check_absorbing(table: Table, element: int, law: str = "absorbing") -> Verdict:
    for a in range(len(table)):
        if table[element][a] != element or table[a][element] != element:
            return fail(law, a)
    return PASS


def check_idempotent(table: Table, law: str = "idempotency") -> Verdict:
    for a in range(len(table)):
        if table[a][a] != a:
            return fail(law, a)
    return PASS


def check_distributive(add: Table, mul: Table, law: str = "distributivity") -> Verdict:
    n = len(add)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return fail(law, a, b, c)
    return PASS


def find_unit(table: Table) -> Optional[int]:
    for e in range(len(table)):
        if all(table[e][a] == a and table[a][e] == a for a in range(len(table))):
            return e
    return None


def is_hom(source: TableAlgebra, target: TableAlgebra, mapping: Sequence[int]) -> Verdict:
    """Check that ``mapping`` preserves every operation and constant of ``source``."""
    if len(mapping) != source.n:
        return fail("totality", len(mapping), source.n)
    for x in mapping:
        if not 0 <= x < target.n:
            return fail("range", x)
    target_ops = target.operations()
    for op_name, table in source.operations().items():
        target_table = target_ops[op_name]
        for a in range(source.n):
            for b in range(source.n):
                if mapping[table[a][b]] != target_table[mapping[a]][mapping[b]]:
                    return fail(f"preserves {op_name}", a, b)
    target_consts = target.constants()
    for const_name, value in source.constants().items():
        if mapping[value] != target_consts[const_name]:
            return fail(f"preserves {const_name}", value)
    return PASS


def _element_invariant(algebra: TableAlgebra, x: int) -> Tuple:
    key = []
    for _, table in sorted(algebra.operations().items()):
        key.append(table[x][x] == x)
        key.append(sum(1 for y in range(algebra.n) if table[x][y] == x))
        key.append(sum(1 for y in range(algebra.n) if table[x][y] == y))
    return tuple(key)


def search_maps(
    source_size: int,
    target_size: int,
    consistent: Callable[[List[Optional[int]], int], bool],
    fixed: Optional[Dict[int, int]] = None,
    candidates: Optional[Sequence[Sequence[int]]] = None,
    injective: bool = False,
) -> Iterator[Tuple[int, ...]]:
    """Backtracking search for total maps ``range(source_size) -> range(target_size)``.

    ``consistent(partial, i)`` is called right after ``partial[i]`` is assigned and must only
    inspect assigned entries.
    """
    fixed = dict(fixed or {})
    partial: List[Optional[int]] = [None] * source_size
    for i, v in fixed.items():
        partial[i] = v
    used = set(fixed.values())
    if injective and len(used) != len(fixed):
        return
    for i in fixed:
        if not consistent(partial, i):
            return
    order = [i for i in range(source_size) if i not in fixed]

    def backtrack(pos: int):
        if pos == len(order):
            yield tuple(partial)  # type: ignore[arg-type]
            return
        i = order[pos]
        options = candidates[i] if candidates is not None else range(target_size)
        for v in options:
            if injective and v in used:
                continue
            partial[i] = v
            if consistent(partial, i):
                used.add(v)
                yield from backtrack(pos + 1)
                used.discard(v)
            partial[i] = None

    yield from backtrack(0)


def _op_consistency(source: TableAlgebra, target: TableAlgebra):
    pairs = [(table, target.operations()[name]) for name, table in source.operations().items()]

    def consistent(partial: List[Optional[int]], i: int) -> bool:
        fi = partial[i]
        for table, target_table in pairs:
            for j, fj in enumerate(partial):
                if fj is None:
                    continue
                k = table[i][j]
                if partial[k] is not None and partial[k] != target_table[fi][fj]:
                    return False
                k = table[j][i]
                if partial[k] is not None and partial[k] != target_table[fj][fi]:
                    return False
        return True

    return consistent


def find_homs(source: TableAlgebra, target: TableAlgebra, injective: bool = False) -> Iterator[Tuple[int, ...]]:
    fixed = {}
    target_consts = target.constants()
    for name, value in source.constants().items():
        if value in fixed and fixed[value] != target_consts[name]:
            return
        fixed[value] = target_consts[name]
    consistent = _op_consistency(source, target)
    for candidate in search_maps(source.n, target.n, consistent, fixed=fixed, injective=injective):
        if is_hom(source, target, candidate):
            yield candidate


def find_isomorphism(source: TableAlgebra, target: TableAlgebra) -> Optional[Tuple[int, ...]]:
    """Return an isomorphism ``source -> target`` or ``None``."""
    if source.n != target.n or set(source.operations()) != set(target.operations()):
        return None
    source_inv = [_element_invariant(source, x) for x in range(source.n)]
    target_inv = [_element_invariant(target, y) for y in range(target.n)]
    if sorted(source_inv) != sorted(target_inv):
        return None
    candidates = [[y for y in range(target.n) if target_inv[y] == source_inv[x]] for x in range(source.n)]

    fixed = {}
    target_consts = target.constants()
    for name, value in source.constants().items():
        if value in fixed and fixed[value] != target_consts[name]:
            return None
        fixed[value] = target_consts[name]

    consistent = _op_consistency(source, target)
    for candidate in search_maps(
        source.n, target.n, consistent, fixed=fixed, candidates=candidates, injective=True
    ):
        if is_hom(source, target, candidate):
            return candidate
    return None


def is_bijective(mapping: Sequence[int], target_size: int) -> bool:
    return len(mapping) == target_size and len(set(mapping)) == target_size


def compose(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """``second ∘ first``."""
    return tuple(second[x] for x in first)


def invert(mapping: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(mapping)
    for x, y in enumerate(mapping):
        inverse[y] = x
    return tuple(inverse)


@dataclass(frozen=True)
class Product:
    algebra: Any
    tuples: Tuple[Tuple[int, ...], ...]
    projections: Tuple[Tuple[int, ...], ...]

    def encode(self, components: Sequence[int]) -> int:
        return self.tuples.index(tuple(components))


def product(kind, factors: Sequence[TableAlgebra]) -> Product:
    """Componentwise product; the empty product is the one-element algebra of ``kind``."""
    tuples = tuple(itertools.product(*[range(f.n) for f in factors]))
    index = {t: i for i, t in enumerate(tuples)}
    op_names, const_names = kind.OPERATION_NAMES, kind.CONSTANT_NAMES
    factor_ops = [f.operations() for f in factors]
    operations = {}
    for op in op_names:
        operations[op] = tuple(
            tuple(index[tuple(fo[op][a][b] for fo, a, b in zip(factor_ops, s, t))] for t in tuples) for s in tuples
        )
    constants = {c: index[tuple(f.constants()[c] for f in factors)] for c in const_names}
    names = tuple("(" + ",".join(f.names[c] for f, c in zip(factors, t)) + ")" for t in tuples)
    algebra = kind.from_operations(operations, constants, names)
    projections = tuple(tuple(t[k] for t in tuples) for k in range(len(factors)))
    return Product(algebra, tuples, projections)


def is_closed_subset(algebra: TableAlgebra, members) -> bool:
    members = set(members)
    for c in algebra.constants().values():
        if c not in members:
            return False
    for table in algebra.operations().values():
        for a in members:
            for b in members:
                if table[a][b] not in members:
                    return False
    return True


def subalgebra(algebra: TableAlgebra, members: Sequence[int]) -> Tuple[Any, Tuple[int, ...]]:
    """Restrict ``algebra`` to a closed subset; returns the subalgebra and its inclusion."""
    members = tuple(sorted(set(members)))
    if not is_closed_subset(algebra, members):
        raise LawViolation("closed subset", members)
    index = {m: i for i, m in enumerate(members)}
    operations = {
        op: tuple(tuple(index[table[a][b]] for b in members) for a in members)
        for op, table in algebra.operations().items()
    }
    constants = {c: index[v] for c, v in algebra.constants().items()}
    names = tuple(algebra.names[m] for m in members)
    return type(algebra).from_operations(operations, constants, names), members


def generated_subset(algebra: TableAlgebra, generators) -> frozenset:
    """Smallest subset closed under all operations and containing generators and constants."""
    members = set(generators) | set(algebra.constants().values())
    tables = list(algebra.operations().values())
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        for table in tables:
            for b in list(members):
                for c in (table[a][b], table[b][a]):
                    if c not in members:
                        members.add(c)
                        frontier.append(c)
    return frozenset(members)


def classes_from_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    """Renumber class labels to ``0..k-1`` in order of first appearance."""
    renumber: Dict[int, int] = {}
    return tuple(renumber.setdefault(x, len(renumber)) for x in labels)


def quotient_tables(algebra: TableAlgebra, class_of: Sequence[int]) -> Tuple[Any, Tuple[int, ...]]:
    """Quotient by a partition that must be a congruence. Returns quotient and projection."""
    class_of = classes_from_labels(class_of)
    k = max(class_of) + 1 if class_of else 0
    reps = [class_of.index(c) for c in range(k)]
    operations = {}
    for op, table in algebra.operations().items():
        for a in range(algebra.n):
            for b in range(algebra.n):
                if class_of[table[a][b]] != class_of[table[reps[class_of[a]]][reps[class_of[b]]]]:
                    raise LawViolation(f"compatible with {op}", (a, b))
        operations[op] = tuple(tuple(class_of[table[reps[i]][reps[j]]] for j in range(k)) for i in range(k))
    constants = {c: class_of[v] for c, v in algebra.constants().items()}
    names = tuple(
        algebra.names[reps[c]]
        if sum(1 for x in class_of if x == c) == 1
        else "[" + ",".join(algebra.names[x] for x in range(algebra.n) if class_of[x] == c) + "]"
        for c in range(k)
    )
    return type(algebra).from_operations(operations, constants, names), class_of


def default_names(n: int) -> Tuple[str, ...]:
    return tuple(f"e{i}" for i in range(n))
