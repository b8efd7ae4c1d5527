"""
Finite modules over finite idempotent semirings.

A module is a finite CIM ``carrier`` with a scalar action table ``action[r][x]``. Maps between
modules preserve finite sups (hence all sups), the zero and the action; the top element is only
preserved by the stricter ``MapKind.TOP_PRESERVING`` maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from idemspec.algebra.catalog import f1
from idemspec.algebra.order import FinCIM
from idemspec.algebra.semiring import FinSemiring
from idemspec.algebra.structure import PASS, Table, Verdict, fail, freeze_table, search_maps
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard, MapKind
from idemspec.errors import FormatError, LawViolation


@dataclass(frozen=True)
class FinModule:
    ring: FinSemiring
    carrier: FinCIM
    action: Table

    @property
    def n(self) -> int:
        return self.carrier.n

    @property
    def zero(self) -> int:
        return self.carrier.bottom

    @property
    def top(self) -> int:
        return self.carrier.top

    @property
    def names(self) -> Tuple[str, ...]:
        return self.carrier.names

    def act(self, r: int, x: int) -> int:
        return self.action[r][x]

    def plus(self, x: int, y: int) -> int:
        return self.carrier.join[x][y]

    def leq(self, x: int, y: int) -> bool:
        return self.carrier.leq(x, y)

    def sup(self, elements) -> int:
        return self.carrier.sup(elements)


def check_module(ring: FinSemiring, carrier: FinCIM, action: Table) -> Verdict:
    if len(action) != ring.n or any(len(row) != carrier.n for row in action):
        return fail("action table is |R| x |M|", len(action))
    join = carrier.join
    for x in range(carrier.n):
        if action[ring.one][x] != x:
            return fail("1·x = x", x)
        if action[ring.zero][x] != carrier.bottom:
            return fail("0·x = 0", x)
    for r in range(ring.n):
        if action[r][carrier.bottom] != carrier.bottom:
            return fail("r·0 = 0", r)
        for x in range(carrier.n):
            for y in range(carrier.n):
                if action[r][join[x][y]] != join[action[r][x]][action[r][y]]:
                    return fail("r(x ⊕ y) = rx ⊕ ry", r, x, y)
            for s in range(ring.n):
                if action[ring.plus(r, s)][x] != join[action[r][x]][action[s][x]]:
                    return fail("(r ⊕ s)x = rx ⊕ sx", r, s, x)
                if action[ring.times(r, s)][x] != action[r][action[s][x]]:
                    return fail("(rs)x = r(sx)", r, s, x)
    return PASS


def build_module(ring: FinSemiring, carrier: FinCIM, action) -> FinModule:
    rows = list(action)
    table = freeze_table(rows, ring.n, carrier.n, name="action")
    for i, row in enumerate(table):
        if any(not 0 <= v < carrier.n for v in row):
            raise FormatError("action entry outside carrier", row=i)
    check_module(ring, carrier, table).raise_for_violation()
    return FinModule(ring, carrier, table)


def regular_module(ring: FinSemiring) -> FinModule:
    """``R`` acting on itself by multiplication."""
    return FinModule(ring, ring.add, ring.mul)


def cim_as_module(carrier: FinCIM) -> FinModule:
    """A CIM is the same thing as a module over the two-element semiring."""
    base = f1()
    action = (tuple(carrier.bottom for _ in range(carrier.n)), tuple(range(carrier.n)))
    return FinModule(base, carrier, action)


def one_point_module(ring: FinSemiring) -> FinModule:
    return FinModule(ring, FinCIM(((0,),), 0, 0, ("0",)), tuple((0,) for _ in range(ring.n)))


@dataclass(frozen=True)
class ModuleMap:
    source: FinModule
    target: FinModule
    mapping: Tuple[int, ...]
    kind: MapKind = MapKind.SUP_PRESERVING

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def then(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, other.target, tuple(other.mapping[y] for y in self.mapping), self.kind)


def check_module_map(
    source: FinModule, target: FinModule, mapping: Sequence[int], kind: MapKind = MapKind.SUP_PRESERVING
) -> Verdict:
    if len(mapping) != source.n:
        return fail("totality", len(mapping))
    if mapping[source.zero] != target.zero:
        return fail("f(0) = 0")
    if kind == MapKind.TOP_PRESERVING and mapping[source.top] != target.top:
        return fail("f(1) = 1")
    for x in range(source.n):
        for y in range(source.n):
            if mapping[source.plus(x, y)] != target.plus(mapping[x], mapping[y]):
                return fail("f(x ⊕ y) = f(x) ⊕ f(y)", x, y)
        for r in range(source.ring.n):
            if mapping[source.act(r, x)] != target.act(r, mapping[x]):
                return fail("f(rx) = r f(x)", r, x)
    return PASS


def module_homs(
    source: FinModule, target: FinModule, kind: MapKind = MapKind.SUP_PRESERVING
) -> Tuple[Tuple[int, ...], ...]:
    """Every module map ``source -> target`` of the given kind, by backtracking."""
    if source.ring.n != target.ring.n:
        raise FormatError("modules over different rings")

    def consistent(partial: List[Optional[int]], i: int) -> bool:
        fi = partial[i]
        for j, fj in enumerate(partial):
            if fj is None:
                continue
            k = source.plus(i, j)
            if partial[k] is not None and partial[k] != target.plus(fi, fj):
                return False
        for r in range(source.ring.n):
            k = source.act(r, i)
            if partial[k] is not None and partial[k] != target.act(r, fi):
                return False
        return True

    fixed = {source.zero: target.zero}
    if kind == MapKind.TOP_PRESERVING:
        if source.top in fixed and fixed[source.top] != target.top:
            return ()
        fixed[source.top] = target.top
    maps = search_maps(source.n, target.n, consistent, fixed=fixed)
    return tuple(m for m in maps if check_module_map(source, target, m, kind))


@dataclass(frozen=True)
class HomModule:
    module: FinModule
    maps: Tuple[Tuple[int, ...], ...]

    def index(self, mapping: Sequence[int]) -> int:
        return self.maps.index(tuple(mapping))


def hom_module(source: FinModule, target: FinModule) -> HomModule:
    """Sup-preserving maps with pointwise ⊕ and action."""
    maps = module_homs(source, target)
    maps = tuple(sorted(maps, key=lambda m: (sum(1 for v in m if v != target.zero), m)))
    index = {m: i for i, m in enumerate(maps)}
    join = tuple(
        tuple(index[tuple(target.plus(a, b) for a, b in zip(f, g))] for g in maps) for f in maps
    )
    bottom = index[tuple(target.zero for _ in range(source.n))]
    top = index[tuple(target.sup(m[x] for m in maps) for x in range(source.n))]
    names = tuple("[" + ",".join(target.names[v] for v in m) + "]" for m in maps)
    action = tuple(tuple(index[tuple(target.act(r, v) for v in f)] for f in maps) for r in range(source.ring.n))
    module = FinModule(source.ring, FinCIM(join, bottom, top, names), action)
    check_module(module.ring, module.carrier, module.action).raise_for_violation()
    return HomModule(module, maps)


@dataclass(frozen=True)
class TupleModule:
    """A module whose elements are tuples of elements of factor modules."""

    module: FinModule
    tuples: Tuple[Tuple[int, ...], ...]

    def encode(self, components: Sequence[int]) -> int:
        return self.tuples.index(tuple(components))


def _product_module(ring: FinSemiring, factors: Sequence[FinModule]) -> TupleModule:
    tuples = tuple(itertools.product(*[range(m.n) for m in factors]))
    ensure_within(Guard.FREE_MODULE, len(tuples))
    index = {t: i for i, t in enumerate(tuples)}
    join = tuple(
        tuple(index[tuple(m.plus(a, b) for m, a, b in zip(factors, s, t))] for t in tuples) for s in tuples
    )
    bottom = index[tuple(m.zero for m in factors)]
    top = index[tuple(m.top for m in factors)]
    names = tuple("(" + ",".join(m.names[c] for m, c in zip(factors, t)) + ")" for t in tuples)
    action = tuple(
        tuple(index[tuple(m.act(r, c) for m, c in zip(factors, t))] for t in tuples) for r in range(ring.n)
    )
    return TupleModule(FinModule(ring, FinCIM(join, bottom, top, names), action), tuples)


@dataclass(frozen=True)
class FreeModule:
    module: FinModule
    tuples: Tuple[Tuple[int, ...], ...]
    generators: Tuple[int, ...]

    def extend(self, images: Sequence[int], target: FinModule) -> Tuple[int, ...]:
        """The unique module map sending generator ``i`` to ``images[i]``."""
        return tuple(target.sup(target.act(r, y) for r, y in zip(t, images)) for t in self.tuples)


def free_module(ring: FinSemiring, k: int) -> FreeModule:
    """``R^k`` with componentwise ⊕ and action; generator ``i`` is the i-th unit vector."""
    regular = regular_module(ring)
    product = _product_module(ring, [regular] * k)
    generators = tuple(
        product.encode(tuple(ring.one if j == i else ring.zero for j in range(k))) for i in range(k)
    )
    return FreeModule(product.module, product.tuples, generators)


@dataclass(frozen=True)
class Coproduct:
    module: FinModule
    tuples: Tuple[Tuple[int, ...], ...]
    injections: Tuple[Tuple[int, ...], ...]

    def copair(self, maps: Sequence[Sequence[int]], target: FinModule) -> Tuple[int, ...]:
        """``Σ f_λ(x_λ)``."""
        return tuple(target.sup(f[c] for f, c in zip(maps, t)) for t in self.tuples)


def module_coproduct(modules: Sequence[FinModule], ring: Optional[FinSemiring] = None) -> Coproduct:
    if not modules and ring is None:
        raise FormatError("empty coproduct needs the ring")
    ring = ring or modules[0].ring
    if any(m.ring.n != ring.n for m in modules):
        raise LawViolation("same base ring", ())
    product = _product_module(ring, modules)
    injections = []
    for k, m in enumerate(modules):
        injections.append(
            tuple(
                product.encode(tuple(x if j == k else other.zero for j, other in enumerate(modules)))
                for x in range(m.n)
            )
        )
    return Coproduct(product.module, product.tuples, tuple(injections))


def module_isomorphism(source: FinModule, target: FinModule) -> Optional[Tuple[int, ...]]:
    """A bijective module map ``source -> target``; its inverse is then monotone, hence a module map."""
    if source.n != target.n:
        return None
    for m in module_homs(source, target):
        if len(set(m)) == target.n:
            return m
    return None
