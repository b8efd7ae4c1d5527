"""
Tensor products of finite modules through filters on ``M × N``.

A filter is a set ``F`` of pairs that

- contains ``{0} × N`` and ``M × {0}``,
- is down-closed and closed under finite sups in each coordinate,
- satisfies ``(rx, y) ∈ F`` iff ``(x, ry) ∈ F``.

Filters are stored as bit masks over pair indices ``x * |N| + y``. The filters form a closure
system; ``M ⊗ N`` is that system with sup = closure of the union, ``x ⊗ y`` the filter
generated by ``(x, y)`` and ``r·F`` the filter generated by ``{(rx, y) : (x, y) ∈ F}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from idemspec import logging
from idemspec.algebra.modules import (
    FinModule,
    HomModule,
    ModuleMap,
    check_module,
    check_module_map,
    hom_module,
    module_homs,
)
from idemspec.algebra.order import FinCIM
from idemspec.algebra.semiring import FinSemiring, SemiringHom
from idemspec.algebra.structure import PASS, Table, Verdict, fail
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard, MapKind
from idemspec.errors import FormatError, LawViolation
from idemspec.utils import bits


class FilterRules:
    """Closure operator for filters on ``left × right``."""

    def __init__(self, left: FinModule, right: FinModule):
        if left.ring.n != right.ring.n:
            raise FormatError("modules over different rings")
        self.left = left
        self.right = right
        self.width = right.n
        self.size = left.n * right.n
        self.base = 0
        for y in range(right.n):
            self.base |= self.bit(left.zero, y)
        for x in range(left.n):
            self.base |= self.bit(x, right.zero)
        ring_n = left.ring.n
        # (rx, y) in F  <=>  (x, ry) in F, as a list of bit pairs
        self.scalar_links = [
            (self.bit(left.act(r, x), y), self.bit(x, right.act(r, y)))
            for r in range(ring_n)
            for x in range(left.n)
            for y in range(right.n)
        ]

    def bit(self, x: int, y: int) -> int:
        return 1 << (x * self.width + y)

    def pair(self, index: int) -> Tuple[int, int]:
        return divmod(index, self.width)

    def pairs(self, mask: int) -> List[Tuple[int, int]]:
        return [self.pair(i) for i in bits(mask)]

    def mask(self, pairs: Iterable[Tuple[int, int]]) -> int:
        mask = 0
        for x, y in pairs:
            mask |= self.bit(x, y)
        return mask

    def close(self, mask: int) -> int:
        left, right = self.left, self.right
        mask |= self.base
        while True:
            before = mask
            members = self.pairs(mask)
            for x, y in members:
                for x2 in range(left.n):
                    if left.leq(x2, x):
                        mask |= self.bit(x2, y)
                for y2 in range(right.n):
                    if right.leq(y2, y):
                        mask |= self.bit(x, y2)
            for y in range(right.n):
                column = [x for x in range(left.n) if mask & self.bit(x, y)]
                mask |= self.bit(left.sup(column), y)
            for x in range(left.n):
                row = [y for y in range(right.n) if mask & self.bit(x, y)]
                mask |= self.bit(x, right.sup(row))
            for a, b in self.scalar_links:
                if mask & a:
                    mask |= b
                if mask & b:
                    mask |= a
            if mask == before:
                return mask

    def is_filter(self, mask: int) -> bool:
        return self.close(mask) == mask


@dataclass(frozen=True)
class TensorProduct:
    module: FinModule
    left: FinModule
    right: FinModule
    filters: Tuple[int, ...]
    generator: Table
    rules: FilterRules = field(compare=False, repr=False)

    def tensor(self, x: int, y: int) -> int:
        return self.generator[x][y]

    def index(self, mask: int) -> int:
        return self.filters.index(mask)

    def members(self, f: int) -> List[Tuple[int, int]]:
        return self.rules.pairs(self.filters[f])


def reachable_filters(rules: FilterRules) -> Tuple[int, ...]:
    generators = {rules.close(rules.bit(x, y)) for x in range(rules.left.n) for y in range(rules.right.n)}
    bottom = rules.close(0)
    found = {bottom}
    frontier = [bottom]
    while frontier:
        current = frontier.pop()
        for g in generators:
            joined = rules.close(current | g)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))


def all_filters_bruteforce(left: FinModule, right: FinModule) -> Tuple[int, ...]:
    """Every subset of ``M × N`` satisfying the filter rules; for small products only."""
    rules = FilterRules(left, right)
    if rules.size > 12:
        raise LawViolation("brute-force filter search is limited to 12 pairs", (rules.size,))
    return tuple(
        sorted(
            (mask for mask in range(1 << rules.size) if rules.is_filter(mask)),
            key=lambda m: (bin(m).count("1"), m),
        )
    )


def tensor(left: FinModule, right: FinModule) -> TensorProduct:
    ensure_within(Guard.TENSOR_PAIRS, left.n * right.n)
    rules = FilterRules(left, right)
    filters = reachable_filters(rules)
    index: Dict[int, int] = {m: i for i, m in enumerate(filters)}
    k = len(filters)
    logging.debug(f"tensor of {left.n}- and {right.n}-element modules has {k} filters")

    join = tuple(tuple(index[rules.close(filters[i] | filters[j])] for j in range(k)) for i in range(k))
    action = tuple(
        tuple(
            index[rules.close(rules.mask((left.act(r, x), y) for x, y in rules.pairs(filters[i])))]
            for i in range(k)
        )
        for r in range(left.ring.n)
    )
    generator = tuple(tuple(index[rules.close(rules.bit(x, y))] for y in range(right.n)) for x in range(left.n))

    names: List[Optional[str]] = [None] * k
    names[index[rules.close(0)]] = "0"
    for x in range(left.n):
        for y in range(right.n):
            g = generator[x][y]
            if names[g] is None:
                names[g] = f"{left.names[x]}⊗{right.names[y]}"
    final_names = tuple(name if name is not None else f"F{i}" for i, name in enumerate(names))

    carrier = FinCIM(join, index[rules.close(0)], index[(1 << rules.size) - 1], final_names)
    module = FinModule(left.ring, carrier, action)
    check_module(module.ring, carrier, action).raise_for_violation()
    return TensorProduct(module, left, right, filters, generator, rules)


def tensor_map(f: ModuleMap, source: TensorProduct, target: TensorProduct) -> Tuple[int, ...]:
    """``f ⊗ N``: the filter of ``(x, y)`` goes to the filter of ``(f(x), y)``."""
    out = []
    for mask in source.filters:
        image = target.rules.mask((f(x), y) for x, y in source.rules.pairs(mask))
        out.append(target.index(target.rules.close(image)))
    return tuple(out)


def tensor_swap(forward: TensorProduct, backward: TensorProduct) -> Tuple[int, ...]:
    """The coordinate swap ``M ⊗ N -> N ⊗ M``; raises unless it is a module isomorphism."""
    mapping = tuple(
        backward.index(backward.rules.mask((y, x) for x, y in forward.rules.pairs(mask))) for mask in forward.filters
    )
    if len(set(mapping)) != len(mapping) or len(mapping) != backward.module.n:
        raise LawViolation("swap is bijective", mapping)
    check_module_map(forward.module, backward.module, mapping).raise_for_violation()
    return mapping


@dataclass(frozen=True)
class AdjunctionWitness:
    left_maps: Tuple[Tuple[int, ...], ...]
    right_maps: Tuple[Tuple[int, ...], ...]
    forward: Tuple[int, ...]
    backward: Tuple[int, ...]
    verdict: Verdict

    def __bool__(self):
        return self.verdict.ok


def _curry(tp: TensorProduct, hom: HomModule, g: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    curried = []
    for x in range(tp.left.n):
        partial = tuple(g[tp.tensor(x, y)] for y in range(tp.right.n))
        if partial not in hom.maps:
            return None
        curried.append(hom.index(partial))
    return tuple(curried)


def _uncurry(tp: TensorProduct, hom: HomModule, target: FinModule, h: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(target.sup(hom.maps[h[x]][y] for x, y in tp.members(f)) for f in range(tp.module.n))


def tensor_hom_adjunction_check(left: FinModule, right: FinModule, target: FinModule) -> AdjunctionWitness:
    """Hom(M ⊗ N, P) ≅ Hom(M, Hom(N, P)) through g -> [x -> [y -> g(x ⊗ y)]]."""
    tp = tensor(left, right)
    hom = hom_module(right, target)
    left_maps = module_homs(tp.module, target)
    right_maps = module_homs(left, hom.module)
    right_index = {h: i for i, h in enumerate(right_maps)}
    left_index = {g: i for i, g in enumerate(left_maps)}

    forward = []
    for g in left_maps:
        curried = _curry(tp, hom, g)
        if curried is None or curried not in right_index:
            return AdjunctionWitness(left_maps, right_maps, (), (), fail("curried map is a module map", g))
        forward.append(right_index[curried])
    backward = []
    for h in right_maps:
        uncurried = _uncurry(tp, hom, target, h)
        if uncurried not in left_index:
            verdict = fail("uncurried map is a module map", h)
            return AdjunctionWitness(left_maps, right_maps, tuple(forward), (), verdict)
        backward.append(left_index[uncurried])

    for i, j in enumerate(forward):
        if backward[j] != i:
            return AdjunctionWitness(left_maps, right_maps, tuple(forward), tuple(backward), fail("Ψ ∘ Φ = id", i))
    for j, i in enumerate(backward):
        if forward[i] != j:
            return AdjunctionWitness(left_maps, right_maps, tuple(forward), tuple(backward), fail("Φ ∘ Ψ = id", j))
    return AdjunctionWitness(left_maps, right_maps, tuple(forward), tuple(backward), PASS)


def adjunction_naturality_check(g: ModuleMap, right: FinModule, target: FinModule) -> Verdict:
    """Φ_M(k ∘ (g ⊗ N)) = Φ_{M'}(k) ∘ g for every ``k: M' ⊗ N -> P``."""
    source_tp = tensor(g.source, right)
    target_tp = tensor(g.target, right)
    hom = hom_module(right, target)
    g_tensor = tensor_map(g, source_tp, target_tp)
    for k in module_homs(target_tp.module, target):
        pulled = tuple(k[v] for v in g_tensor)
        lhs = _curry(source_tp, hom, pulled)
        curried_k = _curry(target_tp, hom, k)
        if lhs is None or curried_k is None:
            return fail("curried maps exist", k)
        rhs = tuple(curried_k[g(x)] for x in range(g.source.n))
        if lhs != rhs:
            return fail("naturality in M", k)
    return PASS


def unit_top_witness(left: FinModule, right: FinModule) -> Optional[int]:
    """An ``x`` for which ``y -> x ⊗ y`` fails to preserve the top, if any."""
    tp = tensor(left, right)
    for x in range(left.n):
        partial = tuple(tp.tensor(x, y) for y in range(right.n))
        if not check_module_map(right, tp.module, partial, MapKind.TOP_PRESERVING):
            return x
    return None


def restrict_scalars(phi: SemiringHom, module: FinModule) -> FinModule:
    """An ``A``-module seen as an ``R``-module along ``phi: R -> A``."""
    action = tuple(module.action[phi(r)] for r in range(phi.source.n))
    return FinModule(phi.source, module.carrier, action)


@dataclass(frozen=True)
class ScalarExtension:
    module: FinModule
    product: TensorProduct
    unit: Tuple[int, ...]


def scalar_extension(phi: SemiringHom, module: FinModule) -> ScalarExtension:
    """``A ⊗_R M`` with ``a·(b ⊗ x) = ab ⊗ x``; the unit is ``x -> 1 ⊗ x``."""
    target_ring: FinSemiring = phi.target
    regular = FinModule(target_ring, target_ring.add, target_ring.mul)
    tp = tensor(restrict_scalars(phi, regular), module)
    rules = tp.rules
    action = tuple(
        tuple(
            tp.index(rules.close(rules.mask((target_ring.times(a, b), x) for b, x in rules.pairs(mask))))
            for mask in tp.filters
        )
        for a in range(target_ring.n)
    )
    extended = FinModule(target_ring, tp.module.carrier, action)
    check_module(target_ring, extended.carrier, action).raise_for_violation()
    unit = tuple(tp.tensor(target_ring.one, x) for x in range(module.n))
    return ScalarExtension(extended, tp, unit)


def extension_counit(phi: SemiringHom, module: FinModule) -> Tuple[int, ...]:
    """``A ⊗_R N -> N`` for an ``A``-module ``N``: ``Σ a ⊗ y -> Σ a·y``."""
    extension = scalar_extension(phi, restrict_scalars(phi, module))
    tp = extension.product
    counit = tuple(module.sup(module.act(a, y) for a, y in tp.members(f)) for f in range(tp.module.n))
    check_module_map(extension.module, module, counit).raise_for_violation()
    return counit
