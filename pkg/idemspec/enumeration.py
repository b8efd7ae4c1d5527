"""
Exhaustive enumeration of small finite posets (as T0 Alexandrov spaces) and small semirings,
one representative per isomorphism class.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Set, Tuple

import numpy as np

from idemspec import logging
from idemspec.algebra.order import FinCIM, cim_from_order
from idemspec.algebra.semiring import FinSemiring, check_semiring
from idemspec.algebra.structure import find_isomorphism
from idemspec.config_manager import ensure_within
from idemspec.constants import Guard
from idemspec.errors import FormatError
from idemspec.topology.space import FinTop, space_from_order


def canonical_form(leq: np.ndarray) -> bytes:
    """The smallest relabelling of ``leq``; equal for isomorphic orders."""
    n = leq.shape[0]
    return min(leq[np.ix_(p, p)].tobytes() for p in itertools.permutations(range(n)))


def _down_sets(leq: np.ndarray) -> Iterator[np.ndarray]:
    n = leq.shape[0]
    for mask in range(1 << n):
        members = np.array([bool(mask >> i & 1) for i in range(n)], dtype=bool)
        # closed downwards: any y in the set drags in everything below it
        if all(not members[y] or members[leq[:, y]].all() for y in range(n)):
            yield members


def enumerate_orders(n: int) -> List[np.ndarray]:
    """Partial orders on ``n`` points up to isomorphism, as read-only boolean matrices."""
    ensure_within(Guard.ENUMERATION, n)
    level = [np.ones((0, 0), dtype=bool)]
    for size in range(1, n + 1):
        seen: Set[bytes] = set()
        grown = []
        for leq in level:
            # every poset arises by adding a maximal element above some down-set
            for below in _down_sets(leq):
                bigger = np.zeros((size, size), dtype=bool)
                bigger[: size - 1, : size - 1] = leq
                bigger[: size - 1, size - 1] = below
                bigger[size - 1, size - 1] = True
                key = canonical_form(bigger)
                if key not in seen:
                    seen.add(key)
                    grown.append(bigger)
        level = grown
    for leq in level:
        leq.flags.writeable = False
    logging.info(f"{len(level)} posets on {n} points")
    return level


def enumerate_posets(n: int) -> Iterator[FinTop]:
    """Finite T0 spaces on ``n`` points up to homeomorphism."""
    for leq in enumerate_orders(n):
        yield space_from_order(leq)


def _is_partial_order(leq: np.ndarray) -> bool:
    if not leq.diagonal().all():
        return False
    if (leq & leq.T & ~np.eye(leq.shape[0], dtype=bool)).any():
        return False
    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    return bool((composed <= leq).all())


def naive_poset_count(n: int) -> int:
    """Isomorphism classes of partial orders found by filtering every relation on ``n`` points."""
    ensure_within(Guard.ENUMERATION, n)
    if n > 4:
        raise FormatError("naive enumeration is limited to 4 points")
    off_diagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen: Set[bytes] = set()
    for mask in range(1 << len(off_diagonal)):
        leq = np.eye(n, dtype=bool)
        for k, (i, j) in enumerate(off_diagonal):
            if mask >> k & 1:
                leq[i, j] = True
        if _is_partial_order(leq):
            seen.add(canonical_form(leq))
    return len(seen)


def enumerate_lattices(n: int) -> List[FinCIM]:
    out = []
    for leq in enumerate_orders(n):
        try:
            out.append(cim_from_order(leq))
        except FormatError:
            continue
    return out


def _multiplications(cim: FinCIM, one: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    n, zero = cim.n, cim.bottom
    free = [(a, b) for a in range(n) for b in range(a, n) if zero not in (a, b) and one not in (a, b)]
    for values in itertools.product(range(n), repeat=len(free)):
        mul = [[0] * n for _ in range(n)]
        for x in range(n):
            mul[zero][x] = mul[x][zero] = zero
            mul[one][x] = mul[x][one] = x
        for (a, b), v in zip(free, values):
            mul[a][b] = mul[b][a] = v
        yield tuple(tuple(row) for row in mul)


def enumerate_semirings(n: int, idealic_only: bool = True) -> List[FinSemiring]:
    """Semirings on ``n`` elements with a lattice as addition, up to isomorphism."""
    ensure_within(Guard.ENUMERATION, n)
    if n > 4:
        raise FormatError("semiring enumeration is limited to 4 elements")
    found: List[FinSemiring] = []
    for cim in enumerate_lattices(n):
        ones = [cim.top] if idealic_only else list(range(n))
        for one in ones:
            if one == cim.bottom and n > 1:
                continue
            for mul in _multiplications(cim, one):
                if not check_semiring(cim, mul, one):
                    continue
                candidate = FinSemiring(cim, mul, one)
                if all(find_isomorphism(candidate, other) is None for other in found):
                    found.append(candidate)
    logging.info(f"{len(found)} {'idealic ' if idealic_only else ''}semirings on {n} elements")
    return found
