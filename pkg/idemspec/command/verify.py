"""
Verification suites: each suite expands into a list of named checks over fixture objects or
exhaustively enumerated instances, run on a thread pool and collected into a report.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from idemspec import logging
from idemspec.algebra.catalog import chain, corpus, f1
from idemspec.algebra.congruence import check_saturation_laws, congruence_semiring
from idemspec.algebra.localization import (
    loc_relation_oracle,
    localize,
    localize_at_element,
    mult_systems,
    v_equiv_check,
)
from idemspec.algebra.modules import cim_as_module, free_module, module_isomorphism
from idemspec.algebra.semiring import FinSemiring, boolean_core
from idemspec.algebra.structure import PASS, Verdict, fail, find_isomorphism
from idemspec.algebra.tensor import (
    FilterRules,
    all_filters_bruteforce,
    reachable_filters,
    tensor,
    tensor_hom_adjunction_check,
    tensor_swap,
)
from idemspec.constants import MAX_WORKERS, BlockKind, CheckStatus, Suite
from idemspec.enumeration import (
    enumerate_lattices,
    enumerate_orders,
    enumerate_posets,
    enumerate_semirings,
    naive_poset_count,
)
from idemspec.errors import GuardExceeded, LawViolation, PreconditionError, UnknownSuite
from idemspec.io.types import CheckResult, Document, VerificationReport
from idemspec.schemes.algebras import cyclic_ring, monoid_corpus, ring_corpus
from idemspec.schemes.classical import classical_comparison
from idemspec.schemes.scheme import (
    AdjunctionReport,
    adjunction_check,
    check_scheme,
    functoriality_check,
    patching_condition,
    spec_scheme,
    tau_right_adjoint_check,
    tau_scheme,
)
from idemspec.schemes.sheaf import constant_presheaf, sheaf_check
from idemspec.schemes.types import type_monoid, type_ring, type_semiring
from idemspec.topology.gluing import compatible_families, glue, open_immersion_check, tau_iso_check
from idemspec.topology.space import (
    closed_set_semiring,
    discrete,
    is_homeomorphism,
    one_point,
    prime_filter_space,
    sierpinski,
)
from idemspec.topology.spectrum import duality_check, duality_check_space, spec_c_triangles
from idemspec.utils import subsets

DEFAULT_BOUNDS = {
    Suite.DUALITY: 4,
    Suite.LOCALIZATION_ORACLE: 3,
    Suite.TENSOR: 3,
}

EMPTY_COVER_LAW = "empty cover: sections over the empty open are terminal"


@dataclass
class Check:
    name: str
    run: Callable[[], Verdict]
    expected: CheckStatus = CheckStatus.PASS
    expected_law: Optional[str] = None


SuiteBuilder = Callable[[Optional[Document], int], List[Check]]
SUITES: Dict[Suite, SuiteBuilder] = {}


def suite(name: Suite):
    def register(builder: SuiteBuilder) -> SuiteBuilder:
        SUITES[name] = builder
        return builder

    return register


def _semirings(document: Optional[Document]) -> Dict[str, FinSemiring]:
    if document is not None:
        return document.of_kind(BlockKind.SEMIRING)
    return corpus()


def _idealic(document: Optional[Document]) -> Dict[str, FinSemiring]:
    return {name: r for name, r in _semirings(document).items() if r.is_idealic}


def _report_verdict(report: AdjunctionReport) -> Verdict:
    for verdict in (report.patching, report.epsilon_iso, report.eta_iso, report.spec_triangle, report.gamma_triangle):
        if verdict is not None and not verdict:
            return verdict
    return PASS


@suite(Suite.DUALITY)
def duality_suite(document: Optional[Document], bound: int) -> List[Check]:
    checks = []
    if document is not None:
        spaces = document.of_kind(BlockKind.TOP)
    else:
        spaces = {f"poset{n}.{i}": s for n in range(1, bound + 1) for i, s in enumerate(enumerate_posets(n))}
    for name, space in spaces.items():
        checks.append(Check(f"Spec C(X) ≅ X [{name}]", lambda s=space: duality_check_space(s).verdict))
        checks.append(Check(f"C(Spec C(X)) ≅ C(X) [{name}]", lambda s=space: _closed_set_duality(s)))
    for name, r in _idealic(document).items():
        if r.is_idempotent_mult:
            checks.append(Check(f"R ≅ C(Spec R) [{name}]", lambda r=r: duality_check(r).verdict))
            checks.append(Check(f"Spec ⊣ C triangles [{name}]", lambda r=r: spec_c_triangles(r)))
    if document is None:
        for n in range(1, min(bound, 3) + 1):
            checks.append(Check(f"poset count agrees with naive count [n={n}]", lambda n=n: _count_check(n)))
        for n in range(1, bound + 1):
            checks.append(Check(f"alg(X) ≅ X for discrete X [n={n}]", lambda n=n: _discrete_stone_check(n)))
    return checks


def _closed_set_duality(space) -> Verdict:
    return duality_check(closed_set_semiring(space).semiring).verdict


def _count_check(n: int) -> Verdict:
    found, naive = len(enumerate_orders(n)), naive_poset_count(n)
    return PASS if found == naive else fail("poset count", found, naive)


def _discrete_stone_check(n: int) -> Verdict:
    space = discrete(n)
    alg = prime_filter_space(space)
    if not is_homeomorphism(alg.unit):
        return fail("X -> alg(X) is a homeomorphism", alg.unit.mapping)
    cs = alg.closed_semiring.semiring
    core = boolean_core(cs)
    if core.semiring.n != cs.n:
        return fail("every closed set is complemented", core.semiring.n, cs.n)
    return PASS


@suite(Suite.ADJUNCTION)
def adjunction_suite(document: Optional[Document], bound: int) -> List[Check]:
    checks = []
    monoids = document.of_kind(BlockKind.MONOID) if document is not None else monoid_corpus()
    rings = document.of_kind(BlockKind.RING) if document is not None else ring_corpus()
    for name, r in _idealic(document).items():
        checks.append(Check(f"Spec ⊣ Γ, semiring type [{name}]", lambda r=r: _adjunction(type_semiring(), r)))
    for name, m in monoids.items():
        checks.append(Check(f"Spec ⊣ Γ, monoid type [{name}]", lambda m=m: _adjunction(type_monoid(), m)))
    for name, ring in rings.items():
        checks.append(Check(f"Spec ⊣ Γ, ring type [{name}]", lambda g=ring: _adjunction(type_ring(), g)))
        checks.append(Check(f"stalks match the classical spectrum [{name}]", lambda g=ring: classical_comparison(g)))
    if document is None:
        checks.append(Check("Spec preserves composition [Z12 -> Z6 -> Z2]", _functoriality_check))
        pairs = [
            ("Sierpinski", sierpinski(), "Sierpinski", sierpinski()),
            ("D2", discrete(2), "Sierpinski", sierpinski()),
            ("pt", one_point(), "D2", discrete(2)),
        ]
    else:
        spaces = [(n, s) for n, s in document.of_kind(BlockKind.TOP).items() if s.is_sober]
        pairs = [(a, x, b, y) for (a, x), (b, y) in itertools.product(spaces, repeat=2)]
    for a, x, b, y in pairs:
        label = f"C⁺⁺ maps are continuous maps [{a} -> {b}]"
        checks.append(Check(label, lambda x=x, y=y: tau_right_adjoint_check(x, y)))
    return checks


def _adjunction(algebra_type, algebra) -> Verdict:
    return _report_verdict(adjunction_check(algebra_type, algebra))


def _functoriality_check() -> Verdict:
    rings = [cyclic_ring(12), cyclic_ring(6), cyclic_ring(2)]
    return functoriality_check(type_ring(), rings, tuple(a % 6 for a in range(12)), tuple(a % 2 for a in range(6)))


@suite(Suite.LOCALIZATION_ORACLE)
def localization_suite(document: Optional[Document], bound: int) -> List[Check]:
    semirings = dict(_idealic(document))
    if document is None:
        for n in range(1, min(bound, 3) + 1):
            for i, r in enumerate(enumerate_semirings(n, idealic_only=True)):
                semirings[f"idealic{n}.{i}"] = r
    checks = []
    for name, r in semirings.items():
        checks.append(Check(f"quotient matches the domination oracle [{name}]", lambda r=r: _oracle_check(r)))
        checks.append(Check(f"vanishing-set equivalences [{name}]", lambda r=r: _v_equiv(r)))
        checks.append(Check(f"saturation laws [{name}]", lambda r=r: _saturation(r)))
    if document is None:
        checks.append(Check("congruence semiring of F1 is F1", _congruence_f1))
        for name, m in monoid_corpus().items():
            label = f"α₁ commutes with localization, monoid type [{name}]"
            checks.append(Check(label, lambda m=m: _gamma(type_monoid(), m)))
        for name, ring in ring_corpus().items():
            label = f"α₁ commutes with localization, ring type [{name}]"
            checks.append(Check(label, lambda g=ring: _gamma(type_ring(), g)))
    return checks


def _oracle_check(r: FinSemiring) -> Verdict:
    for sigma in mult_systems(r):
        loc = localize(r, sigma)
        for f in range(r.n):
            for g in range(f, r.n):
                if (loc(f) == loc(g)) != loc_relation_oracle(r, sigma, f, g):
                    return fail("quotient relation = domination oracle", tuple(sigma), f, g)
    return PASS


def _v_equiv(r: FinSemiring) -> Verdict:
    for a in range(r.n):
        for b in range(r.n):
            report = v_equiv_check(r, a, b)
            if not report.consistent:
                return fail("V-equivalences agree", a, b, tuple(report))
    return PASS


def _saturation(r: FinSemiring) -> Verdict:
    for sigma in mult_systems(r):
        verdict = check_saturation_laws(localize(r, sigma).result)
        if not verdict:
            return verdict
    return PASS


def _congruence_f1() -> Verdict:
    rc = congruence_semiring(f1())
    return PASS if find_isomorphism(rc.semiring, f1()) is not None else fail("R̃(F1) ≅ F1", rc.semiring.n)


def _gamma(algebra_type, algebra) -> Verdict:
    for x in range(algebra.n):
        verdict = algebra_type.gamma_check(algebra, [x])
        if not verdict:
            return fail(verdict.law, x, *verdict.witness)
    return PASS


@suite(Suite.SHEAF)
def sheaf_suite(document: Optional[Document], bound: int) -> List[Check]:
    checks = []
    for name, r in _idealic(document).items():
        checks.append(Check(f"Z -> R_Z is a sheaf without sheafification [{name}]", lambda r=r: _structure_sheaf(r)))
        checks.append(Check(f"Spec R_f -> Spec R is an open immersion [{name}]", lambda r=r: _open_immersions(r)))
    if document is not None:
        spaces = document.of_kind(BlockKind.TOP)
    else:
        spaces = {"Sierpinski": sierpinski(), "D2": discrete(2)}
    for name, space in spaces.items():
        if space.is_sober:
            checks.append(Check(f"C⁺⁺(X) is an A-scheme [{name}]", lambda s=space: check_scheme(tau_scheme(s))))
            checks.append(Check(f"C(X)_Z ≅ C(X ∖ Z) [{name}]", lambda s=space: _tau_iso(s)))
        checks.append(
            Check(
                f"constant presheaf is not a sheaf [{name}]",
                lambda s=space: _constant_presheaf(s),
                expected=CheckStatus.FAIL,
                expected_law=EMPTY_COVER_LAW,
            )
        )
    return checks


def _structure_sheaf(r: FinSemiring) -> Verdict:
    scheme = spec_scheme(type_semiring(), r)
    if scheme.sheafified:
        return fail("localization presheaf needed sheafification")
    return check_scheme(scheme)


def _open_immersions(r: FinSemiring) -> Verdict:
    for f in range(r.n):
        verdict = open_immersion_check(r, f)
        if not verdict:
            return fail(verdict.law, f, *verdict.witness)
    return PASS


def _tau_iso(space) -> Verdict:
    for z in range(len(space.closed)):
        verdict = tau_iso_check(space, z)
        if not verdict:
            return fail(verdict.law, z, *verdict.witness)
    return PASS


def _constant_presheaf(space) -> Verdict:
    lattice = closed_set_semiring(space).semiring
    return sheaf_check(constant_presheaf(lattice, f1()))


@suite(Suite.PATCHING)
def patching_suite(document: Optional[Document], bound: int) -> List[Check]:
    checks = []
    for name, r in _idealic(document).items():
        label = f"strong patching, semiring type [{name}]"
        checks.append(Check(label, lambda r=r: _strong_patching(type_semiring(), r)))
        checks.append(Check(f"glue returns the brute-force glue [{name}]", lambda r=r: _glue_check(r)))
    rings = document.of_kind(BlockKind.RING) if document is not None else ring_corpus()
    for name, ring in rings.items():
        checks.append(Check(f"strong patching, ring type [{name}]", lambda g=ring: _strong_patching(type_ring(), g)))
    return checks


def _strong_patching(algebra_type, algebra) -> Verdict:
    return patching_condition(algebra_type, algebra, strong=True)


def _glue_check(r: FinSemiring, max_parts: int = 3) -> Verdict:
    for s in range(r.n):
        below = [x for x in range(r.n) if r.leq(x, s)]
        for cover in subsets(below, max_parts):
            if not cover or r.sum(cover) != s:
                continue
            pieces = [localize_at_element(r, c) for c in cover]
            for family in compatible_families(r, cover):
                try:
                    glued = glue(r, s, list(zip(cover, family)))
                except LawViolation as e:
                    return fail(e.law, s, cover, family)
                lifted = localize_at_element(r, s).result.lift(glued)
                if tuple(p(lifted) for p in pieces) != family:
                    return fail("glue restricts to the family", s, cover, family)
    return PASS


@suite(Suite.TENSOR)
def tensor_suite(document: Optional[Document], bound: int) -> List[Check]:
    checks = []
    if document is not None:
        modules = document.of_kind(BlockKind.MODULE)
    else:
        modules = {
            f"L{n}.{i}": cim_as_module(c) for n in range(1, bound + 1) for i, c in enumerate(enumerate_lattices(n))
        }
    for (a, left), (b, right), (c, target) in itertools.product(modules.items(), repeat=3):
        if left.ring == right.ring == target.ring:
            label = f"Hom(M ⊗ N, P) ≅ Hom(M, Hom(N, P)) [{a}, {b}, {c}]"
            checks.append(Check(label, lambda m=left, n=right, p=target: tensor_hom_adjunction_check(m, n, p).verdict))
    for (a, left), (b, right) in itertools.product(modules.items(), repeat=2):
        if left.ring == right.ring:
            checks.append(Check(f"M ⊗ N ≅ N ⊗ M [{a}, {b}]", lambda m=left, n=right: _swap(m, n)))
            if left.n * right.n <= 12:
                label = f"tensor filters are all filters [{a}, {b}]"
                checks.append(Check(label, lambda m=left, n=right: _filters(m, n)))
    if document is None:
        checks.append(Check("C2 ⊗ C2 ≅ C2", _c2_square))
        for name, m in modules.items():
            checks.append(Check(f"F1 ⊗ M ≅ M [{name}]", lambda m=m: _free_unit(m)))
    return checks


def _swap(left, right) -> Verdict:
    tensor_swap(tensor(left, right), tensor(right, left))
    return PASS


def _filters(left, right) -> Verdict:
    reached = set(reachable_filters(FilterRules(left, right)))
    every = set(all_filters_bruteforce(left, right))
    return PASS if reached == every else fail("filters generated by pairs", len(reached), len(every))


def _c2_square() -> Verdict:
    c2 = cim_as_module(chain(2).add)
    tp = tensor(c2, c2)
    return PASS if module_isomorphism(tp.module, c2) is not None else fail("C2 ⊗ C2 ≅ C2", tp.module.n)


def _free_unit(module) -> Verdict:
    free = free_module(f1(), 1).module
    tp = tensor(free, module)
    return PASS if module_isomorphism(tp.module, module) is not None else fail("F1 ⊗ M ≅ M", tp.module.n)


def run_check(check: Check) -> CheckResult:
    start = time.perf_counter()
    try:
        verdict = check.run()
    except (GuardExceeded, PreconditionError) as e:
        return CheckResult(check.name, CheckStatus.SKIPPED, str(e), (), time.perf_counter() - start, check.expected)
    except LawViolation as e:
        verdict = fail(e.law, *e.witness)
    seconds = time.perf_counter() - start

    if check.expected == CheckStatus.FAIL:
        if not verdict and (check.expected_law is None or verdict.law == check.expected_law):
            reason = f"expected failure: {verdict.law}"
            return CheckResult(check.name, CheckStatus.PASS, reason, verdict.witness, seconds, check.expected)
        if verdict:
            reason = "expected failure did not occur"
        else:
            reason = f"failed with '{verdict.law}', expected '{check.expected_law}'"
        return CheckResult(check.name, CheckStatus.FAIL, reason, verdict.witness, seconds, check.expected)

    if verdict:
        return CheckResult(check.name, CheckStatus.PASS, None, (), seconds, check.expected)
    return CheckResult(check.name, CheckStatus.FAIL, verdict.law, verdict.witness, seconds, check.expected)


def verify(suite_name: str, document: Optional[Document] = None, bound: Optional[int] = None) -> VerificationReport:
    try:
        name = Suite(suite_name)
    except ValueError:
        known = ", ".join(s.value for s in Suite)
        raise UnknownSuite(f"unknown suite '{suite_name}', expected one of: {known}") from None
    bound = bound if bound is not None else DEFAULT_BOUNDS.get(name, 0)
    start = time.perf_counter()
    checks = SUITES[name](document, bound)
    logging.info(f"running {len(checks)} checks of suite {name.value}")
    with concurrent.futures.ThreadPoolExecutor(max_workers=MAX_WORKERS) as executor:
        results = list(executor.map(run_check, checks))
    report = VerificationReport(name.value, results, time.perf_counter() - start)
    logging.info(f"suite {name.value}: {report.counts()}")
    return report
