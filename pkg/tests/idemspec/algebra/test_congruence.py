import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idemspec.algebra.catalog import chain3, corpus, diamond, f1, n_eps, zero_semiring
from idemspec.algebra.congruence import (
    UnionFind,
    all_congruences,
    check_congruence,
    check_saturation_laws,
    check_semiorder,
    congruence_closure,
    congruence_from_semiorder,
    congruence_semiring,
    factor_through,
    homs_factoring,
    idempotent_quotient,
    kernel,
    quotient,
    quotient_by_pairs,
    saturation,
    semiideal_algebraic_check,
)
from idemspec.algebra.semiring import check_semiring
from idemspec.algebra.structure import find_isomorphism
from idemspec.errors import FormatError, GuardExceeded, LawViolation
from idemspec.schemes.algebras import cyclic_ring, truncated_monoid


def test_union_find_labels():
    uf = UnionFind(5)
    uf.union(3, 1)
    uf.union(4, 3)
    assert uf.labels() == (0, 1, 2, 1, 1)
    assert not uf.union(1, 4)


@pytest.mark.parametrize(
    "pair, classes",
    [
        ((1, 2), (0, 1, 1)),
        ((0, 1), (0, 0, 1)),
        ((0, 2), (0, 0, 0)),
    ],
)
def test_closure_on_chain(pair, classes):
    assert congruence_closure(chain3(), [pair]).class_of == classes


def test_closure_rejects_pairs_outside_carrier():
    with pytest.raises(FormatError):
        congruence_closure(chain3(), [(0, 7)])


def test_closure_works_for_rings():
    z12 = cyclic_ring(12)
    cong = congruence_closure(z12, [(0, 4)])
    assert cong.n_classes == 4
    assert cong.related(1, 9)


def test_closure_works_for_monoids():
    t = truncated_monoid()
    cong = congruence_closure(t, [(0, 1)])
    assert cong.is_total


def test_chain_has_four_congruences():
    found = all_congruences(chain3())
    assert len(found) == 4
    assert found[0].is_diagonal
    assert found[-1].is_total


def test_check_congruence_reports_witness():
    verdict = check_congruence(chain3(), (0, 1, 0))
    assert not verdict
    assert verdict.law.startswith("compatible with")


def test_quotient_projection_is_hom():
    q = quotient_by_pairs(chain3(), [(1, 2)])
    assert q.quotient.n == 2
    assert q.pi.is_surjective
    assert q.lift(1) == 1


def test_saturation_is_largest_in_class():
    q = quotient_by_pairs(chain3(), [(0, 1)])
    assert saturation(q, 0) == 1
    assert saturation(q, 2) == 2


@pytest.mark.parametrize("name", ["F1", "C3", "B4"])
def test_every_congruence_is_algebraic(name):
    r = corpus()[name]
    assert all(semiideal_algebraic_check(r, cong) for cong in all_congruences(r))


@pytest.mark.parametrize("name", sorted(corpus()))
def test_saturation_laws_hold_for_every_congruence(name):
    r = corpus()[name]
    for cong in all_congruences(r):
        assert check_saturation_laws(quotient(r, cong))


def test_kernel_and_factorisation():
    r = chain3()
    collapse = (0, 1, 1)
    cong = kernel(r, f1(), collapse)
    q = quotient(r, cong)
    assert factor_through(q, f1(), collapse) == (0, 1)


def test_factor_through_refuses_maps_that_split_classes():
    q = quotient_by_pairs(chain3(), [(1, 2)])
    with pytest.raises(LawViolation) as e:
        factor_through(q, chain3(), (0, 1, 2))
    assert e.value.law == "map respects congruence"


def test_homs_factoring_through_collapse():
    q = quotient_by_pairs(chain3(), [(1, 2)])
    found = homs_factoring(q, f1())
    assert [f for f, _ in found] == [(0, 1, 1)]


def test_idempotent_quotient_of_neps_is_f1():
    q = idempotent_quotient(n_eps())
    assert find_isomorphism(q.quotient, f1()) is not None


def test_congruence_semiring_of_f1():
    rc = congruence_semiring(f1())
    assert find_isomorphism(rc.semiring, f1()) is not None
    assert rc.embedding_is_hom


@pytest.mark.parametrize("name", ["F1", "C3", "B4", "Neps"])
def test_congruence_semiring_is_a_semiring(name):
    rc = congruence_semiring(corpus()[name])
    assert check_semiring(rc.semiring.add, rc.semiring.mul, rc.semiring.one)
    assert rc.embedding_is_hom


def test_congruence_semiring_of_the_zero_semiring():
    assert congruence_semiring(zero_semiring()).semiring.n == 1


def test_congruence_semiring_of_the_chain_matches_brute_force():
    r = chain3()
    brute = set()
    for labels in itertools.product(range(r.n), repeat=r.n):
        if check_congruence(r, labels):
            brute.add(frozenset(frozenset(x for x in range(r.n) if labels[x] == k) for k in set(labels)))
    rc = congruence_semiring(r)
    assert {frozenset(c.classes) for c in rc.congruences} == brute
    assert rc.semiring.n == len(brute) == 4


def test_congruence_semiring_guard(monkeypatch):
    monkeypatch.setenv("IDEMSPEC_MAX_CONGRUENCE_CARRIER", "3")
    with pytest.raises(GuardExceeded) as e:
        congruence_semiring(diamond())
    assert e.value.bound == 3


def test_semiorder_from_collapse():
    r = chain3()
    # m and 1 identified, order otherwise kept
    rel = [[True, True, True], [False, True, True], [False, True, True]]
    assert check_semiorder(r, rel)
    assert congruence_from_semiorder(r, rel).class_of == (0, 1, 1)


def test_semiorder_must_contain_the_order():
    rel = [[True, False, False], [False, True, False], [False, False, True]]
    verdict = check_semiorder(chain3(), rel)
    assert verdict.law == "a <= b implies a ≺ b"


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=3))
def test_closure_is_a_congruence_containing_its_pairs(pairs):
    r = diamond()
    cong = congruence_closure(r, pairs)
    assert check_congruence(r, cong.class_of)
    assert all(cong.related(a, b) for a, b in pairs)


def test_semiorder_equal_to_the_order_gives_the_diagonal():
    r = chain3()
    rel = [[r.leq(a, b) for b in range(r.n)] for a in range(r.n)]
    assert congruence_from_semiorder(r, rel).is_diagonal


def test_full_semiorder_gives_the_total_congruence():
    r = chain3()
    rel = [[True] * r.n for _ in range(r.n)]
    assert congruence_from_semiorder(r, rel).is_total
