import pytest

from idemspec.algebra.catalog import f1, n_eps
from idemspec.algebra.structure import find_isomorphism
from idemspec.constants import AlgebraKind
from idemspec.errors import FormatError, LawViolation
from idemspec.schemes.algebras import (
    build_monoid,
    build_ring,
    cyclic_group,
    cyclic_ring,
    monoid_corpus,
    ring_corpus,
    truncated_monoid,
)
from idemspec.schemes.types import (
    MonoidType,
    RingType,
    algebra_type,
    monoid_ideals,
    multiplicative_closure,
    ring_ideals,
    type_monoid,
    type_ring,
    type_semiring,
)


def test_ideals_of_z12():
    ideals = type_ring().ideal_semiring(cyclic_ring(12))
    assert ideals.semiring.names == ("(0)", "(6)", "(4)", "(3)", "(2)", "(1)")
    assert [len(i) for i in ring_ideals(cyclic_ring(12))] == [1, 2, 3, 4, 6, 12]


def test_ideal_semiring_multiplies_ideals():
    ideals = type_ring().ideal_semiring(cyclic_ring(12))
    r = ideals.semiring
    two, three, six = (ideals.index(ring_ideals(cyclic_ring(12))[k]) for k in (4, 3, 1))
    assert r.times(two, three) == six


def test_ideals_of_the_truncated_monoid():
    t = truncated_monoid()
    assert monoid_ideals(t) == (
        frozenset(),
        frozenset({2}),
        frozenset({1, 2}),
        frozenset({0, 1, 2}),
    )
    names = type_monoid().ideal_semiring(t).semiring.names
    assert names == ("∅", "{y}", "{x,y}", "{1,x,y}")


def test_alpha1_of_neps_is_f1():
    alpha = type_semiring().alpha1(n_eps())
    assert find_isomorphism(alpha.semiring, f1()) is not None
    assert alpha.alpha2[n_eps().index("ε")] == alpha.alpha2[n_eps().zero]


def test_alpha1_of_z12_is_the_lattice_of_radical_ideals():
    alpha = type_ring().alpha1(cyclic_ring(12))
    # radical ideals of Z12: (6), (3), (2), (1)
    assert alpha.semiring.n == 4
    assert alpha.semiring.is_idempotent_mult


def test_multiplicative_closure():
    t = truncated_monoid()
    assert multiplicative_closure(t, [1]) == frozenset({0, 1, 2})
    assert multiplicative_closure(cyclic_ring(12), [3]) == frozenset({1, 3, 9})


def test_ring_localization_at_a_zero_divisor():
    z6 = cyclic_ring(6)
    loc = type_ring().localize_at(z6, [2])
    # inverting 2 kills 3
    assert loc.quotient.n == 3


def test_monoid_localization_is_trivial_when_an_absorbing_element_is_inverted():
    t = truncated_monoid()
    assert type_monoid().localize_at(t, [t.index("y")]).quotient.n == 1


@pytest.mark.parametrize("name", sorted(monoid_corpus()))
def test_alpha1_commutes_with_monoid_localization(name):
    m = monoid_corpus()[name]
    assert all(type_monoid().gamma_check(m, [x]) for x in range(m.n))


@pytest.mark.parametrize("name", sorted(ring_corpus()))
def test_alpha1_commutes_with_ring_localization(name):
    ring = ring_corpus()[name]
    assert all(type_ring().gamma_check(ring, [x]) for x in range(ring.n))


def test_a_group_has_only_the_trivial_ideals():
    group = cyclic_group(3)
    assert monoid_ideals(group) == (frozenset(), frozenset(range(3)))
    assert find_isomorphism(type_monoid().alpha1(group).semiring, f1()) is not None
    assert type_monoid().gamma_check(group, [1])


def test_algebra_type_lookup():
    assert isinstance(algebra_type("ring"), RingType)
    assert isinstance(algebra_type(AlgebraKind.MONOID), MonoidType)
    with pytest.raises(ValueError):
        algebra_type("group")


def test_type_validation():
    assert not type_ring().validate(truncated_monoid())
    assert type_monoid().validate(truncated_monoid())


def test_build_ring_finds_units():
    z2 = build_ring([[0, 1], [1, 0]], [[0, 0], [0, 1]])
    assert (z2.zero, z2.one) == (0, 1)


def test_build_monoid_rejects_non_associative_tables():
    with pytest.raises(LawViolation):
        build_monoid([[0, 1, 2], [1, 0, 0], [2, 0, 1]], 0)


def test_ring_tables_need_units():
    with pytest.raises(FormatError):
        build_ring([[1, 1], [1, 1]], [[0, 0], [0, 0]])
