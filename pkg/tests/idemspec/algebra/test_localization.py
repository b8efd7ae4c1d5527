import pytest
from hypothesis import given
from hypothesis import strategies as st

from idemspec.algebra.catalog import chain3, corpus, diamond, f1, n_eps
from idemspec.algebra.localization import (
    check_mult_system,
    element_mult_system,
    generated_mult_system,
    induced_map,
    is_local_at_prime,
    loc_relation_oracle,
    localize,
    localize_at_element,
    localize_at_prime,
    mult_systems,
    power_below,
    radical,
    sigma_saturation,
    v_equiv_check,
)
from idemspec.algebra.primes import primes
from idemspec.errors import LawViolation, PreconditionError


def test_localizing_the_chain_at_m_collapses_m_and_one():
    r = chain3()
    loc = localize_at_element(r, r.index("m"))
    assert loc.semiring.n == 2
    assert loc(1) == loc(2)
    assert loc(0) != loc(1)


def test_localizing_at_zero_gives_the_zero_semiring():
    loc = localize_at_element(diamond(), 0)
    assert loc.semiring.n == 1


def test_localizing_at_a_prime_of_the_diamond():
    r = diamond()
    loc = localize_at_prime(r, r.index("a"))
    assert loc.semiring.n == 2
    assert is_local_at_prime(r, r.index("a"))


def test_localizing_at_a_non_prime_is_refused():
    with pytest.raises(PreconditionError):
        localize_at_prime(diamond(), 0)


def test_mult_system_must_be_closed():
    r = diamond()
    with pytest.raises(LawViolation) as e:
        check_mult_system(r, [r.one, r.index("a"), r.index("b")])
    assert e.value.law == "closed under multiplication"


def test_generated_mult_system():
    r = diamond()
    sigma = generated_mult_system(r, [r.index("a"), r.index("b")])
    assert sigma.members == frozenset({0, 1, 2, 3})
    assert element_mult_system(r, r.index("a")).members == frozenset({1, 3})


def test_mult_systems_of_f1():
    found = mult_systems(f1())
    assert [s.members for s in found] == [frozenset({1}), frozenset({0, 1})]


def test_induced_map_between_localizations():
    r = diamond()
    coarse = localize(r, generated_mult_system(r, [1, 2]))
    fine = localize_at_element(r, 1)
    assert induced_map(fine, coarse) == (0, 0)


def test_radical_of_nilpotent():
    r = n_eps()
    assert radical(r, r.zero) == r.index("ε")
    assert power_below(r, r.index("ε"), r.zero)
    assert not power_below(r, r.one, r.zero)


def test_sigma_saturation():
    r = chain3()
    sigma = element_mult_system(r, r.index("m"))
    assert sigma_saturation(r, sigma, r.index("m")) == r.one


@pytest.mark.parametrize("name", sorted(corpus()))
def test_quotient_relation_matches_oracle(name):
    r = corpus()[name]
    for sigma in mult_systems(r):
        loc = localize(r, sigma)
        for f in range(r.n):
            for g in range(r.n):
                assert (loc(f) == loc(g)) == loc_relation_oracle(r, sigma, f, g)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_localization_at_each_prime_is_local(name):
    r = corpus()[name]
    assert all(is_local_at_prime(r, p) for p in primes(r))


@given(st.sampled_from(sorted(corpus())), st.data())
def test_v_equivalences_agree(name, data):
    r = corpus()[name]
    a = data.draw(st.integers(min_value=0, max_value=r.n - 1))
    b = data.draw(st.integers(min_value=0, max_value=r.n - 1))
    assert v_equiv_check(r, a, b).consistent
