import pytest

from idemspec.algebra.catalog import chain3, corpus, diamond, f1, n_eps
from idemspec.algebra.semiring import build_hom
from idemspec.errors import LawViolation
from idemspec.io.emitters import to_dot
from idemspec.topology.space import (
    build_space,
    closed_set_semiring,
    discrete,
    indiscrete,
    is_homeomorphism,
    prime_filter_space,
    sierpinski,
    soberify,
)
from idemspec.topology.spectrum import (
    duality_check,
    duality_check_space,
    spec,
    spec_c_triangles,
    spec_map,
    vanishing_set,
)


def test_spec_of_the_chain():
    sp = spec(chain3())
    assert sp.space.points == ("0", "m")
    assert sp.V(0) == frozenset({0, 1})
    assert sp.V(1) == frozenset({1})
    assert sp.D(2) == frozenset({0, 1})
    assert sp.space.is_sober


def test_spec_of_the_diamond_is_discrete():
    sp = spec(diamond())
    assert sp.space.n == 2
    assert len(sp.space.closed) == 4


def test_spec_of_the_chain_as_dot():
    dot = to_dot(spec(chain3()).space, "Spec C3")
    assert '"m" -> "0"' in dot


def test_vanishing_set():
    r = diamond()
    assert vanishing_set(r, r.index("a")) == frozenset({r.index("a")})
    assert vanishing_set(r, r.one) == frozenset()


@pytest.mark.parametrize("name", sorted(n for n, r in corpus().items() if r.is_idempotent_mult))
def test_semirings_are_dual_to_their_spectra(name):
    r = corpus()[name]
    assert duality_check(r)
    assert spec_c_triangles(r)


def test_non_idempotent_multiplication_is_not_recovered():
    witness = duality_check(n_eps())
    assert not witness
    assert witness.verdict.law == "a -> V(a) injective"
    assert witness.verdict.witness == (0, 1)


@pytest.mark.parametrize("space", [sierpinski(), discrete(2), discrete(3)])
def test_sober_spaces_are_dual_to_their_closed_sets(space):
    assert duality_check_space(space)


def test_non_t0_space_is_not_recovered():
    witness = duality_check_space(indiscrete(2))
    assert not witness
    assert witness.verdict.law == "x -> closure{x} is a homeomorphism"


def test_spec_map_of_inclusion():
    f = build_hom(f1(), chain3(), (0, 2))
    g = spec_map(f)
    assert g.mapping == (0, 0)


def test_soberify_collapses_indistinguishable_points():
    sob = soberify(indiscrete(2))
    assert sob.space.n == 1
    assert sob.unit.mapping == (0, 0)
    assert sob.space.is_sober


def test_soberify_keeps_sober_spaces():
    sob = soberify(sierpinski())
    assert is_homeomorphism(sob.unit)


def test_prime_filter_space_of_sierpinski():
    pf = prime_filter_space(sierpinski())
    assert pf.space.n == 2
    assert is_homeomorphism(pf.unit)
    assert sorted(pf.counit()) == [0, 1]


def test_closed_set_semiring_order_is_reverse_inclusion():
    cs = closed_set_semiring(sierpinski())
    r = cs.semiring
    assert cs.closed_sets[r.zero] == frozenset({0, 1})
    assert cs.closed_sets[r.one] == frozenset()
    assert r.names[1] == "{c}"


def test_space_must_be_closed_under_union():
    with pytest.raises(LawViolation) as e:
        build_space(["a", "b", "c"], [[], [0], [1], [0, 1, 2]])
    assert e.value.law == "closed under union"
