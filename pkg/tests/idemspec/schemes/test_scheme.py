import pytest

from idemspec.algebra.catalog import chain3, corpus, f1
from idemspec.algebra.structure import find_isomorphism
from idemspec.errors import PreconditionError
from idemspec.schemes.algebras import cyclic_ring, monoid_corpus, truncated_monoid
from idemspec.schemes.classical import classical_comparison, classical_localization, prime_ideals
from idemspec.schemes.scheme import (
    adjunction_check,
    adjunction_check_scheme,
    check_scheme,
    functoriality_check,
    global_sections,
    identity_morphism,
    patching_condition,
    spec_scheme,
    spec_scheme_map,
    stalk,
    tau_right_adjoint_check,
    tau_scheme,
)
from idemspec.schemes.types import type_monoid, type_ring, type_semiring
from idemspec.topology.space import discrete, indiscrete, one_point, sierpinski


@pytest.fixture(scope="module")
def z12_scheme():
    return spec_scheme(type_ring(), cyclic_ring(12))


def test_spec_of_the_chain_has_the_chain_as_global_sections():
    scheme = spec_scheme(type_semiring(), chain3())
    assert scheme.space.n == 2
    assert find_isomorphism(global_sections(scheme), chain3()) is not None
    assert not scheme.sheafified
    assert check_scheme(scheme)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_adjunction_at_semirings(name):
    assert adjunction_check(type_semiring(), corpus()[name]).ok


def test_z12_has_two_points_with_local_stalks(z12_scheme):
    assert z12_scheme.space.n == 2
    assert sorted(stalk(z12_scheme, x).n for x in range(2)) == [3, 4]
    assert global_sections(z12_scheme).n == 12


def test_open_sets_complement_closed_sets(z12_scheme):
    assert z12_scheme.open_set(z12_scheme.top) == z12_scheme.space.everything
    assert z12_scheme.open_set(z12_scheme.lattice.zero) == frozenset()


def test_z12_agrees_with_the_classical_spectrum():
    z12 = cyclic_ring(12)
    assert [len(p) for p in prime_ideals(z12)] == [4, 6]
    assert [classical_localization(z12, p).n for p in prime_ideals(z12)] == [3, 4]
    assert classical_comparison(z12)


def test_ring_scheme_is_an_a_scheme(z12_scheme):
    assert check_scheme(z12_scheme)
    assert adjunction_check_scheme(z12_scheme).ok


def test_monoid_scheme_of_the_truncated_monoid():
    t = truncated_monoid()
    # {y} and {x,y} have the same square, so α₁(T) is the chain ∅ < {y} < T
    assert type_monoid().alpha1(t).semiring.n == 3
    scheme = spec_scheme(type_monoid(), t)
    assert scheme.space.n == 2
    # every element is inverted over the empty open
    assert scheme.sections(scheme.lattice.zero).n == 1


@pytest.mark.parametrize("name", sorted(monoid_corpus()))
def test_adjunction_at_monoids(name):
    assert adjunction_check(type_monoid(), monoid_corpus()[name]).ok


def test_patching_for_the_chain():
    assert patching_condition(type_semiring(), chain3(), strong=True)


def test_identity_morphism_of_a_spectrum():
    scheme = spec_scheme(type_semiring(), f1())
    identity = identity_morphism(scheme)
    assert identity.is_identity and identity.is_iso


def test_spec_of_reduction_mod_six():
    z12, z6 = cyclic_ring(12), cyclic_ring(6)
    morphism = spec_scheme_map(type_ring(), z12, z6, tuple(a % 6 for a in range(12)))
    assert morphism.point_map().mapping in ((0, 1), (1, 0))


def test_spec_preserves_composition():
    rings = [cyclic_ring(12), cyclic_ring(6), cyclic_ring(2)]
    assert functoriality_check(
        type_ring(), rings, tuple(a % 6 for a in range(12)), tuple(a % 2 for a in range(6))
    )


def test_tau_scheme_of_sierpinski():
    scheme = tau_scheme(sierpinski())
    assert [s.n for s in scheme.sheaf.sections] == [1, 2, 3]
    assert check_scheme(scheme)


def test_tau_scheme_needs_a_sober_space():
    with pytest.raises(PreconditionError):
        tau_scheme(indiscrete(2))


@pytest.mark.parametrize(
    "source, target",
    [(sierpinski(), sierpinski()), (discrete(2), sierpinski()), (one_point(), discrete(2))],
)
def test_tau_morphisms_are_continuous_maps(source, target):
    assert tau_right_adjoint_check(source, target)
