import pytest
from hypothesis import given
from hypothesis import strategies as st

from idemspec.algebra.catalog import chain3, corpus, diamond, f1, n_eps, zero_semiring
from idemspec.algebra.localization import localize_at_element
from idemspec.algebra.primes import is_local, maximal_non_units, primes
from idemspec.algebra.semiring import (
    boolean_core,
    build_hom,
    check_idempotent_mult,
    direct_product,
    identity,
    product_projections,
    semiring_from_tables,
)
from idemspec.algebra.structure import find_isomorphism, generated_subset, is_hom
from idemspec.errors import LawViolation, PreconditionError


def test_corpus_is_idealic():
    assert all(r.is_idealic for r in corpus().values())


def test_idempotent_multiplication():
    assert chain3().is_idempotent_mult
    assert diamond().is_idempotent_mult
    assert not n_eps().is_idempotent_mult
    assert check_idempotent_mult(diamond())
    assert check_idempotent_mult(n_eps()).law == "multiplicative idempotency"


def test_inverting_zero_gives_the_zero_semiring():
    trivial = localize_at_element(chain3(), 0).semiring
    assert find_isomorphism(trivial, zero_semiring()) is not None
    assert zero_semiring().is_idealic


def test_powers_cycle():
    r = n_eps()
    assert r.powers(r.index("ε")) == (r.one, r.index("ε"), r.zero)


def test_non_associative_table_is_rejected():
    add = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
    mul = [[0, 0, 0, 0], [0, 3, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    with pytest.raises(LawViolation) as e:
        semiring_from_tables(add, mul, 0, 3)
    assert e.value.law == "multiplicative associativity"


def test_product_of_f1_with_itself_is_the_diamond():
    assert find_isomorphism(direct_product(f1(), f1()), diamond()) is not None


def test_product_projections_are_homs():
    first, second = product_projections(chain3(), f1())
    assert first.source.n == 6
    assert is_hom(first.source, first.target, first.mapping)
    assert is_hom(second.source, second.target, second.mapping)


def test_hom_must_preserve_one():
    r = chain3()
    assert build_hom(f1(), r, (0, 2)).mapping == (0, 2)
    with pytest.raises(LawViolation) as e:
        build_hom(f1(), r, (0, 1))
    assert e.value.law == "preserves one"


def test_hom_composition_with_identity():
    f = build_hom(f1(), chain3(), (0, 2))
    assert f.then(identity(chain3())) == f
    assert identity(f1()).then(f) == f
    assert f.is_injective and not f.is_surjective


@pytest.mark.parametrize(
    "semiring, size",
    [(f1(), 2), (chain3(), 2), (diamond(), 4)],
)
def test_boolean_core(semiring, size):
    core = boolean_core(semiring)
    assert core.semiring.n == size
    assert all(core.negation[core.negation[i]] == i for i in range(size))


def test_boolean_core_needs_idempotent_multiplication():
    with pytest.raises(PreconditionError):
        boolean_core(n_eps())


@pytest.mark.parametrize(
    "semiring, expected",
    [(f1(), ("0",)), (chain3(), ("0", "m")), (diamond(), ("a", "b")), (n_eps(), ("ε",))],
)
def test_primes(semiring, expected):
    assert tuple(semiring.names[p] for p in primes(semiring)) == expected


def test_local_semirings():
    assert is_local(chain3())
    assert not is_local(diamond())
    assert maximal_non_units(diamond()) == (1, 2)


def test_generated_subset_contains_constants():
    r = diamond()
    assert generated_subset(r, []) == frozenset({r.zero, r.one})
    assert generated_subset(r, [1]) == frozenset({0, 1, 3})


@given(
    st.sampled_from(sorted(corpus())),
    st.data(),
)
def test_multiplication_is_monotone(name, data):
    r = corpus()[name]
    a, b, c = (data.draw(st.integers(min_value=0, max_value=r.n - 1)) for _ in range(3))
    if r.leq(a, b):
        assert r.leq(r.times(a, c), r.times(b, c))
    assert r.leq(r.times(a, b), r.plus(r.times(a, b), c))
