import pytest

from idemspec.algebra.catalog import f1
from idemspec.errors import GlueError
from idemspec.schemes.scheme import tau_presheaf
from idemspec.schemes.sheaf import (
    check_presheaf,
    constant_presheaf,
    covers,
    glue_section,
    sheaf_check,
    sheafify,
)
from idemspec.topology.space import closed_set_semiring, discrete, sierpinski

EMPTY_COVER = "empty cover: sections over the empty open are terminal"


@pytest.fixture
def lattice():
    # {c,o} < {c} < {} in the order of C(X)
    return closed_set_semiring(sierpinski()).semiring


def test_bottom_is_covered_by_the_empty_cover(lattice):
    assert list(covers(lattice, lattice.zero)) == [()]


def test_chain_has_no_proper_antichain_covers(lattice):
    assert list(covers(lattice, lattice.one)) == []


def test_discrete_top_is_covered_by_its_atoms():
    lattice = closed_set_semiring(discrete(2)).semiring
    assert list(covers(lattice, lattice.one)) == [(1, 2)]


def test_constant_presheaf_is_a_presheaf(lattice):
    assert check_presheaf(constant_presheaf(lattice, f1()))


@pytest.mark.parametrize("space", [sierpinski(), discrete(2)])
def test_constant_presheaf_fails_over_the_empty_open(space):
    lattice = closed_set_semiring(space).semiring
    verdict = sheaf_check(constant_presheaf(lattice, f1()))
    assert verdict.law == EMPTY_COVER
    assert verdict.witness[0] == lattice.zero


@pytest.mark.parametrize("space", [sierpinski(), discrete(2)])
def test_localizations_of_closed_sets_form_a_sheaf(space):
    assert sheaf_check(tau_presheaf(closed_set_semiring(space).semiring))


def test_sheafification_of_constant_presheaf(lattice):
    result = sheafify(constant_presheaf(lattice, f1()))
    assert [s.n for s in result.sheaf.sections] == [1, 2, 2]
    assert sheaf_check(result.sheaf)
    assert not result.is_iso


def test_sheafification_of_disconnected_space():
    lattice = closed_set_semiring(discrete(2)).semiring
    result = sheafify(constant_presheaf(lattice, f1()))
    # two components, so global sections are F1 x F1
    assert result.sheaf.sections[lattice.one].n == 4


def test_glue_section_needs_a_unique_match(lattice):
    presheaf = constant_presheaf(lattice, f1())
    assert glue_section(presheaf, 2, [(1, 1)]) == 1
    with pytest.raises(GlueError):
        glue_section(presheaf, 2, [])
