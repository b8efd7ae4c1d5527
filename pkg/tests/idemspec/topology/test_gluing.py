import pytest

from idemspec.algebra.catalog import chain3, corpus, diamond
from idemspec.algebra.localization import induced_map, localize_at_element
from idemspec.errors import GlueError
from idemspec.topology.gluing import compatible_families, glue, open_immersion_check, tau_iso_check
from idemspec.topology.space import discrete, sierpinski


def test_glue_over_the_two_atoms_of_the_diamond():
    r = diamond()
    # R_a has classes {0,b},{a,1}; R_b has {0,a},{b,1}
    assert glue(r, r.one, [(r.index("a"), 1), (r.index("b"), 0)]) == r.index("a")
    assert glue(r, r.one, [(r.index("a"), 1), (r.index("b"), 1)]) == r.one


def test_glue_requires_a_cover():
    r = diamond()
    with pytest.raises(GlueError) as e:
        glue(r, r.one, [(r.index("a"), 1)])
    assert e.value.law == "cover sums to s"


def test_glue_rejects_sections_outside_the_piece():
    r = diamond()
    with pytest.raises(GlueError) as e:
        glue(r, r.one, [(r.index("a"), 5), (r.index("b"), 0)])
    assert e.value.law == "section in carrier"


def test_compatible_families_over_disjoint_pieces():
    r = diamond()
    assert len(compatible_families(r, [r.index("a"), r.index("b")])) == 4


def test_single_piece_cover_of_the_chain():
    r = chain3()
    m = r.index("m")
    assert glue(r, m, [(m, 1)]) == 1


@pytest.mark.parametrize("name", sorted(corpus()))
def test_basic_opens_are_open_immersions(name):
    r = corpus()[name]
    for f in range(r.n):
        assert open_immersion_check(r, f)


@pytest.mark.parametrize("space", [sierpinski(), discrete(2)])
def test_localizing_closed_sets_removes_the_closed_set(space):
    for z in range(len(space.closed)):
        assert tau_iso_check(space, z)


@pytest.mark.parametrize("name", sorted(n for n, r in corpus().items() if r.is_idealic))
def test_glue_is_the_power_weighted_sum_of_lifts(name):
    r = corpus()[name]
    for a in range(r.n):
        for b in range(r.n):
            covering = [a, b]
            s = r.sum(covering)
            loc_s = localize_at_element(r, s)
            pieces = [localize_at_element(r, si) for si in covering]
            for family in compatible_families(r, covering):
                lifts = [piece.result.lift(fi) for piece, fi in zip(pieces, family)]
                expected = loc_s(r.sum(r.times(r.power(si, r.n), x) for si, x in zip(covering, lifts)))
                assert glue(r, s, list(zip(covering, family))) == expected


def test_glue_reports_a_scan_that_disagrees_with_the_formula(monkeypatch):
    r = diamond()
    parts = [(r.index("a"), 1), (r.index("b"), 0)]
    glued = glue(r, r.one, parts)
    other = next(c for c in range(localize_at_element(r, r.one).semiring.n) if c != glued)

    def swapped(source, target):
        mapping = list(induced_map(source, target))
        mapping[glued], mapping[other] = mapping[other], mapping[glued]
        return tuple(mapping)

    monkeypatch.setattr("idemspec.topology.gluing.induced_map", swapped)
    with pytest.raises(GlueError) as e:
        glue(r, r.one, parts)
    assert e.value.law == "glue formula matches scan"
    assert e.value.witness == (glued, other)
