import pytest

from idemspec.algebra.catalog import chain3, diamond, f1, n_eps
from idemspec.algebra.modules import FinModule, regular_module
from idemspec.algebra.structure import find_isomorphism
from idemspec.constants import BlockKind
from idemspec.errors import FormatError, LawViolation, ParseError
from idemspec.io.parser import emit, emit_object, parse, tokenize
from idemspec.schemes.algebras import cyclic_ring
from idemspec.topology.space import FinTop, closed_set_semiring, sierpinski


def test_corpus_fixture_matches_catalog(read_fixture):
    document = parse(read_fixture("corpus.idem"))
    assert list(document.objects) == ["F1", "C3", "B4", "Neps"]
    for name, expected in zip(document.objects, (f1(), chain3(), diamond(), n_eps())):
        assert find_isomorphism(document.get(name), expected) is not None


def test_spaces_fixture(read_fixture):
    spaces = parse(read_fixture("spaces.idem")).of_kind(BlockKind.TOP)
    assert list(spaces) == ["Sierpinski", "D2", "I2", "V3"]
    assert all(isinstance(s, FinTop) for s in spaces.values())
    assert not spaces["I2"].is_t0
    assert spaces["V3"].is_sober


def test_modules_fixture_resolves_references(read_fixture):
    document = parse(read_fixture("modules.idem"))
    c3 = document.get("C3")
    assert isinstance(c3, FinModule)
    assert c3.ring == document.get("F1")
    assert c3.carrier == document.get("L3")
    assert [b.over for b in document.blocks] == [None, "F1", None, "F1"]


def test_rings_fixture(read_fixture):
    rings = parse(read_fixture("rings.idem")).of_kind(BlockKind.RING)
    assert find_isomorphism(rings["Z12"], cyclic_ring(12)) is not None


def test_comments_and_newlines_are_skipped():
    tokens = tokenize("# heading\nsemiring X {\n")
    assert [t.kind for t in tokens] == ["atom", "atom", "punct"]
    assert (tokens[1].line, tokens[1].column) == (2, 10)


def test_ragged_table_reports_row_and_position(read_fixture):
    with pytest.raises(ParseError) as e:
        parse(read_fixture("malformed.idem"))
    assert e.value.row == 1
    assert (e.value.line, e.value.column) == (1, 1)
    assert "add row has 2 entries, expected 3" in str(e.value)


def test_law_violation_is_not_a_format_error(read_fixture):
    with pytest.raises(LawViolation) as e:
        parse(read_fixture("not_a_semiring.idem"))
    assert e.value.law == "multiplicative associativity"


def test_unknown_element_name():
    with pytest.raises(FormatError):
        parse("semiring X { elements: 0 1; add: 0 1, 1 z; mul: 0 0, 0 1; }")


def test_duplicate_block_names():
    text = "monoid M { elements: 1; mul: 1; }\nmonoid M { elements: 1; mul: 1; }"
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.line == 2


def test_unknown_kind():
    with pytest.raises(ParseError):
        parse("group G { elements: 1; }")


def test_missing_semicolon():
    with pytest.raises(ParseError):
        parse("monoid M { elements: 1 mul: 1; }")


def test_indices_stand_in_for_names():
    document = parse("semiring X { elements: 0 1; add: 0 1, 1 1; mul: 0 0, 0 1; }")
    indexed = parse("semiring X { elements: a b; add: 0 1, 1 1; mul: 0 0, 0 1; }")
    assert document.get("X").mul == indexed.get("X").mul


def test_canonical_text_is_a_fixed_point(read_fixture):
    text = read_fixture("canonical.idem")
    assert emit(parse(text)) == text


def test_emit_replaces_unsafe_names():
    block = emit_object("CS", closed_set_semiring(sierpinski()).semiring)
    assert "elements: 0 1 2;" in block
    assert find_isomorphism(parse(block).get("CS"), chain3()) is not None


def test_module_needs_ring_name():
    document = parse("semiring F1 { elements: 0 1; add: 0 1, 1 1; mul: 0 0, 0 1; }")
    with pytest.raises(FormatError):
        emit_object("M", regular_module(document.get("F1")))
