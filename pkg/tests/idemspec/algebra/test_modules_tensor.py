import pytest

from idemspec.algebra.catalog import chain3, diamond, f1
from idemspec.algebra.modules import (
    ModuleMap,
    build_module,
    check_module_map,
    cim_as_module,
    free_module,
    hom_module,
    module_coproduct,
    module_homs,
    module_isomorphism,
    one_point_module,
    regular_module,
)
from idemspec.algebra.semiring import build_hom
from idemspec.algebra.tensor import (
    adjunction_naturality_check,
    all_filters_bruteforce,
    extension_counit,
    scalar_extension,
    tensor,
    tensor_hom_adjunction_check,
    tensor_swap,
    unit_top_witness,
)
from idemspec.errors import LawViolation


@pytest.fixture
def unit():
    return regular_module(f1())


@pytest.fixture
def chain():
    return cim_as_module(chain3().add)


def test_action_must_fix_elements_under_one():
    with pytest.raises(LawViolation) as e:
        build_module(f1(), chain3().add, [[0, 0, 0], [0, 2, 2]])
    assert e.value.law == "1·x = x"


def test_free_module_on_two_generators_is_the_diamond():
    free = free_module(f1(), 2)
    assert free.module.n == 4
    assert free.generators == (2, 1)
    assert module_isomorphism(free.module, cim_as_module(diamond().add)) is not None


def test_free_module_extension_is_a_module_map(chain):
    free = free_module(f1(), 2)
    extended = free.extend((1, 2), chain)
    assert extended == (0, 2, 1, 2)
    assert check_module_map(free.module, chain, extended)


def test_coproduct_of_two_units_is_free(unit):
    coproduct = module_coproduct([unit, unit])
    assert module_isomorphism(coproduct.module, free_module(f1(), 2).module) is not None
    assert coproduct.injections == ((0, 2), (0, 1))


def test_hom_module_size(unit, chain):
    assert hom_module(unit, chain).module.n == 3


def test_unit_tensor_unit(unit):
    tp = tensor(unit, unit)
    assert tp.module.n == 2
    assert module_isomorphism(tp.module, unit) is not None


def test_unit_is_neutral_for_tensor(unit, chain):
    tp = tensor(unit, chain)
    assert module_isomorphism(tp.module, chain) is not None


def test_swap_is_an_isomorphism(unit, chain):
    mapping = tensor_swap(tensor(unit, chain), tensor(chain, unit))
    assert sorted(mapping) == [0, 1, 2]


def test_reachable_filters_match_brute_force(unit, chain):
    assert all_filters_bruteforce(unit, chain) == tensor(unit, chain).filters
    assert all_filters_bruteforce(chain, chain) == tensor(chain, chain).filters


def test_brute_force_is_bounded():
    square = cim_as_module(diamond().add)
    with pytest.raises(LawViolation):
        all_filters_bruteforce(square, square)


def test_tensor_hom_adjunction(unit, chain):
    assert tensor_hom_adjunction_check(unit, unit, chain)


def test_zero_tensor_does_not_preserve_top(unit):
    assert unit_top_witness(unit, unit) == 0


def test_scalar_extension_of_the_unit_is_regular(unit):
    phi = build_hom(f1(), chain3(), (0, 2))
    extension = scalar_extension(phi, unit)
    assert extension.module.n == 3
    assert module_isomorphism(extension.module, regular_module(chain3())) is not None


def test_extension_counit_is_a_module_map():
    phi = build_hom(f1(), chain3(), (0, 2))
    counit = extension_counit(phi, regular_module(chain3()))
    assert len(counit) == 6
    assert set(counit) == {0, 1, 2}


def test_one_point_module_is_terminal_and_absorbs_tensor(chain):
    point = one_point_module(f1())
    assert len(module_homs(chain, point)) == 1
    assert tensor(chain, point).module.n == 1


def test_adjunction_is_natural_in_the_first_argument(unit, chain):
    g = ModuleMap(unit, chain, (0, 1))
    assert check_module_map(unit, chain, g.mapping)
    assert adjunction_naturality_check(g, unit, unit)
    assert adjunction_naturality_check(g, chain, unit)


def test_copairing_restricts_to_each_map(unit, chain):
    coproduct = module_coproduct([unit, unit])
    maps = [(0, 1), (0, 2)]
    copaired = coproduct.copair(maps, chain)
    assert check_module_map(coproduct.module, chain, copaired)
    for injection, f in zip(coproduct.injections, maps):
        assert tuple(copaired[x] for x in injection) == f
