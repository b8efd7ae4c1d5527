import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from idemspec.algebra.catalog import chain3, diamond
from idemspec.algebra.order import (
    FinCIM,
    build_cim,
    check_lattice,
    cim_from_order,
    down_sets,
    ideal_completion,
    is_compact,
    is_directed,
    join_irreducibles,
    order_of,
)
from idemspec.algebra.structure import freeze_table
from idemspec.errors import FormatError, LawViolation


@pytest.fixture
def c3():
    return chain3().add


@pytest.fixture
def b4():
    return diamond().add


def test_chain_order(c3):
    assert c3.leq(0, 1) and c3.leq(1, 2) and not c3.leq(2, 1)
    assert c3.covers == ((0, 1), (1, 2))
    assert c3.order.flags.writeable is False


def test_diamond_meet_and_join(b4):
    a, b = b4.index("a"), b4.index("b")
    assert b4.join[a][b] == b4.top
    assert b4.meet[a][b] == b4.bottom
    assert check_lattice(b4)


@pytest.mark.parametrize("cim, expected", [(chain3().add, (1, 2)), (diamond().add, (1, 2))])
def test_join_irreducibles(cim, expected):
    assert join_irreducibles(cim) == expected


def test_every_finite_element_is_compact(b4):
    assert all(is_compact(b4, a) for a in range(b4.n))


def test_join_table_without_suprema_is_not_compact():
    # sup{1} evaluates to 2, which is not below 1
    broken = FinCIM(((0, 2, 0), (1, 1, 1), (2, 2, 2)), 0, 2)
    assert not is_compact(broken, 2)
    assert is_directed(broken, [1])
    assert not is_directed(broken, [])


def test_down_sets_of_chain(c3):
    assert down_sets(c3) == (0b000, 0b001, 0b011, 0b111)


def test_ideal_completion_of_finite_cim_is_itself(b4):
    completion = ideal_completion(b4)
    assert len(completion.ideals) == 4
    assert completion.is_isomorphism()
    assert completion.compact == tuple(range(4))


def test_build_cim_rejects_non_idempotent_join():
    with pytest.raises(LawViolation) as e:
        build_cim([[0, 1], [1, 0]], 0, 1)
    assert e.value.law == "idempotency"


def test_ragged_table_reports_row():
    with pytest.raises(FormatError) as e:
        freeze_table([[0, 1], [1]], 2, name="add")
    assert e.value.row == 1


def test_cim_from_order_rejects_non_lattice():
    antichain = np.eye(2, dtype=bool)
    with pytest.raises(FormatError):
        cim_from_order(antichain)


def test_cim_from_chain_order():
    leq = np.array([[True, True, True], [False, True, True], [False, False, True]])
    cim = cim_from_order(leq, ["0", "m", "1"])
    assert cim.bottom == 0 and cim.top == 2
    assert cim.join == chain3().add.join


@given(st.sets(st.integers(min_value=0, max_value=3)))
def test_sup_is_least_upper_bound(subset):
    b4 = diamond().add
    s = b4.sup(subset)
    assert all(b4.leq(x, s) for x in subset)
    uppers = [u for u in range(b4.n) if all(b4.leq(x, u) for x in subset)]
    assert all(b4.leq(s, u) for u in uppers)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_inf_is_greatest_lower_bound(a, b):
    b4 = diamond().add
    m = b4.inf((a, b))
    assert b4.leq(m, a) and b4.leq(m, b)
    assert all(b4.leq(x, m) for x in range(b4.n) if b4.leq(x, a) and b4.leq(x, b))


def test_order_of_reads_rows_as_lower_elements(c3):
    leq = order_of(c3)
    assert leq.shape == (3, 3)
    assert leq[0].all()
    assert not leq[2, 0]


def test_up_and_down_sets(c3):
    assert c3.up_set(1) == frozenset({1, 2})
    assert c3.down_set(1) == frozenset({0, 1})
