import numpy as np
import pytest

from idemspec.algebra.semiring import check_idealic
from idemspec.enumeration import (
    canonical_form,
    enumerate_lattices,
    enumerate_orders,
    enumerate_posets,
    enumerate_semirings,
    naive_poset_count,
)
from idemspec.errors import FormatError, GuardExceeded


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 16)])
def test_poset_counts(n, count):
    assert len(enumerate_orders(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_naive_count_agrees(n):
    assert naive_poset_count(n) == len(enumerate_orders(n))


def test_naive_count_is_limited():
    with pytest.raises(FormatError):
        naive_poset_count(5)


def test_canonical_form_ignores_labels():
    up = np.array([[True, True], [False, True]])
    down = np.array([[True, False], [True, True]])
    assert canonical_form(up) == canonical_form(down)


def test_posets_are_sober_spaces():
    spaces = list(enumerate_posets(3))
    assert len(spaces) == 5
    assert all(s.is_t0 and s.is_sober for s in spaces)


def test_orders_are_read_only():
    with pytest.raises(ValueError):
        enumerate_orders(2)[0][0, 0] = False


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2)])
def test_lattice_counts(n, count):
    assert len(enumerate_lattices(n)) == count


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2)])
def test_idealic_semiring_counts(n, count):
    found = enumerate_semirings(n, idealic_only=True)
    assert len(found) == count
    assert all(check_idealic(r) for r in found)


def test_enumeration_guard(monkeypatch):
    monkeypatch.setenv("IDEMSPEC_MAX_ENUMERATION", "3")
    with pytest.raises(GuardExceeded):
        enumerate_orders(4)
