import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from catkit.errors import InputError
from catkit.kernel import Carrier, directed_eq, existing_identity, kleene_eq, quantify_existing


def carriers(max_size):
    for n in range(1, max_size + 1):
        for bits in itertools.product([False, True], repeat=n):
            yield Carrier(n, np.array(bits))


E01 = Carrier.from_indices(4, [0, 1])


def test_existing_identity_examples():
    assert existing_identity(E01, 0, 0)
    assert not existing_identity(E01, 2, 2)
    assert not existing_identity(E01, 0, 1)


def test_kleene_examples():
    assert kleene_eq(E01, 2, 3)
    assert not kleene_eq(E01, 0, 1)
    assert all(kleene_eq(E01, x, x) for x in range(4))


def test_directed_examples():
    assert all(directed_eq(E01, 2, y) for y in range(4))
    assert not directed_eq(E01, 0, 1)
    assert directed_eq(E01, 0, 0)
    assert not directed_eq(E01, 1, 3)


def test_quantifiers():
    empty = Carrier(3, np.zeros(3, dtype=bool))
    assert quantify_existing(empty, "forall", lambda x: False)
    assert not quantify_existing(empty, "exists", lambda x: True)
    assert quantify_existing(E01, "exists", lambda x: x == 1)
    assert quantify_existing(E01, "forall", E01.exists)
    with pytest.raises(InputError):
        quantify_existing(E01, "most", lambda x: True)


@pytest.mark.parametrize("fn", [existing_identity, kleene_eq, directed_eq])
def test_index_errors(fn):
    with pytest.raises(InputError):
        fn(E01, 0, 4)
    with pytest.raises(InputError):
        fn(E01, -1, 0)


def test_carrier_validation():
    with pytest.raises(InputError):
        Carrier(0, [])
    with pytest.raises(InputError):
        Carrier(3, [True, False])
    with pytest.raises(InputError):
        Carrier.from_indices(2, [5])
    c = Carrier.from_indices(3, [1])
    assert c.existing_indices == [1] and c.nonexistent_indices == [0, 2]
    assert c.has_nonexistent
    with pytest.raises(ValueError):
        c.existing[0] = True


def test_relation_lattice_exhaustive():
    for c in carriers(6):
        n = c.size
        dom = range(n)
        for x, y in itertools.product(dom, repeat=2):
            if existing_identity(c, x, y):
                assert kleene_eq(c, x, y) and directed_eq(c, x, y)
            assert kleene_eq(c, x, y) == kleene_eq(c, y, x)
            assert existing_identity(c, x, y) == existing_identity(c, y, x)
        for x in dom:
            assert kleene_eq(c, x, x) and directed_eq(c, x, x)
            assert existing_identity(c, x, x) == c.exists(x)
        for x, y, z in itertools.product(dom, repeat=3):
            if kleene_eq(c, x, y) and kleene_eq(c, y, z):
                assert kleene_eq(c, x, z)
            if existing_identity(c, x, y) and existing_identity(c, y, z):
                assert existing_identity(c, x, z)
            if directed_eq(c, x, y) and directed_eq(c, y, z):
                assert directed_eq(c, x, z)


@st.composite
def carrier_and_elems(draw):
    n = draw(st.integers(1, 12))
    mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    xs = draw(st.tuples(*[st.integers(0, n - 1)] * 3))
    return Carrier(n, np.array(mask)), xs


@given(carrier_and_elems())
def test_definitions_match_formulas(data):
    c, (x, y, _) = data
    ex, ey = c.exists(x), c.exists(y)
    assert existing_identity(c, x, y) == (x == y and ex and ey)
    assert kleene_eq(c, x, y) == ((not (ex or ey)) or x == y)
    assert directed_eq(c, x, y) == ((not ex) or x == y)


@given(carrier_and_elems())
def test_directed_is_not_symmetric_only_through_existence(data):
    c, (x, y, _) = data
    # x ≥ y and y ≥ x together give x ≅ y
    if directed_eq(c, x, y) and directed_eq(c, y, x):
        assert kleene_eq(c, x, y)
