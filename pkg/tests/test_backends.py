import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catkit import _kernels_py
from catkit import models

compiled = pytest.importorskip("catkit._kernels")


@st.composite
def raw_tables(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    exist = np.array(draw(st.lists(st.booleans(), min_size=n, max_size=n)))
    idx = st.integers(0, n - 1)
    dom = np.array(draw(st.lists(idx, min_size=n, max_size=n)), dtype=np.int64)
    cod = np.array(draw(st.lists(idx, min_size=n, max_size=n)), dtype=np.int64)
    comp = np.array(draw(st.lists(idx, min_size=n * n, max_size=n * n)), dtype=np.int64).reshape(n, n)
    return exist, dom, cod, comp


@settings(max_examples=300, deadline=None)
@given(raw_tables())
def test_category_axioms_agree(t):
    assert compiled.category_axioms(*t) == _kernels_py.category_axioms(*t)


@settings(max_examples=200, deadline=None)
@given(raw_tables(), st.data())
def test_functor_and_naturality_agree(t, data):
    exist, _, _, comp = t
    n = exist.shape[0]
    idx = st.integers(0, n - 1)
    f = np.array(data.draw(st.lists(idx, min_size=n, max_size=n)), dtype=np.int64)
    g = np.array(data.draw(st.lists(idx, min_size=n, max_size=n)), dtype=np.int64)
    e = np.array(data.draw(st.lists(idx, min_size=n, max_size=n)), dtype=np.int64)
    assert compiled.functor_composition(f, comp, comp, exist) == _kernels_py.functor_composition(f, comp, comp, exist)
    assert compiled.naturality(e, f, g, comp, exist, comp, exist) == \
        _kernels_py.naturality(e, f, g, comp, exist, comp, exist)


def test_agree_on_finset():
    c = models.skeletal_finset(3)
    args = (c.exist, c.dom, c.cod, c.comp)
    assert compiled.category_axioms(*args) == _kernels_py.category_axioms(*args)
    assert all(v is None for v in compiled.category_axioms(*args).values())
