import numpy as np
import pytest

from catkit import models
from catkit.category import (FiniteCategory, check_category, hom_set, identities, opposite_category,
                             product_category)
from catkit.errors import InputError, ResourceError
from catkit.kernels import BACKEND

from mutation import mutate_category
from oracles import axiom_fails_at, first_failures, tables


def small_models():
    return [
        models.cyclic_group_category(2),
        models.cyclic_group_category(3),
        models.trivial_category(),
        models.discrete_category(2),
        models.poset_category(models.LatticeSpec.divisors(12)),
        models.poset_category(models.LatticeSpec.chain(3)),
        models.skeletal_finset(2),
        models.cat_of_cats([models.trivial_category(), models.discrete_category(2)]),
    ]


@pytest.mark.parametrize("cat", small_models(), ids=lambda c: f"n{c.size}")
def test_constructors_pass(cat):
    r = check_category(cat)
    assert r.verdict, r.format_text()


def test_z2_s3_redirect():
    cat = models.cyclic_group_category(2)
    comp = cat.comp.copy()
    comp[1, 1] = cat.undefined
    bad = FiniteCategory.from_tables(cat.exist, cat.dom, cat.cod, comp)
    r = check_category(bad)
    assert not r.verdict
    assert r.first("S3").witness == (1, 1)
    assert "S3 violated at (1,1)" in r.format_text()


def test_s1_fires_on_nonexistent_source():
    cat = models.cyclic_group_category(2)
    dom = cat.dom.copy()
    dom[2] = 0        # the undefined element now has an existing domain
    bad = FiniteCategory.from_tables(cat.exist, dom, cat.cod, cat.comp)
    r = check_category(bad)
    assert r.first("S1").witness == (2,)
    assert "S2" not in r.names()


def test_ne_violation():
    cat = FiniteCategory.from_tables([True], [0], [0], [[0]])
    r = check_category(cat)
    assert r.names() == {"NE"}


def test_degenerate_empty_existence():
    cat = FiniteCategory.from_tables([False, False], [0, 1], [0, 1], [[0, 0], [0, 0]])
    assert check_category(cat).verdict
    assert identities(cat) == set()


@pytest.mark.parametrize("cat", small_models()[:6], ids=lambda c: f"n{c.size}")
def test_minimal_witness_matches_naive_enumeration(cat):
    rng = np.random.default_rng(cat.size)
    for _ in range(15):
        bad, _ = mutate_category(cat, rng)
        r = check_category(bad)
        expect = first_failures(tables(bad))
        got = {v.name: v.witness for v in r.violations}
        assert got == expect


def test_mutation_witnesses_refail():
    rng = np.random.default_rng(7)
    for cat in small_models():
        for _ in range(10):
            bad, what = mutate_category(cat, rng)
            r = check_category(bad)
            tabs = tables(bad)
            for v in r.violations:
                assert axiom_fails_at(tabs, v.name, v.witness), (what, str(v))


def test_identities_and_homs(finset4, div12):
    z2 = models.cyclic_group_category(2)
    assert identities(z2) == {0}
    assert identities(models.skeletal_finset(2)) == {0, 1, 2}
    assert len(hom_set(finset4, 2, 3)) == 9
    for a in identities(div12):
        assert a in hom_set(div12, a, a)
        for b in identities(div12):
            assert len(hom_set(div12, a, b)) <= 1
    with pytest.raises(InputError):
        hom_set(finset4, 5, 1)


@pytest.mark.parametrize("cat", small_models(), ids=lambda c: f"n{c.size}")
def test_composition_typing(cat):
    E = cat.exist
    for x in np.flatnonzero(E):
        for y in np.flatnonzero(E):
            v = cat.c(int(x), int(y))
            if cat.E(v):
                assert cat.dom[v] == cat.dom[y] and cat.cod[v] == cat.cod[x]


def test_opposite(div12, div12_spec):
    op = opposite_category(div12)
    assert check_category(op).verdict
    assert opposite_category(op).same_tables(div12)
    assert identities(op) == identities(div12)
    # reversed order: an arrow a -> b in op exists iff b divides a
    els = div12_spec.elements
    for a in identities(op):
        for b in identities(op):
            assert (len(op.hom(a, b)) == 1) == (els[a] % els[b] == 0)


def test_product_category():
    c = models.cyclic_group_category(2)
    d = models.poset_category(models.LatticeSpec.chain(2))
    p = product_category(c, d)
    assert p.size == c.size * d.size
    assert check_category(p).verdict
    assert identities(p) == {a * d.size + b for a in identities(c) for b in identities(d)}


def test_product_with_trivial_is_original_on_existing(div12):
    t = models.trivial_category()
    p = product_category(div12, t)
    assert check_category(p).verdict
    ex = np.flatnonzero(div12.exist)
    idx = ex * t.size        # pair (x, id) with id = 0
    assert p.exist[idx].all() and p.exist.sum() == len(ex)
    lookup = {int(i): int(x) for x, i in zip(ex, idx)}
    for x, i in zip(ex, idx):
        assert lookup[int(p.dom[i])] == div12.dom[x]
        for y, j in zip(ex, idx):
            v = int(p.comp[i, j])
            if p.E(v):
                assert lookup[v] == div12.comp[x, y]
            else:
                assert not div12.E(div12.comp[x, y])


def test_product_guard():
    c = models.skeletal_finset(2)
    with pytest.raises(ResourceError):
        product_category(c, c, max_size=10)


def test_table_validation():
    with pytest.raises(InputError):
        FiniteCategory.from_tables([True, False], [0, 1], [0], [[0, 1], [1, 1]])
    with pytest.raises(InputError):
        FiniteCategory.from_tables([True, False], [0, 1], [0, 1], [[0, 1], [1]])
    with pytest.raises(InputError):
        FiniteCategory.from_tables([True, False], [0, 7], [0, 1], [[0, 1], [1, 1]])


def test_tables_are_read_only(z2):
    with pytest.raises(ValueError):
        z2.comp[0, 0] = 1


def test_backend_reported():
    assert BACKEND in ("compiled", "python")
