import itertools

import numpy as np
import pytest

from catkit import config, models
from catkit.category import check_category, identities
from catkit.errors import ConstructionError, InputError, ResourceError
from catkit.monoidal import check_smcc, double_negation

from oracles import count_functions, heyting_residual


def test_lattice_validation():
    with pytest.raises(InputError, match="reflexive"):
        models.LatticeSpec([0, 1], [[True, True], [False, False]])
    with pytest.raises(InputError, match="antisymmetric"):
        models.LatticeSpec([0, 1], [[True, True], [True, True]])
    with pytest.raises(InputError, match="transitive"):
        models.LatticeSpec.from_relation(range(3), lambda a, b: a == b or (a, b) in {(0, 1), (1, 2)})


def test_finset_counts():
    for k in range(5):
        cat = models.skeletal_finset(k)
        expect = sum(count_functions(m, n) for m in range(k + 1) for n in range(k + 1))
        assert int(cat.exist.sum()) == expect
        assert len(identities(cat)) == k + 1
    assert int(models.skeletal_finset(4).exist.sum()) == 499
    zero = models.skeletal_finset(0)
    assert zero.size == 2 and identities(zero) == {0}
    with pytest.raises(InputError):
        models.skeletal_finset(-1)


def test_finset_guard(monkeypatch):
    monkeypatch.setenv("CATKIT_MAX_SIZE", "100")
    with pytest.raises(ResourceError):
        models.skeletal_finset(4)


def test_finset_composition_is_function_composition():
    cat = models.skeletal_finset(3)
    ex = [int(x) for x in np.flatnonzero(cat.exist)]
    for f, g in itertools.product(ex, repeat=2):
        gf = cat.c(g, f)
        if cat.cod[f] != cat.dom[g]:
            assert not cat.E(gf)
            continue
        fv, gv = models.finset_values(cat, f), models.finset_values(cat, g)
        assert models.finset_values(cat, gf) == tuple(gv[v] for v in fv)


def test_poset_counts(div12_spec, div12):
    assert len(identities(div12)) == 6
    pairs = sum(1 for a, b in itertools.product(div12_spec.elements, repeat=2) if b % a == 0)
    assert int(div12.exist.sum()) == pairs
    d = models.discrete_category(3)
    assert int(d.exist.sum()) == 3 and identities(d) == {0, 1, 2}


def test_monoid_category():
    assert check_category(models.cyclic_group_category(2)).verdict
    with pytest.raises(InputError, match="unit"):
        models.monoid_category([[0, 0], [1, 1]], 0)       # left-zero semigroup
    with pytest.raises(InputError, match="associative"):
        models.monoid_category([[0, 1, 2], [1, 0, 0], [2, 1, 0]], 0)
    t = models.trivial_category()
    assert t.size == 2 and identities(t) == {0}


def test_cat_of_cats():
    t, d = models.trivial_category(), models.discrete_category(2)
    one = models.cat_of_cats([t])
    assert int(one.exist.sum()) == 1 and identities(one) == {0}
    cc = models.cat_of_cats([t, d])
    assert check_category(cc).verdict
    assert len(cc.hom(0, 1)) == 2
    assert len(cc.hom(1, 0)) == 1
    assert len(cc.hom(1, 1)) == 4
    assert identities(cc) == {0, 1}
    for e in identities(cc):
        i, j, F = cc.functors[e]
        assert i == j and np.array_equal(F.map[F.source.exist], np.flatnonzero(F.source.exist))


def test_cat_of_cats_limits():
    big = models.discrete_category(5)
    with pytest.raises(ResourceError):
        models.cat_of_cats([big])
    with pytest.raises(ResourceError):
        models.cat_of_cats([models.discrete_category(2)] * 3, max_functors=5)


def test_heyting_adjunction_exhaustive():
    for spec in (models.LatticeSpec.boolean(2), models.LatticeSpec.divisors(12), models.LatticeSpec.chain(4)):
        s = models.heyting_smcc(spec)
        meet, leq = spec.meet, spec.leq
        k = len(spec)
        for x, y, z in itertools.product(range(k), repeat=3):
            assert leq[meet[x][y], z] == leq[y, s.closed.imp(x, z)]
        els = spec.elements
        for x, z in itertools.product(range(k), repeat=2):
            want = heyting_residual(list(range(k)), lambda p, q: bool(leq[p, q]), lambda p, q: meet[p][q], x, z)
            assert s.closed.imp(x, z) == want


def test_non_distributive():
    with pytest.raises(ConstructionError, match=r"\('a', 'b', 'c'\)"):
        models.heyting_smcc(models.LatticeSpec.diamond())
    with pytest.raises(ConstructionError):
        models.heyting_smcc(models.LatticeSpec.discrete(2))


def test_group_smcc():
    one = models.group_smcc(1)
    assert one.base.size == 2 and check_smcc(one).verdict
    z3 = models.group_smcc(3)
    for A, bot in itertools.product(range(3), repeat=2):
        assert double_negation(z3, A, bot) == A


def test_graded_validation():
    with pytest.raises(ConstructionError):
        models.graded_smcc(3, 2, 1)
    with pytest.raises(InputError):
        models.graded_smcc(0)


@pytest.mark.parametrize("make", [
    lambda: models.skeletal_finset(3), lambda: models.poset_category(models.LatticeSpec.divisors(30)),
    lambda: models.poset_category(models.LatticeSpec.diamond()), lambda: models.cyclic_group_category(5),
    lambda: models.monoid_category([[0, 1], [1, 1]], 0), lambda: models.discrete_category(4),
    lambda: models.cat_of_cats([models.trivial_category(), models.cyclic_group_category(2)]),
])
def test_constructors_pass_check_category(make):
    assert check_category(make()).verdict


@pytest.mark.parametrize("make", [
    lambda: models.heyting_smcc(models.LatticeSpec.chain(5)),
    lambda: models.heyting_smcc(models.LatticeSpec.chain(3)),
    lambda: models.group_smcc(4), lambda: models.graded_smcc(2, 2, 1), lambda: models.graded_smcc(2, 4, 2),
])
def test_constructors_pass_check_smcc(make):
    s = make()
    assert check_category(s.base).verdict
    assert check_smcc(s).verdict, check_smcc(s).format_text()


def test_smcc_check_respects_guard():
    s = models.heyting_smcc(models.LatticeSpec.boolean(3))
    with pytest.raises(ResourceError):
        check_smcc(s)


def test_default_guard():
    assert config.max_size() == 600
