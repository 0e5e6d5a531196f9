"""Functors and natural transformations between finite categories.

Functor conditions (1)–(5) and transformation conditions (1)–(5) are
checked over the whole carrier, non-existent elements included.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InputError, StructuralError
from .report import StructureReport


def _table(values, size, what, target_size):
    try:
        arr = np.array(values, dtype=np.int64)
    except (TypeError, ValueError):
        raise InputError(f"{what} table is not a flat integer list") from None
    if arr.shape != (size,):
        raise InputError(f"{what} table must have {size} entries, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= target_size):
        raise InputError(f"{what} table has entries outside 0..{target_size - 1}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FunctorMap:
    source: object
    target: object
    map: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "map", _table(self.map, self.source.size, "functor", self.target.size))

    def __call__(self, x):
        return int(self.map[x])


@dataclass(frozen=True, eq=False)
class NatTransMap:
    F: FunctorMap
    G: FunctorMap
    eta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eta", _table(self.eta, self.F.source.size, "transformation", self.F.target.size))

    def __call__(self, x):
        return int(self.eta[x])


def same_category(a, b):
    return a is b or a.same_tables(b)


def identity_functor(cat):
    return FunctorMap(cat, cat, np.arange(cat.size))


def _kleene_bad(exist, a, b):
    return (a != b) & (exist[a] | exist[b])


def _first(mask):
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def check_functor(F):
    C, D = F.source, F.target
    f = F.map
    report = StructureReport()
    ex_c, ex_d = C.exist, D.exist

    x = _first(ex_c & ~ex_d[f])
    if x is not None:
        report.add("F1", (x,), "E x -> E F(x)")
    x = _first(~ex_c & ex_d[f])
    if x is not None:
        report.add("F2", (x,), "not E x -> not E F(x)")
    x = _first(_kleene_bad(ex_d, f[C.dom], D.dom[f]))
    if x is not None:
        report.add("F3", (x,), "F(dom x) ≅ dom F(x)")
    x = _first(_kleene_bad(ex_d, f[C.cod], D.cod[f]))
    if x is not None:
        report.add("F4", (x,), "F(cod x) ≅ cod F(x)")
    w = kernels.functor_composition(f, C.comp, D.comp, ex_d)
    if w is not None:
        report.add("F5", w, "F(x·y) ≥ F(x)·F(y)")
    report.stats.update({"elements": C.size, "pairs": C.size ** 2})
    return report.finalize()


def compose_functors(F, G):
    """F after G: requires target(G) to be source(F)."""
    if not same_category(G.target, F.source):
        raise InputError("compose_functors: target of G is not the source of F")
    return FunctorMap(G.source, F.target, F.map[G.map])


def _same_shape(t):
    F, G = t.F, t.G
    if not (same_category(F.source, G.source) and same_category(F.target, G.target)):
        raise InputError("natural transformation between functors with different source/target")


def check_nat_trans(t):
    """Conditions (1)–(5).

    Condition (4) is enforced in its G-form, cod η(x) ≅ cod G(x); the
    literal F-form is recorded under ``info['N4_F_form']``.
    """
    _same_shape(t)
    F, G = t.F, t.G
    C, D = F.source, F.target
    eta = t.eta
    ex_c, ex_d = C.exist, D.exist
    report = StructureReport()

    x = _first(ex_c & ~ex_d[eta])
    if x is not None:
        report.add("N1", (x,), "E x -> E η(x)")
    x = _first(~ex_c & ex_d[eta])
    if x is not None:
        report.add("N2", (x,), "not E x -> not E η(x)")
    x = _first(_kleene_bad(ex_d, D.dom[eta], D.dom[F.map]))
    if x is not None:
        report.add("N3", (x,), "dom η(x) ≅ dom F(x)")
    x = _first(_kleene_bad(ex_d, D.cod[eta], D.cod[G.map]))
    if x is not None:
        report.add("N4", (x,), "cod η(x) ≅ cod G(x)")
    xf = _first(_kleene_bad(ex_d, D.cod[eta], D.cod[F.map]))
    report.info["N4_F_form"] = "holds" if xf is None else f"fails at ({xf})"
    w = kernels.naturality(eta, F.map, G.map, C.comp, ex_c, D.comp, ex_d)
    if w is not None:
        report.add("N5", w, "E(x·y) -> η(x)·F(y) ≃ G(x)·η(y)")
    report.stats.update({"elements": C.size, "pairs": C.size ** 2})
    return report.finalize()


def extend_components(components, F, G):
    """Extend object components to all morphisms: η(x) = G(x)·η(dom x)."""
    C, D = F.source, F.target
    if not (same_category(G.source, C) and same_category(G.target, D)):
        raise InputError("extend_components: F and G must be parallel")
    comps = {}
    for A in C.identity_list:
        if A not in components:
            raise InputError(f"missing component for identity {A}")
        k = int(components[A])
        if not (0 <= k < D.size) or not D.E(k):
            raise InputError(f"component at identity {A} does not exist")
        if D.dom[k] != F(A) or D.cod[k] != G(A):
            raise InputError(f"component at identity {A} is not a morphism F({A}) -> G({A})")
        comps[A] = k
    undefined = D.undefined
    if undefined is None:
        raise InputError("target category has no non-existent element")
    eta = np.full(C.size, undefined, dtype=np.int64)
    for x in np.flatnonzero(C.exist):
        d = int(C.dom[x])
        if d in comps:
            eta[x] = D.comp[G(int(x)), comps[d]]
    return NatTransMap(F, G, eta)


def components_of(t):
    return {A: t(A) for A in t.F.source.identity_list}


def _inverse_in(D, k):
    """A two-sided inverse of k in D, or None."""
    d, c = D.arrow(k)
    if not (D.is_identity(d) and D.is_identity(c)):
        return None
    for j in D.hom(c, d):
        j = int(j)
        if D.comp[k, j] == c and D.comp[j, k] == d:
            return j
    return None


def check_nat_iso(t):
    D = t.F.target
    report = StructureReport()
    for A in t.F.source.identity_list:
        k = t(A)
        if not D.E(k) or _inverse_in(D, k) is None:
            report.add("iso", (A,), "component has no two-sided inverse")
    report.stats["components"] = len(t.F.source.identity_list)
    return report.finalize()


def invert_nat_iso(t):
    D = t.F.target
    inverse = {}
    for A in t.F.source.identity_list:
        k = t(A)
        j = _inverse_in(D, k) if D.E(k) else None
        if j is None:
            raise StructuralError(f"component at identity {A} is not invertible")
        inverse[A] = j
    return extend_components(inverse, t.G, t.F)
