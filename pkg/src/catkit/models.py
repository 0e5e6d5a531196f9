"""Constructors for concrete categories and SMCC models."""
import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import config
from .category import FiniteCategory, check_category
from .errors import ConstructionError, InputError, ResourceError
from .functor import FunctorMap, check_functor, compose_functors


# ---------------------------------------------------------------- lattices

@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """A finite partial order given by its elements and a ≤ table."""

    elements: tuple
    leq: np.ndarray

    def __post_init__(self):
        k = len(self.elements)
        leq = np.array(self.leq, dtype=bool)
        if leq.shape != (k, k):
            raise InputError(f"leq table must be {k}x{k}")
        for i in range(k):
            if not leq[i, i]:
                raise InputError(f"order is not reflexive at {self.elements[i]}")
        for i, j in itertools.product(range(k), repeat=2):
            if i != j and leq[i, j] and leq[j, i]:
                raise InputError(f"order is not antisymmetric at ({self.elements[i]}, {self.elements[j]})")
        for i, j, l in itertools.product(range(k), repeat=3):
            if leq[i, j] and leq[j, l] and not leq[i, l]:
                raise InputError(
                    f"order is not transitive at ({self.elements[i]}, {self.elements[j]}, {self.elements[l]})")
        leq.flags.writeable = False
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "leq", leq)

    @classmethod
    def from_relation(cls, elements, rel):
        elements = list(elements)
        return cls(elements, [[bool(rel(a, b)) for b in elements] for a in elements])

    @classmethod
    def divisors(cls, n):
        ds = [d for d in range(1, n + 1) if n % d == 0]
        return cls.from_relation(ds, lambda a, b: b % a == 0)

    @classmethod
    def boolean(cls, atoms):
        """Subsets of ``atoms`` atoms, as bitmasks."""
        return cls.from_relation(range(2 ** atoms), lambda a, b: a & ~b == 0)

    @classmethod
    def chain(cls, k):
        return cls.from_relation(range(k), lambda a, b: a <= b)

    @classmethod
    def discrete(cls, k):
        return cls.from_relation(range(k), lambda a, b: a == b)

    @classmethod
    def diamond(cls):
        """M3: bottom, three pairwise incomparable atoms, top."""
        order = {("0", x) for x in "0abc1"} | {(x, "1") for x in "0abc1"} | {(x, x) for x in "abc"}
        return cls.from_relation(["0", "a", "b", "c", "1"], lambda x, y: (x, y) in order)

    def __len__(self):
        return len(self.elements)

    def _bound(self, i, j, upper):
        k = len(self.elements)
        if upper:
            cands = [l for l in range(k) if self.leq[i, l] and self.leq[j, l]]
            best = [l for l in cands if all(self.leq[l, m] for m in cands)]
        else:
            cands = [l for l in range(k) if self.leq[l, i] and self.leq[l, j]]
            best = [l for l in cands if all(self.leq[m, l] for m in cands)]
        return best[0] if best else None

    @cached_property
    def meet(self):
        k = len(self.elements)
        return [[self._bound(i, j, False) for j in range(k)] for i in range(k)]

    @cached_property
    def join(self):
        k = len(self.elements)
        return [[self._bound(i, j, True) for j in range(k)] for i in range(k)]

    @cached_property
    def is_lattice(self):
        return all(v is not None for row in self.meet for v in row) and all(
            v is not None for row in self.join for v in row)

    def top(self):
        k = len(self.elements)
        tops = [i for i in range(k) if all(self.leq[j, i] for j in range(k))]
        return tops[0] if tops else None

    def bottom(self):
        k = len(self.elements)
        bots = [i for i in range(k) if all(self.leq[i, j] for j in range(k))]
        return bots[0] if bots else None


# ------------------------------------------------------------- categories

def skeletal_finset(max_n):
    """Skeletal FinSet on the cardinalities 0..max_n.

    Encoding: element k < max_n+1 is the identity on k; then, block by
    block over (m, n) in lexicographic order, every non-identity function
    m -> n listed by its value tuple in lexicographic (mixed-radix) order;
    the last element is the single undefined one.
    """
    if max_n < 0:
        raise InputError("max_n must be non-negative")
    total = sum(n ** m for m in range(max_n + 1) for n in range(max_n + 1)) + 1
    config.guard(total, "skeletal_finset")

    objs = range(max_n + 1)
    tuples = {}
    index = {}
    for k in objs:
        index[(k, k)] = np.zeros(k ** k, dtype=np.int64)
    next_id = max_n + 1
    for m, n in itertools.product(objs, repeat=2):
        arr = np.array(list(itertools.product(range(n), repeat=m)), dtype=np.int64).reshape(n ** m, m)
        tuples[(m, n)] = arr
        idx = np.empty(n ** m, dtype=np.int64)
        for code in range(n ** m):
            if m == n and np.array_equal(arr[code], np.arange(n)):
                idx[code] = m
            else:
                idx[code] = next_id
                next_id += 1
        index[(m, n)] = idx
    undefined = next_id
    size = undefined + 1
    assert size == total

    dom = np.full(size, undefined, dtype=np.int64)
    cod = np.full(size, undefined, dtype=np.int64)
    labels = [""] * size
    labels[undefined] = "undef"
    for (m, n), idx in index.items():
        dom[idx] = m
        cod[idx] = n
        for code, e in enumerate(idx):
            labels[e] = str(m) if (m == n and e == m) else f"{m}->{n}:{''.join(map(str, tuples[(m, n)][code]))}"
    comp = np.full((size, size), undefined, dtype=np.int64)
    for m, n, p in itertools.product(objs, repeat=3):
        F, G = tuples[(m, n)], tuples[(n, p)]
        if F.shape[0] == 0 or G.shape[0] == 0:
            continue
        gf = G[:, F] if m else np.zeros((G.shape[0], F.shape[0], 0), dtype=np.int64)
        weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
        codes = (gf * weights).sum(axis=-1)
        comp[np.ix_(index[(n, p)], index[(m, n)])] = index[(m, p)][codes]
    exist = np.ones(size, dtype=bool)
    exist[undefined] = False
    return FiniteCategory.from_tables(exist, dom, cod, comp, labels)


def finset_function(cat, m, n, values):
    """Element of ``skeletal_finset`` for the function m -> n with the given values."""
    for f in cat.hom(m, n):
        lab = cat.labels[f]
        vals = lab.split(":")[1] if ":" in lab else "".join(map(str, range(m)))
        if vals == "".join(map(str, values)):
            return int(f)
    raise InputError(f"no function {m}->{n} with values {values}")


def finset_values(cat, f):
    lab = cat.labels[f]
    if ":" in lab:
        return tuple(int(ch) for ch in lab.split(":")[1])
    return tuple(range(int(lab)))


def poset_category(spec):
    """Thin category: identities first, then one arrow per strict pair, then undefined."""
    k = len(spec)
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j and spec.leq[i, j]]
    size = k + len(pairs) + 1
    config.guard(size, "poset_category")
    undefined = size - 1
    arrow = {(i, i): i for i in range(k)}
    for n, p in enumerate(pairs):
        arrow[p] = k + n
    dom = np.full(size, undefined, dtype=np.int64)
    cod = np.full(size, undefined, dtype=np.int64)
    labels = ["undef"] * size
    for (i, j), a in arrow.items():
        dom[a], cod[a] = i, j
        labels[a] = str(spec.elements[i]) if i == j else f"{spec.elements[i]}<={spec.elements[j]}"
    comp = np.full((size, size), undefined, dtype=np.int64)
    for (i, j), f in arrow.items():
        for (j2, l), g in arrow.items():
            if j2 == j:
                comp[g, f] = arrow[(i, l)]
    exist = np.ones(size, dtype=bool)
    exist[undefined] = False
    cat = FiniteCategory.from_tables(exist, dom, cod, comp, labels)
    return cat


def poset_arrow(cat, spec, a, b):
    """Element for the arrow a ≤ b, looked up by element values."""
    i, j = spec.elements.index(a), spec.elements.index(b)
    for f in cat.hom(i, j):
        return int(f)
    return None


def monoid_category(table, unit):
    """One-object category of a monoid; elements are the monoid elements, plus undefined."""
    t = np.array(table, dtype=np.int64)
    k = t.shape[0] if t.ndim == 2 else 0
    if t.shape != (k, k) or k == 0:
        raise InputError("monoid table must be a non-empty square table")
    if t.min() < 0 or t.max() >= k:
        raise InputError("monoid table has entries outside the element range")
    if not 0 <= unit < k:
        raise InputError("unit outside the element range")
    for x in range(k):
        if t[unit, x] != x or t[x, unit] != x:
            raise InputError(f"{unit} is not a two-sided unit (fails at {x})")
    for x, y, z in itertools.product(range(k), repeat=3):
        if t[x, t[y, z]] != t[t[x, y], z]:
            raise InputError(f"table is not associative at ({x}, {y}, {z})")
    size = k + 1
    dom = np.array([unit] * k + [k], dtype=np.int64)
    comp = np.full((size, size), k, dtype=np.int64)
    comp[:k, :k] = t
    exist = np.ones(size, dtype=bool)
    exist[k] = False
    labels = [str(i) for i in range(k)] + ["undef"]
    return FiniteCategory.from_tables(exist, dom, dom.copy(), comp, labels)


def cyclic_group_category(n):
    return monoid_category([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def discrete_category(k):
    return poset_category(LatticeSpec.discrete(k))


def trivial_category():
    """One identity and one undefined element."""
    return monoid_category([[0]], 0)


def canonical_functors(C, D):
    """All functors C -> D that send every non-existent element to D.undefined."""
    ex_c = [int(x) for x in np.flatnonzero(C.exist)]
    ex_d = [int(y) for y in np.flatnonzero(D.exist)]
    if D.undefined is None:
        return []
    out = []
    for images in itertools.product(ex_d, repeat=len(ex_c)):
        table = np.full(C.size, D.undefined, dtype=np.int64)
        table[ex_c] = images
        F = FunctorMap(C, D, table)
        if check_functor(F).verdict:
            out.append(F)
    return out


def cat_of_cats(cats, max_functors=None):
    """The category whose objects are ``cats`` and whose morphisms are functors.

    Object i is element i (its identity functor); functors appear in order
    of (source, target, table lexicographic); one undefined element last.
    """
    for i, c in enumerate(cats):
        if int(c.exist.sum()) > 4:
            raise ResourceError(f"category {i} has more than 4 existing morphisms")
        if not check_category(c).verdict:
            raise InputError(f"category {i} fails the category axioms")
    limit = config.max_size() if max_functors is None else max_functors
    k = len(cats)
    # bound on the search before enumerating anything
    search = sum(int(D.exist.sum()) ** int(C.exist.sum()) for C in cats for D in cats)
    if search > 50 * limit:
        raise ResourceError(f"functor search space {search} exceeds the guard")
    functors = {}
    for i, j in itertools.product(range(k), repeat=2):
        functors[(i, j)] = canonical_functors(cats[i], cats[j])
    count = sum(len(v) for v in functors.values())
    if count + 1 > limit:
        raise ResourceError(f"category of categories would have {count + 1} elements, limit is {limit}")

    elements = []
    key_of = {}
    for i in range(k):
        ident = [F for F in functors[(i, i)] if _is_identity_on_existing(F)]
        elements.append((i, i, ident[0]))
    ident_tables = {i: elements[i][2].map.tobytes() for i in range(k)}
    for (i, j), fs in functors.items():
        for F in fs:
            if i == j and F.map.tobytes() == ident_tables[i]:
                continue
            elements.append((i, j, F))
    for e, (i, j, F) in enumerate(elements):
        key_of[(i, j, F.map.tobytes())] = e
    size = len(elements) + 1
    undefined = size - 1
    dom = np.full(size, undefined, dtype=np.int64)
    cod = np.full(size, undefined, dtype=np.int64)
    for e, (i, j, _) in enumerate(elements):
        dom[e], cod[e] = i, j
    comp = np.full((size, size), undefined, dtype=np.int64)
    for x, (j2, l, G) in enumerate(elements):
        for y, (i, j, F) in enumerate(elements):
            if j == j2:
                H = compose_functors(G, F)
                comp[x, y] = key_of[(i, l, H.map.tobytes())]
    exist = np.ones(size, dtype=bool)
    exist[undefined] = False
    result = FiniteCategory.from_tables(exist, dom, cod, comp)
    object.__setattr__(result, "functors", tuple(elements))
    return result


def _is_identity_on_existing(F):
    ex = np.flatnonzero(F.source.exist)
    return bool(np.array_equal(F.map[ex], ex))


# ------------------------------------------------------------- SMCC models

def _residual(spec, a, c):
    """Greatest b with a ∧ b ≤ c, or None."""
    meet = spec.meet
    cands = [b for b in range(len(spec)) if meet[a][b] is not None and spec.leq[meet[a][b], c]]
    best = [b for b in cands if all(spec.leq[x, b] for x in cands)]
    return best[0] if best else None


def heyting_smcc(spec):
    """Thin SMCC of a Heyting algebra: ⊗ = meet, e = top, ⊸ = relative pseudo-complement."""
    from .monoidal import BraidingData, ClosedStructure, MonoidalStructure, SmccModel

    if not spec.is_lattice:
        raise ConstructionError("heyting_smcc needs a lattice")
    k = len(spec)
    top = spec.top()
    meet, join = spec.meet, spec.join
    for x, y, z in itertools.product(range(k), repeat=3):
        if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
            names = tuple(spec.elements[i] for i in (x, y, z))
            raise ConstructionError(f"lattice is not distributive at {names}; no residual exists")
    res = [[_residual(spec, a, c) for c in range(k)] for a in range(k)]
    for a, c in itertools.product(range(k), repeat=2):
        if res[a][c] is None:
            raise ConstructionError(
                f"no relative pseudo-complement for ({spec.elements[a]}, {spec.elements[c]})")
    cat = poset_category(spec)
    n = cat.size
    und = cat.undefined
    arr = {}
    for f in np.flatnonzero(cat.exist):
        arr[(int(cat.dom[f]), int(cat.cod[f]))] = int(f)
    ex = np.flatnonzero(cat.exist)
    tensor = np.full((n, n), und, dtype=np.int64)
    impl = np.full((n, n), und, dtype=np.int64)
    for x, y in itertools.product(ex, repeat=2):
        (i, j), (p, q) = cat.arrow(int(x)), cat.arrow(int(y))
        tensor[x, y] = arr[(meet[i][p], meet[j][q])]
        impl[x, y] = arr[(res[j][p], res[i][q])]
    ids = range(k)
    alpha = {(a, b, c): meet[meet[a][b]][c] for a, b, c in itertools.product(ids, repeat=3)}
    unary = {(a,): a for a in ids}
    gamma = {(a, b): meet[a][b] for a, b in itertools.product(ids, repeat=2)}
    phi, psi = {}, {}
    for a, b in itertools.product(ids, repeat=2):
        for f in np.flatnonzero(cat.exist & (cat.dom == meet[a][b])).tolist():
            phi[(a, b, f)] = arr[(b, res[a][int(cat.cod[f])])]
    for a, c in itertools.product(ids, repeat=2):
        for b in ids:
            g = arr.get((b, res[a][c]))
            if g is not None:
                psi[(a, c, g)] = arr[(meet[a][b], c)]
    m = MonoidalStructure(cat, tensor, top, alpha, alpha, unary, unary, unary, unary)
    return SmccModel(m, BraidingData(gamma, gamma), ClosedStructure(impl, phi, psi),
                     name=f"heyting({k})")


def graded_smcc(n, m=1, braid=0):
    """Objects ℤ/n, each with endomorphisms ℤ/m; ⊗ adds both gradings.

    A⊸C = C - A on objects and (A,a)⊸(C,c) = (C-A, a+c). With m > 1 the
    category is not thin; ``braid`` sets γ_{A,B} = (A+B, braid·A·B), which is
    a symmetry only when 2·braid·A·B ≡ 0 (mod m). Needs n·braid ≡ 0 (mod m).
    """
    from .monoidal import BraidingData, ClosedStructure, MonoidalStructure, SmccModel

    if n < 1 or m < 1:
        raise InputError("graded_smcc needs n >= 1 and m >= 1")
    if (n * braid) % m:
        raise ConstructionError("braiding is not bilinear for these moduli")
    size = n * m + 1
    config.guard(size, "graded_smcc")
    und = size - 1

    def idx(a, g):
        a, g = a % n, g % m
        return a if g == 0 else n + a * (m - 1) + g - 1

    elems = [(a, g) for a in range(n) for g in range(m)]
    pos = {e: idx(*e) for e in elems}
    dom = np.full(size, und, dtype=np.int64)
    comp = np.full((size, size), und, dtype=np.int64)
    tensor = np.full((size, size), und, dtype=np.int64)
    impl = np.full((size, size), und, dtype=np.int64)
    labels = ["undef"] * size
    for (a, g), i in pos.items():
        dom[i] = a
        labels[i] = str(a) if g == 0 else f"{a}:{g}"
    for (a, g), (b, h) in itertools.product(elems, repeat=2):
        i, j = pos[(a, g)], pos[(b, h)]
        if a == b:
            comp[i, j] = idx(a, g + h)
        tensor[i, j] = idx(a + b, g + h)
        impl[i, j] = idx(b - a, g + h)
    exist = np.ones(size, dtype=bool)
    exist[und] = False
    cat = FiniteCategory.from_tables(exist, dom, dom.copy(), comp, labels)
    ids = range(n)
    alpha = {(a, b, c): (a + b + c) % n for a, b, c in itertools.product(ids, repeat=3)}
    unary = {(a,): a for a in ids}
    gamma = {(a, b): idx(a + b, braid * a * b) for a, b in itertools.product(ids, repeat=2)}
    gamma_inv = {(a, b): idx(a + b, -braid * a * b) for a, b in itertools.product(ids, repeat=2)}
    phi, psi = {}, {}
    for a, b in itertools.product(ids, repeat=2):
        for g in range(m):
            phi[(a, b, idx(a + b, g))] = idx(b, g)
    for a, c in itertools.product(ids, repeat=2):
        for g in range(m):
            psi[(a, c, idx(c - a, g))] = idx(c, g)
    mon = MonoidalStructure(cat, tensor, 0, alpha, alpha, unary, unary, unary, unary)
    return SmccModel(mon, BraidingData(gamma, gamma_inv), ClosedStructure(impl, phi, psi),
                     name=f"graded({n},{m},{braid})")


def group_smcc(n):
    """Discrete category on ℤ/n: ⊗ = addition, e = 0, A⊸C = C - A, all structure maps identities."""
    s = graded_smcc(n, 1, 0)
    from .monoidal import SmccModel
    return SmccModel(s.monoidal, s.braiding, s.closed, name=f"Z/{n}")
