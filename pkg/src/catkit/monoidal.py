"""Monoidal, braided, symmetric and closed structure on finite categories.

Structural isos are stored as identity-indexed component tables; every
law is checked by enumerating identity tuples. Checks are grouped into
families (tensor, alpha, lambda, rho, gamma, impl, closed, ...). A law
whose inputs come from a family that already failed is skipped and
counted under ``stats["skipped"]``, so one broken table produces one
failing family instead of a cascade.
"""
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .category import opposite_category, product_category
from .errors import InputError, ResourceError, StructuralError
from .functor import (FunctorMap, NatTransMap, check_functor, check_nat_trans,
                      extend_components, identity_functor)
from .report import StructureReport


def _square(table, n, what):
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be an {n}x{n} integer table") from None
    if arr.shape != (n, n):
        raise InputError(f"{what} must be an {n}x{n} table, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise InputError(f"{what} has entries outside 0..{n - 1}")
    arr.flags.writeable = False
    return arr


def _components(table, what):
    out = {}
    for key, value in dict(table).items():
        key = key if isinstance(key, tuple) else (key,)
        out[tuple(int(k) for k in key)] = int(value)
    return out


@dataclass(frozen=True, eq=False)
class MonoidalStructure:
    base: object
    tensor: np.ndarray          # tensor[x, y] = x⊗y
    unit: int
    alpha: dict                 # (A, B, C) -> (A⊗B)⊗C -> A⊗(B⊗C)
    alpha_inv: dict
    lam: dict                   # (A,) -> e⊗A -> A
    lam_inv: dict
    rho: dict                   # (A,) -> A⊗e -> A
    rho_inv: dict

    def __post_init__(self):
        n = self.base.size
        object.__setattr__(self, "tensor", _square(self.tensor, n, "tensor"))
        for name in ("alpha", "alpha_inv", "lam", "lam_inv", "rho", "rho_inv"):
            object.__setattr__(self, name, _components(getattr(self, name), name))
        if not (0 <= self.unit < n and self.base.is_identity(self.unit)):
            raise InputError(f"unit {self.unit} is not an identity")

    def t(self, x, y):
        return int(self.tensor[x, y])

    @cached_property
    def tensor_functor(self):
        C = self.base
        return FunctorMap(product_category(C, C), C, self.tensor.ravel())


@dataclass(frozen=True, eq=False)
class BraidingData:
    gamma: dict                 # (A, B) -> A⊗B -> B⊗A
    gamma_inv: dict

    def __post_init__(self):
        object.__setattr__(self, "gamma", _components(self.gamma, "gamma"))
        object.__setattr__(self, "gamma_inv", _components(self.gamma_inv, "gamma_inv"))


@dataclass(frozen=True, eq=False)
class ClosedStructure:
    impl: np.ndarray            # impl[x, z] = x⊸z, contravariant in x
    phi: dict                   # (A, B, f) with f : A⊗B -> C  ->  B -> A⊸C
    psi: dict                   # (A, C, g) with g : B -> A⊸C  ->  A⊗B -> C
    side: str = "left"

    def __post_init__(self):
        object.__setattr__(self, "impl", np.asarray(self.impl, dtype=np.int64))
        object.__setattr__(self, "phi", _components(self.phi, "phi"))
        object.__setattr__(self, "psi", _components(self.psi, "psi"))

    def imp(self, x, z):
        return int(self.impl[x, z])


@dataclass(frozen=True, eq=False)
class SmccModel:
    monoidal: MonoidalStructure
    braiding: BraidingData
    closed: ClosedStructure
    name: str = ""

    def __post_init__(self):
        _square(self.closed.impl, self.monoidal.base.size, "impl")

    @property
    def base(self):
        return self.monoidal.base


class _Run:
    """Shared report plus the set of families that have failed so far."""

    def __init__(self):
        self.report = StructureReport()
        self.failed = set()
        self.report.stats["skipped"] = 0

    def ok(self, *families):
        return not (self.failed & set(families))

    def skip(self, law):
        self.report.stats["skipped"] += 1
        self.report.info.setdefault("skipped", []).append(law)

    def add(self, name, witness, detail=""):
        self.report.add(name, witness, detail)
        self.failed.add(name.split(".")[0])

    def merge(self, sub, prefix):
        for v in sub.violations:
            self.add(f"{prefix}.{v.name}", v.witness, v.detail)


def _need(table, key, what):
    if key not in table:
        raise InputError(f"{what} has no entry for {key}")
    return table[key]


def _keq(C, a, b):
    return a == b and C.E(a)


# ------------------------------------------------------------ monoidal

def _check_iso_family(run, C, fam, comps, inv, keys, src, dst):
    bad = False
    for key in keys:
        k = _need(comps, key, fam)
        j = _need(inv, key, fam + "_inv")
        s, d = src(*key), dst(*key)
        if not (C.E(k) and C.dom[k] == s and C.cod[k] == d):
            run.add(f"{fam}.typing", key, "component has the wrong type")
            bad = True
        elif not (_keq(C, C.c(k, j), d) and _keq(C, C.c(j, k), s)):
            run.add(f"{fam}.inverse", key, "inverse table is not a two-sided inverse")
            bad = True
    return not bad


def _check_unitor(run, m, fam, comps, inv, functor_map):
    C = m.base
    ids = C.identity_list
    if not _check_iso_family(run, C, fam, comps, inv, [(A,) for A in ids],
                             lambda A: int(functor_map[A]), lambda A: A):
        return
    F = FunctorMap(C, C, functor_map)
    t = extend_components({A: comps[(A,)] for A in ids}, F, identity_functor(C))
    run.merge(check_nat_trans(t), f"{fam}.natural")


def _check_alpha(run, m):
    C, T = m.base, m.tensor
    ids = C.identity_list
    keys = list(itertools.product(ids, repeat=3))
    if not _check_iso_family(run, C, "alpha", m.alpha, m.alpha_inv, keys,
                             lambda a, b, c: T[T[a, b], c], lambda a, b, c: T[a, T[b, c]]):
        return
    n = C.size
    if n ** 3 > 20_000_000:
        raise ResourceError(f"associator table for {n} elements is too large")
    A = np.full((n, n, n), C.undefined, dtype=np.int64)
    for (a, b, c), k in m.alpha.items():
        if 0 <= max(a, b, c) < n:
            A[a, b, c] = k
    X = np.flatnonzero(C.exist)
    for x in X:
        # α_{cod} · ((x⊗y)⊗z)  vs  (x⊗(y⊗z)) · α_{dom}
        y, z = X[:, None], X[None, :]
        lhs = C.comp[A[C.cod[x], C.cod[y], C.cod[z]], T[T[x, y], z]]
        rhs = C.comp[T[x, T[y, z]], A[C.dom[x], C.dom[y], C.dom[z]]]
        bad = np.argwhere((lhs != rhs) | ~C.exist[lhs])
        if bad.size:
            i, j = bad[0]
            run.add("alpha.natural", (int(x), int(X[i]), int(X[j])), "associator is not natural")
            return


def check_monoidal(m, run=None):
    own = run is None
    run = run or _Run()
    C, T, e = m.base, m.tensor, m.unit
    run.merge(check_functor(m.tensor_functor), "tensor")
    if not run.ok("tensor"):
        for law in ("alpha", "lambda", "rho", "triangle", "pentagon"):
            run.skip(law)
        return run.report.finalize() if own else None
    _check_alpha(run, m)
    _check_unitor(run, m, "lambda", m.lam, m.lam_inv, T[e, :])
    _check_unitor(run, m, "rho", m.rho, m.rho_inv, T[:, e])
    ids = C.identity_list
    if run.ok("alpha", "lambda", "rho"):
        for a, b in itertools.product(ids, repeat=2):
            lhs = C.c(T[a, m.lam[(b,)]], m.alpha[(a, e, b)])
            rhs = T[m.rho[(a,)], b]
            if not _keq(C, lhs, rhs):
                run.add("triangle", (a, b), "(A⊗λ_B)·α_{A,e,B} ≄ ρ_A⊗B")
                break
    else:
        run.skip("triangle")
    if run.ok("alpha"):
        al = m.alpha
        for a, b, c, d in itertools.product(ids, repeat=4):
            lhs = C.c(T[a, al[(b, c, d)]], C.c(al[(a, T[b, c], d)], T[al[(a, b, c)], d]))
            rhs = C.c(al[(a, b, T[c, d])], al[(T[a, b], c, d)])
            if not _keq(C, lhs, rhs):
                run.add("pentagon", (a, b, c, d), "pentagon does not commute")
                break
    else:
        run.skip("pentagon")
    return run.report.finalize() if own else None


# ------------------------------------------------------------ braiding

def check_braided(m, b, run=None):
    own = run is None
    run = run or _Run()
    C, T = m.base, m.tensor
    ids = C.identity_list
    if not run.ok("tensor"):
        run.skip("gamma")
    else:
        keys = list(itertools.product(ids, repeat=2))
        if _check_iso_family(run, C, "gamma", b.gamma, b.gamma_inv, keys,
                             lambda x, y: T[x, y], lambda x, y: T[y, x]):
            F = m.tensor_functor
            G = FunctorMap(F.source, C, T.T.ravel())
            n = C.size
            comps = {A * n + B: b.gamma[(A, B)] for A, B in keys}
            run.merge(check_nat_trans(extend_components(comps, F, G)), "gamma.natural")
    if not run.ok("alpha", "gamma", "tensor"):
        run.skip("hexagon1")
        run.skip("hexagon2")
        return run.report.finalize() if own else None
    al, ai, g = m.alpha, m.alpha_inv, b.gamma
    for x, y, z in itertools.product(ids, repeat=3):
        lhs = C.c(al[(y, z, x)], C.c(g[(x, T[y, z])], al[(x, y, z)]))
        rhs = C.c(T[y, g[(x, z)]], C.c(al[(y, x, z)], T[g[(x, y)], z]))
        if not _keq(C, lhs, rhs):
            run.add("hexagon1", (x, y, z), "first hexagon does not commute")
            break
    for x, y, z in itertools.product(ids, repeat=3):
        lhs = C.c(ai[(z, x, y)], C.c(g[(T[x, y], z)], ai[(x, y, z)]))
        rhs = C.c(T[g[(x, z)], y], C.c(ai[(x, z, y)], T[x, g[(y, z)]]))
        if not _keq(C, lhs, rhs):
            run.add("hexagon2", (x, y, z), "second hexagon does not commute")
            break
    return run.report.finalize() if own else None


def check_symmetric(m, b, run=None):
    own = run is None
    run = run or _Run()
    C = m.base
    if not run.ok("gamma"):
        run.skip("symmetry")
    else:
        for x, y in itertools.product(C.identity_list, repeat=2):
            if not _keq(C, b.gamma[(x, y)], _need(b.gamma_inv, (y, x), "gamma_inv")):
                run.add("symmetry", (x, y), "γ_{A,B} ≄ γ⁻¹_{B,A}")
    return run.report.finalize() if own else None


# ------------------------------------------------------------ closed

def impl_functor(m, c):
    C = m.base
    return FunctorMap(product_category(opposite_category(C), C), C, c.impl.ravel())


def _pair(T, side):
    if side == "left":
        return lambda a, b: int(T[a, b])
    return lambda a, b: int(T[b, a])


def phi_keys(m, c):
    """Admissible Φ keys (A, B, f) with f : A⊗B -> C (B⊗A for the right side)."""
    C = m.base
    pair = _pair(m.tensor, c.side)
    ids = C.identity_list
    out = []
    for a, b in itertools.product(ids, repeat=2):
        src = pair(a, b)
        if not C.is_identity(src):
            continue
        for f in np.flatnonzero(C.exist & (C.dom == src)):
            out.append((a, b, int(f)))
    return out


def psi_keys(m, c):
    """Admissible Ψ keys (A, C, g) with g : B -> A⊸C."""
    C = m.base
    ids = C.identity_list
    out = []
    for a, z in itertools.product(ids, repeat=2):
        tgt = c.imp(a, z)
        if not C.is_identity(tgt):
            continue
        for g in np.flatnonzero(C.exist & (C.cod == tgt)):
            out.append((a, z, int(g)))
    return out


def _check_closed_laws(run, m, c, prefix):
    C, T = m.base, m.tensor
    pair = _pair(T, c.side)
    und = C.undefined
    phi, psi = c.phi, c.psi
    pk, qk = phi_keys(m, c), psi_keys(m, c)
    for key in pk:
        _need(phi, key, "phi")
    for key in qk:
        _need(psi, key, "psi")
    tens = (lambda x, y: int(T[x, y])) if c.side == "left" else (lambda x, y: int(T[y, x]))
    for a, b, f in pk:
        v = phi[(a, b, f)]
        z = int(C.cod[f])
        if not (C.E(v) and C.dom[v] == b and C.cod[v] == c.imp(a, z)):
            run.add(f"{prefix}.1", (a, b, f), "Φ(A,B,f) is not an arrow B -> A⊸C")
        back = psi.get((a, z, v), und)
        if not _keq(C, back, f):
            run.add(f"{prefix}.3", (a, b, f), "Ψ(A,C,Φ(A,B,f)) ≄ f")
    for a, z, g in qk:
        v = psi[(a, z, g)]
        b = int(C.dom[g])
        src = pair(a, b)
        if not (C.E(v) and C.dom[v] == src and C.cod[v] == z):
            run.add(f"{prefix}.2", (a, z, g), "Ψ(A,C,g) is not an arrow A⊗B -> C")
        back = phi.get((a, b, v), und)
        if not _keq(C, back, g):
            run.add(f"{prefix}.4", (a, z, g), "Φ(A,B,Ψ(A,C,g)) ≄ g")
    if not run.ok(prefix):
        run.skip(f"{prefix}.5")
        return
    X = np.flatnonzero(C.exist)
    into = {A: X[C.cod[X] == A] for A in C.identity_list}
    outof = {A: X[C.dom[X] == A] for A in C.identity_list}
    for a, b, f in pk:
        base = phi[(a, b, f)]
        z0 = int(C.cod[f])
        for x, y, z in itertools.product(into[a], into[b], outof[z0]):
            x, y, z = int(x), int(y), int(z)
            h = C.c(z, C.c(f, tens(x, y)))
            lhs = phi.get((int(C.dom[x]), int(C.dom[y]), h), und)
            rhs = C.c(c.imp(x, z), C.c(base, y))
            if not _keq(C, lhs, rhs):
                run.add(f"{prefix}.5", (f, x, y, z), "Φ is not natural")
                return


def check_left_closed(m, c, run=None, prefix="closed"):
    own = run is None
    run = run or _Run()
    run.merge(check_functor(impl_functor(m, c)), "impl")
    if run.ok("tensor", "impl"):
        _check_closed_laws(run, m, c, prefix)
    else:
        run.skip(prefix)
    return run.report.finalize() if own else None


def check_psi_natural(m, c, run=None):
    own = run is None
    run = run or _Run()
    if not run.ok("tensor", "impl", "closed"):
        run.skip("psi_natural")
        return run.report.finalize() if own else None
    C, T = m.base, m.tensor
    und = C.undefined
    X = np.flatnonzero(C.exist)
    into = {A: X[C.cod[X] == A] for A in C.identity_list}
    outof = {A: X[C.dom[X] == A] for A in C.identity_list}
    for a, z0, g in psi_keys(m, c):
        base = c.psi[(a, z0, g)]
        b = int(C.dom[g])
        for x, y, z in itertools.product(into[a], into[b], outof[z0]):
            x, y, z = int(x), int(y), int(z)
            h = C.c(c.imp(x, z), C.c(g, y))
            lhs = c.psi.get((int(C.dom[x]), int(C.cod[z]), h), und)
            rhs = C.c(z, C.c(base, int(T[x, y])))
            if not _keq(C, lhs, rhs):
                run.add("psi_natural", (g, x, y, z), "Ψ is not natural")
                return run.report.finalize() if own else None
    return run.report.finalize() if own else None


def check_smcc(s):
    run = _Run()
    check_monoidal(s.monoidal, run)
    check_braided(s.monoidal, s.braiding, run)
    check_symmetric(s.monoidal, s.braiding, run)
    check_left_closed(s.monoidal, s.closed, run)
    check_psi_natural(s.monoidal, s.closed, run)
    return run.report.finalize()


# ------------------------------------------------------------ derived structure

def check_eval_universal(m, c, a, b):
    """∀f : A⊗X -> B ∃! h : X -> A⊸B with f ≃ eval·(A⊗h)."""
    C, T = m.base, m.tensor
    ev = _need(c.psi, (a, b, c.imp(a, b)), "psi")
    report = StructureReport()
    for X in C.identity_list:
        H = C.hom(X, c.imp(a, b))
        images = [C.c(ev, int(T[a, h])) for h in H]
        src = int(T[a, X])
        if not C.is_identity(src):
            continue
        for f in C.hom(src, b):
            hits = images.count(int(f))
            if hits != 1:
                report.add("eval." + ("existence" if hits == 0 else "uniqueness"), (a, b, X, int(f)),
                           "no h" if hits == 0 else "h not unique")
    return report.finalize()


def derive_eval(m, c, a, b):
    C = m.base
    for v in (a, b):
        if not C.is_identity(v):
            raise InputError(f"{v} is not an identity")
    r = check_eval_universal(m, c, a, b)
    if not r.verdict:
        raise StructuralError(f"eval_{a},{b} fails its universal property: {r.violations[0]}")
    return c.psi[(a, b, c.imp(a, b))]


def derive_right_closed(m, b, c):
    """Right closed structure from the symmetry: Φ_r(f) = Φ(f·γ_{A,B}), Ψ_r(g) = Ψ(g)·γ_{B,A}."""
    C = m.base
    und = C.undefined
    right = ClosedStructure(c.impl, {}, {}, "right")
    phi_r = {}
    for a, bb, f in phi_keys(m, right):
        phi_r[(a, bb, f)] = c.phi.get((a, bb, C.c(f, _need(b.gamma, (a, bb), "gamma"))), und)
    psi_r = {}
    for a, z, g in psi_keys(m, right):
        bb = int(C.dom[g])
        psi_r[(a, z, g)] = C.c(c.psi.get((a, z, g), und), _need(b.gamma, (bb, a), "gamma"))
    return ClosedStructure(c.impl, phi_r, psi_r, "right")


def check_right_closed(m, c):
    run = _Run()
    run.merge(check_functor(impl_functor(m, c)), "impl")
    if run.ok("tensor", "impl"):
        _check_closed_laws(run, m, c, "right_closed")
    return run.report.finalize()


def double_negation(s, a, bottom):
    """δ_A = Φ(A⊸⊥, A, eval_{A,⊥}·γ_{A⊸⊥,A}) : A -> (A⊸⊥)⊸⊥."""
    m, c = s.monoidal, s.closed
    C = m.base
    for v in (a, bottom):
        if not (0 <= v < C.size and C.is_identity(v)):
            raise InputError(f"{v} is not an identity")
    neg = c.imp(a, bottom)
    ev = _need(c.psi, (a, bottom, neg), "psi")
    f = C.c(ev, _need(s.braiding.gamma, (neg, a), "gamma"))
    d = _need(c.phi, (neg, a, f), "phi")
    if not (C.E(d) and C.dom[d] == a and C.cod[d] == c.imp(neg, bottom)):
        raise StructuralError(f"δ at {a} is not an arrow A -> (A⊸⊥)⊸⊥")
    return d


def double_dual_functor(s, bottom):
    c = s.closed
    dd = c.impl[c.impl[:, bottom], bottom]
    return FunctorMap(s.base, s.base, dd)


def dn_transformation(s, bottom):
    C = s.base
    comps = {A: double_negation(s, A, bottom) for A in C.identity_list}
    return extend_components(comps, identity_functor(C), double_dual_functor(s, bottom))


def check_dn_naturality(s, bottom):
    return check_nat_trans(dn_transformation(s, bottom))
