"""Free-SMCC morphism terms, their typing, and coherence isomorphisms."""
from dataclasses import dataclass

from ..errors import InputError
from .syntax import ONE, Atom, Lolli, One, Tensor


@dataclass(frozen=True)
class IdOf:
    f: object


@dataclass(frozen=True)
class Comp:
    t1: object      # applied second
    t2: object


@dataclass(frozen=True)
class TensorT:
    t1: object
    t2: object


@dataclass(frozen=True)
class Alpha:
    a: object
    b: object
    c: object


@dataclass(frozen=True)
class AlphaInv:
    a: object
    b: object
    c: object


@dataclass(frozen=True)
class LambdaT:
    a: object


@dataclass(frozen=True)
class LambdaInv:
    a: object


@dataclass(frozen=True)
class RhoT:
    a: object


@dataclass(frozen=True)
class RhoInv:
    a: object


@dataclass(frozen=True)
class Gamma:
    a: object
    b: object


@dataclass(frozen=True)
class Curry:
    a: object
    x: object
    t: object       # A⊗X -> C  gives  X -> A⊸C


@dataclass(frozen=True)
class Uncurry:
    a: object
    c: object
    t: object       # X -> A⊸C  gives  A⊗X -> C


@dataclass(frozen=True)
class Eval:
    a: object
    b: object


def typing(t):
    """(source, target) formulas of a term; raises InputError if ill-typed."""
    if isinstance(t, IdOf):
        return t.f, t.f
    if isinstance(t, Comp):
        s1, d1 = typing(t.t1)
        s2, d2 = typing(t.t2)
        if d2 != s1:
            raise InputError(f"composite mismatch: {d2} is not {s1}")
        return s2, d1
    if isinstance(t, TensorT):
        s1, d1 = typing(t.t1)
        s2, d2 = typing(t.t2)
        return Tensor(s1, s2), Tensor(d1, d2)
    if isinstance(t, Alpha):
        return Tensor(Tensor(t.a, t.b), t.c), Tensor(t.a, Tensor(t.b, t.c))
    if isinstance(t, AlphaInv):
        return Tensor(t.a, Tensor(t.b, t.c)), Tensor(Tensor(t.a, t.b), t.c)
    if isinstance(t, LambdaT):
        return Tensor(ONE, t.a), t.a
    if isinstance(t, LambdaInv):
        return t.a, Tensor(ONE, t.a)
    if isinstance(t, RhoT):
        return Tensor(t.a, ONE), t.a
    if isinstance(t, RhoInv):
        return t.a, Tensor(t.a, ONE)
    if isinstance(t, Gamma):
        return Tensor(t.a, t.b), Tensor(t.b, t.a)
    if isinstance(t, Curry):
        s, d = typing(t.t)
        if s != Tensor(t.a, t.x):
            raise InputError(f"curry expects source {Tensor(t.a, t.x)}, got {s}")
        return t.x, Lolli(t.a, d)
    if isinstance(t, Uncurry):
        s, d = typing(t.t)
        if d != Lolli(t.a, t.c):
            raise InputError(f"uncurry expects target {Lolli(t.a, t.c)}, got {d}")
        return Tensor(t.a, s), t.c
    if isinstance(t, Eval):
        return Tensor(t.a, Lolli(t.a, t.b)), t.b
    raise InputError(f"not a morphism term: {t!r}")


def sexpr(t):
    name = {IdOf: "id", Comp: "comp", TensorT: "tensor", Alpha: "alpha", AlphaInv: "alpha_inv",
            LambdaT: "lambda", LambdaInv: "lambda_inv", RhoT: "rho", RhoInv: "rho_inv",
            Gamma: "gamma", Curry: "curry", Uncurry: "uncurry", Eval: "eval"}[type(t)]
    args = []
    for v in t.__dict__.values():
        args.append(str(v) if isinstance(v, (Atom, One, Tensor, Lolli)) else sexpr(v))
    return "(" + " ".join([name] + args) + ")"


def subterms(t):
    yield t
    for v in t.__dict__.values():
        if isinstance(v, (IdOf, Comp, TensorT, Alpha, AlphaInv, LambdaT, LambdaInv, RhoT, RhoInv,
                          Gamma, Curry, Uncurry, Eval)):
            yield from subterms(v)


def comp(*ts):
    """comp(t1, t2, ..., tk) = t1·t2·...·tk, dropping identities."""
    ts = [t for t in ts if not isinstance(t, IdOf)] or [ts[-1]]
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Comp(t, out)
    if not isinstance(out, IdOf):
        return out
    # all identities: keep the innermost source
    return IdOf(typing(ts[-1])[0])


def tensor(t1, t2):
    if isinstance(t1, IdOf) and isinstance(t2, IdOf):
        return IdOf(Tensor(t1.f, t2.f))
    return TensorT(t1, t2)


# ------------------------------------------------------------ shapes

@dataclass(frozen=True)
class Leaf:
    f: object


@dataclass(frozen=True)
class Pair:
    left: object
    right: object


@dataclass(frozen=True)
class Unit:
    pass


UNIT = Unit()


def shape_formula(s):
    if isinstance(s, Leaf):
        return s.f
    if isinstance(s, Unit):
        return ONE
    return Tensor(shape_formula(s.left), shape_formula(s.right))


def leaves(s):
    if isinstance(s, Leaf):
        return [s.f]
    if isinstance(s, Unit):
        return []
    return leaves(s.left) + leaves(s.right)


def left_nested(items):
    """((I0⊗I1)⊗…)⊗In over item shapes; the empty list is the unit."""
    if not items:
        return UNIT
    out = items[0]
    for s in items[1:]:
        out = Pair(out, s)
    return out


def context_shape(fs):
    return left_nested([Leaf(f) for f in fs])


def invert(t):
    """Inverse of a term built from structural isos, tensors and identities."""
    if isinstance(t, IdOf):
        return t
    if isinstance(t, Comp):
        return Comp(invert(t.t2), invert(t.t1))
    if isinstance(t, TensorT):
        return TensorT(invert(t.t1), invert(t.t2))
    pairs = {Alpha: AlphaInv, AlphaInv: Alpha, LambdaT: LambdaInv, LambdaInv: LambdaT,
             RhoT: RhoInv, RhoInv: RhoT}
    if type(t) in pairs:
        return pairs[type(t)](*t.__dict__.values())
    if isinstance(t, Gamma):
        return Gamma(t.b, t.a)
    raise InputError(f"{type(t).__name__} is not a structural isomorphism")


def _merge(l, r):
    """Term l⊗r -> N for normal (left-nested, unit-free) l and r, with N."""
    fl = shape_formula(l)
    if isinstance(r, Unit):
        return RhoT(fl), l
    if isinstance(l, Unit):
        return LambdaT(shape_formula(r)), r
    if isinstance(r, Leaf):
        return IdOf(Tensor(fl, r.f)), Pair(l, r)
    # l ⊗ (r1 ⊗ z)  ->  (l ⊗ r1) ⊗ z  ->  N(l, r1) ⊗ z
    r1, z = r.left, r.right
    step = AlphaInv(fl, shape_formula(r1), z.f)
    m, n = _merge(l, r1)
    return comp(tensor(m, IdOf(z.f)), step), Pair(n, z)


def normalize(s):
    """Term from shape s to its left-nested unit-free normal form, with that form."""
    if isinstance(s, (Leaf, Unit)):
        return IdOf(shape_formula(s)), s
    tl, nl = normalize(s.left)
    tr, nr = normalize(s.right)
    m, n = _merge(nl, nr)
    return comp(m, tensor(tl, tr)), n


def coherence_iso(src, dst):
    if leaves(src) != leaves(dst):
        raise InputError(f"coherence_iso: leaf lists differ ({leaves(src)} vs {leaves(dst)})")
    t1, n1 = normalize(src)
    t2, n2 = normalize(dst)
    assert n1 == n2
    return comp(invert(t2), t1)
