"""Interpretation of formulas and evaluation of terms in a concrete SMCC model."""
from dataclasses import dataclass, field

from ..errors import EnvironmentMappingError, InputError, ModelCompletenessError
from ..monoidal import derive_eval
from ..report import StructureReport
from . import terms as T
from .syntax import Atom, Lolli, One, Tensor


@dataclass(frozen=True)
class Environment:
    atom_map: dict
    bottom_atom: str = None

    def __post_init__(self):
        object.__setattr__(self, "atom_map", {str(k): int(v) for k, v in dict(self.atom_map).items()})
        if self.bottom_atom is not None and self.bottom_atom not in self.atom_map:
            raise InputError(f"bottom atom {self.bottom_atom!r} is not mapped")

    def validate(self, model):
        C = model.base
        for name, v in self.atom_map.items():
            if not (0 <= v < C.size and C.is_identity(v)):
                raise InputError(f"atom {name!r} maps to {v}, which is not an identity")
        return self

    def bottom(self):
        if self.bottom_atom is None:
            raise EnvironmentMappingError("environment has no bottom atom")
        return self.atom_map[self.bottom_atom]


def interpret_formula(f, env, s):
    m, c = s.monoidal, s.closed
    if isinstance(f, Atom):
        if f.name not in env.atom_map:
            raise EnvironmentMappingError(f"atom {f.name!r} has no interpretation")
        return env.atom_map[f.name]
    if isinstance(f, One):
        return m.unit
    if isinstance(f, Tensor):
        return m.t(interpret_formula(f.left, env, s), interpret_formula(f.right, env, s))
    if isinstance(f, Lolli):
        return c.imp(interpret_formula(f.left, env, s), interpret_formula(f.right, env, s))
    raise InputError(f"not a formula: {f!r}")


def interpret_context(ctx, env, s):
    return interpret_formula(T.shape_formula(T.context_shape(list(ctx))), env, s)


def _lookup(table, key, C, arg, what):
    if key in table:
        return table[key]
    if not C.E(arg):
        return C.undefined
    raise ModelCompletenessError(f"{what} has no entry for {key}")


def evaluate_term(t, env, s):
    m, b, c = s.monoidal, s.braiding, s.closed
    C = m.base
    ev = lambda u: evaluate_term(u, env, s)
    fm = lambda f: interpret_formula(f, env, s)
    if isinstance(t, T.IdOf):
        return fm(t.f)
    if isinstance(t, T.Comp):
        return C.c(ev(t.t1), ev(t.t2))
    if isinstance(t, T.TensorT):
        return m.t(ev(t.t1), ev(t.t2))
    if isinstance(t, (T.Alpha, T.AlphaInv)):
        key = (fm(t.a), fm(t.b), fm(t.c))
        table = m.alpha if isinstance(t, T.Alpha) else m.alpha_inv
        return _lookup(table, key, C, key[0], "alpha")
    unary = {T.LambdaT: m.lam, T.LambdaInv: m.lam_inv, T.RhoT: m.rho, T.RhoInv: m.rho_inv}
    if type(t) in unary:
        key = (fm(t.a),)
        return _lookup(unary[type(t)], key, C, key[0], type(t).__name__)
    if isinstance(t, T.Gamma):
        key = (fm(t.a), fm(t.b))
        return _lookup(b.gamma, key, C, key[0], "gamma")
    if isinstance(t, T.Curry):
        v = ev(t.t)
        return _lookup(c.phi, (fm(t.a), fm(t.x), v), C, v, "phi")
    if isinstance(t, T.Uncurry):
        v = ev(t.t)
        return _lookup(c.psi, (fm(t.a), fm(t.c), v), C, v, "psi")
    if isinstance(t, T.Eval):
        return derive_eval(m, c, fm(t.a), fm(t.b))
    raise InputError(f"not a morphism term: {t!r}")


def dom_cod_check(t, sq, env, s):
    C = s.base
    report = StructureReport()
    v = evaluate_term(t, env, s)
    src = interpret_context(sq.context, env, s)
    dst = interpret_formula(sq.conclusion, env, s)
    report.info.update({"value": v, "dom": src, "cod": dst})
    if not C.E(v):
        report.add("term.existence", (v,), "non-existent composite")
        return report.finalize()
    if not (C.dom[v] == src and C.E(src)):
        report.add("term.dom", (v, int(C.dom[v]), src), "dom does not match the context")
    if not (C.cod[v] == dst and C.E(dst)):
        report.add("term.cod", (v, int(C.cod[v]), dst), "cod does not match the conclusion")
    return report.finalize()
