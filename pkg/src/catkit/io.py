"""JSON formats for categories, functors, transformations, models and witnesses."""
import json
import os

import numpy as np

from . import config
from .category import FiniteCategory
from .errors import InputError
from .functor import FunctorMap, NatTransMap, extend_components

CATEGORY_KEYS = {"size", "existing", "dom", "cod", "comp"}
MONOIDAL_KEYS = {"category", "tensor", "unit", "alpha", "alpha_inv", "lambda", "lambda_inv", "rho", "rho_inv"}
BRAIDING_KEYS = {"gamma", "gamma_inv"}
CLOSED_KEYS = {"impl", "phi", "psi"}


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}") from None


def write_json(obj, path=None):
    text = json.dumps(obj, indent=None, separators=(",", ":"), sort_keys=False)
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    return text


def _keys(d, required, optional=(), what="object"):
    if not isinstance(d, dict):
        raise InputError(f"{what} must be a JSON object")
    unknown = set(d) - set(required) - set(optional)
    if unknown:
        raise InputError(f"{what}: unknown keys {sorted(unknown)}")
    missing = set(required) - set(d)
    if missing:
        raise InputError(f"{what}: missing keys {sorted(missing)}")


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


# ------------------------------------------------------------ categories

def category_from_dict(d):
    _keys(d, CATEGORY_KEYS, what="category")
    n = _int(d["size"], "size")
    if n < 1:
        raise InputError("size must be positive")
    config.guard(n, "category file")
    exist = np.zeros(n, dtype=bool)
    for i in d["existing"]:
        if not 0 <= _int(i, "existing entry") < n:
            raise InputError(f"existing index {i} out of range")
        exist[i] = True
    return FiniteCategory.from_tables(exist, d["dom"], d["cod"], d["comp"])


def category_to_dict(cat):
    return {"size": cat.size, "existing": [int(i) for i in np.flatnonzero(cat.exist)],
            "dom": cat.dom.tolist(), "cod": cat.cod.tolist(), "comp": cat.comp.tolist()}


def load_category(path):
    return category_from_dict(read_json(path))


def functor_from_dict(d, base_dir="."):
    _keys(d, {"source", "target", "map"}, what="functor")
    src = load_category(os.path.join(base_dir, d["source"]))
    tgt = load_category(os.path.join(base_dir, d["target"]))
    return FunctorMap(src, tgt, d["map"])


def load_functor(path):
    return functor_from_dict(read_json(path), os.path.dirname(path))


def nattrans_from_dict(d, base_dir="."):
    _keys(d, {"F", "G"}, {"eta", "components"}, what="natural transformation")
    if ("eta" in d) == ("components" in d):
        raise InputError("natural transformation needs exactly one of 'eta' and 'components'")
    F = load_functor(os.path.join(base_dir, d["F"]))
    G = load_functor(os.path.join(base_dir, d["G"]))
    if "eta" in d:
        return NatTransMap(F, G, d["eta"])
    comps = {}
    for k, v in d["components"].items():
        try:
            comps[int(k)] = _int(v, "component")
        except ValueError:
            raise InputError(f"component key {k!r} is not an index") from None
    return extend_components(comps, F, G)


def load_nattrans(path):
    return nattrans_from_dict(read_json(path), os.path.dirname(path))


# ------------------------------------------------------------ monoidal models

def _table_in(d, arity, what):
    if not isinstance(d, dict):
        raise InputError(f"{what} must be an object keyed by comma-separated indices")
    out = {}
    for k, v in d.items():
        try:
            key = tuple(int(p) for p in k.split(","))
        except ValueError:
            raise InputError(f"{what}: bad key {k!r}") from None
        if len(key) != arity:
            raise InputError(f"{what}: key {k!r} must have {arity} parts")
        out[key] = _int(v, f"{what}[{k}]")
    return out


def _table_out(t):
    return {",".join(str(int(p)) for p in k): int(v) for k, v in sorted(t.items())}


def monoidal_from_dict(d, require_closed=False):
    from .monoidal import BraidingData, ClosedStructure, MonoidalStructure, SmccModel

    optional = BRAIDING_KEYS | CLOSED_KEYS
    required = MONOIDAL_KEYS | (optional if require_closed else set())
    _keys(d, required, optional, what="monoidal model")
    cat = category_from_dict(d["category"])
    m = MonoidalStructure(
        cat, d["tensor"], _int(d["unit"], "unit"),
        _table_in(d["alpha"], 3, "alpha"), _table_in(d["alpha_inv"], 3, "alpha_inv"),
        _table_in(d["lambda"], 1, "lambda"), _table_in(d["lambda_inv"], 1, "lambda_inv"),
        _table_in(d["rho"], 1, "rho"), _table_in(d["rho_inv"], 1, "rho_inv"))
    if not require_closed:
        return m
    b = BraidingData(_table_in(d["gamma"], 2, "gamma"), _table_in(d["gamma_inv"], 2, "gamma_inv"))
    c = ClosedStructure(d["impl"], _table_in(d["phi"], 3, "phi"), _table_in(d["psi"], 3, "psi"))
    return SmccModel(m, b, c)


def smcc_to_dict(s):
    m, b, c = s.monoidal, s.braiding, s.closed
    return {
        "category": category_to_dict(m.base), "tensor": m.tensor.tolist(), "unit": int(m.unit),
        "alpha": _table_out(m.alpha), "alpha_inv": _table_out(m.alpha_inv),
        "lambda": _table_out(m.lam), "lambda_inv": _table_out(m.lam_inv),
        "rho": _table_out(m.rho), "rho_inv": _table_out(m.rho_inv),
        "gamma": _table_out(b.gamma), "gamma_inv": _table_out(b.gamma_inv),
        "impl": np.asarray(c.impl).tolist(), "phi": _table_out(c.phi), "psi": _table_out(c.psi),
    }


def load_smcc(path):
    return monoidal_from_dict(read_json(path), require_closed=True)


def load_monoidal(path):
    return monoidal_from_dict(read_json(path))


# ------------------------------------------------------------ IMLL environments, witnesses

def environment_from_dict(d):
    from .imll import Environment

    _keys(d, {"atoms", "bottom"}, what="environment")
    if not isinstance(d["atoms"], dict):
        raise InputError("environment: 'atoms' must map names to indices")
    atoms = {str(k): _int(v, f"atom {k}") for k, v in d["atoms"].items()}
    return Environment(atoms, d["bottom"])


def load_environment(path):
    return environment_from_dict(read_json(path))


WITNESS_FIELDS = {"pullback": ("p0", "p1", "f", "g"), "product": ("object", "proj1", "proj2")}


def witness_from_dict(d):
    """(kind, fields, category-or-None) from a witness file."""
    if not isinstance(d, dict):
        raise InputError("witness must be a JSON object")
    kinds = [k for k in WITNESS_FIELDS if k in d]
    _keys(d, set(kinds), {"category"}, what="witness")
    if len(kinds) != 1:
        raise InputError("witness must contain exactly one of 'pullback' and 'product'")
    kind = kinds[0]
    body = d[kind]
    _keys(body, set(WITNESS_FIELDS[kind]), what=f"{kind} witness")
    fields = {k: _int(body[k], k) for k in WITNESS_FIELDS[kind]}
    cat = category_from_dict(d["category"]) if "category" in d else None
    return kind, fields, cat
