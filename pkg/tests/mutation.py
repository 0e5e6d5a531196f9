"""Single-entry mutations of category and SMCC tables."""
import dataclasses

import numpy as np

from catkit.category import FiniteCategory
from catkit.monoidal import SmccModel

# which violation family a mutated SMCC table is allowed (and required) to produce
SMCC_FAMILY = {
    "tensor": "tensor", "alpha": "alpha", "alpha_inv": "alpha", "lam": "lambda", "lam_inv": "lambda",
    "rho": "rho", "rho_inv": "rho", "gamma": "gamma", "gamma_inv": "gamma", "impl": "impl",
    "phi": "closed", "psi": "closed",
}


def mutate_category(cat, rng):
    """Change one dom, cod or comp entry, chosen uniformly over all entries."""
    n = cat.size
    dom, cod, comp = cat.dom.copy(), cat.cod.copy(), cat.comp.copy()
    k = int(rng.integers(2 * n + n * n))
    if k < n:
        table, pos, arr = "dom", (k,), dom
    elif k < 2 * n:
        table, pos, arr = "cod", (k - n,), cod
    else:
        k -= 2 * n
        table, pos, arr = "comp", (k // n, k % n), comp
    old = int(arr[pos])
    new = int(rng.integers(n - 1))
    new += new >= old
    arr[pos] = new
    return FiniteCategory.from_tables(cat.exist, dom, cod, comp), (table, pos, old, new)


def _entries(s):
    m, b, c = s.monoidal, s.braiding, s.closed
    n = m.base.size
    out = []
    for name in ("tensor", "impl"):
        out += [(name, (i, j)) for i in range(n) for j in range(n)]
    for name, src in (("alpha", m), ("alpha_inv", m), ("lam", m), ("lam_inv", m), ("rho", m),
                      ("rho_inv", m), ("gamma", b), ("gamma_inv", b), ("phi", c), ("psi", c)):
        out += [(name, key) for key in sorted(getattr(src, name))]
    return out


def smcc_table_value(s, table, key):
    m, b, c = s.monoidal, s.braiding, s.closed
    if table == "tensor":
        return int(m.tensor[key])
    if table == "impl":
        return int(c.impl[key])
    src = b if table.startswith("gamma") else c if table in ("phi", "psi") else m
    return getattr(src, table)[key]


def replace_entry(s, table, key, value):
    m, b, c = s.monoidal, s.braiding, s.closed
    if table == "tensor":
        t = np.array(m.tensor)
        t[key] = value
        m = dataclasses.replace(m, tensor=t)
    elif table == "impl":
        t = np.array(c.impl)
        t[key] = value
        c = dataclasses.replace(c, impl=t)
    else:
        holder = b if table.startswith("gamma") else c if table in ("phi", "psi") else m
        t = dict(getattr(holder, table))
        t[key] = value
        holder = dataclasses.replace(holder, **{table: t})
        if holder.__class__ is m.__class__:
            m = holder
        elif holder.__class__ is b.__class__:
            b = holder
        else:
            c = holder
    return SmccModel(m, b, c, s.name)


def mutate_smcc(s, rng, tables=None):
    """Change one structure-table entry, with the table chosen uniformly first."""
    entries = _entries(s)
    names = sorted({t for t, _ in entries} if tables is None else set(tables))
    table = names[int(rng.integers(len(names)))]
    keys = [k for t, k in entries if t == table]
    key = keys[int(rng.integers(len(keys)))]
    n = s.base.size
    old = smcc_table_value(s, table, key)
    new = int(rng.integers(n - 1))
    new += new >= old
    return replace_entry(s, table, key, new), (table, key, old, new)
