"""Finite one-sorted categories.

A category is three dense tables over a carrier: ``dom``, ``cod`` and
``comp`` with ``comp[x, y]`` the composite x·y ("x after y"). Objects
are the existing dom-fixpoints. Axioms S1–S6 follow the free-logic
presentation; NE demands at least one non-existent element.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import config, kernels
from .errors import InputError
from .kernel import Carrier
from .report import StructureReport

AXIOMS = ("S1", "S2", "S3", "S4", "S5", "S6", "NE")

AXIOM_TEXT = {
    "S1": "E(dom x) -> E x",
    "S2": "E(cod y) -> E y",
    "S3": "E(x·y) <-> dom x ≃ cod y",
    "S4": "x·(y·z) ≅ (x·y)·z",
    "S5": "x·(dom x) ≅ x",
    "S6": "(cod y)·y ≅ y",
    "NE": "some element does not exist",
}


def _frozen(a, shape, what, n):
    try:
        arr = np.array(a, dtype=np.int64)
    except (TypeError, ValueError):
        raise InputError(f"{what} table is ragged or not integral") from None
    if arr.shape != shape:
        raise InputError(f"{what} table has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise InputError(f"{what} table has entries outside 0..{n - 1}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    carrier: Carrier
    dom: np.ndarray
    cod: np.ndarray
    comp: np.ndarray
    labels: tuple = None

    def __post_init__(self):
        n = self.carrier.size
        object.__setattr__(self, "dom", _frozen(self.dom, (n,), "dom", n))
        object.__setattr__(self, "cod", _frozen(self.cod, (n,), "cod", n))
        object.__setattr__(self, "comp", _frozen(self.comp, (n, n), "comp", n))
        if self.labels is not None:
            if len(self.labels) != n:
                raise InputError("labels must cover the whole carrier")
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))

    @classmethod
    def from_tables(cls, existing, dom, cod, comp, labels=None):
        """Build from an existence mask (booleans) and the three tables."""
        mask = np.asarray(existing, dtype=bool)
        return cls(Carrier(int(mask.shape[0]), mask), dom, cod, comp, labels)

    @property
    def size(self):
        return self.carrier.size

    @property
    def exist(self):
        return self.carrier.existing

    def E(self, x):
        return bool(self.carrier.existing[x])

    def c(self, x, y):
        return int(self.comp[x, y])

    def same_tables(self, other):
        return (
            self.size == other.size
            and np.array_equal(self.exist, other.exist)
            and np.array_equal(self.dom, other.dom)
            and np.array_equal(self.cod, other.cod)
            and np.array_equal(self.comp, other.comp)
        )

    @cached_property
    def undefined(self):
        """The designated non-existent element (the largest one), or None."""
        idx = np.flatnonzero(~self.exist)
        return int(idx[-1]) if idx.size else None

    def label(self, x):
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    @cached_property
    def identity_list(self):
        ar = np.arange(self.size)
        return tuple(int(i) for i in np.flatnonzero(self.exist & (self.dom == ar)))

    @cached_property
    def _identity_set(self):
        return frozenset(self.identity_list)

    def is_identity(self, x):
        return x in self._identity_set

    @cached_property
    def _homs(self):
        table = {}
        ids = self._identity_set
        for f in np.flatnonzero(self.exist):
            d, c = int(self.dom[f]), int(self.cod[f])
            if d in ids and c in ids:
                table.setdefault((d, c), []).append(int(f))
        return {k: np.array(v, dtype=np.int64) for k, v in table.items()}

    def hom(self, a, b):
        """Existing f with dom f ≃ a and cod f ≃ b, as a sorted array."""
        if not (self.is_identity(a) and self.is_identity(b)):
            raise InputError(f"hom({a}, {b}): both arguments must be identities")
        return self._homs.get((a, b), np.zeros(0, dtype=np.int64))

    def arrow(self, x):
        """(dom, cod) for an existing element."""
        return int(self.dom[x]), int(self.cod[x])

    def __repr__(self):
        return f"FiniteCategory(size={self.size}, existing={int(self.exist.sum())}, identities={len(self.identity_list)})"


def check_category(cat):
    report = StructureReport()
    found = kernels.category_axioms(cat.exist, cat.dom, cat.cod, cat.comp)
    for name in AXIOMS[:-1]:
        w = found[name]
        if w is not None:
            report.add(name, w, AXIOM_TEXT[name])
    if not cat.carrier.has_nonexistent:
        report.add("NE", (), AXIOM_TEXT["NE"])
    n = cat.size
    report.stats.update({"elements": n, "existing": int(cat.exist.sum()),
                         "S1": n, "S2": n, "S3": n * n, "S4": n ** 3, "S5": n, "S6": n})
    return report.finalize()


def identities(cat):
    return set(cat.identity_list)


def hom_set(cat, a, b):
    return {int(f) for f in cat.hom(a, b)}


def opposite_category(cat):
    labels = cat.labels
    return FiniteCategory(cat.carrier, cat.cod, cat.dom, cat.comp.T.copy(), labels)


def product_category(c, d, max_size=None):
    """Carrier pairs (x, y) encoded as x·|d| + y; everything componentwise."""
    n, m = c.size, d.size
    if max_size is None:
        config.guard(n * m, "product category")
    elif n * m > max_size:
        from .errors import ResourceError
        raise ResourceError(f"product category needs {n * m} elements, limit is {max_size}")
    exist = (c.exist[:, None] & d.exist[None, :]).ravel()
    dom = (c.dom[:, None] * m + d.dom[None, :]).ravel()
    cod = (c.cod[:, None] * m + d.cod[None, :]).ravel()
    # comp[(x1,y1), (x2,y2)] = (x1·x2, y1·y2)
    comp = (c.comp[:, None, :, None] * m + d.comp[None, :, None, :]).reshape(n * m, n * m)
    labels = None
    if c.labels is not None and d.labels is not None:
        labels = [f"({a},{b})" for a in c.labels for b in d.labels]
    return FiniteCategory.from_tables(exist, dom, cod, comp, labels)
