"""Free-logic primitives.

Elements of a carrier are dense indices ``0..size-1``. The existence mask
splits them into existing and non-existent elements; quantifiers only
range over the existing ones while the equalities are total on the whole
carrier.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True, eq=False)
class Carrier:
    size: int
    existing: np.ndarray

    def __post_init__(self):
        if not isinstance(self.size, (int, np.integer)) or self.size < 1:
            raise InputError(f"carrier size must be a positive integer, got {self.size!r}")
        mask = np.asarray(self.existing, dtype=bool)
        if mask.shape != (self.size,):
            raise InputError(f"existence mask has shape {mask.shape}, expected ({self.size},)")
        mask = mask.copy()
        mask.flags.writeable = False
        object.__setattr__(self, "size", int(self.size))
        object.__setattr__(self, "existing", mask)

    @classmethod
    def from_indices(cls, size, indices):
        mask = np.zeros(size, dtype=bool)
        for i in indices:
            if not 0 <= i < size:
                raise InputError(f"existing index {i} outside 0..{size - 1}")
            mask[i] = True
        return cls(size, mask)

    def check_index(self, x):
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.size:
            raise InputError(f"element {x!r} outside 0..{self.size - 1}")
        return int(x)

    def exists(self, x):
        return bool(self.existing[self.check_index(x)])

    @property
    def existing_indices(self):
        return [int(i) for i in np.flatnonzero(self.existing)]

    @property
    def nonexistent_indices(self):
        return [int(i) for i in np.flatnonzero(~self.existing)]

    @property
    def has_nonexistent(self):
        return not bool(self.existing.all())


def existing_identity(c, x, y):
    """x ≃ y: equal, and both sides exist."""
    ex, ey = c.exists(x), c.exists(y)
    return ex and ey and x == y


def kleene_eq(c, x, y):
    """x ≅ y: if either side exists, they are equal."""
    ex, ey = c.exists(x), c.exists(y)
    return not (ex or ey) or x == y


def directed_eq(c, x, y):
    """x ≥ y: if the left side exists, they are equal."""
    ex, y = c.exists(x), c.check_index(y)
    return not ex or x == y


def quantify_existing(c, mode, pred):
    xs = c.existing_indices
    if mode == "forall":
        return all(pred(x) for x in xs)
    if mode == "exists":
        return any(pred(x) for x in xs)
    raise InputError(f"quantifier mode must be 'forall' or 'exists', got {mode!r}")
