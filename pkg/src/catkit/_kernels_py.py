"""Numpy implementations of the hot scans.

Every function returns the lexicographically smallest witness (or None),
matching the compiled versions in ``_kernels.pyx`` exactly.
"""
import numpy as np


def _first(mask):
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def category_axioms(exist, dom, cod, comp):
    exist = np.asarray(exist, dtype=bool)
    n = exist.shape[0]
    out = {}

    x = _first(exist[dom] & ~exist)
    out["S1"] = None if x is None else (x,)
    y = _first(exist[cod] & ~exist)
    out["S2"] = None if y is None else (y,)

    lhs = exist[comp]
    rhs = (dom[:, None] == cod[None, :]) & exist[dom][:, None]
    k = _first((lhs != rhs).ravel())
    out["S3"] = None if k is None else divmod(k, n)

    out["S4"] = None
    for x in range(n):
        row = comp[x]
        left = row[comp]           # x·(y·z)
        right = comp[row]          # (x·y)·z
        bad = (left != right) & (exist[left] | exist[right])
        k = _first(bad.ravel())
        if k is not None:
            y, z = divmod(k, n)
            out["S4"] = (x, y, z)
            break

    ar = np.arange(n)
    s5 = comp[ar, dom]
    x = _first((s5 != ar) & (exist[s5] | exist))
    out["S5"] = None if x is None else (x,)
    s6 = comp[cod, ar]
    y = _first((s6 != ar) & (exist[s6] | exist))
    out["S6"] = None if y is None else (y,)
    return out


def functor_composition(fmap, src_comp, tgt_comp, tgt_exist):
    """First (x, y) with F(x·y) existing but different from F(x)·F(y)."""
    tgt_exist = np.asarray(tgt_exist, dtype=bool)
    n = src_comp.shape[0]
    lhs = fmap[src_comp]
    rhs = tgt_comp[fmap[:, None], fmap[None, :]]
    k = _first((tgt_exist[lhs] & (lhs != rhs)).ravel())
    return None if k is None else divmod(k, n)


def naturality(eta, fmap, gmap, src_comp, src_exist, tgt_comp, tgt_exist):
    """First (x, y) with x·y existing where η(x)·F(y) ≃ G(x)·η(y) fails."""
    src_exist = np.asarray(src_exist, dtype=bool)
    tgt_exist = np.asarray(tgt_exist, dtype=bool)
    n = src_comp.shape[0]
    a = tgt_comp[eta[:, None], fmap[None, :]]
    b = tgt_comp[gmap[:, None], eta[None, :]]
    bad = src_exist[src_comp] & ~((a == b) & tgt_exist[a])
    k = _first(bad.ravel())
    return None if k is None else divmod(k, n)
