# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the scans in ``_kernels_py``; same results, same witnesses."""
from libc.stdint cimport int64_t
import numpy as np


def category_axioms(exist_in, dom_in, cod_in, comp_in):
    cdef const unsigned char[::1] E = np.ascontiguousarray(exist_in, dtype=np.uint8)
    cdef const int64_t[::1] dom = np.ascontiguousarray(dom_in, dtype=np.int64)
    cdef const int64_t[::1] cod = np.ascontiguousarray(cod_in, dtype=np.int64)
    cdef const int64_t[:, ::1] comp = np.ascontiguousarray(comp_in, dtype=np.int64)
    cdef Py_ssize_t n = E.shape[0]
    cdef Py_ssize_t x, y, z
    cdef int64_t a, b, xy
    cdef const int64_t[::1] rowx
    cdef const int64_t[::1] rowy
    cdef const int64_t[::1] rowxy
    cdef bint lhs, rhs, found
    out = {"S1": None, "S2": None, "S3": None, "S4": None, "S5": None, "S6": None}

    for x in range(n):
        if E[dom[x]] and not E[x]:
            out["S1"] = (x,)
            break
    for y in range(n):
        if E[cod[y]] and not E[y]:
            out["S2"] = (y,)
            break

    found = False
    for x in range(n):
        for y in range(n):
            lhs = E[comp[x, y]] != 0
            rhs = dom[x] == cod[y] and E[dom[x]] != 0
            if lhs != rhs:
                out["S3"] = (x, y)
                found = True
                break
        if found:
            break

    found = False
    for x in range(n):
        rowx = comp[x]
        for y in range(n):
            rowy = comp[y]
            xy = rowx[y]
            rowxy = comp[xy]
            for z in range(n):
                a = rowx[rowy[z]]
                b = rowxy[z]
                if a != b and (E[a] or E[b]):
                    out["S4"] = (x, y, z)
                    found = True
                    break
            if found:
                break
        if found:
            break

    for x in range(n):
        a = comp[x, dom[x]]
        if a != x and (E[a] or E[x]):
            out["S5"] = (x,)
            break
    for y in range(n):
        a = comp[cod[y], y]
        if a != y and (E[a] or E[y]):
            out["S6"] = (y,)
            break
    return out


def functor_composition(fmap_in, src_comp_in, tgt_comp_in, tgt_exist_in):
    cdef const int64_t[::1] F = np.ascontiguousarray(fmap_in, dtype=np.int64)
    cdef const int64_t[:, ::1] sc = np.ascontiguousarray(src_comp_in, dtype=np.int64)
    cdef const int64_t[:, ::1] tc = np.ascontiguousarray(tgt_comp_in, dtype=np.int64)
    cdef const unsigned char[::1] TE = np.ascontiguousarray(tgt_exist_in, dtype=np.uint8)
    cdef Py_ssize_t n = sc.shape[0]
    cdef Py_ssize_t x, y
    cdef int64_t lhs
    for x in range(n):
        for y in range(n):
            lhs = F[sc[x, y]]
            if TE[lhs] and lhs != tc[F[x], F[y]]:
                return (x, y)
    return None


def naturality(eta_in, fmap_in, gmap_in, src_comp_in, src_exist_in, tgt_comp_in, tgt_exist_in):
    cdef const int64_t[::1] eta = np.ascontiguousarray(eta_in, dtype=np.int64)
    cdef const int64_t[::1] F = np.ascontiguousarray(fmap_in, dtype=np.int64)
    cdef const int64_t[::1] G = np.ascontiguousarray(gmap_in, dtype=np.int64)
    cdef const int64_t[:, ::1] sc = np.ascontiguousarray(src_comp_in, dtype=np.int64)
    cdef const unsigned char[::1] SE = np.ascontiguousarray(src_exist_in, dtype=np.uint8)
    cdef const int64_t[:, ::1] tc = np.ascontiguousarray(tgt_comp_in, dtype=np.int64)
    cdef const unsigned char[::1] TE = np.ascontiguousarray(tgt_exist_in, dtype=np.uint8)
    cdef Py_ssize_t n = sc.shape[0]
    cdef Py_ssize_t x, y
    cdef int64_t a, b
    for x in range(n):
        for y in range(n):
            if SE[sc[x, y]]:
                a = tc[eta[x], F[y]]
                b = tc[G[x], eta[y]]
                if a != b or not TE[a]:
                    return (x, y)
    return None
