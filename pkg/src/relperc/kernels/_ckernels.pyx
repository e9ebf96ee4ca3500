# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels for subset enumeration, Monte Carlo connectivity, and
percolation growth.  Mirrors the interface of ``_fallback``; integer outputs
are bit-identical to the reference implementations."""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def connectivity_table(int n, eu, ev):
    """Connectivity flag for every subset of the edge set (see _fallback)."""
    cdef const int[::1] u = np.ascontiguousarray(eu, dtype=np.int32)
    cdef const int[::1] v = np.ascontiguousarray(ev, dtype=np.int32)
    cdef Py_ssize_t m = u.shape[0]
    cdef unsigned long long size = 1ULL << m
    out = np.zeros(size, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    cdef unsigned long long s
    cdef Py_ssize_t e
    cdef int i, ru, rv, merges, need
    cdef int* parent
    if n <= 1:
        out[:] = 1
        return out
    need = n - 1
    parent = <int*> malloc(n * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    try:
        with nogil:
            for s in range(size):
                if __builtin_popcountll(s) < need:
                    continue
                for i in range(n):
                    parent[i] = i
                merges = 0
                for e in range(m):
                    if (s >> e) & 1ULL:
                        ru = _find(parent, u[e])
                        rv = _find(parent, v[e])
                        if ru != rv:
                            parent[ru] = rv
                            merges += 1
                if merges == need:
                    o[s] = 1
    finally:
        free(parent)
    return out


def count_connected_masks(int n, eu, ev, masks):
    """Number of mask rows whose active edges connect all n nodes."""
    cdef const int[::1] u = np.ascontiguousarray(eu, dtype=np.int32)
    cdef const int[::1] v = np.ascontiguousarray(ev, dtype=np.int32)
    cdef const unsigned char[:, ::1] rows = np.ascontiguousarray(masks, dtype=np.uint8)
    cdef Py_ssize_t trials = rows.shape[0]
    cdef Py_ssize_t m = rows.shape[1]
    cdef Py_ssize_t t, e
    cdef int i, ru, rv, merges, need
    cdef long long hits = 0
    cdef int* parent
    if n <= 1:
        return int(trials)
    need = n - 1
    parent = <int*> malloc(n * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    try:
        with nogil:
            for t in range(trials):
                for i in range(n):
                    parent[i] = i
                merges = 0
                for e in range(m):
                    if rows[t, e]:
                        ru = _find(parent, u[e])
                        rv = _find(parent, v[e])
                        if ru != rv:
                            parent[ru] = rv
                            merges += 1
                if merges == need:
                    hits += 1
    finally:
        free(parent)
    return int(hits)


def largest_component_growth(int n, eu, ev, order):
    """Largest component size after each prefix of the insertion order."""
    cdef const int[::1] u = np.ascontiguousarray(eu, dtype=np.int32)
    cdef const int[::1] v = np.ascontiguousarray(ev, dtype=np.int32)
    cdef const long long[::1] ords = np.ascontiguousarray(order, dtype=np.int64)
    cdef Py_ssize_t k = ords.shape[0]
    out = np.empty(k + 1, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t i
    cdef long long e
    cdef int x, y, tmp, best
    cdef int* parent
    cdef int* size
    parent = <int*> malloc(n * sizeof(int))
    size = <int*> malloc(n * sizeof(int))
    if parent == NULL or size == NULL:
        free(parent)
        free(size)
        raise MemoryError()
    try:
        with nogil:
            for x in range(n):
                parent[x] = x
                size[x] = 1
            best = 1 if n > 0 else 0
            o[0] = best
            for i in range(k):
                e = ords[i]
                x = _find(parent, u[e])
                y = _find(parent, v[e])
                if x != y:
                    if size[x] < size[y]:
                        tmp = x
                        x = y
                        y = tmp
                    parent[y] = x
                    size[x] += size[y]
                    if size[x] > best:
                        best = size[x]
                o[i + 1] = best
    finally:
        free(parent)
        free(size)
    return out


def poisson_binomial_pmf(probs):
    """Success-count distribution for independent Bernoulli trials."""
    cdef const double[::1] pv = np.ascontiguousarray(probs, dtype=np.float64)
    cdef Py_ssize_t n = pv.shape[0]
    out = np.zeros(n + 1, dtype=np.float64)
    cdef double[::1] pmf = out
    cdef Py_ssize_t k, i
    cdef double p, q
    pmf[0] = 1.0
    with nogil:
        for k in range(n):
            p = pv[k]
            q = 1.0 - p
            for i in range(k + 1, 0, -1):
                pmf[i] = pmf[i] * q + pmf[i - 1] * p
            pmf[0] *= q
    return out
