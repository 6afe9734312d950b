# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM


def mul(tuple a, tuple b):
    cdef Py_ssize_t n = len(a), i
    cdef tuple r = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = b[<Py_ssize_t>a[i]]
        Py_INCREF(v)
        PyTuple_SET_ITEM(r, i, v)
    return r


def inv(tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef list r = [0] * n
    for i in range(n):
        r[<Py_ssize_t>a[i]] = i
    return tuple(r)


def is_identity(tuple a):
    cdef Py_ssize_t n = len(a), i
    for i in range(n):
        if <Py_ssize_t>a[i] != i:
            return False
    return True


def orbit_transversal(list gens, object point):
    cdef dict trans
    cdef list queue
    cdef Py_ssize_t head = 0
    cdef tuple g, ux
    cdef object x, y
    ident = tuple(range(len(gens[0]))) if gens else None
    trans = {point: ident}
    queue = [point]
    while head < len(queue):
        x = queue[head]
        head += 1
        ux = trans[x]
        for g in gens:
            y = g[<Py_ssize_t>x]
            if y not in trans:
                trans[y] = mul(ux, g)
                queue.append(y)
    return trans


def orbit(list gens, object point):
    cdef set seen = {point}
    cdef list queue = [point]
    cdef Py_ssize_t head = 0
    cdef tuple g
    cdef object x, y
    while head < len(queue):
        x = queue[head]
        head += 1
        for g in gens:
            y = g[<Py_ssize_t>x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return queue


def sift(tuple g, list bases, list inv_transversals, Py_ssize_t start=0):
    cdef Py_ssize_t i, nb = len(bases)
    cdef object t
    cdef dict tr
    for i in range(start, nb):
        tr = inv_transversals[i]
        t = tr.get(g[<Py_ssize_t>bases[i]])
        if t is None:
            return g, i
        g = mul(g, <tuple>t)
    return g, nb


def closure_mask(const int[:, :] cols, const unsigned char[:] mask):
    cdef Py_ssize_t order = mask.shape[0], ngens = cols.shape[0]
    cdef Py_ssize_t head = 0, tail = 0, k, x, y
    out = np.array(mask, dtype=np.uint8, copy=True)
    cdef unsigned char[:] flags = out
    queue_arr = np.empty(order, dtype=np.intp)
    cdef Py_ssize_t[:] queue = queue_arr
    for x in range(order):
        if flags[x]:
            queue[tail] = x
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(ngens):
            y = cols[k, x]
            if not flags[y]:
                flags[y] = 1
                queue[tail] = y
                tail += 1
    return out
