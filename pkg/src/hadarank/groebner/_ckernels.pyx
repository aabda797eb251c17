# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``.

Monomials stay Python tuples of ints and coefficients stay exact rationals;
the gain comes from typed loops over tuple items and avoiding generator
overhead in the reduction inner loop.
"""

from cpython.tuple cimport PyTuple_GET_SIZE, PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from heapq import heapify, heappop, heappush

IMPLEMENTATION = "cython"


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if <long><object>PyTuple_GET_ITEM(a, i) > <long><object>PyTuple_GET_ITEM(b, i):
            return False
    return True


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long><object>PyTuple_GET_ITEM(a, i) + <long><object>PyTuple_GET_ITEM(b, i)
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long><object>PyTuple_GET_ITEM(a, i) - <long><object>PyTuple_GET_ITEM(b, i)
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef long x, y
    cdef object v
    for i in range(n):
        x = <long><object>PyTuple_GET_ITEM(a, i)
        y = <long><object>PyTuple_GET_ITEM(b, i)
        v = x if x > y else y
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def monomial_divides(tuple a, tuple b):
    return _divides(a, b)


def monomial_lcm(tuple a, tuple b):
    return _lcm(a, b)


def normal_form(dict f, list basis, heapkey, budget):
    cdef dict p, rem, g
    cdef list heap
    cdef tuple m, lm, shift, gm, nm
    cdef object c, gc, v
    cdef Py_ssize_t steps = 0
    cdef bint reduced
    if not basis or not f:
        return dict(f)
    p = dict(f)
    heap = [(heapkey(m), m) for m in p]
    heapify(heap)
    rem = {}
    while heap:
        m = heappop(heap)[1]
        c = p.pop(m, None)
        if c is None:
            continue
        reduced = False
        for entry in basis:
            lm = <tuple>entry[0]
            if _divides(lm, m):
                g = <dict>entry[1]
                shift = _sub(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = _add(gm, shift)
                    v = p.get(nm)
                    if v is None:
                        p[nm] = -c * gc
                        heappush(heap, (heapkey(nm), nm))
                    else:
                        v = v - c * gc
                        if v:
                            p[nm] = v
                        else:
                            del p[nm]
                steps += 1
                if steps >= 256:
                    budget.spend(steps)
                    steps = 0
                reduced = True
                break
        if not reduced:
            rem[m] = c
    budget.spend(steps)
    return rem


def spoly(dict f, tuple lmf, dict g, tuple lmg):
    cdef tuple lcm = _lcm(lmf, lmg)
    cdef tuple sf = _sub(lcm, lmf)
    cdef tuple sg = _sub(lcm, lmg)
    cdef dict out = {}
    cdef tuple m, nm
    cdef object c, v
    for m, c in f.items():
        if m != lmf:
            out[_add(m, sf)] = c
    for m, c in g.items():
        if m == lmg:
            continue
        nm = _add(m, sg)
        v = out.get(nm)
        if v is None:
            out[nm] = -c
        else:
            v = v - c
            if v:
                out[nm] = v
            else:
                del out[nm]
    return out


def integer_rank(rows):
    cdef list a = [list(row_in) for row_in in rows]
    cdef Py_ssize_t nrows = len(a), ncols, c, r, k, piv, rank = 0
    cdef list pr, row
    cdef object prev = 1, pv, f
    if nrows == 0:
        return 0
    ncols = len(a[0])
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if (<list>a[r])[c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = <list>a[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = <list>a[r]
            f = row[c]
            for k in range(c + 1, ncols):
                row[k] = (pv * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank
