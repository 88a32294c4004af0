# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_fallback``.

Coefficients stay generic Python objects (arbitrary-precision ints or
Fractions); the win comes from running the dict/list plumbing at C level.
"""

BACKEND = "cython"


def lp_mul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, e, x, c
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            x = ca * cb
            c = out.get(e)
            if c is None:
                out[e] = x
            else:
                c = c + x
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def lp_submul(dict r, dict b, object coef, object shift):
    cdef object eb, cb, e, x, c
    for eb, cb in b.items():
        e = eb + shift
        x = coef * cb
        c = r.get(e)
        if c is None:
            r[e] = -x
        else:
            c = c - x
            if c:
                r[e] = c
            else:
                del r[e]


def lp_addmul(dict acc, dict a, dict b):
    cdef object ea, ca, eb, cb, e, x, c
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            x = ca * cb
            c = acc.get(e)
            if c is None:
                acc[e] = x
            else:
                c = c + x
                if c:
                    acc[e] = c
                else:
                    del acc[e]


def cyc_mulreduce(a, b, red_rows, Py_ssize_t phi):
    cdef Py_ssize_t i, j, t, idx, n = 2 * phi - 1
    cdef list conv = [0] * n
    cdef object ca, cb, c, rv
    cdef list out
    for i in range(phi):
        ca = a[i]
        if not ca:
            continue
        for j in range(phi):
            cb = b[j]
            if cb:
                conv[i + j] = conv[i + j] + ca * cb
    out = conv[:phi]
    for t in range(phi - 1):
        c = conv[phi + t]
        if not c:
            continue
        row = red_rows[t]
        for idx in range(phi):
            rv = row[idx]
            if rv:
                out[idx] = out[idx] + c * rv
    return out
