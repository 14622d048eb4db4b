# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``_kernels_py``.

Values stay Python ints (arbitrary precision), so the gain comes from typed
loop indices and direct list access rather than from machine arithmetic.
"""


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef object x
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + x * b[j]
    return out


def homog_eval(list coeffs, object p, object q):
    cdef Py_ssize_t i
    cdef object acc = 0, qpow = 1
    for i in range(len(coeffs) - 1, -1, -1):
        acc = acc * p + coeffs[i] * qpow
        qpow = qpow * q
    return acc


def bareiss_det(m):
    cdef Py_ssize_t n = len(m), i, j, k
    cdef list a, rk, ri
    cdef object piv, prev, f
    cdef int sign = 1
    if n == 0:
        return 1
    a = [list(row) for row in m]
    prev = 1
    for k in range(n - 1):
        if (<list>a[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list>a[i])[k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = <list>a[k]
        piv = rk[k]
        for i in range(k + 1, n):
            ri = <list>a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - f * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * (<list>a[n - 1])[n - 1]


def leading_minors(m):
    cdef Py_ssize_t n = len(m), i, j, k
    cdef list a, rk, ri
    cdef object piv, prev, f
    cdef list out = []
    a = [list(row) for row in m]
    prev = 1
    for k in range(n):
        rk = <list>a[k]
        piv = rk[k]
        out.append(piv)
        if piv == 0:
            break
        for i in range(k + 1, n):
            ri = <list>a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - f * rk[j]) // prev
        prev = piv
    return out


def first_negative_2minor(m):
    cdef Py_ssize_t nr = len(m), nc, i1, i2, j1, j2
    cdef list r1, r2
    cdef object a, c, v
    if nr < 2:
        return None
    nc = len(m[0])
    for i1 in range(nr - 1):
        r1 = <list>m[i1]
        for i2 in range(i1 + 1, nr):
            r2 = <list>m[i2]
            for j1 in range(nc - 1):
                a = r1[j1]
                c = r2[j1]
                for j2 in range(j1 + 1, nc):
                    v = a * r2[j2] - r1[j2] * c
                    if v < 0:
                        return (i1, i2, j1, j2, v)
    return None
