"""Pure-Python integer kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here with identical semantics.  All inputs are Python ints (or
lists of them); no rational arithmetic happens at this level.
"""


def poly_mul(a, b):
    """Convolve two ascending integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def homog_eval(coeffs, p, q):
    """Return ``sum c_i p^i q^(n-i)``, i.e. ``q^n f(p/q)`` for ``n = len-1``.

    With ``q > 0`` the result has the sign of ``f(p/q)``.
    """
    acc = 0
    qpow = 1
    for c in reversed(coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    return acc


def bareiss_det(m):
    """Exact determinant of a square integer matrix (fraction-free)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - f * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def leading_minors(m):
    """Leading principal minors of a square integer matrix.

    Bareiss elimination without pivoting: the k-th pivot is the k-th leading
    principal minor.  Stops after the first zero minor, since later pivots are
    undefined without row exchanges.
    """
    n = len(m)
    a = [list(row) for row in m]
    out = []
    prev = 1
    for k in range(n):
        piv = a[k][k]
        out.append(piv)
        if piv == 0:
            break
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * piv - f * rk[j]) // prev
        prev = piv
    return out


def first_negative_2minor(m):
    """Lexicographically first negative 2x2 minor of an integer matrix.

    Returns ``(i1, i2, j1, j2, value)`` or None.
    """
    nr = len(m)
    if nr < 2:
        return None
    nc = len(m[0])
    for i1 in range(nr - 1):
        r1 = m[i1]
        for i2 in range(i1 + 1, nr):
            r2 = m[i2]
            for j1 in range(nc - 1):
                a = r1[j1]
                c = r2[j1]
                for j2 in range(j1 + 1, nc):
                    v = a * r2[j2] - r1[j2] * c
                    if v < 0:
                        return (i1, i2, j1, j2, v)
    return None
