# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coefficient kernels; same contract as ``_pykernels``.

Coefficients stay Python objects (exact rationals or floats), so the gain
comes from typed loop indices and list access, not from unboxed arithmetic.
"""


cpdef list mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [a[0] * 0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return out


cpdef list sub(list a, list b):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    return out


cpdef tuple divmod_(list a, list b):
    cdef list rem = list(a)
    cdef Py_ssize_t db = len(b) - 1, na = len(a), k, j
    if na - 1 < db:
        return [], rem
    cdef object inv = 1 / b[db]
    cdef list quo = [b[db] * 0] * (na - db)
    cdef object c
    for k in range(na - 1 - db, -1, -1):
        c = rem[k + db] * inv
        quo[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - c * b[j]
    return quo, rem[:db]


cpdef tuple hamilton(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    w = sub(sub(sub(mul(a0, b0), mul(a1, b1)), mul(a2, b2)), mul(a3, b3))
    x = sub(add(add(mul(a0, b1), mul(a1, b0)), mul(a2, b3)), mul(a3, b2))
    y = add(add(sub(mul(a0, b2), mul(a1, b3)), mul(a2, b0)), mul(a3, b1))
    z = add(sub(add(mul(a0, b3), mul(a1, b2)), mul(a2, b1)), mul(a3, b0))
    return w, x, y, z


cpdef object evaluate(list a, object t):
    cdef object acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * t + a[i]
    return acc
