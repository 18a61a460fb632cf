"""Pure-Python coefficient kernels.

Coefficient sequences are ascending-degree lists of field elements
(``Fraction`` or ``float``). Nothing here trims trailing zeros; callers do.
"""


def mul(a, b):
    if not a or not b:
        return []
    nb = len(b)
    out = [a[0] * 0] * (len(a) + nb - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(nb):
            out[i + j] += ai * b[j]
    return out


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return out


def sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


def divmod_(a, b):
    """Long division of ``a`` by ``b``; ``b[-1]`` must be nonzero."""
    rem = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], rem
    inv = 1 / b[-1]
    quo = [b[-1] * 0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db] * inv
        quo[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    return quo, rem[:db]


def hamilton(a, b):
    """Hamilton product of quaternion polynomials given as (w, x, y, z) lists."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    w = sub(sub(sub(mul(a0, b0), mul(a1, b1)), mul(a2, b2)), mul(a3, b3))
    x = sub(add(add(mul(a0, b1), mul(a1, b0)), mul(a2, b3)), mul(a3, b2))
    y = add(add(sub(mul(a0, b2), mul(a1, b3)), mul(a2, b0)), mul(a3, b1))
    z = add(sub(add(mul(a0, b3), mul(a1, b2)), mul(a2, b1)), mul(a3, b0))
    return w, x, y, z


def evaluate(a, t):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc
