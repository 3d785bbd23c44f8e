"""Pure-Python dense polynomial kernels over F_p.

Polynomials are sequences of residues in ascending degree order; every
function returns a trimmed tuple (the zero polynomial is ``()``).  The
compiled twin in ``_kernels.pyx`` exposes the same functions with the same
semantics.
"""

BACKEND = "python"


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def inverse(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse modulo %d" % p)
    return pow(a, p - 2, p)


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def scale(a, c, p):
    c %= p
    if not c:
        return ()
    return _trim([(v * c) % p for v in a])


def mul(a, b, p):
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def divmod_(a, b, p):
    """Return (quotient, remainder) of a by the nonzero polynomial b."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return (), _trim(r)
    inv_lead = inverse(b[db], p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            c = (c * inv_lead) % p
            q[k - db] = c
            off = k - db
            for i in range(db + 1):
                r[off + i] -= c * b[i]
    return _trim(q), _trim([v % p for v in r[:db]])


def gcd(a, b, p):
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, divmod_(a, b, p)[1]
    if not a:
        return ()
    return scale(a, inverse(a[-1], p), p)


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
