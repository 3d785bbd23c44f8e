# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels over F_p.

Same contract as ``_kernels_py``: inputs are sequences of residues in
ascending degree order, outputs are trimmed tuples.  Requires p < 2**31.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

BACKEND = "cython"

cdef uint64_t _FOLD = (<uint64_t>1) << 63


cdef inline int64_t _inv(int64_t a, int64_t p) except -1:
    cdef int64_t t = 0, newt = 1, r = p, newr, q, tmp
    a %= p
    if a < 0:
        a += p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse modulo %d" % p)
    newr = a
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int64_t* _load(object a, Py_ssize_t n, int64_t p) except NULL:
    cdef int64_t* buf = <int64_t*>malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef Py_ssize_t i
    cdef int64_t v
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        v = a[i] % p
        buf[i] = v
    return buf


cdef tuple _pack(int64_t* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list tmp = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        tmp[i] = buf[i]
    return tuple(tmp)


def inverse(a, p):
    return _inv(a, p)


def add(a, b, int64_t p):
    cdef Py_ssize_t na = len(a), nb = len(b), n = max(na, nb), i
    cdef int64_t* out = <int64_t*>malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef int64_t v
    try:
        for i in range(n):
            v = 0
            if i < na:
                v += a[i]
            if i < nb:
                v += b[i]
            v %= p
            if v < 0:
                v += p
            out[i] = v
        return _pack(out, n)
    finally:
        free(out)


def sub(a, b, int64_t p):
    cdef Py_ssize_t na = len(a), nb = len(b), n = max(na, nb), i
    cdef int64_t* out = <int64_t*>malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef int64_t v
    try:
        for i in range(n):
            v = 0
            if i < na:
                v += a[i]
            if i < nb:
                v -= b[i]
            v %= p
            if v < 0:
                v += p
            out[i] = v
        return _pack(out, n)
    finally:
        free(out)


def scale(a, c, int64_t p):
    cdef Py_ssize_t n = len(a), i
    cdef int64_t cc = c % p
    if cc < 0:
        cc += p
    if cc == 0:
        return ()
    cdef int64_t* buf = _load(a, n, p)
    try:
        for i in range(n):
            buf[i] = (buf[i] * cc) % p
        return _pack(buf, n)
    finally:
        free(buf)


def mul(a, b, int64_t p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n
    if na == 0 or nb == 0:
        return ()
    n = na + nb - 1
    cdef int64_t* x = _load(a, na, p)
    cdef int64_t* y = NULL
    cdef uint64_t* out = NULL
    cdef uint64_t t
    cdef int64_t yj
    try:
        y = _load(b, nb, p)
        out = <uint64_t*>malloc(n * sizeof(uint64_t))
        if out == NULL:
            raise MemoryError()
        for i in range(n):
            out[i] = 0
        for j in range(nb):
            yj = y[j]
            if yj == 0:
                continue
            for i in range(na):
                t = out[i + j] + <uint64_t>(x[i] * yj)
                if t >= _FOLD:
                    t %= <uint64_t>p
                out[i + j] = t
        for i in range(n):
            out[i] = out[i] % <uint64_t>p
        return _pack(<int64_t*>out, n)
    finally:
        free(x)
        if y != NULL:
            free(y)
        if out != NULL:
            free(out)


cdef Py_ssize_t _rem_inplace(int64_t* r, Py_ssize_t nr, int64_t* b, Py_ssize_t nb,
                             int64_t p, int64_t* q) except -2:
    # r <- r mod b; quotient written to q when q is not NULL; returns trimmed length of r
    cdef Py_ssize_t db = nb - 1, k, i, off
    cdef int64_t inv_lead = _inv(b[db], p), c
    for k in range(nr - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            if q != NULL:
                q[k - db] = 0
            continue
        c = (c * inv_lead) % p
        if q != NULL:
            q[k - db] = c
        off = k - db
        for i in range(db + 1):
            r[off + i] = (r[off + i] - c * b[i]) % p
            if r[off + i] < 0:
                r[off + i] += p
    if nr > db:
        nr = db
    while nr > 0 and r[nr - 1] == 0:
        nr -= 1
    return nr


def divmod_(a, b, int64_t p):
    """Return (quotient, remainder) of a by the nonzero polynomial b."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    while nb > 0 and b[nb - 1] % p == 0:
        nb -= 1
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef int64_t* r = _load(a, na, p)
    if na < nb:
        try:
            return (), _pack(r, na)
        finally:
            free(r)
    cdef int64_t* bb = NULL
    cdef int64_t* q = NULL
    cdef Py_ssize_t nr
    try:
        bb = _load(b, nb, p)
        q = <int64_t*>malloc((na - nb + 1) * sizeof(int64_t))
        if q == NULL:
            raise MemoryError()
        nr = _rem_inplace(r, na, bb, nb, p, q)
        return _pack(q, na - nb + 1), _pack(r, nr)
    finally:
        free(r)
        if bb != NULL:
            free(bb)
        if q != NULL:
            free(q)


def gcd(a, b, int64_t p):
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    cdef Py_ssize_t na = len(a), nb = len(b), i
    cdef int64_t* x = _load(a, na, p)
    cdef int64_t* y = NULL
    cdef int64_t* tmp
    cdef Py_ssize_t tn
    cdef int64_t inv_lead
    try:
        y = _load(b, nb, p)
        while na > 0 and x[na - 1] == 0:
            na -= 1
        while nb > 0 and y[nb - 1] == 0:
            nb -= 1
        while nb > 0:
            na = _rem_inplace(x, na, y, nb, p, NULL)
            tmp = x
            x = y
            y = tmp
            tn = na
            na = nb
            nb = tn
        if na == 0:
            return ()
        inv_lead = _inv(x[na - 1], p)
        for i in range(na):
            x[i] = (x[i] * inv_lead) % p
        return _pack(x, na)
    finally:
        free(x)
        if y != NULL:
            free(y)


def evaluate(a, x, int64_t p):
    cdef int64_t acc = 0, xx = x % p, c
    cdef Py_ssize_t i
    if xx < 0:
        xx += p
    for i in range(len(a) - 1, -1, -1):
        c = a[i] % p
        acc = (acc * xx + c) % p
    if acc < 0:
        acc += p
    return acc
