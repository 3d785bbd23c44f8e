"""Reference computations that share no code with genpolylog.

Everything here goes through sympy's GF(p)(a) and plain integers: exact
p-adic valuations of integer binomials, the classical Laguerre coefficients,
and the product form of T.  Values are compared with the package or frozen
into tests.
"""

from math import comb, factorial

from sympy import FF, symbols

A = symbols("a")


def field(p):
    return FF(p).frac_field(A)


def vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def exact_e(k, a, p):
    """v_p of prod_{s=1}^k C(s*a, a), from the integers themselves."""
    return sum(vp(comb(s * a, a), p) for s in range(1, k + 1))


def g_table(p):
    K = field(p)
    alpha = K.from_sympy(A)
    out = {}
    for k in range(1, p):
        acc = K.one
        for a in range(1, p):
            e = exact_e(k, a, p)
            if e:
                acc = acc / (K.one + alpha * K.from_sympy(1) / K.from_sympy(a)) ** e
        out[k] = acc
    return out


def T(p):
    K = field(p)
    alpha = K.from_sympy(A)
    acc = K.one
    for i in range(1, p):
        acc = acc * (K.one + alpha / K.from_sympy(i)) ** i
    return acc


def laguerre(p):
    """Coefficients of L_{p-1}^{(a)}(X) from the classical binomial formula."""
    K = field(p)
    alpha = K.from_sympy(A)
    n = p - 1
    out = []
    for k in range(p):
        num = K.one
        for j in range(k + 1, n + 1):
            num = num * (alpha + K.from_sympy(j))
        den = K.from_sympy(factorial(n - k) * factorial(k) % p)
        out.append(num / den * K.from_sympy((-1) ** k))
    return out


def substitute(K, f, expr):
    """f(expr) for f in GF(p)(a) and a sympy polynomial expression in a."""
    value = K.from_sympy(expr)

    def ev(poly):
        acc = K.zero
        for (e,), c in poly.terms():
            acc = acc + K.from_sympy(int(c)) * value ** e
        return acc

    return ev(f.numer) / ev(f.denom)


def as_tuples(f, p):
    """(num, den) as ascending int tuples with monic den."""
    num = [int(c) % p for c in reversed(f.numer.to_dense())] if f.numer else []
    den = [int(c) % p for c in reversed(f.denom.to_dense())]
    lead = pow(den[-1], -1, p)
    num = tuple(c * lead % p for c in num)
    den = tuple(c * lead % p for c in den)
    while num and not num[-1]:
        num = num[:-1]
    return num, den


def poly_mul_mod(f, g, c, p, K):
    """Product of coefficient lists modulo X^p - c."""
    out = [K.zero] * p
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            q, r = divmod(i + j, p)
            out[r] = out[r] + x * y * c ** q
    return out


def gen_polylog(p, d, K=None, g=None):
    K = K or field(p)
    g = g or g_table(p)
    return [K.zero] + [g[k] * K.from_sympy(pow(pow(k, -1, p), d % (p - 1), p))
                       for k in range(1, p)]


def same(x, y) -> bool:
    """Equality in GF(p)(a); sympy may leave constant denominators unnormalized."""
    return not (x - y).numer
