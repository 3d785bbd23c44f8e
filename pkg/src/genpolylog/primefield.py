"""Arithmetic in F_p and the number-theoretic primitives built on it.

Elements of F_p are plain Python ints in ``range(p)``; the prime travels
with the :class:`PrimeField` context object rather than with each element.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

from . import kernels
from .errors import BadArgument, DivisionByZero, UnsupportedOrder

DEFAULT_MAX_PRIME = 101


def max_prime(default: int = DEFAULT_MAX_PRIME) -> int:
    """Safety cap on p, overridable through ``POLYLOG_MAX_PRIME``."""
    env = os.environ.get("POLYLOG_MAX_PRIME")
    if env:
        try:
            return int(env)
        except ValueError:
            raise BadArgument(f"POLYLOG_MAX_PRIME={env!r} is not an integer") from None
    return default


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int, bound: int | None = None) -> int:
    """Validate p as an odd prime no larger than the cap; return it."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise BadArgument(f"{p!r} is not an integer")
    if not is_prime(p) or p == 2:
        raise BadArgument(f"{p} is not an odd prime")
    cap = max_prime() if bound is None else bound
    if p > cap:
        raise BadArgument(f"p={p} exceeds the configured maximum {cap}")
    if p > kernels.COMPILED_MAX_PRIME:
        raise BadArgument(f"p={p} is too large for the polynomial kernels")
    return p


class PrimeField:
    """The field F_p; elements are ints reduced into range(p)."""

    __slots__ = ("p",)
    zero = 0
    one = 1

    def __init__(self, p: int):
        self.p = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (GF, (self.p,))

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return fp_inv(a, self.p)

    def div(self, a, b):
        return a * fp_inv(b, self.p) % self.p

    def pow(self, a, n: int):
        if n < 0:
            return pow(fp_inv(a, self.p), -n, self.p)
        return pow(a, n, self.p)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def fmt(self, a) -> str:
        return str(a)


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def fp_inv(a: int, p: int) -> int:
    """Inverse of a modulo p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse in F_{p}")
    t, new_t, r, new_r = 0, 1, p, a
    while new_r:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


def fp_factorial(n: int, p: int) -> int:
    if not 0 <= n < p:
        raise BadArgument(f"factorial argument {n} outside [0, {p})")
    acc = 1
    for k in range(2, n + 1):
        acc = acc * k % p
    return acc


def lucas_binom(n: int, k: int, p: int) -> int:
    """Binomial coefficient C(n, k) mod p, digit by digit in base p."""
    if n < 0 or k < 0:
        raise BadArgument("lucas_binom needs nonnegative arguments")
    acc = 1
    while k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        acc = acc * math.comb(nd, kd) % p
        n //= p
        k //= p
    return acc


def valuation_e(k: int, a: int, p: int) -> int:
    """Exponent of p in prod_{s=1..k} C(s*a, a), by counting carries.

    The factor C(s*a, a) is divisible by p exactly when the residue of
    (s-1)*a modulo p is at least p - a, and never by p**2.
    """
    if not (0 < k < p and 0 < a < p):
        raise BadArgument(f"valuation_e needs 0<k<p and 0<a<p, got k={k}, a={a}, p={p}")
    return sum(1 for s in range(1, k + 1) if (s - 1) * a % p >= p - a)


def stirling1(n: int, k: int, p: int) -> int:
    """Unsigned Stirling number of the first kind [n, k] mod p."""
    if not 0 <= k <= n < p:
        raise BadArgument(f"stirling1 needs 0<=k<=n<p, got n={n}, k={k}")
    return _stirling_rows(p, n)[n][k]


@lru_cache(maxsize=None)
def _stirling_rows(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for m in range(n):
        prev = rows[-1]
        row = [0] * (m + 2)
        for j in range(m + 2):
            left = prev[j - 1] if j >= 1 else 0
            here = prev[j] if j <= m else 0
            row[j] = (left + m * here) % p
        rows.append(tuple(row))
    return tuple(rows)


def multiplicative_order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise BadArgument("0 has no multiplicative order")
    n, y = 1, x
    while y != 1:
        y = y * x % p
        n += 1
    return n


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of F_p."""
    for g in range(1, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise BadArgument(f"no primitive root modulo {p}")


def root_of_unity(h: int, p: int) -> int:
    """Deterministic element of order exactly h in F_p^*."""
    if h < 1:
        raise BadArgument(f"root order must be positive, got {h}")
    if (p - 1) % h:
        raise UnsupportedOrder(f"F_{p} has no primitive {h}th root of unity")
    return pow(primitive_root(p), (p - 1) // h, p)


def inverse_power_sum(r: int, p: int) -> int:
    """sum_{k=1}^{p-1} k^(-r) in F_p."""
    return sum(pow(fp_inv(k, p), r, p) for k in range(1, p)) % p
