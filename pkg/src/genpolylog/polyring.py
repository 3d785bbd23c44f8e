"""Dense polynomials over an abstract coefficient field.

A coefficient field is any object exposing ``p``, ``zero``, ``one``,
``from_int``, ``add``, ``sub``, ``neg``, ``mul``, ``inv``, ``is_zero`` and
``fmt`` (see :class:`genpolylog.primefield.PrimeField`).  Over F_p itself the
coefficient vectors are handed to the compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from math import comb

from . import kernels
from .errors import BadArgument
from .primefield import PrimeField


def _field_sum(field, terms):
    summer = getattr(field, "sum", None)
    if summer is not None:
        return summer(terms)
    return _fold(field.add, terms, field.zero)


class Poly:
    """Univariate polynomial with trimmed coefficient tuple (index = exponent)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        if isinstance(field, PrimeField):
            p = field.p
            c = [v % p for v in coeffs]
            while c and not c[-1]:
                c.pop()
        else:
            c = list(coeffs)
            while c and field.is_zero(c[-1]):
                c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def x(cls, field):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, c, k: int):
        return cls(field, (field.zero,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def _check(self, other):
        if not isinstance(other, Poly):
            return False
        if other.field != self.field:
            raise BadArgument(f"field mismatch: {self.field!r} vs {other.field!r}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        K = self.field
        if isinstance(K, PrimeField):
            return Poly._raw(K, kernels.add(self.coeffs, other.coeffs, K.p))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(K, [K.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self):
        K = self.field
        return Poly._raw(K, tuple(K.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        K = self.field
        if isinstance(K, PrimeField):
            return Poly._raw(K, kernels.sub(self.coeffs, other.coeffs, K.p))
        return self + (-other)

    def __mul__(self, other):
        if not self._check(other):
            return NotImplemented
        K = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(K, ())
        if isinstance(K, PrimeField):
            return Poly._raw(K, kernels.mul(a, b, K.p))
        buckets = [[] for _ in range(len(a) + len(b) - 1)]
        for i, x in enumerate(a):
            if K.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not K.is_zero(y):
                    buckets[i + j].append(K.mul(x, y))
        return Poly(K, [_field_sum(K, terms) if terms else K.zero for terms in buckets])

    def __pow__(self, n: int):
        if n < 0:
            raise BadArgument("negative polynomial power")
        result = Poly.constant(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        K = self.field
        if isinstance(K, PrimeField):
            return Poly._raw(K, kernels.scale(self.coeffs, c, K.p))
        return Poly(K, [K.mul(c, v) for v in self.coeffs])

    def map_coeffs(self, fn, field=None):
        return Poly(self.field if field is None else field, [fn(c) for c in self.coeffs])

    def shift_degree(self, k: int):
        """Multiply by X**k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (self.field.zero,) * k + self.coeffs)

    def __call__(self, arg):
        if isinstance(arg, Poly):
            return compose(self, arg)
        return evaluate(self, arg)


def evaluate(f: Poly, x):
    """Horner evaluation of f at a field element x."""
    K = f.field
    if isinstance(K, PrimeField):
        return kernels.evaluate(f.coeffs, x, K.p)
    acc = K.zero
    for c in reversed(f.coeffs):
        acc = K.add(K.mul(acc, x), c)
    return acc


def theta(f: Poly) -> Poly:
    """The operator X d/dX: multiplies the coefficient of X^k by k."""
    K = f.field
    return Poly(K, [K.mul(K.from_int(k), c) for k, c in enumerate(f.coeffs)])


def derivative(f: Poly) -> Poly:
    K = f.field
    return Poly(K, [K.mul(K.from_int(k), c) for k, c in enumerate(f.coeffs)][1:])


@dataclass(frozen=True)
class SpecialXp:
    """The modulus X^p - c, with c free of X."""

    c: object

    def describe(self, field) -> str:
        return f"X^{field.p} - ({field.fmt(self.c)})"


@dataclass(frozen=True)
class GeneralMonic:
    """An arbitrary monic modulus m(X)."""

    m: Poly

    def __post_init__(self):
        m = self.m
        if not m.coeffs or m.coeffs[-1] != m.field.one:
            raise BadArgument("GeneralMonic modulus must be monic")


QuotientContext = SpecialXp | GeneralMonic


def reduce(f: Poly, ctx: QuotientContext) -> Poly:
    """Canonical representative of f modulo the context's modulus."""
    K = f.field
    if isinstance(ctx, SpecialXp):
        p = K.p
        n = len(f.coeffs)
        if n <= p:
            return f
        powers = [K.one]
        for _ in range((n - 1) // p):
            powers.append(K.mul(powers[-1], ctx.c))
        buckets = [[] for _ in range(p)]
        for e, v in enumerate(f.coeffs):
            if K.is_zero(v):
                continue
            q, r = divmod(e, p)
            buckets[r].append(v if q == 0 else K.mul(powers[q], v))
        return Poly(K, [_field_sum(K, b) if b else K.zero for b in buckets])
    m = ctx.m
    if m.field != K:
        raise BadArgument("modulus over a different field")
    dm = m.degree
    if f.degree < dm:
        return f
    if isinstance(K, PrimeField):
        return Poly._raw(K, kernels.divmod_(f.coeffs, m.coeffs, K.p)[1])
    r = list(f.coeffs)
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if K.is_zero(c):
            continue
        for i in range(dm):
            r[k - dm + i] = K.sub(r[k - dm + i], K.mul(c, m.coeffs[i]))
        r[k] = K.zero
    return Poly(K, r[:dm])


def compose(outer: Poly, inner: Poly, ctx: QuotientContext | None = None) -> Poly:
    """outer(inner) by Horner's scheme, reducing after every step when ctx is given."""
    K = outer.field
    if inner.field != K:
        raise BadArgument("compose needs both polynomials over the same field")
    acc = Poly(K, ())
    for c in reversed(outer.coeffs):
        acc = acc * inner + Poly(K, (c,))
        if ctx is not None:
            acc = reduce(acc, ctx)
    return acc


def reverse_scale(f: Poly, u) -> Poly:
    """X^p * f(u/X) for f with zero constant term and degree at most p-1."""
    K = f.field
    p = K.p
    if not K.is_zero(f[0]):
        raise BadArgument("reverse_scale needs a zero constant term")
    if f.degree > p - 1:
        raise BadArgument(f"reverse_scale needs degree <= {p - 1}, got {f.degree}")
    out = [K.zero] * (p + 1)
    upow = K.one
    for k in range(1, f.degree + 1):
        upow = K.mul(upow, u)
        out[p - k] = K.mul(f.coeffs[k], upow)
    return Poly(K, out)


def first_difference(a: Poly, b: Poly):
    """Lowest exponent where a and b differ, with both coefficients; None if equal."""
    n = max(len(a.coeffs), len(b.coeffs))
    K = a.field
    for k in range(n):
        x, y = a[k], b[k]
        if not K.is_zero(K.sub(x, y)):
            return k, x, y
    return None


class BiPoly:
    """Dense polynomial in X and Y; ``rows[i][j]`` is the coefficient of X^i Y^j."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows=()):
        K = field
        out = []
        for row in rows:
            r = list(row)
            while r and K.is_zero(r[-1]):
                r.pop()
            out.append(tuple(r))
        while out and not out[-1]:
            out.pop()
        self.field = field
        self.rows = tuple(out)

    @classmethod
    def from_terms(cls, field, terms):
        """Build from a mapping {(i, j): coefficient}; repeated keys are summed."""
        grid: dict[int, dict[int, list]] = {}
        for (i, j), c in terms:
            grid.setdefault(i, {}).setdefault(j, []).append(c)
        if not grid:
            return cls(field, ())
        rows = []
        for i in range(max(grid) + 1):
            cols = grid.get(i, {})
            width = max(cols) + 1 if cols else 0
            rows.append([_field_sum(field, cols[j]) if j in cols else field.zero
                         for j in range(width)])
        return cls(field, rows)

    @classmethod
    def outer(cls, f: Poly, g: Poly):
        """f(X) * g(Y)."""
        K = f.field
        return cls(K, [[K.mul(a, b) for b in g.coeffs] for a in f.coeffs])

    @classmethod
    def shift(cls, f: Poly):
        """f(X + Y), expanded by the binomial theorem."""
        K = f.field
        terms = []
        for k, c in enumerate(f.coeffs):
            if K.is_zero(c):
                continue
            for i in range(k + 1):
                b = comb(k, i) % K.p
                if b:
                    terms.append(((i, k - i), K.mul(K.from_int(b), c)))
        return cls.from_terms(K, terms)

    def __getitem__(self, ij):
        i, j = ij
        if i < len(self.rows) and j < len(self.rows[i]):
            return self.rows[i][j]
        return self.field.zero

    def terms(self):
        K = self.field
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if not K.is_zero(c):
                    yield (i, j), c

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BiPoly({dict(self.terms())!r})"

    def is_zero(self) -> bool:
        return not self.rows

    def __add__(self, other):
        return BiPoly.from_terms(self.field, list(self.terms()) + list(other.terms()))

    def __neg__(self):
        K = self.field
        return BiPoly(K, [[K.neg(c) for c in row] for row in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        K = self.field
        lhs = list(self.terms())
        rhs = list(other.terms())
        return BiPoly.from_terms(
            K, [((i + k, j + l), K.mul(a, b)) for (i, j), a in lhs for (k, l), b in rhs])

    def scale(self, c):
        K = self.field
        return BiPoly(K, [[K.mul(c, v) for v in row] for row in self.rows])

    def map_coeffs(self, fn, field=None):
        return BiPoly(self.field if field is None else field,
                      [[fn(c) for c in row] for row in self.rows])

    def reduce(self, u, v):
        """Reduce modulo X^p - u and Y^p - v."""
        K = self.field
        p = K.p
        cache: dict[tuple[int, int], object] = {}

        def factor(qx, qy):
            key = (qx, qy)
            if key not in cache:
                acc = K.one
                for _ in range(qx):
                    acc = K.mul(acc, u)
                for _ in range(qy):
                    acc = K.mul(acc, v)
                cache[key] = acc
            return cache[key]

        out = []
        for (i, j), c in self.terms():
            qx, rx = divmod(i, p)
            qy, ry = divmod(j, p)
            out.append(((rx, ry), c if qx == qy == 0 else K.mul(factor(qx, qy), c)))
        return BiPoly.from_terms(K, out)

    def first_nonzero(self):
        """Lowest total degree nonzero term (ties broken by X exponent), or None."""
        best = None
        for (i, j), c in self.terms():
            key = (i + j, i)
            if best is None or key < best[0]:
                best = (key, (i, j), c)
        return None if best is None else (best[1], best[2])


def format_poly(f: Poly, var: str = "X", spaced: bool = True) -> str:
    """Human-readable ascending-order rendering, e.g. ``1 + 2*X + X^2``."""
    K = f.field
    parts = []
    for k, c in enumerate(f.coeffs):
        if K.is_zero(c):
            continue
        cs = K.fmt(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(cs if _atomic(cs) else f"({cs})")
        elif cs == "1":
            parts.append(mono)
        elif spaced:
            parts.append(f"{cs}*{mono}" if _atomic(cs) else f"({cs})*{mono}")
        else:
            parts.append(f"{cs}{mono}" if _atomic(cs) else f"({cs}){mono}")
    if not parts:
        return "0"
    return (" + " if spaced else "+").join(parts)


def _atomic(s: str) -> bool:
    return s.isdigit()
