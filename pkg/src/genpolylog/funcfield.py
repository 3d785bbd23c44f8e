"""The coefficient fields F_p(alpha) and F_p(alpha, beta).

:class:`RatFunc` keeps a canonical form (coprime parts, monic denominator)
so equality is syntactic.  :class:`BiFrac` deliberately has no canonical
form: bivariate gcds are avoided, equality is decided by cross
multiplication, and growth is contained by exact-division shortcuts in
addition plus stripping of contents that are pure in one variable.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from . import kernels
from .errors import BadArgument, DegreeGuardError, DivisionByZero, PoleError
from .polyring import Poly
from .primefield import GF

_ONE = (1,)

# BiFrac numerators and denominators may not exceed DEGREE_GUARD_FACTOR * p**2
# in total degree.
DEGREE_GUARD_FACTOR = 4


def _compose_univariate(f, g, p):
    """f(g) for coefficient tuples over F_p."""
    if g and not any(g[:-1]):
        # monomial c*alpha^m: spread coefficients instead of Horner
        m, c = len(g) - 1, g[-1]
        out = [0] * ((len(f) - 1) * m + 1) if f else []
        cp = 1
        for k, v in enumerate(f):
            out[k * m] = (out[k * m] + v * cp) % p
            cp = cp * c % p
        return kernels.add(out, (), p)
    acc = ()
    for c in reversed(f):
        acc = kernels.add(kernels.mul(acc, g, p), (c,), p)
    return acc


def _fmt_alpha(c, var="a"):
    """Compact rendering of an F_p[alpha] coefficient tuple: ``1+2a+a^2``."""
    parts = []
    for k, v in enumerate(c):
        if not v:
            continue
        if k == 0:
            parts.append(str(v))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            parts.append(mono if v == 1 else f"{v}{mono}")
    return "+".join(parts) if parts else "0"


class RatFunc:
    """An element num/den of F_p(alpha), gcd(num, den) = 1 and den monic."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p: int, num=(), den=_ONE):
        num = kernels.add(num, (), p)
        den = kernels.add(den, (), p)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            self.p, self.num, self.den = p, (), _ONE
            return
        if den != _ONE:
            g = kernels.gcd(num, den, p)
            if g != _ONE:
                num = kernels.divmod_(num, g, p)[0]
                den = kernels.divmod_(den, g, p)[0]
            lead = den[-1]
            if lead != 1:
                inv = kernels.inverse(lead, p)
                num = kernels.scale(num, inv, p)
                den = kernels.scale(den, inv, p)
        self.p, self.num, self.den = p, num, den

    @classmethod
    def _raw(cls, p, num, den):
        obj = cls.__new__(cls)
        obj.p, obj.num, obj.den = p, num, den
        return obj

    @classmethod
    def constant(cls, p, c):
        c %= p
        return cls._raw(p, (c,) if c else (), _ONE)

    @classmethod
    def alpha(cls, p):
        return cls._raw(p, (0, 1), _ONE)

    def numerator(self) -> Poly:
        return Poly._raw(GF(self.p), self.num)

    def denominator(self) -> Poly:
        return Poly._raw(GF(self.p), self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.p == other.p and self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.fmt()})"

    def __reduce__(self):
        return (RatFunc._raw, (self.p, self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(self.p, kernels.sub((), self.num, self.p), self.den)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        p = self.p
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b == d:
            if b == _ONE:
                return RatFunc._raw(p, kernels.add(a, c, p), _ONE)
            return RatFunc(p, kernels.add(a, c, p), b)
        if b == _ONE:
            return RatFunc._raw(p, kernels.add(kernels.mul(a, d, p), c, p), d)
        if d == _ONE:
            return RatFunc._raw(p, kernels.add(a, kernels.mul(c, b, p), p), b)
        g = kernels.gcd(b, d, p)
        if g == _ONE:
            num = kernels.add(kernels.mul(a, d, p), kernels.mul(c, b, p), p)
            return RatFunc._raw(p, num, kernels.mul(b, d, p)) if num else RatFunc(p)
        b1 = kernels.divmod_(b, g, p)[0]
        d1 = kernels.divmod_(d, g, p)[0]
        num = kernels.add(kernels.mul(a, d1, p), kernels.mul(c, b1, p), p)
        if not num:
            return RatFunc(p)
        den = kernels.mul(b1, d, p)
        g2 = kernels.gcd(num, g, p)
        if g2 != _ONE:
            num = kernels.divmod_(num, g2, p)[0]
            den = kernels.divmod_(den, g2, p)[0]
        return RatFunc._raw(p, num, den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        p = self.p
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFunc(p)
        if b == _ONE and d == _ONE:
            return RatFunc._raw(p, kernels.mul(a, c, p), _ONE)
        if d != _ONE:
            g1 = kernels.gcd(a, d, p)
            if g1 != _ONE:
                a = kernels.divmod_(a, g1, p)[0]
                d = kernels.divmod_(d, g1, p)[0]
        if b != _ONE:
            g2 = kernels.gcd(c, b, p)
            if g2 != _ONE:
                c = kernels.divmod_(c, g2, p)[0]
                b = kernels.divmod_(b, g2, p)[0]
        return RatFunc._raw(p, kernels.mul(a, c, p), kernels.mul(b, d, p))

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.p, self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        p = self.p
        num, den = _ONE, _ONE
        bn, bd = self.num, self.den
        while n:
            if n & 1:
                num = kernels.mul(num, bn, p)
                den = kernels.mul(den, bd, p)
            n >>= 1
            if n:
                bn = kernels.mul(bn, bn, p)
                bd = kernels.mul(bd, bd, p)
        return RatFunc._raw(p, num, den)

    def substitute(self, g) -> "RatFunc":
        return rf_substitute(self, g)

    def specialize(self, c: int) -> int:
        return rf_specialize(self, c)

    def fmt(self, var: str = "a") -> str:
        """``num/den`` with the denominator scaled to constant term 1 when possible."""
        p = self.p
        num, den = self.num, self.den
        if not num:
            return "0"
        if den == _ONE:
            return _fmt_alpha(num, var)
        if den[0]:
            inv = kernels.inverse(den[0], p)
            num = kernels.scale(num, inv, p)
            den = kernels.scale(den, inv, p)
        ns = _fmt_alpha(num, var)
        if len([v for v in num if v]) > 1:
            ns = f"({ns})"
        return f"{ns}/({_fmt_alpha(den, var)})"


def rf_substitute(f: RatFunc, g) -> RatFunc:
    """f with alpha replaced by the polynomial g(alpha)."""
    p = f.p
    gc = g.coeffs if isinstance(g, Poly) else tuple(g)
    den = _compose_univariate(f.den, gc, p)
    if not den:
        raise PoleError("denominator vanishes identically after substitution")
    num = _compose_univariate(f.num, gc, p)
    return RatFunc(p, num, den)


def rf_specialize(f: RatFunc, c: int) -> int:
    """Value of f at alpha = c in F_p."""
    p = f.p
    dv = kernels.evaluate(f.den, c, p)
    if not dv:
        raise PoleError(f"alpha = {c % p} is a pole of {f.fmt()}", point=c % p)
    return kernels.evaluate(f.num, c, p) * kernels.inverse(dv, p) % p


def falling_factorial(base: Poly, n: int) -> Poly:
    """(base)_n = base (base - 1) ... (base - n + 1)."""
    if n < 0:
        raise BadArgument("falling factorial length must be nonnegative")
    K = base.field
    acc = Poly.constant(K, K.one)
    for j in range(n):
        acc = acc * (base - Poly.constant(K, K.from_int(j)))
    return acc


class RationalFunctionField:
    """F_p(alpha) as a coefficient field for :class:`Poly`."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.zero = RatFunc._raw(p, (), _ONE)
        self.one = RatFunc._raw(p, _ONE, _ONE)

    def __repr__(self):
        return f"GF({self.p})(a)"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp(a)", self.p))

    def __reduce__(self):
        return (RFF, (self.p,))

    def alpha(self) -> RatFunc:
        return RatFunc.alpha(self.p)

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.constant(self.p, n)

    def from_poly(self, f) -> RatFunc:
        coeffs = f.coeffs if isinstance(f, Poly) else f
        return RatFunc(self.p, coeffs)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return a.inv()

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def is_zero(a) -> bool:
        return not a.num

    @staticmethod
    def fmt(a) -> str:
        return a.fmt()

    def sum(self, terms):
        """Sum of many elements, adding numerators over shared denominators first."""
        p = self.p
        groups: dict[tuple, tuple] = {}
        for t in terms:
            if not t.num:
                continue
            prev = groups.get(t.den)
            groups[t.den] = t.num if prev is None else kernels.add(prev, t.num, p)
        acc = self.zero
        for den, num in groups.items():
            if num:
                acc = acc + (RatFunc._raw(p, num, den) if den == _ONE else RatFunc(p, num, den))
        return acc


@lru_cache(maxsize=None)
def RFF(p: int) -> RationalFunctionField:
    return RationalFunctionField(p)


# ---------------------------------------------------------------------------
# F_p[alpha, beta]: tuples of alpha-coefficient tuples indexed by beta exponent.


def _bv_trim(rows):
    rows = list(rows)
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def _bv_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    return _bv_trim(kernels.add(r, b[j], p) if j < len(b) else r for j, r in enumerate(a))


def _bv_neg(a, p):
    return tuple(kernels.sub((), r, p) for r in a)


def _bv_sub(a, b, p):
    return _bv_add(a, _bv_neg(b, p), p)


def _bv_mul(a, b, p):
    """Product via Kronecker substitution into one univariate kernel call."""
    if not a or not b:
        return ()
    if a == (_ONE,):
        return b
    if b == (_ONE,):
        return a
    da = max(len(r) for r in a)
    db = max(len(r) for r in b)
    n = da + db - 1
    pa = [0] * (len(a) * n)
    for j, r in enumerate(a):
        pa[j * n:j * n + len(r)] = r
    pb = [0] * (len(b) * n)
    for j, r in enumerate(b):
        pb[j * n:j * n + len(r)] = r
    prod = kernels.mul(pa, pb, p)
    rows = []
    for j in range(len(a) + len(b) - 1):
        chunk = list(prod[j * n:(j + 1) * n])
        while chunk and not chunk[-1]:
            chunk.pop()
        rows.append(tuple(chunk))
    return _bv_trim(rows)


def _bv_scale_alpha(a, c, p):
    """Multiply every row by the alpha-polynomial c."""
    return _bv_trim(kernels.mul(r, c, p) for r in a)


def _bv_exact_div(a, b, p):
    """a / b in F_p[alpha][beta] when b divides a, else None."""
    if not b:
        raise DivisionByZero("bivariate division by zero")
    if b == (_ONE,):
        return a
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(r) <= db:
        return () if not r else None
    q = [()] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        if not r[k]:
            continue
        c, rem = kernels.divmod_(r[k], lead, p)
        if rem:
            return None
        q[k - db] = c
        for i in range(db + 1):
            r[k - db + i] = kernels.sub(r[k - db + i], kernels.mul(c, b[i], p), p)
    if any(r[:db]):
        return None
    return _bv_trim(q)


def _bv_transpose(a):
    if not a:
        return ()
    width = max(len(r) for r in a)
    return _bv_trim(
        tuple(_trim_tail([r[i] if i < len(r) else 0 for r in a])) for i in range(width))


def _trim_tail(c):
    while c and not c[-1]:
        c.pop()
    return c


def _bv_content_alpha(a, p):
    g = ()
    for r in a:
        g = kernels.gcd(g, r, p)
        if g == _ONE:
            break
    return g


def _bv_total_degree(a) -> int:
    return max((j + len(r) - 1 for j, r in enumerate(a) if r), default=-1)


def _bv_from_beta(c):
    return _bv_trim((v,) if v else () for v in c)


def _bv_alpha_plus_beta(f, p):
    """f(alpha + beta) for an F_p[alpha] tuple f."""
    lin = ((0, 1), _ONE)
    acc = ()
    for c in reversed(f):
        acc = _bv_add(_bv_mul(acc, lin, p), ((c,),) if c else (), p)
    return acc


def _fmt_bivariate(a) -> str:
    parts = []
    for j, row in enumerate(a):
        for i, v in enumerate(row):
            if not v:
                continue
            mono = "".join(
                s for s in (
                    "" if i == 0 else ("a" if i == 1 else f"a^{i}"),
                    "" if j == 0 else ("b" if j == 1 else f"b^{j}"),
                ))
            parts.append(str(v) if not mono else (mono if v == 1 else f"{v}{mono}"))
    return "+".join(parts) if parts else "0"


class BiFrac:
    """A fraction num/den over F_p[alpha, beta] with no canonical form."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p: int, num=(), den=((1,),), *, check: bool = True):
        if not den:
            raise DivisionByZero("bivariate fraction with zero denominator")
        self.p, self.num, self.den = p, num, den
        if check:
            guard = DEGREE_GUARD_FACTOR * p * p
            for part in (num, den):
                deg = _bv_total_degree(part)
                if deg > guard:
                    raise DegreeGuardError(
                        f"bivariate fraction reached total degree {deg} > {guard} at p={p}")

    @classmethod
    def constant(cls, p, c):
        c %= p
        return cls(p, ((c,),) if c else (), check=False)

    @classmethod
    def from_alpha(cls, f: RatFunc) -> "BiFrac":
        return cls(f.p, (f.num,) if f.num else (), (f.den,), check=False)

    @classmethod
    def from_beta(cls, f: RatFunc) -> "BiFrac":
        return cls(f.p, _bv_from_beta(f.num), _bv_from_beta(f.den), check=False)

    @classmethod
    def from_alpha_plus_beta(cls, f: RatFunc) -> "BiFrac":
        p = f.p
        return cls(p, _bv_alpha_plus_beta(f.num, p), _bv_alpha_plus_beta(f.den, p))

    def __reduce__(self):
        return (BiFrac, (self.p, self.num, self.den), None)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        if not isinstance(other, BiFrac):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        p = self.p
        return _bv_mul(self.num, other.den, p) == _bv_mul(other.num, self.den, p)

    __hash__ = None

    def __repr__(self):
        return f"BiFrac({self.fmt()})"

    def __neg__(self):
        return BiFrac(self.p, _bv_neg(self.num, self.p), self.den, check=False)

    def __add__(self, other):
        if not isinstance(other, BiFrac):
            return NotImplemented
        p = self.p
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b == d:
            return BiFrac(p, _bv_add(a, c, p), b, check=False)
        q = _bv_exact_div(d, b, p)
        if q is not None:
            return BiFrac(p, _bv_add(_bv_mul(a, q, p), c, p), d)
        q = _bv_exact_div(b, d, p)
        if q is not None:
            return BiFrac(p, _bv_add(a, _bv_mul(c, q, p), p), b)
        num = _bv_add(_bv_mul(a, d, p), _bv_mul(c, b, p), p)
        return BiFrac(p, num, _bv_mul(b, d, p)).stripped()

    def __sub__(self, other):
        if not isinstance(other, BiFrac):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiFrac):
            return NotImplemented
        p = self.p
        if not self.num or not other.num:
            return BiFrac(p, (), check=False)
        return BiFrac(p, _bv_mul(self.num, other.num, p), _bv_mul(self.den, other.den, p))

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of the zero bivariate fraction")
        return BiFrac(self.p, self.den, self.num, check=False)

    def __truediv__(self, other):
        return self * other.inv()

    def stripped(self) -> "BiFrac":
        """Remove common factors that are pure in alpha or pure in beta."""
        p = self.p
        num, den = self.num, self.den
        if not num:
            return BiFrac(p, (), check=False)
        g = kernels.gcd(_bv_content_alpha(num, p), _bv_content_alpha(den, p), p)
        if g != _ONE:
            num = tuple(kernels.divmod_(r, g, p)[0] for r in num)
            den = tuple(kernels.divmod_(r, g, p)[0] for r in den)
        tn, td = _bv_transpose(num), _bv_transpose(den)
        g = kernels.gcd(_bv_content_alpha(tn, p), _bv_content_alpha(td, p), p)
        if g != _ONE:
            tn = tuple(kernels.divmod_(r, g, p)[0] for r in tn)
            td = tuple(kernels.divmod_(r, g, p)[0] for r in td)
            num, den = _bv_transpose(tn), _bv_transpose(td)
        return BiFrac(p, num, den, check=False)

    def rebase(self, target) -> "BiFrac":
        """The same value written over the denominator ``target``."""
        if self.den == target:
            return self
        q = _bv_exact_div(target, self.den, self.p)
        if q is None:
            raise BadArgument("rebase target is not a multiple of the denominator")
        return BiFrac(self.p, _bv_mul(self.num, q, self.p), target)

    def specialize(self, a: int, b: int) -> int:
        """Value at (alpha, beta) = (a, b) in F_p."""
        p = self.p

        def ev(rows):
            return kernels.evaluate([kernels.evaluate(r, a, p) for r in rows], b, p)

        dv = ev(self.den)
        if not dv:
            raise PoleError(f"(alpha, beta) = ({a}, {b}) is a pole", point=(a, b))
        return ev(self.num) * kernels.inverse(dv, p) % p

    def fmt(self) -> str:
        if not self.num:
            return "0"
        if self.den == ((1,),):
            return _fmt_bivariate(self.num)
        ns = _fmt_bivariate(self.num)
        if "+" in ns:
            ns = f"({ns})"
        return f"{ns}/({_fmt_bivariate(self.den)})"


def bivariate_from_alpha(f) -> tuple:
    """Lift an F_p[alpha] coefficient tuple into F_p[alpha, beta]."""
    f = tuple(f)
    return (f,) if f else ()


def bivariate_from_beta(f) -> tuple:
    return _bv_from_beta(tuple(f))


def bivariate_mul(a, b, p):
    return _bv_mul(a, b, p)


class BivariateFractionField:
    """F_p(alpha, beta) as a coefficient field for :class:`Poly` and :class:`BiPoly`."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        self.p = p
        self.zero = BiFrac(p, (), check=False)
        self.one = BiFrac(p, ((1,),), check=False)

    def __repr__(self):
        return f"GF({self.p})(a,b)"

    def __eq__(self, other):
        return isinstance(other, BivariateFractionField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp(a,b)", self.p))

    def from_int(self, n: int) -> BiFrac:
        return BiFrac.constant(self.p, n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return a.inv()

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def is_zero(a) -> bool:
        return not a.num

    @staticmethod
    def fmt(a) -> str:
        return a.fmt()

    def sum(self, terms):
        p = self.p
        groups: dict[tuple, tuple] = defaultdict(tuple)
        order = []
        for t in terms:
            if not t.num:
                continue
            if t.den not in groups:
                order.append(t.den)
            groups[t.den] = _bv_add(groups[t.den], t.num, p)
        acc = self.zero
        for den in order:
            acc = acc + BiFrac(p, groups[den], den, check=False)
        return acc


@lru_cache(maxsize=None)
def BFF(p: int) -> BivariateFractionField:
    return BivariateFractionField(p)
