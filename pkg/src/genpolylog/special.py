"""Constructors for the special polynomials: Laguerre, exponential-like,
T, b_{1,s}, the weights g_k and the (generalized) finite polylogarithms.

Every constructor is a pure function of p and its parameters; per-prime
tables are memoized with ``functools.lru_cache``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import kernels
from .errors import BadArgument, InternalInconsistency
from .funcfield import BFF, RFF, BiFrac, RatFunc, falling_factorial, rf_substitute
from .polyring import BiPoly, Poly, compose
from .primefield import GF, check_prime, fp_factorial, fp_inv, valuation_e

KINDS = (
    "Laguerre", "Gexp", "TruncExp", "TPoly", "B1s", "GCoeffs",
    "Polylog", "GenPolylog", "Thm2Correction", "Thm1Coeffs",
)


@dataclass(frozen=True)
class SpecialObject:
    kind: str
    p: int
    params: tuple
    body: object

    def param(self, name, default=None):
        return dict(self.params).get(name, default)


def _alpha_poly(p, coeffs) -> Poly:
    return Poly(GF(p), coeffs)


def _one_minus_alpha_pm1(p):
    """1 - alpha^(p-1) as a coefficient tuple."""
    return (1,) + (0,) * (p - 2) + (p - 1,)


def _rising_den(p, k, shift=0):
    """prod_{j=1..k} (alpha + shift + j) as a coefficient tuple."""
    acc = (1,)
    for j in range(1, k + 1):
        acc = kernels.mul(acc, ((shift + j) % p, 1), p)
    return acc


@lru_cache(maxsize=None)
def _laguerre_coeffs(p):
    lead = _one_minus_alpha_pm1(p)
    out = []
    for k in range(p):
        c = RatFunc(p, lead, _rising_den(p, k))
        if not c.is_polynomial():
            raise InternalInconsistency(f"Laguerre coefficient {k} is not a polynomial at p={p}")
        out.append(c)
    return tuple(out)


def build_laguerre(p: int) -> SpecialObject:
    """L_{p-1}^{(alpha)}(X) with coefficients in F_p[alpha] (stored as RatFunc)."""
    check_prime(p)
    return SpecialObject("Laguerre", p, (), Poly(RFF(p), _laguerre_coeffs(p)))


@lru_cache(maxsize=None)
def _gexp_coeffs(p):
    return tuple(RatFunc(p, (1,), _rising_den(p, k)) for k in range(p))


def build_gexp(p: int) -> SpecialObject:
    """The normalized Laguerre polynomial sum_k X^k / ((1+alpha)...(k+alpha))."""
    check_prime(p)
    return SpecialObject("Gexp", p, (), Poly(RFF(p), _gexp_coeffs(p)))


def build_trunc_exp(p: int) -> SpecialObject:
    """E(X) = sum_{k<p} X^k / k! over F_p."""
    check_prime(p)
    coeffs = [fp_inv(fp_factorial(k, p), p) for k in range(p)]
    return SpecialObject("TruncExp", p, (), Poly(GF(p), coeffs))


def t_product_form(p: int) -> Poly:
    """prod_{i=1}^{p-1} (1 + X/i)^i."""
    F = GF(p)
    acc = Poly.constant(F, 1)
    for i in range(1, p):
        acc = acc * Poly(F, (1, fp_inv(i, p))) ** i
    return acc


def t_laguerre_form(p: int) -> Poly:
    """L_{p-1}^{(X^p)}(X^p - X), evaluated coefficient by coefficient."""
    F = GF(p)
    xp = Poly.monomial(F, 1, p)
    arg = xp - Poly.x(F)
    acc = Poly(F, ())
    for c in reversed(_laguerre_coeffs(p)):
        acc = acc * arg + compose(_alpha_poly(p, c.num), xp)
    return acc


@lru_cache(maxsize=None)
def build_T(p: int) -> Poly:
    """The polynomial T over F_p, cross-checked between its two closed forms."""
    check_prime(p)
    prod = t_product_form(p)
    lag = t_laguerre_form(p)
    if prod != lag:
        raise InternalInconsistency(f"the two constructions of T disagree at p={p}")
    return prod


def _binom_poly(f: Poly, m: int) -> Poly:
    """C(f, m) = (f)_m / m! for a polynomial upper argument, 0 <= m < p."""
    p = f.field.p
    return falling_factorial(f, m).scale(fp_inv(fp_factorial(m, p), p))


@lru_cache(maxsize=None)
def build_b1s(p: int, s: int) -> Poly:
    """b_{1,s}(alpha) = sum_k (-1/s)^k C(alpha-1, p-1-k) C(s alpha-1, k)."""
    check_prime(p)
    if not 0 < s < p - 1:
        raise BadArgument(f"b_(1,s) needs 0 < s < p-1, got s={s}")
    F = GF(p)
    a_minus_1 = Poly(F, (-1, 1))
    sa_minus_1 = Poly(F, (-1, s))
    ratio = -fp_inv(s, p) % p
    acc = Poly(F, ())
    for k in range(p):
        term = _binom_poly(a_minus_1, p - 1 - k) * _binom_poly(sa_minus_1, k)
        acc = acc + term.scale(pow(ratio, k, p))
    return acc


@lru_cache(maxsize=None)
def _g_valuation(p):
    out = []
    for k in range(1, p):
        num, den = 1, (1,)
        for a in range(1, p):
            e = valuation_e(k, a, p)
            if e:
                # (1 + alpha/a)^(-e) = a^e / (alpha + a)^e
                num = num * pow(a, e, p) % p
                den = kernels.mul(den, _pow_tuple((a, 1), e, p), p)
        out.append(RatFunc(p, (num,), den))
    return tuple(out)


def _pow_tuple(c, e, p):
    acc = (1,)
    for _ in range(e):
        acc = kernels.mul(acc, c, p)
    return acc


@lru_cache(maxsize=None)
def _g_jacobi(p):
    out = []
    prod = (1,)
    for k in range(1, p):
        if k > 1:
            prod = kernels.mul(prod, build_b1s(p, k - 1).coeffs, p)
        out.append(RatFunc(p, (1,), prod))
    return tuple(out)


def build_g(p: int, method: str = "valuation") -> dict[int, RatFunc]:
    """The weights g_1..g_{p-1} as a mapping k -> RatFunc."""
    check_prime(p)
    if method == "valuation":
        table = _g_valuation(p)
    elif method == "jacobi":
        table = _g_jacobi(p)
    else:
        raise BadArgument(f"unknown g method {method!r}")
    return {k: table[k - 1] for k in range(1, p)}


def g_top_product_forms(p: int) -> dict[str, RatFunc]:
    """Both orientations of prod_a (1 +- alpha/a)^(1-a), for comparison with g_{p-1}."""
    check_prime(p)
    forms = {}
    for name, sign in (("plus", 1), ("minus", -1)):
        acc = RatFunc.constant(p, 1)
        for a in range(1, p):
            factor = RatFunc(p, (1, sign * fp_inv(a, p)))
            acc = acc * factor ** (1 - a)
        forms[name] = acc
    return forms


def build_polylog(p: int, d: int) -> Poly:
    """sum_{k=1}^{p-1} X^k / k^d over F_p; d is read modulo p-1."""
    check_prime(p)
    d %= p - 1
    return Poly(GF(p), [0] + [pow(fp_inv(k, p), d, p) for k in range(1, p)])


def build_gen_polylog(p: int, d: int, param_sub=None, g=None) -> SpecialObject:
    """sum_k g_k(alpha) X^k / k^d over F_p(alpha).

    ``param_sub`` replaces alpha by a polynomial in every weight (for
    instance h*alpha or r*alpha^p); ``g`` overrides the weight table.
    """
    check_prime(p)
    d %= p - 1
    table = build_g(p) if g is None else g
    sub = None
    if param_sub is not None:
        sub = param_sub.coeffs if isinstance(param_sub, Poly) else tuple(param_sub)
    coeffs = [RatFunc(p)]
    for k in range(1, p):
        gk = table[k]
        if sub is not None:
            gk = rf_substitute(gk, sub)
        coeffs.append(gk * RatFunc.constant(p, pow(fp_inv(k, p), d, p)))
    params = (("d", d),) if sub is None else (("d", d), ("alpha", sub))
    return SpecialObject("GenPolylog", p, params, Poly(RFF(p), coeffs))


def substitute_parameter(f: Poly, g) -> Poly:
    """Replace alpha by the polynomial g in every coefficient of f over F_p(alpha)."""
    sub = g.coeffs if isinstance(g, Poly) else tuple(g)
    return f.map_coeffs(lambda c: rf_substitute(c, sub))


def dilate(f: Poly, c) -> Poly:
    """f(cX) for a scalar c in f's coefficient field."""
    K = f.field
    out, cp = [], K.one
    for v in f.coeffs:
        out.append(K.mul(v, cp))
        cp = K.mul(cp, c)
    return Poly(K, out)


@lru_cache(maxsize=None)
def _correction(p):
    K = BFF(p)
    terms = [((0, 0), K.one)]
    for i in range(1, p):
        a_part = RatFunc(p, (1,), _rising_den(p, i))
        b_part = RatFunc(p, (1,), _rising_den(p, p - i))
        terms.append(((i, p - i), BiFrac.from_alpha(a_part) * BiFrac.from_beta(b_part)))
    return BiPoly.from_terms(K, terms)


def build_thm2_correction(p: int) -> SpecialObject:
    """1 + sum_i X^i Y^(p-i) / ((alpha+i)_i (beta+p-i)_(p-i)) over F_p(alpha, beta)."""
    check_prime(p)
    return SpecialObject("Thm2Correction", p, (), _correction(p))


@lru_cache(maxsize=None)
def _thm1_coeffs(p):
    F = GF(p)
    a1 = Poly(F, (-1, 1))
    den = BiFrac.from_alpha_plus_beta(RatFunc(p, falling_factorial(a1, p - 1).coeffs)).num

    def ff(m):
        return falling_factorial(a1, m).coeffs

    out = []
    for i in range(p):
        if i == 0:
            na, nb = ff(p - 1), ff(p - 1)
        else:
            na, nb = ff(p - 1 - i), ff(i - 1)
        num = BiFrac.from_alpha(RatFunc(p, na)) * BiFrac.from_beta(RatFunc(p, nb))
        out.append(BiFrac(p, (-num).num, den))
    return tuple(out)


def build_thm1_coeffs(p: int) -> SpecialObject:
    """The rational expressions c_0..c_{p-1} of the Laguerre product congruence."""
    check_prime(p)
    return SpecialObject("Thm1Coeffs", p, (), _thm1_coeffs(p))


def b1s_roots(p: int, s: int) -> list[int]:
    f = build_b1s(p, s)
    return [a for a in range(p) if kernels.evaluate(f.coeffs, a, p) == 0]


def linear_factorization(f: Poly) -> str:
    """Render f as lead*(a+r1)*(a+r2)... when it splits into linear factors over F_p."""
    p = f.field.p
    rest = f.coeffs
    factors = []
    for a in range(p):
        while len(rest) > 1 and kernels.evaluate(rest, a, p) == 0:
            rest = kernels.divmod_(rest, ((-a) % p, 1), p)[0]
            factors.append(f"(a+{(-a) % p})" if a else "a")
    if len(rest) != 1:
        return ""
    lead = "" if rest[0] == 1 else str(rest[0])
    return lead + "".join(factors) if factors else str(rest[0])


def integer_binomial_divisible(a: int, s: int, p: int) -> bool:
    """Whether p divides the integer binomial C(a + s*a, a)."""
    return comb(a + s * a, a) % p == 0
