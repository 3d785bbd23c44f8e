"""Mechanical checks of the identities and congruences satisfied by the
generalized finite polylogarithms and their companion polynomials.

Every check returns a :class:`CheckReport`.  Congruences are decided by
reducing ``lhs - rhs`` to its canonical representative and testing for zero;
on failure the witness records the lowest-degree offending coefficient.

All checks accept a ``mutation`` keyword that perturbs one coefficient of a
constructed object before the comparison.  It exists for negative controls.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BadArgument, InternalInconsistency
from .funcfield import (
    BFF, RFF, BiFrac, RatFunc, bivariate_from_alpha, bivariate_from_beta,
    bivariate_mul, rf_substitute,
)
from .polyring import (
    BiPoly, Poly, SpecialXp, compose, evaluate, first_difference, reduce,
    reverse_scale, theta,
)
from .primefield import (
    GF, check_prime, fp_factorial, fp_inv, root_of_unity, stirling1,
)
from . import kernels, special

# --------------------------------------------------------------------------
# reports


@dataclass
class CheckReport:
    identity: str
    p: int
    params: dict
    status: str
    witness: dict | None = None
    millis: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def sort_key(self):
        return (self.identity, self.p, tuple(sorted(self.params.items())))

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "p": self.p,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "witness": self.witness,
            "millis": self.millis,
        }


@dataclass
class SuiteResult:
    reports: list[CheckReport] = field(default_factory=list)

    def __post_init__(self):
        self.reports = sorted(self.reports, key=CheckReport.sort_key)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for r in self.reports:
            counts[r.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_json(self) -> dict:
        return {"runs": [r.to_json() for r in self.reports], "summary": self.summary}


def _run(identity, p, params, body) -> CheckReport:
    start = time.perf_counter()
    try:
        witness = body()
        status = "pass" if witness is None else "fail"
    except Exception as exc:  # reported, never propagated out of a suite
        witness = {"error": f"{type(exc).__name__}: {exc}"}
        status = "error"
    millis = int((time.perf_counter() - start) * 1000)
    return CheckReport(identity, p, dict(params), status, witness, millis)


def _witness(position, lhs, rhs) -> dict:
    return {"position": str(position), "lhs": str(lhs), "rhs": str(rhs)}


def _lowest(f: Poly):
    K = f.field
    return next(k for k, c in enumerate(f.coeffs) if not K.is_zero(c))


def _congruence(lhs: Poly, rhs: Poly, ctx, label=""):
    """None when lhs - rhs reduces to zero, else a witness."""
    diff = reduce(lhs - rhs, ctx)
    if not diff.coeffs:
        return None
    k = _lowest(diff)
    K = lhs.field
    lr, rr = reduce(lhs, ctx)[k], reduce(rhs, ctx)[k]
    return _witness(f"{label}X^{k}", K.fmt(lr), K.fmt(rr))


def _identity(lhs: Poly, rhs: Poly, label=""):
    hit = first_difference(lhs, rhs)
    if hit is None:
        return None
    k, a, b = hit
    K = lhs.field
    return _witness(f"{label}X^{k}", K.fmt(a), K.fmt(b))


def _values(position, lhs, rhs):
    if lhs == rhs:
        return None
    fmt = getattr(lhs, "fmt", None)
    return _witness(position, fmt() if fmt else lhs, rhs.fmt() if fmt else rhs)


def _first(*witnesses):
    for w in witnesses:
        if w is not None:
            return w
    return None


# --------------------------------------------------------------------------
# mutations


@dataclass(frozen=True)
class Mutation:
    """Perturb one coefficient of a named object.

    ``target`` is one of laguerre, gexp, trunc_exp, T, polylog, gen_polylog,
    g, b1s, correction, thm1.  ``index`` is the exponent (or (i, j) pair for
    bivariate objects, (s, k) for b1s).  ``d`` restricts a polylog mutation
    to one index.  ``zero`` replaces the coefficient by 0 instead of adding
    ``delta``.
    """

    target: str
    index: object = 1
    delta: int = 1
    d: int | None = None
    zero: bool = False

    def hits(self, target, d=None) -> bool:
        if self.target != target:
            return False
        return self.d is None or d is None or self.d == d

    def bump(self, K, value):
        if self.zero:
            return K.zero
        return K.add(value, K.from_int(self.delta))


def _mutate_poly(f: Poly, m: Mutation | None, target, d=None) -> Poly:
    if m is None or not m.hits(target, d):
        return f
    K, k = f.field, int(m.index)
    c = list(f.coeffs) + [K.zero] * max(0, k + 1 - len(f.coeffs))
    c[k] = m.bump(K, c[k])
    return Poly(K, c)


def _mutate_bipoly(f: BiPoly, m: Mutation | None, target) -> BiPoly:
    if m is None or not m.hits(target):
        return f
    i, j = m.index
    terms = [t for t in f.terms() if t[0] != (i, j)]
    new = m.bump(f.field, f[i, j])
    if not f.field.is_zero(new):
        terms.append(((i, j), new))
    return BiPoly.from_terms(f.field, terms)


def _g_table(p, m: Mutation | None) -> dict:
    table = special.build_g(p)
    if m is None or not m.hits("g"):
        return table
    table = dict(table)
    k = int(m.index)
    table[k] = m.bump(RFF(p), table[k])
    return table


def _laguerre(p, m):
    return _mutate_poly(special.build_laguerre(p).body, m, "laguerre")


def _gexp(p, m):
    return _mutate_poly(special.build_gexp(p).body, m, "gexp")


def _T(p, m) -> Poly:
    return _mutate_poly(special.build_T(p), m, "T")


def _T_alpha(p, m) -> RatFunc:
    return RatFunc(p, _T(p, m).coeffs)


def _polylog(p, d, m) -> Poly:
    return _mutate_poly(special.build_polylog(p, d), m, "polylog", d % (p - 1))


def _gen_polylog(p, d, m, table=None, param_sub=None) -> Poly:
    if table is None:
        table = _g_table(p, m)
    f = special.build_gen_polylog(p, d, param_sub=param_sub, g=table).body
    if param_sub is None:
        f = _mutate_poly(f, m, "gen_polylog", d % (p - 1))
    return f


def _alpha_p_minus_alpha(p) -> RatFunc:
    return RatFunc(p, (0, p - 1) + (0,) * (p - 2) + (1,))


def _alpha_pm1_minus_1(p) -> tuple:
    return (p - 1,) + (0,) * (p - 2) + (1,)


def _laguerre_ctx(p):
    return SpecialXp(_alpha_p_minus_alpha(p))


def _lift(p, f: Poly) -> Poly:
    """Embed a polynomial over F_p into F_p(alpha)[X]."""
    return Poly(RFF(p), [RatFunc.constant(p, c) for c in f.coeffs])


def _x(K) -> Poly:
    return Poly.x(K)


# --------------------------------------------------------------------------
# Laguerre polynomials and the normalized exponential


def verify_L_diff(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """X L' == (X - alpha) L  mod X^p - (alpha^p - alpha)."""
    check_prime(p)

    def body():
        L = _laguerre(p, mutation)
        K = L.field
        x_minus_a = Poly(K, (-K.alpha(), K.one))
        return _congruence(theta(L), x_minus_a * L, _laguerre_ctx(p))

    return _run("l_diff", p, {}, body)


def _bivariate_moduli(p):
    u = BiFrac(p, bivariate_from_alpha(_alpha_p_minus_alpha(p).num), check=False)
    v = BiFrac(p, bivariate_from_beta(_alpha_p_minus_alpha(p).num), check=False)
    return u, v


@lru_cache(maxsize=None)
def _common_dens(p):
    """(alpha+beta)^(p-1) - 1 and (alpha^(p-1) - 1)(beta^(p-1) - 1)."""
    top = _alpha_pm1_minus_1(p)
    d1 = BiFrac.from_alpha_plus_beta(RatFunc(p, top)).num
    d2 = bivariate_mul(bivariate_from_alpha(top), bivariate_from_beta(top), p)
    return d1, d2


def _product_congruence(p, P: Poly, correction: BiPoly, da, db):
    """P^(a)(X) P^(b)(Y) == P^(a+b)(X+Y) * correction modulo the two moduli.

    Every coefficient is first rewritten over a fixed denominator (``da`` for
    the shifted factor, ``db`` for the correction) so that the sums in the
    expansion never need a bivariate gcd.
    """
    K = BFF(p)
    dd = bivariate_mul(da, db, p)
    pa = Poly(K, [BiFrac.from_alpha(c) for c in P.coeffs])
    pb = Poly(K, [BiFrac.from_beta(c) for c in P.coeffs])
    ps = Poly(K, [BiFrac.from_alpha_plus_beta(c) for c in P.coeffs])
    lhs = BiPoly.outer(pa, pb).map_coeffs(lambda c: c.rebase(dd))
    shifted = BiPoly.shift(ps).map_coeffs(lambda c: c.rebase(da))
    corr = correction.map_coeffs(lambda c: c.rebase(db))
    u, v = _bivariate_moduli(p)
    rhs = (shifted * corr).reduce(u, v)
    diff = (lhs - rhs).reduce(u, v)
    hit = diff.first_nonzero()
    if hit is None:
        return None
    (i, j), _ = hit
    return _witness(f"X^{i}*Y^{j}", lhs[i, j].stripped().fmt(), rhs[i, j].stripped().fmt())


def verify_thm2(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """The product congruence for the normalized exponential with explicit correction."""
    check_prime(p)

    def body():
        d1, d2 = _common_dens(p)
        corr = _mutate_bipoly(special.build_thm2_correction(p).body, mutation, "correction")
        return _product_congruence(p, _gexp(p, mutation), corr, d1, d2)

    return _run("thm2", p, {}, body)


def verify_thm1_coeffs(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """The Laguerre product congruence with the explicit c_0, ..., c_{p-1}."""
    check_prime(p)

    def body():
        K = BFF(p)
        d1, _ = _common_dens(p)
        cs = list(special.build_thm1_coeffs(p).body)
        if mutation is not None and mutation.hits("thm1"):
            i = int(mutation.index)
            cs[i] = mutation.bump(K, cs[i])
        terms = [((0, 0), cs[0])] + [((i, p - i), cs[i]) for i in range(1, p)]
        corr = BiPoly.from_terms(K, terms)
        return _product_congruence(p, _laguerre(p, mutation), corr, ((1,),), d1)

    return _run("thm1_coeffs", p, {}, body)


def characterization_probe(p: int, c: int, *, mutation: Mutation | None = None) -> CheckReport:
    """E^(c alpha)(cX) satisfies the product congruence with rescaled corrections."""
    check_prime(p)
    c %= p

    def body():
        K = BFF(p)
        scale = (0, c) if c else ()
        gexp = special.substitute_parameter(_gexp(p, mutation), scale)
        P = special.dilate(gexp, RatFunc.constant(p, c))
        terms = [((0, 0), K.one)]
        for i in range(1, p):
            sa = rf_substitute(RatFunc(p, (1,), special._rising_den(p, i)), scale)
            sb = rf_substitute(RatFunc(p, (1,), special._rising_den(p, p - i)), scale)
            s = BiFrac.from_alpha(sa) * BiFrac.from_beta(sb) * BiFrac.constant(p, c)
            terms.append(((i, p - i), s))
        corr = _mutate_bipoly(BiPoly.from_terms(K, terms), mutation, "correction")
        d1, d2 = _common_dens(p)
        return _product_congruence(p, P, corr, d1, d2)

    return _run("characterization", p, {"c": c}, body)


# --------------------------------------------------------------------------
# classical finite polylogarithms


def _eq3(p, m):
    """The four-term relation as a polynomial in F_p[X, Y]."""
    F = GF(p)
    c = _polylog(p, 1, m).coeffs
    one_minus = Poly(F, (1, p - 1))
    terms = []
    for k in range(1, len(c)):
        if not c[k]:
            continue
        terms.append(((k, 0), c[k]))
        terms.append(((0, k), -c[k] % p))
        terms.append(((p - k, k), c[k]))
        bx = one_minus ** (p - k)
        by = one_minus ** k
        for i, a in enumerate(bx.coeffs):
            for j, b in enumerate(by.coeffs):
                terms.append(((i, j), c[k] * a * b % p))
    total = BiPoly.from_terms(F, terms)
    hit = total.first_nonzero()
    if hit is None:
        return None
    (i, j), v = hit
    return _witness(f"X^{i}*Y^{j}", v, 0)


def _eq5(p, d, h, m):
    F = GF(p)
    omega = root_of_unity(h, p)
    f = _polylog(p, d, m)
    lhs = compose(f, Poly.monomial(F, 1, h))
    top = kernels.sub((1,), (0,) * (p * h) + (1,), p)
    acc = Poly(F, ())
    for j in range(h):
        w = pow(omega, j, p)
        den = kernels.sub((1,), (0,) * p + (w,), p)
        q, r = kernels.divmod_(top, den, p)
        if r:
            raise InternalInconsistency(f"prefactor division left a remainder at j={j}")
        acc = acc + Poly(F, q) * special.dilate(f, w)
    rhs = acc.scale(pow(h, (d - 1) % (p - 1), p))
    return _identity(lhs, rhs)


CLASSICAL = ("eq2", "eq3", "eq4", "eq5", "eq6", "eq7")


def verify_classical(p: int, which: str, d: int = 1, h: int = 1, *,
                     mutation: Mutation | None = None) -> CheckReport:
    """One of the classical relations for the finite polylogarithms over F_p."""
    check_prime(p)
    if which not in CLASSICAL:
        raise BadArgument(f"unknown classical relation {which!r}")
    params: dict = {}
    if which in ("eq4", "eq5", "eq6", "eq7"):
        params["d"] = d
    if which in ("eq5", "eq6"):
        if not 0 < h < p:
            raise BadArgument(f"{which} needs 0 < h < p, got h={h}")
        if which == "eq5":
            root_of_unity(h, p)
        params["h"] = h
    if which == "eq7" and not 0 < d < p - 1:
        raise BadArgument(f"eq7 needs 0 < d < p-1, got d={d}")
    F = GF(p)

    def body():
        if which == "eq2":
            f = _polylog(p, 1, mutation)
            return _identity(f, compose(f, Poly(F, (1, -1))))
        if which == "eq3":
            return _eq3(p, mutation)
        if which == "eq4":
            f = _polylog(p, d, mutation)
            rhs = reverse_scale(f, 1).scale((-1) ** d)
            return _identity(f, rhs)
        if which == "eq5":
            return _eq5(p, d, h, mutation)
        if which == "eq6":
            f = _polylog(p, d, mutation)
            ctx = SpecialXp(1)
            lhs = compose(f, Poly.monomial(F, 1, h), ctx)
            return _congruence(lhs, f.scale(pow(h, d % (p - 1), p)), ctx)
        f1 = _polylog(p, 1, mutation)
        fd = _polylog(p, d, mutation)
        ctx = SpecialXp(0)
        lhs = f1 ** d
        factor = (-1) ** (d - 1) * fp_factorial(d, p)
        rhs = compose(fd, Poly(F, (1, -1))).scale(factor)
        return _congruence(lhs, rhs, ctx)

    return _run(which, p, params, body)


def verify_powers_alpha0(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """The alpha = 0 case of the power congruence: L1^d == (-1)^(d-1) d! L_d mod X^p - 1."""
    check_prime(p)
    if not 0 < d < p - 1:
        raise BadArgument(f"needs 0 < d < p-1, got d={d}")

    def body():
        ctx = SpecialXp(1)
        lhs = _polylog(p, 1, mutation) ** d
        rhs = _polylog(p, d, mutation).scale((-1) ** (d - 1) * fp_factorial(d, p))
        return _congruence(lhs, rhs, ctx)

    return _run("powers_alpha0", p, {"d": d}, body)


# --------------------------------------------------------------------------
# generalized polylogarithms: basic properties


def verify_inverse(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """-L1^(alpha)(L(X)) == X modulo X^p - (alpha^p - alpha), and its alpha = 0 case."""
    check_prime(p)

    def body():
        L = _laguerre(p, mutation)
        K = L.field
        ctx = _laguerre_ctx(p)
        lhs = -compose(_gen_polylog(p, 1, mutation), L, ctx)
        w = _congruence(lhs, _x(K), ctx)
        if w is not None:
            return w
        F = GF(p)
        E = _mutate_poly(special.build_trunc_exp(p).body, mutation, "trunc_exp")
        lhs0 = -compose(_polylog(p, 1, mutation), E, SpecialXp(0))
        return _congruence(lhs0, _x(F), SpecialXp(0), label="alpha=0 ")

    return _run("inverse", p, {}, body)


def verify_periodicity(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """The constructed L_d^(alpha) equals the direct sum with exponent d + p - 1."""
    check_prime(p)

    def body():
        built = _gen_polylog(p, d, mutation)
        table = special.build_g(p)
        e = d + p - 1
        direct = [RatFunc(p)]
        for k in range(1, p):
            w = pow(fp_inv(k, p), e, p) if e >= 0 else pow(k, -e, p)
            direct.append(table[k] * RatFunc.constant(p, w))
        return _identity(built, Poly(RFF(p), direct))

    return _run("periodicity", p, {"d": d}, body)


def verify_theta_chain(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """theta(L_d^(alpha)) = L_(d-1)^(alpha)."""
    check_prime(p)

    def body():
        table = special.build_g(p)
        lhs = theta(_gen_polylog(p, d, mutation, table=table))
        rhs = special.build_gen_polylog(p, d - 1, g=table).body
        return _identity(lhs, rhs)

    return _run("theta_chain", p, {"d": d}, body)


def verify_g_definition(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """The valuation definition of g_k agrees with 1 / prod_{s<k} b_{1,s}."""
    check_prime(p)

    def body():
        val = _g_table(p, mutation)
        jac = special.build_g(p, method="jacobi")
        for k in range(1, p):
            w = _values(f"g_{k}", val[k], jac[k])
            if w is not None:
                return w
        return None

    return _run("g_definition", p, {}, body)


def _b1s(p, s, m):
    f = special.build_b1s(p, s)
    if m is None or not m.hits("b1s"):
        return f
    idx = m.index
    ms, k = idx if isinstance(idx, tuple) else (1, idx)
    if ms != s:
        return f
    return _mutate_poly(f, Mutation("b1s", k, m.delta, zero=m.zero), "b1s")


def verify_b1s_properties(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """Degree, product, splitting, root and symmetry properties of every b_{1,s}."""
    check_prime(p)

    def body():
        F = GF(p)
        half = (p - 1) // 2
        target = Poly(F, (1,) + (0,) * (p - 2) + (p - 1,))
        for s in range(1, p - 1):
            b = _b1s(p, s, mutation)
            tag = f"s={s} "
            if b.degree != half:
                return _witness(tag + "degree", b.degree, half)
            reflected = Poly(F, [c if k % 2 == 0 else -c for k, c in enumerate(b.coeffs)])
            w = _identity(b * reflected, target, label=tag + "b(a)b(-a) ")
            if w is not None:
                return w
            roots = [a for a in range(p) if evaluate(b, a) == 0]
            if len(roots) != half:
                return _witness(tag + "distinct roots", len(roots), half)
            for a in range(1, p):
                vanishes = evaluate(b, -a % p) == 0
                divisible = special.integer_binomial_divisible(a, s, p)
                if vanishes != divisible:
                    return _witness(f"{tag}root at -{a}", vanishes, divisible)
            other = _b1s(p, p - 1 - s, mutation)
            w = _identity(b, other, label=f"{tag}vs s={p - 1 - s} ")
            if w is not None:
                return w
        return None

    return _run("b1s", p, {}, body)


# --------------------------------------------------------------------------
# congruences for the generalized polylogarithms


def verify_g_symmetry(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """g_k g_(p-k) = g_(p-1) for 0 < k < p."""
    check_prime(p)

    def body():
        g = _g_table(p, mutation)
        for k in range(1, p):
            w = _values(f"k={k}", g[k] * g[p - k], g[p - 1])
            if w is not None:
                return w
        return None

    return _run("g_symmetry", p, {}, body)


def verify_g_highest(p: int, *, mutation: Mutation | None = None) -> CheckReport:
    """g_(p-1) = (1 - alpha^(p-1)) / T(alpha)."""
    check_prime(p)

    def body():
        g = _g_table(p, mutation)
        rhs = RatFunc(p, special._one_minus_alpha_pm1(p)) / _T_alpha(p, mutation)
        return _values(f"g_{p - 1}", g[p - 1], rhs)

    return _run("g_highest", p, {}, body)


def verify_gen_inversion(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """T(alpha) L_d^(alpha)(X) = (-1)^d X^p L_d^(-alpha)((1 - alpha^(p-1)) / X)."""
    check_prime(p)

    def body():
        table = _g_table(p, mutation)
        K = RFF(p)
        lhs = _gen_polylog(p, d, mutation, table=table).scale(_T_alpha(p, mutation))
        neg = special.build_gen_polylog(p, d, param_sub=(0, p - 1), g=table).body
        u = RatFunc(p, special._one_minus_alpha_pm1(p))
        rhs = reverse_scale(neg, u).scale(K.from_int((-1) ** d))
        return _identity(lhs, rhs)

    return _run("gen_inversion", p, {"d": d}, body)


def _T_ctx(p, m):
    return SpecialXp(_T_alpha(p, m))


def verify_lemma_G0G1(p: int, *, modulus: RatFunc | None = None,
                      mutation: Mutation | None = None) -> CheckReport:
    """L0 L1 == -L1 - alpha L0 modulo X^p - T(alpha); ``modulus`` overrides T(alpha)."""
    check_prime(p)
    params = {} if modulus is None else {"modulus": modulus.fmt()}

    def body():
        table = _g_table(p, mutation)
        g0 = _gen_polylog(p, 0, mutation, table=table)
        g1 = _gen_polylog(p, 1, mutation, table=table)
        ctx = _T_ctx(p, mutation) if modulus is None else SpecialXp(modulus)
        K = g0.field
        rhs = -g1 - g0.scale(K.alpha())
        return _congruence(g0 * g1, rhs, ctx)

    return _run("lemma_g0g1", p, params, body)


def verify_thm_powers(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """L1^d / d expressed through L_(d-r) with Stirling weights, modulo X^p - T(alpha)."""
    check_prime(p)
    if not 0 < d <= p - 1:
        raise BadArgument(f"thm_powers needs 0 < d <= p-1, got d={d}")

    def body():
        K = RFF(p)
        table = _g_table(p, mutation)
        ctx = _T_ctx(p, mutation)
        g1 = _gen_polylog(p, 1, mutation, table=table)
        power = g1
        for _ in range(d - 1):
            power = reduce(power * g1, ctx)
        a_pow = K.one
        acc = Poly(K, ())
        for r in range(d):
            weight = K.mul(K.from_int(stirling1(d, r + 1, p)), a_pow)
            acc = acc + _gen_polylog(p, d - r, mutation, table=table).scale(weight)
            a_pow = K.mul(a_pow, K.alpha())
        if d < p - 1:
            lhs = power.scale(K.from_int(fp_inv(d, p)))
            rhs = acc.scale(K.from_int((-1) ** (d - 1)))
        else:
            lhs = power
            rhs = acc + Poly(K, (RatFunc(p, special._one_minus_alpha_pm1(p)),))
        return _congruence(lhs, rhs, ctx)

    return _run("thm_powers", p, {"d": d}, body)


def verify_thm_xh(p: int, d: int, h: int, *, mutation: Mutation | None = None) -> CheckReport:
    """L_d^(h alpha)(g_h(alpha) X^h) == h^d L_d^(alpha)(X) modulo X^p - T(alpha)."""
    check_prime(p)
    if not 0 < d < p - 1 or not 0 < h < p:
        raise BadArgument(f"thm_xh needs 0 < d < p-1 and 0 < h < p, got d={d}, h={h}")

    def body():
        K = RFF(p)
        table = _g_table(p, mutation)
        scaled = special.build_gen_polylog(p, d, param_sub=(0, h), g=table).body
        gh = table[h]
        coeffs = [K.zero] * (h * (p - 1) + 1)
        gpow = K.one
        for k in range(1, p):
            gpow = K.mul(gpow, gh)
            coeffs[h * k] = K.mul(scaled[k], gpow)
        lhs = Poly(K, coeffs)
        rhs = _gen_polylog(p, d, mutation, table=table).scale(K.from_int(pow(h, d, p)))
        return _congruence(lhs, rhs, _T_ctx(p, mutation))

    return _run("thm_xh", p, {"d": d, "h": h}, body)


def _gp_sums(p, table, T: Poly, start):
    """S_k = sum_r g_k(r alpha^p) T(r alpha)^k for r = start..p-1."""
    K = RFF(p)
    out = [K.zero] * p
    for r in range(start, p):
        sub = (0,) * p + (r,) if r else ()
        t_r = RatFunc(p, compose(T, Poly(GF(p), (0, r))).coeffs)
        t_pow = K.one
        for k in range(1, p):
            t_pow = K.mul(t_pow, t_r)
            gk = rf_substitute(table[k], sub)
            out[k] = K.add(out[k], K.mul(gk, t_pow))
    return out


@lru_cache(maxsize=None)
def _gp_sums_clean(p):
    table = special.build_g(p)
    T = special.build_T(p)
    full = _gp_sums(p, table, T, 1)
    zero_term = _gp_sums(p, table, T, 0)
    return full, zero_term


def verify_thm_GP(p: int, d: int, *, mutation: Mutation | None = None) -> CheckReport:
    """sum_{r=1}^{p-1} L_d^(r alpha^p)(T(r alpha) X) = (alpha^(p-1) - 1) L_d(X), exactly.

    Also checks the form with r running from 0, whose right side is
    alpha^(p-1) L_d(X).
    """
    check_prime(p)

    def body():
        K = RFF(p)
        if mutation is None:
            full, with_zero = _gp_sums_clean(p)
        else:
            table, T = _g_table(p, mutation), _T(p, mutation)
            full, with_zero = _gp_sums(p, table, T, 1), _gp_sums(p, table, T, 0)
        weights = [0] + [pow(fp_inv(k, p), d, p) if d >= 0 else pow(k, -d, p)
                         for k in range(1, p)]
        lhs = Poly(K, [K.mul(s, K.from_int(w)) for s, w in zip(full, weights)])
        lhs0 = Poly(K, [K.mul(s, K.from_int(w)) for s, w in zip(with_zero, weights)])
        base = _lift(p, _polylog(p, d, mutation))
        rhs = base.scale(RatFunc(p, _alpha_pm1_minus_1(p)))
        rhs0 = base.scale(RatFunc(p, (0,) * (p - 1) + (1,)))
        return _first(_identity(lhs, rhs), _identity(lhs0, rhs0, label="r=0..p-1 "))

    return _run("thm_gp", p, {"d": d}, body)


def verify_aux_identities(p: int, h: int, *, mutation: Mutation | None = None) -> CheckReport:
    """Four auxiliary identities linking T, g_h, the Laguerre polynomial and L_0, L_1."""
    check_prime(p)
    if not 0 < h < p:
        raise BadArgument(f"aux_identities needs 0 < h < p, got h={h}")

    def body():
        K = RFF(p)
        table = _g_table(p, mutation)
        T = _T(p, mutation)
        t_alpha = RatFunc(p, T.coeffs)
        # T(h alpha) = g_h^p T^h
        t_h = RatFunc(p, compose(T, Poly(GF(p), (0, h))).coeffs)
        w = _values("T(h*a)", t_h, table[h] ** p * t_alpha ** h)
        if w is not None:
            return w
        # g_h L^h == L^(h alpha)(hX)
        L = _laguerre(p, mutation)
        ctx = _laguerre_ctx(p)
        power = L
        for _ in range(h - 1):
            power = reduce(power * L, ctx)
        lhs = power.scale(table[h])
        rhs = special.dilate(special.substitute_parameter(L, (0, h)), K.from_int(h))
        w = _congruence(lhs, rhs, ctx, label="g_h*L^h ")
        if w is not None:
            return w
        # L_1^(alpha^p)(T) = alpha - alpha^p and L_0^(alpha^p)(T) = alpha^(p-1) - 1
        sub = (0,) * p + (1,)
        expected = {1: -_alpha_p_minus_alpha(p), 0: RatFunc(p, _alpha_pm1_minus_1(p))}
        for d in (1, 0):
            f = special.build_gen_polylog(p, d, param_sub=sub, g=table).body
            w = _values(f"L{d}(T)", evaluate(f, t_alpha), expected[d])
            if w is not None:
                return w
        return None

    return _run("aux_identities", p, {"h": h}, body)


# --------------------------------------------------------------------------
# suites


def _divisors(n):
    return [h for h in range(1, n + 1) if n % h == 0]


def _classical(which):
    def fn(p, mutation=None, **params):
        return verify_classical(p, which, mutation=mutation, **params)
    return fn


def _grid_d(p):
    return [{"d": d} for d in range(p - 1)]


CHECKS = {
    "l_diff": (verify_L_diff, lambda p: [{}]),
    "thm2": (verify_thm2, lambda p: [{}]),
    "thm1_coeffs": (verify_thm1_coeffs, lambda p: [{}]),
    "characterization": (characterization_probe, lambda p: [{"c": c} for c in range(p)]),
    "eq2": (_classical("eq2"), lambda p: [{}]),
    "eq3": (_classical("eq3"), lambda p: [{}]),
    "eq4": (_classical("eq4"), _grid_d),
    "eq5": (_classical("eq5"),
            lambda p: [{"d": d, "h": h} for d in range(p - 1) for h in _divisors(p - 1)]),
    "eq6": (_classical("eq6"),
            lambda p: [{"d": d, "h": h} for d in range(p - 1) for h in range(1, p)]),
    "eq7": (_classical("eq7"), lambda p: [{"d": d} for d in range(1, p - 1)]),
    "inverse": (verify_inverse, lambda p: [{}]),
    "periodicity": (verify_periodicity, _grid_d),
    "theta_chain": (verify_theta_chain, _grid_d),
    "b1s": (verify_b1s_properties, lambda p: [{}]),
    "g_definition": (verify_g_definition, lambda p: [{}]),
    "g_symmetry": (verify_g_symmetry, lambda p: [{}]),
    "g_highest": (verify_g_highest, lambda p: [{}]),
    "gen_inversion": (verify_gen_inversion, _grid_d),
    "lemma_g0g1": (verify_lemma_G0G1, lambda p: [{}]),
    "thm_powers": (verify_thm_powers, lambda p: [{"d": d} for d in range(1, p)]),
    "thm_xh": (verify_thm_xh,
               lambda p: [{"d": d, "h": h} for d in range(1, p - 1) for h in range(1, p)]),
    "thm_gp": (verify_thm_GP, _grid_d),
    "aux_identities": (verify_aux_identities, lambda p: [{"h": h} for h in range(1, p)]),
}

TAGS = tuple(CHECKS)

GROUPS = {
    "all": TAGS,
    "exponential": ("l_diff", "thm2", "thm1_coeffs", "characterization"),
    "classical": CLASSICAL,
    "basic": ("inverse", "periodicity", "theta_chain", "b1s", "g_definition"),
    "congruences": ("g_symmetry", "g_highest", "gen_inversion", "lemma_g0g1",
                    "thm_powers", "thm_xh", "thm_gp", "aux_identities"),
}


def resolve_selection(names) -> tuple[str, ...]:
    """Expand group names and validate tags; keeps the canonical tag order."""
    chosen = set()
    for name in names:
        if name in GROUPS:
            chosen.update(GROUPS[name])
        elif name in CHECKS:
            chosen.add(name)
        else:
            raise BadArgument(f"unknown identity tag or suite {name!r}")
    return tuple(t for t in TAGS if t in chosen)


def run_check(tag: str, p: int, params: dict | None = None,
              mutation: Mutation | None = None) -> CheckReport:
    fn, _ = CHECKS[tag]
    return fn(p, mutation=mutation, **(params or {}))


def _task(args):
    tag, p, params, mutation = args
    try:
        return run_check(tag, p, params, mutation)
    except Exception as exc:
        return CheckReport(tag, p, dict(params), "error",
                           {"error": f"{type(exc).__name__}: {exc}"}, 0)


def plan(primes, selection) -> list[tuple[str, int, dict]]:
    tags = resolve_selection(selection)
    return [(tag, p, params) for p in primes for tag in tags for params in CHECKS[tag][1](p)]


def run_suite(primes, selection=("all",), jobs: int = 1,
              mutation: Mutation | None = None) -> SuiteResult:
    """Run every selected check over its full parameter grid for each prime."""
    primes = [check_prime(p, bound=max(primes)) for p in primes] if primes else []
    tasks = [(tag, p, params, mutation) for tag, p, params in plan(primes, selection)]
    if jobs is None or jobs <= 0:
        jobs = os.cpu_count() or 1
    if jobs == 1 or len(tasks) <= 1:
        return SuiteResult([_task(t) for t in tasks])
    # the largest primes dominate; start them first
    tasks.sort(key=lambda t: -t[1])
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        reports = list(pool.map(_task, tasks, chunksize=1))
    return SuiteResult(reports)
