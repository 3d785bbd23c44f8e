import pytest

from genpolylog import special
from genpolylog.errors import BadArgument
from genpolylog.funcfield import RatFunc, rf_specialize
from genpolylog.polyring import Poly, format_poly
from genpolylog.primefield import GF, fp_factorial, fp_inv

import oracle

PRIMES = [3, 5, 7, 11, 13]


def test_polylog_examples():
    assert format_poly(special.build_polylog(3, 1)) == "X + 2*X^2"
    for p in PRIMES:
        for d in range(-3, 2 * p):
            assert special.build_polylog(p, d) == special.build_polylog(p, d + p - 1)


@pytest.mark.parametrize("p", PRIMES)
def test_T_forms_and_shape(p):
    T = special.build_T(p)
    assert special.t_product_form(p) == special.t_laguerre_form(p)
    assert T.degree == p * (p - 1) // 2
    assert T[0] == 1
    assert oracle.as_tuples(oracle.T(p), p)[0] == T.coeffs


def test_T_small():
    assert format_poly(special.build_T(3)) == "1 + 2*X + 2*X^2 + X^3"
    # T is not monic in general
    assert [special.build_T(p).coeffs[-1] for p in PRIMES] == [1, 2, 1, 10, 5]


@pytest.mark.parametrize("p", PRIMES)
def test_g_against_oracle(p):
    ours = special.build_g(p)
    ref = oracle.g_table(p)
    for k in range(1, p):
        assert (ours[k].num, ours[k].den) == oracle.as_tuples(ref[k], p)
    assert special.build_g(p, "jacobi") == ours


def test_g_frozen_values():
    assert {k: v.fmt() for k, v in special.build_g(3).items()} == {1: "1", 2: "1/(1+2a)"}
    assert {k: v.fmt() for k, v in special.build_g(5).items()} == {
        1: "1",
        2: "1/(1+a+3a^2)",
        3: "1/(1+3a+2a^2+3a^3+a^4)",
        4: "1/(1+4a+3a^2+4a^3+3a^6)",
    }


@pytest.mark.parametrize("p", PRIMES)
def test_g_basic(p):
    g = special.build_g(p)
    assert g[1] == RatFunc.constant(p, 1)
    assert all(rf_specialize(g[k], 0) == 1 for k in g)
    top = RatFunc(p, (1,) + (0,) * (p - 2) + (p - 1,)) / RatFunc(p, special.build_T(p).coeffs)
    assert g[p - 1] == top
    with pytest.raises(BadArgument):
        special.build_g(p, "nope")


def test_g_top_product_orientations():
    # the (1 + alpha/a) orientation reproduces g_{p-1}; the other does not
    for p in PRIMES:
        forms = special.g_top_product_forms(p)
        assert forms["plus"] == special.build_g(p)[p - 1]
    forms = special.g_top_product_forms(3)
    assert forms["minus"].fmt() == "1/(1+a)"
    assert forms["plus"].fmt() == "1/(1+2a)"


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_laguerre_matches_classical_definition(p):
    ours = special.build_laguerre(p).body
    ref = oracle.laguerre(p)
    assert [(c.num, c.den) for c in ours.coeffs] == [oracle.as_tuples(c, p) for c in ref]


def test_laguerre_p3():
    assert format_poly(special.build_laguerre(3).body) == "(1+2a^2) + (1+2a)*X + 2*X^2"


@pytest.mark.parametrize("p", PRIMES)
def test_gexp_relations(p):
    L = special.build_laguerre(p).body
    E = special.build_gexp(p).body
    lead = RatFunc(p, (1,) + (0,) * (p - 2) + (p - 1,))
    assert E.scale(lead) == L
    at_zero = [rf_specialize(c, 0) for c in E.coeffs]
    assert at_zero == list(special.build_trunc_exp(p).body.coeffs)
    assert at_zero == [fp_inv(fp_factorial(k, p), p) for k in range(p)]


def test_b1s_small():
    f = special.build_b1s(3, 1)
    assert format_poly(f, var="a", spaced=False) == "1+2a"
    assert special.b1s_roots(3, 1) == [1]
    assert special.integer_binomial_divisible(2, 1, 3)
    assert special.linear_factorization(special.build_b1s(5, 1)) == "3(a+4)(a+3)"
    with pytest.raises(BadArgument):
        special.build_b1s(5, 4)


@pytest.mark.parametrize("p", PRIMES)
def test_b1s_shape(p):
    for s in range(1, p - 1):
        f = special.build_b1s(p, s)
        assert f.degree == (p - 1) // 2
        assert f[0] == 1
        assert len(special.b1s_roots(p, s)) == (p - 1) // 2
        assert special.linear_factorization(f)


@pytest.mark.parametrize("p", PRIMES)
def test_gen_polylog_specializes(p):
    for d in range(p - 1):
        body = special.build_gen_polylog(p, d).body
        at_zero = Poly(GF(p), [rf_specialize(c, 0) for c in body.coeffs])
        assert at_zero == special.build_polylog(p, d)


def test_gen_polylog_param_sub():
    p = 5
    obj = special.build_gen_polylog(p, 2, param_sub=(0, 3))
    assert obj.kind == "GenPolylog" and obj.param("d") == 2 and obj.param("alpha") == (0, 3)
    direct = special.substitute_parameter(special.build_gen_polylog(p, 2).body, (0, 3))
    assert obj.body == direct


def _falling(x, n, p):
    acc = 1
    for j in range(n):
        acc = acc * (x - j) % p
    return acc


@pytest.mark.parametrize("p", [3, 5, 7])
def test_thm1_coeffs_pointwise(p):
    cs = special.build_thm1_coeffs(p).body
    for a in range(p):
        for b in range(p):
            den = _falling(a + b - 1, p - 1, p)
            if not den:
                continue
            inv = fp_inv(den, p)
            c0 = -_falling(a - 1, p - 1, p) * _falling(b - 1, p - 1, p) * inv % p
            assert cs[0].specialize(a, b) == c0
            for i in range(1, p):
                ci = -_falling(a - 1, p - 1 - i, p) * _falling(b - 1, i - 1, p) * inv % p
                assert cs[i].specialize(a, b) == ci


def test_correction_pointwise():
    p = 5
    corr = special.build_thm2_correction(p).body
    assert corr[0, 0].specialize(0, 0) == 1
    for i in range(1, p):
        s = corr[i, p - i]
        den = 1
        for j in range(1, i + 1):
            den = den * (1 + j) % p
        for j in range(1, p - i + 1):
            den = den * (2 + j) % p
        if den:
            assert s.specialize(1, 2) == fp_inv(den, p)


def test_dilate():
    F = GF(7)
    f = Poly(F, (1, 1, 1))
    assert special.dilate(f, 2) == Poly(F, (1, 2, 4))
