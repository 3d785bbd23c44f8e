import json

import pytest

from genpolylog import funcfield, special, verify
from genpolylog.errors import BadArgument, UnsupportedOrder
from genpolylog.funcfield import RatFunc
from genpolylog.polyring import Poly, SpecialXp, evaluate, reduce
from genpolylog.primefield import GF
from genpolylog.verify import Mutation, run_check, run_suite

import oracle

SMALL = [3, 5, 7]

# one single-coefficient mutation per tag, each expected to break the check
MUTATIONS = {
    "l_diff": Mutation("laguerre", 2),
    "thm2": Mutation("correction", (1, 4)),
    "thm1_coeffs": Mutation("thm1", 2),
    "characterization": Mutation("gexp", 2),
    "eq2": Mutation("polylog", 2),
    "eq3": Mutation("polylog", 2),
    "eq4": Mutation("polylog", 1),
    "eq5": Mutation("polylog", 1),
    "eq6": Mutation("polylog", 1),
    "eq7": Mutation("polylog", 1),
    "inverse": Mutation("g", 2),
    "periodicity": Mutation("gen_polylog", 2),
    "theta_chain": Mutation("gen_polylog", 2),
    "b1s": Mutation("b1s", (1, 0)),
    "g_definition": Mutation("g", 3),
    "g_symmetry": Mutation("g", 2),
    "g_highest": Mutation("T", 1),
    "gen_inversion": Mutation("T", 1),
    "lemma_g0g1": Mutation("g", 2),
    "thm_powers": Mutation("g", 2),
    "thm_xh": Mutation("g", 2),
    "thm_gp": Mutation("g", 2),
    "aux_identities": Mutation("T", 1),
}


def test_mutation_table_covers_every_tag():
    assert set(MUTATIONS) == set(verify.TAGS)


@pytest.mark.parametrize("p", SMALL)
@pytest.mark.parametrize("tag", verify.TAGS)
def test_every_check_passes(tag, p):
    result = run_suite([p], [tag])
    assert result.reports, tag
    bad = [r.to_json() for r in result.reports if not r.ok]
    assert not bad


@pytest.mark.parametrize("tag", verify.TAGS)
def test_mutation_breaks_check(tag):
    result = run_suite([5], [tag], mutation=MUTATIONS[tag])
    failed = [r for r in result.reports if r.status == "fail"]
    assert failed, tag
    for r in failed:
        assert set(r.witness) == {"position", "lhs", "rhs"}
        assert r.witness["lhs"] != r.witness["rhs"] or "root" in r.witness["position"]


def test_report_invariants():
    for r in run_suite([3], ["all"]).reports + run_suite([3], ["all"], mutation=Mutation("g", 2)).reports:
        assert (r.status == "pass") == (r.witness is None)
        assert isinstance(r.millis, int)


def test_correction_with_s1_zeroed_fails():
    r = verify.verify_thm2(5, mutation=Mutation("correction", (1, 4), zero=True))
    assert r.status == "fail" and r.witness["position"].startswith("X^")


def test_wrong_modulus_control():
    for p in SMALL:
        assert verify.verify_lemma_G0G1(p).ok
        r = verify.verify_lemma_G0G1(p, modulus=RatFunc.constant(p, 1))
        assert r.status == "fail"
        assert r.params == {"modulus": "1"}


def test_degree_guard_reports_error(monkeypatch):
    monkeypatch.setattr(funcfield, "DEGREE_GUARD_FACTOR", 0)
    r = verify.verify_thm2(3)
    assert r.status == "error"
    assert "DegreeGuardError" in r.witness["error"]


def test_parameter_validation():
    with pytest.raises(UnsupportedOrder):
        verify.verify_classical(7, "eq5", d=1, h=4)
    with pytest.raises(BadArgument):
        verify.verify_classical(7, "eq7", d=6)
    with pytest.raises(BadArgument):
        verify.verify_classical(7, "eq9")
    with pytest.raises(BadArgument):
        verify.verify_thm_powers(5, 5)
    with pytest.raises(BadArgument):
        verify.verify_thm_xh(5, 4, 1)
    with pytest.raises(BadArgument):
        verify.resolve_selection(["bogus"])


def test_characterization_examples():
    assert verify.characterization_probe(5, 0).ok
    assert verify.characterization_probe(5, 1).ok
    assert verify.characterization_probe(5, 2).ok


def test_powers_at_zero_agree_with_eq7():
    for p in SMALL:
        for d in range(2, p - 1):
            for m in (None, Mutation("polylog", 1, d=d), Mutation("polylog", 2, d=d)):
                a = verify.verify_powers_alpha0(p, d, mutation=m)
                b = verify.verify_classical(p, "eq7", d=d, mutation=m)
                assert a.status == b.status
                assert a.ok == (m is None)


def test_powers_at_zero_example():
    F = GF(5)
    lhs = special.build_polylog(5, 1) ** 3
    ctx = SpecialXp(1)
    # (-1)^2 * 3! = 6 = 1 in F_5
    assert reduce(lhs - special.build_polylog(5, 3), ctx) == Poly(F, ())
    assert reduce(lhs - special.build_polylog(5, 3).scale(2), ctx) != Poly(F, ())


def test_thm_gp_periodic_in_d():
    for p in SMALL:
        for d in range(-2, p):
            a = verify.verify_thm_GP(p, d)
            b = verify.verify_thm_GP(p, d + p - 1)
            assert a.ok and b.ok
            m = Mutation("g", 2)
            assert verify.verify_thm_GP(p, d, mutation=m).status == \
                verify.verify_thm_GP(p, d + p - 1, mutation=m).status


def test_gen_inversion_at_zero_is_eq4():
    # T(0) = 1 and g_k(0) = 1, so the alpha = 0 case is the classical inversion
    assert all(special.build_T(p)[0] == 1 for p in SMALL)
    for p in SMALL:
        for d in range(p - 1):
            assert verify.verify_classical(p, "eq4", d=d).ok


def test_aux_value_p3():
    p = 3
    f = special.build_gen_polylog(p, 1, param_sub=(0, 0, 0, 1)).body
    value = evaluate(f, RatFunc(p, special.build_T(p).coeffs))
    assert value == RatFunc(p, (0, 1, 0, 2))  # alpha - alpha^3


@pytest.mark.parametrize("p", [3, 5])
def test_thm_gp_against_oracle(p):
    K = oracle.field(p)
    a = K.from_sympy(oracle.A)
    g = oracle.g_table(p)
    T = oracle.T(p)
    for k in range(1, p):
        total = K.zero
        for r in range(1, p):
            t_r = oracle.substitute(K, T, r * oracle.A)
            total = total + oracle.substitute(K, g[k], r * oracle.A ** p) * t_r ** k
        assert oracle.same(total, a ** (p - 1) - K.one)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_thm_powers_against_oracle(p):
    from sympy.functions.combinatorial.numbers import stirling
    K = oracle.field(p)
    a = K.from_sympy(oracle.A)
    T = oracle.T(p)
    g = oracle.g_table(p)
    L = {d: oracle.gen_polylog(p, d, K, g) for d in range(p)}
    power = L[1]
    for d in range(1, p - 1):
        if d > 1:
            power = oracle.poly_mul_mod(power, L[1], T, p, K)
        rhs = [K.zero] * p
        for r in range(d):
            w = K.from_sympy(int(stirling(d, r + 1, kind=1, signed=False))) * a ** r
            rhs = [x + w * y for x, y in zip(rhs, L[d - r])]
        sign = K.from_sympy((-1) ** (d - 1))
        inv_d = K.one / K.from_sympy(d)
        assert all(oracle.same(x * inv_d, sign * y) for x, y in zip(power, rhs))


def _strip_millis(doc):
    for run in doc["runs"]:
        run["millis"] = 0
    return json.dumps(doc, sort_keys=False)


def test_ordering_independent_of_workers():
    one = run_suite([3, 5], ["all"], jobs=1)
    two = run_suite([3, 5], ["all"], jobs=2)
    assert _strip_millis(one.to_json()) == _strip_millis(two.to_json())
    keys = [r.sort_key() for r in one.reports]
    assert keys == sorted(keys)


def test_empty_selection():
    result = run_suite([3], [])
    assert result.reports == []
    assert result.summary == {"pass": 0, "fail": 0, "error": 0}


def test_grids():
    plan = verify.plan([7], ["eq5", "thm_xh", "characterization", "thm_powers"])
    by_tag = {}
    for tag, p, params in plan:
        by_tag.setdefault(tag, []).append(params)
    assert {x["h"] for x in by_tag["eq5"]} == {1, 2, 3, 6}
    assert len(by_tag["thm_xh"]) == 5 * 6
    assert [x["c"] for x in by_tag["characterization"]] == list(range(7))
    assert [x["d"] for x in by_tag["thm_powers"]] == list(range(1, 7))


def test_run_check_single():
    assert run_check("thm_xh", 5, {"d": 2, "h": 3}).ok
