import json
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from octaweak import hsym, weak
from octaweak.hsym import F, M, FormalSum, TensorSum
from octaweak.perm import (
    IOTA,
    RankCapError,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    identity,
    parse,
)

P = parse


def fs(basis, terms):
    return FormalSum(basis, {P(w): c for w, c in terms.items()})


def ts(basis, terms):
    return TensorSum(basis, {(P(a), P(b)): c for (a, b), c in terms.items()})


@st.composite
def signed_perms(draw, min_n=0, max_n=3):
    n = draw(st.integers(min_n, max_n))
    values = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation([s * a for s, a in zip(signs, values)])


@st.composite
def formal_sums(draw, basis="F", max_n=3):
    keys = draw(st.lists(signed_perms(0, max_n), max_size=4))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
    return FormalSum(basis, dict(zip(keys, coeffs)))


# --- formal sums -----------------------------------------------------------------------------

def test_formal_sum_arithmetic_and_display():
    x = F(P("1,-2")) + 2 * F(P("2,1"))
    assert x.coefficient(P("2,1")) == 2
    assert (x - x) == FormalSum("F")
    assert not (x - x)
    assert str(F(P("1,-2")) - 2 * F(P("2,1"))) == "F[1,-2] - 2*F[2,1]"
    assert str(FormalSum("M")) == "0"
    with pytest.raises(ValueError):
        F(P("1")) + M(P("1"))


def test_formal_sum_grades():
    x = F(IOTA) + F(P("1")) + F(P("2,1"))
    assert x.grades() == {0, 1, 2}
    assert x.homogeneous(1) == F(P("1"))


@given(formal_sums(), formal_sums())
def test_formal_sum_is_an_abelian_group(x, y):
    assert x + y == y + x
    assert (x + y) - y == x
    assert -(-x) == x


@given(formal_sums("F"))
def test_json_round_trip(x):
    data = json.loads(json.dumps(x.to_json()))
    assert FormalSum.from_json(data) == x


def test_json_layout():
    data = (F(P("1,-2")) - F(IOTA)).to_json()
    assert data["basis"] == "F"
    assert {"perm": [1, -2], "coeff": 1} in data["terms"]
    t = hsym.f_coproduct(F(P("1")))
    assert TensorSum.from_json(t.to_json()) == t


# --- fundamental basis ------------------------------------------------------------------------

def test_fundamental_product_example():
    got = F(P("1,-2")) * F(P("-2,1"))
    assert got == fs("F", dict.fromkeys(
        ["1,-2,-4,3", "1,-4,-2,3", "1,-4,3,-2", "-4,1,-2,3", "-4,1,3,-2", "-4,3,1,-2"], 1))


def test_fundamental_product_unsigned_example():
    got = F(P("1,2")) * F(P("2,1"))
    assert got == fs("F", dict.fromkeys(
        ["1,2,4,3", "1,4,2,3", "1,4,3,2", "4,1,2,3", "4,1,3,2", "4,3,1,2"], 1))


def test_fundamental_coproduct_example():
    got = hsym.f_coproduct(F(P("1,-4,-2,3")))
    assert got == ts("F", {
        ("", "1,-4,-2,3"): 1, ("1", "-3,-1,2"): 1, ("1,-2", "-1,2"): 1,
        ("1,-3,-2", "1"): 1, ("1,-4,-2,3", ""): 1,
    })


def test_unit_and_counit():
    u = P("2,-1,3")
    assert F(IOTA) * F(u) == F(u) == F(u) * F(IOTA)
    assert hsym.counit(F(IOTA) + 3 * F(u)) == 1


@pytest.mark.parametrize("p,q", [(0, 2), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_fundamental_product_matches_pattern_oracle(p, q):
    for u in all_signed_permutations(p):
        for v in all_signed_permutations(q):
            got = F(u) * F(v)
            assert set(got.terms.values()) <= {1}
            assert sorted(got.terms) == oracles.f_product(u, v)


def test_product_term_count_is_binomial():
    rng = random.Random(2)
    for _ in range(30):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        u = rng.choice(all_signed_permutations(p))
        v = rng.choice(all_signed_permutations(q))
        assert sum((F(u) * F(v)).terms.values()) == comb(p + q, p)


def test_coproduct_splits_by_standardizing():
    for u in all_signed_permutations(3):
        expected = {(oracles.sts(u[:i]), oracles.sts(u[i:])) for i in range(4)}
        got = hsym.f_coproduct(F(u))
        assert {(tuple(a), tuple(b)) for a, b in got.terms} == expected


def test_product_preserves_grade():
    x = F(P("1")) + F(P("2,1"))
    y = F(P("-1"))
    assert (x * y).grades() == {2, 3}


# --- monomial basis ---------------------------------------------------------------------------

def test_monomial_expansion_examples():
    assert hsym.to_fundamental(M(P("2,3,1"))) == fs(
        "F", {"2,3,1": 1, "3,2,1": -1, "2,3,-1": -1, "3,2,-1": 1})
    assert hsym.to_fundamental(M(P("1,2,-3"))) == fs(
        "F", {"1,2,-3": 1, "2,1,-3": -1, "-1,2,-3": -1, "-1,-2,-3": 1})
    assert hsym.to_fundamental(M(P("1,-3,2"))) == fs(
        "F", {"1,-3,2": 1, "2,-3,1": -1, "-1,-3,2": -1, "-1,-3,-2": 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monomial_expansion_matches_oracle(n):
    for u in all_signed_permutations(n):
        got = hsym.to_fundamental(M(u))
        assert {tuple(k): c for k, c in got.terms.items()} == oracles.m_to_f(tuple(u))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_fundamental_is_upset_sum(n):
    for u in all_signed_permutations(n):
        got = hsym.to_monomial(F(u))
        assert set(got.terms) == {P(",".join(map(str, v))) if v else IOTA for v in oracles.upset(tuple(u))}
        assert set(got.terms.values()) == {1}


@given(formal_sums("M"))
def test_basis_change_round_trip(x):
    assert hsym.to_monomial(hsym.to_fundamental(x)) == x
    assert hsym.convert(x, "M") == x


def test_basis_change_respects_rank_cap():
    with pytest.raises(RankCapError):
        hsym.to_monomial(F(identity(4)), cap=3)


def test_monomial_products():
    assert M(P("1,2")) * M(P("1")) == fs("M", {
        "1,2,3": 1, "1,3,2": 2, "1,3,-2": 1, "2,3,1": 1, "2,3,-1": 1, "3,1,2": 1,
        "1,-3,2": -1, "-3,1,2": -1})
    assert M(P("-1,2")) * M(P("1")) == fs("M", {
        "-1,2,3": 1, "-1,3,2": 2, "-1,3,-2": 1, "-2,3,-1": 1, "-2,3,1": 1, "3,-1,2": 1,
        "-1,-3,2": -1, "-3,-1,2": -1})
    assert M(P("1")) * M(P("-2,-1")) == fs("M", {"1,-3,-2": 1, "-3,1,-2": 1, "-3,-2,1": 1})


def test_monomial_coproducts():
    assert hsym.m_coproduct(M(P("1,2,-3"))) == ts(
        "M", {("", "1,2,-3"): 1, ("1,2", "-1"): 1, ("-1", "1,-2"): -1, ("1,2,-3", ""): 1})
    assert hsym.m_coproduct(M(P("1,-3,2"))) == ts(
        "M", {("", "1,-3,2"): 1, ("-1", "-2,1"): -1, ("-1,-2", "1"): -1, ("1,-3,2", ""): 1})


def test_global_descent_coproduct_example():
    u = P("-3,-1,-2,-4,-6,-5")
    expected = ts("M", {
        ("", "-3,-1,-2,-4,-6,-5"): 1, ("-3,-1,-2", "-1,-3,-2"): 1,
        ("-3,-1,-2,-4", "-2,-1"): 1, ("-3,-1,-2,-4,-6,-5", ""): 1})
    assert hsym.gdes_coproduct(u) == expected
    assert hsym.m_coproduct(M(u)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_global_descent_coproduct_all_negative(n):
    for perm in all_permutations(n):
        u = SignedPermutation([-a for a in perm])
        assert hsym.m_coproduct(M(u)) == hsym.gdes_coproduct(u)


def test_shuffle_coefficients_example():
    u, v = P("1"), P("-2,-1")
    for w in all_signed_permutations(3):
        sc = hsym.shuffle_coefficients(u, v, w)
        assert sc.C <= sc.B <= sc.A
    sc = hsym.shuffle_coefficients(u, v, P("-3,1,-2"))
    assert sc.b == 1 and sc.c == 1
    with pytest.raises(ValueError):
        hsym.shuffle_coefficients(u, v, P("1,2"))


def test_shuffle_sets_refine_by_upper_factor():
    # a(u, v, w) splits over the u' >= u at which each shuffle is maximal
    for u in all_signed_permutations(1):
        for v in all_signed_permutations(2):
            for w in all_signed_permutations(3):
                a = hsym.shuffle_coefficients(u, v, w).a
                total = sum(hsym.shuffle_coefficients(u2, v, w).b for u2 in weak.upset(u))
                assert a == total


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 1)])
def test_monomial_product_formulas(p, q):
    for u in all_signed_permutations(p):
        for v in all_signed_permutations(q):
            direct = M(u) * M(v)
            assert hsym.m_product_b_formula(u, v) == direct
            if all(a < 0 for a in v):
                c_form = hsym.m_product_c_formula(u, v)
                assert c_form == direct
                assert all(c > 0 for c in c_form.terms.values())


def test_c_formula_needs_negative_right_factor():
    with pytest.raises(ValueError):
        hsym.m_product_c_formula(P("1"), P("1"))


# --- bialgebra structure ----------------------------------------------------------------------

def test_hopf_axioms_small_grades():
    report = hsym.hopf_axiom_suite(3)
    assert report.ok, report.failures[:3]
    assert report.checks > 0
    with pytest.raises(ValueError):
        hsym.hopf_axiom_suite(6)


@settings(max_examples=40, deadline=None)
@given(signed_perms(0, 2), signed_perms(0, 2))
def test_coproduct_is_multiplicative_in_monomial_basis(u, v):
    lhs = hsym.tensor_to_fundamental(hsym.m_coproduct(M(u) * M(v)))
    rhs = hsym.tensor_product(
        hsym.tensor_to_fundamental(hsym.m_coproduct(M(u))),
        hsym.tensor_to_fundamental(hsym.m_coproduct(M(v))),
    )
    assert lhs == rhs


def test_unsigned_permutations_close_up():
    for u in all_permutations(2):
        for v in all_permutations(2):
            assert hsym.is_unsigned(F(u) * F(v))
    assert hsym.is_unsigned_tensor(hsym.f_coproduct(F(P("3,1,2"))))
    assert hsym.forget_signs_sum(F(P("-1,2")) - F(P("1,-2"))) == FormalSum("F")
