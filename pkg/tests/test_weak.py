import random

import pytest

import oracles
from octaweak import weak
from octaweak.perm import (
    RankCapError,
    all_signed_permutations,
    compose,
    descents,
    identity,
    length,
    longest,
    parse,
    profile,
)

P = parse


def test_leq_examples():
    u, v = P("1,3,2"), P("1,3,-2")
    assert weak.leq(u, v)
    assert length(v) - length(u) == 3
    assert weak.leq(u, u)
    a, b = P("2,1,3"), P("1,3,2")
    assert not weak.leq(a, b) and not weak.leq(b, a)


def test_leq_size_mismatch():
    with pytest.raises(ValueError):
        weak.leq(P("1,2"), P("1"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_leq_matches_length_definition(n):
    group = all_signed_permutations(n)
    for u in group:
        for v in group:
            assert weak.leq(u, v) == oracles.leq(u, v)


def test_leq_matches_length_definition_sampled_rank4():
    rng = random.Random(3)
    group = all_signed_permutations(4)
    for _ in range(3000):
        u, v = rng.choice(group), rng.choice(group)
        assert weak.leq(u, v) == oracles.leq(u, v)


def test_covers_examples():
    assert weak.covers(identity(2)) == {P("-1,2"), P("2,1")}
    assert weak.covers(longest(3)) == frozenset()
    assert {P("2,1,-3"), P("-1,2,-3")} <= weak.covers(P("1,2,-3"))


def test_covers_are_length_one_left_multiples():
    for n in range(1, 5):
        for u in all_signed_permutations(n):
            ups = weak.covers(u)
            expected = {
                compose(s, u)
                for s in oracles.gens(n)
                if oracles.length(compose(s, u)) == oracles.length(u) + 1
            }
            assert ups == expected
            for v in ups:
                assert u in weak.lower_covers(v)


def test_cover_graph_shape():
    g = weak.build_cover_graph(3)
    assert len(g) == 48
    assert g.edge_count == 72
    assert g.height == 9
    assert len(weak.build_cover_graph(4)) == 384
    assert weak.build_cover_graph(4).height == 16
    sources = [w for w in g.elements if not weak.lower_covers(w)]
    sinks = [w for w in g.elements if not weak.covers(w)]
    assert sources == [identity(3)] and sinks == [longest(3)]


def test_cover_graph_cap():
    with pytest.raises(RankCapError):
        weak.build_cover_graph(7)
    with pytest.raises(RankCapError):
        weak.build_cover_graph(4, cap=3)


def test_cover_graph_dot():
    dot = weak.build_cover_graph(2).to_dot()
    assert dot.startswith('digraph "B2"')
    assert '"1,2" -> "-1,2" [label="0"];' in dot
    assert '"1,2" -> "2,1" [label="1"];' in dot
    assert dot.count("rank=same") == 5


def test_reachability_equals_profile_order_rank3():
    g = weak.build_cover_graph(3)
    for u in g.elements:
        for v in g.elements:
            assert g.reachable(u, v) == weak.leq(u, v)


def test_join_and_meet():
    j = weak.join(P("2,1,3"), P("-1,2,3"))
    assert j == P("-1,-2,3")
    assert j == oracles.join(P("2,1,3"), P("-1,2,3"))
    u = P("2,-3,1")
    assert weak.meet(u, identity(3)) == identity(3)
    assert weak.join(u, u) == u


def test_join_matches_oracle_rank3():
    group = all_signed_permutations(3)
    rng = random.Random(5)
    for _ in range(300):
        u, v = rng.choice(group), rng.choice(group)
        assert weak.join(u, v) == oracles.join(u, v)


def test_interval_endpoints_and_membership():
    u, v = P("1,2,3"), P("-1,-2,3")
    members = weak.interval(u, v)
    assert len(members) == 8
    assert all(weak.leq(u, z) and weak.leq(z, v) for z in members)
    assert weak.interval(v, u) == frozenset()


def test_mobius_examples():
    assert weak.mobius(P("2,3,1"), P("3,2,1")) == -1
    assert weak.mobius(P("2,3,1"), P("2,3,1")) == 1
    assert weak.mobius(P("3,2,1"), P("2,3,1")) == 0
    mu = {v: m for v, m in weak.mobius_from(P("2,3,1")).items() if m}
    assert mu == {P("2,3,1"): 1, P("3,2,1"): -1, P("2,3,-1"): -1, P("3,2,-1"): 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mobius_matches_oracle(n):
    for u in all_signed_permutations(n):
        mu = weak.mobius_from(u)
        for v in all_signed_permutations(n):
            assert mu.get(v, 0) == oracles.mobius(u, v)


def test_mobius_sums_vanish():
    for u in all_signed_permutations(3):
        for v in weak.upset(u):
            if v != u:
                assert sum(weak.mobius(u, z) for z in weak.interval(u, v)) == 0


def test_reflection_sets():
    assert weak.reflections_TR(identity(3)) == frozenset()
    refl = weak.reflections_TR(P("1,-2"))
    assert len(refl) == 3
    assert {r.kind for r in refl} == {"transposition", "sign_change"}
    for n in range(5):
        table = [(t, t.as_permutation(n)) for t in weak.all_reflections(n)]
        for w in all_signed_permutations(n):
            by_definition = {t for t, tp in table if length(compose(w, tp)) < length(w)}
            assert weak.reflections_TR(w) == by_definition
            assert len(by_definition) == length(w)


def test_all_reflections_count():
    assert [len(weak.all_reflections(n)) for n in range(1, 5)] == [1, 4, 9, 16]


def test_descent_class_maxima():
    assert weak.descent_class_max({0, 1}, 3) == P("-1,-3,-2")
    assert weak.descent_class_max({1}, 3) == P("1,-3,-2")
    assert weak.descent_class_max(set(), 3) == P("1,2,3")
    assert weak.descent_class_max({0}, 2) == P("-2,-1")
    assert weak.descent_class_max({0, 1, 2}, 3) == P("-1,-2,-3")


def test_descent_class_is_interval_with_given_top():
    for n in range(1, 5):
        for w in all_signed_permutations(n):
            I = descents(w)
            top = weak.descent_class_max(I, n)
            assert descents(top) == I
            assert weak.leq(w, top)
    lo, hi, members = weak.descent_class({1}, 3)
    assert hi == P("1,-3,-2")
    assert members == weak.interval(lo, hi)


def test_galois_connection():
    assert weak.galois_adjoint_check(2)
    assert weak.galois_adjoint_check(3)


def test_descents_are_monotone():
    for u in all_signed_permutations(3):
        for v in weak.upset(u):
            assert descents(u) <= descents(v)


def test_descent_set_validation():
    with pytest.raises(ValueError):
        weak.descent_class_max({3}, 3)


def test_cover_changes_one_statistic():
    for u in all_signed_permutations(3):
        pu = profile(u)
        for v in weak.covers(u):
            pv = profile(v)
            grown = [
                len(pv.inv - pu.inv),
                len(pv.nega - pu.nega),
                len(pv.nsp - pu.nsp),
            ]
            assert sorted(grown) == [0, 0, 1]
            assert pu <= pv
