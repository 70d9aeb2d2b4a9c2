"""Exhaustive verification suites.

Each suite checks one identity or property over every case up to a size bound
and reports how many checks ran, how many passed and the first failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable

from . import bqsym, embeddings, hsym, weak
from .perm import (
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    compose,
    descents,
    forget_signs,
    generator,
    identity,
    inverse,
    length,
    parse,
    profile,
    rank_cap,
    render,
    shifted_product,
    shuffle_perms,
    standardize,
    standardize_plain,
)


@dataclass
class VerifyReport:
    suite: str
    attempted: int = 0
    passed: int = 0
    counterexample: dict | None = None
    duration: float = 0.0
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def check(self, ok: bool, **detail) -> bool:
        self.attempted += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = {k: _show(v) for k, v in detail.items()}
        return ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.suite}: {self.passed}/{self.attempted} checks in {self.duration:.2f}s"
        if self.skipped:
            out += f" (skipped: {'; '.join(self.skipped)})"
        if self.counterexample:
            detail = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            out += f"\n  first failure: {detail}"
        return out


def _show(value) -> str:
    if isinstance(value, SignedPermutation):
        return f"[{render(value)}]"
    if isinstance(value, (list, tuple)) and value and all(isinstance(v, SignedPermutation) for v in value):
        return "(" + " | ".join(render(v) for v in value) + ")"
    return str(value)


def _compositions(n: int, min_parts: int = 2) -> list[tuple[int, ...]]:
    out = []
    for k in range(min_parts - 1, n):
        for cuts in combinations(range(1, n), k):
            bounds = (0, *cuts, n)
            out.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return out


# --- weak order --------------------------------------------------------------------

def order_criterion(r: VerifyReport, max_n: int) -> None:
    """Containment of the three statistic sets equals reachability in the cover graph."""
    for n in range(1, min(max_n, 4) + 1):
        g = weak.build_cover_graph(n)
        for a, u in enumerate(g.elements):
            reach = g.reach[a]
            for b, v in enumerate(g.elements):
                r.check(weak.leq(u, v) == bool(reach >> b & 1), u=u, v=v)


def length_and_reflections(r: VerifyReport, max_n: int) -> None:
    """|T_R(w)| equals the length and the graph distance; T_R splits into three families."""
    for n in range(0, min(max_n, 4) + 1):
        g = weak.build_cover_graph(n)
        refl = [(t, t.as_permutation(n)) for t in weak.all_reflections(n)]
        for w, dist in zip(g.elements, g.lengths):
            ell = length(w)
            by_definition = frozenset(t for t, tp in refl if length(compose(w, tp)) < ell)
            read_off = weak.reflections_TR(w)
            prof = profile(w)
            sizes = len(prof.inv) + len(prof.nega) + len(prof.nsp)
            r.check(
                len(by_definition) == ell == dist == sizes and read_off == by_definition,
                w=w, length=ell, distance=dist, reflections=len(by_definition),
            )


def cover_cases(r: VerifyReport, max_n: int) -> None:
    """Each cover s_i u adds exactly the single statistic predicted from the positions of i, i+1."""
    for n in range(1, min(max_n, 4) + 1):
        for u in all_signed_permutations(n):
            ui = inverse(u)
            pos = lambda a: ui(a)  # noqa: E731
            pu = profile(u)
            for v in weak.covers(u):
                i = next(k for k in range(n) if compose(generator(k, n), u) == v)
                pv = profile(v)
                if i == 0:
                    expected = (pu.inv, pu.nega | {pos(1)}, pu.nsp)
                else:
                    a, b, abar, bbar = pos(i), pos(i + 1), pos(-i), pos(-(i + 1))
                    if 0 < a < b:
                        expected = (pu.inv | {(a, b)}, pu.nega, pu.nsp)
                    elif 0 < abar < b:
                        expected = (pu.inv, pu.nega, pu.nsp | {(abar, b)})
                    elif 0 < b < abar:
                        expected = (pu.inv, pu.nega, pu.nsp | {(b, abar)})
                    elif 0 < bbar < abar:
                        expected = (pu.inv | {(bbar, abar)}, pu.nega, pu.nsp)
                    else:
                        expected = None
                r.check(expected == (pv.inv, pv.nega, pv.nsp), u=u, v=v, generator=i)


def lattice_axioms(r: VerifyReport, max_n: int, samples: int = 10_000, seed: int = 7) -> None:
    """Meet and join are commutative, associative, idempotent and absorptive."""

    def one(u, v, z):
        j, m = weak.join, weak.meet
        r.check(
            j(u, v) == j(v, u)
            and m(u, v) == m(v, u)
            and j(u, u) == u == m(u, u)
            and j(u, m(u, v)) == u == m(u, j(u, v))
            and j(j(u, v), z) == j(u, j(v, z))
            and m(m(u, v), z) == m(u, m(v, z)),
            u=u, v=v, z=z,
        )

    for n in range(1, min(max_n, 3) + 1):
        group = all_signed_permutations(n)
        for u in group:
            for v in group:
                for z in group:
                    one(u, v, z)
    if max_n >= 4:
        rng = random.Random(seed)
        group = all_signed_permutations(4)
        for _ in range(samples):
            one(*rng.choices(group, k=3))


def mobius_recursion(r: VerifyReport, max_n: int) -> None:
    """Moebius values satisfy the defining sums over each interval."""
    for n in range(1, min(max_n, 4) + 1):
        for u in all_signed_permutations(n):
            mu = weak.mobius_from(u)
            r.check(mu.get(u) == 1, u=u, v=u)
            for v in mu:
                if v == u:
                    continue
                total = sum(m for x, m in mu.items() if weak.leq(x, v))
                r.check(total == 0, u=u, v=v, interval_sum=total)
    for u in all_signed_permutations(min(max_n, 2)):
        for v in weak.upset(u):
            r.check(weak.mobius(u, v) == weak.mobius_from(u)[v], u=u, v=v)


def descent_classes(r: VerifyReport, max_n: int) -> None:
    """Descent classes are intervals topped by zeta_I; Des and zeta form a Galois connection."""
    for n in range(1, min(max_n, 4) + 1):
        subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
        group = all_signed_permutations(n)
        zeta = {I: weak.descent_class_max(I, n) for I in subsets}
        for I in subsets:
            members = {w for w in group if descents(w) == I}
            bottom = min(members, key=length)
            top = max(members, key=length)
            r.check(
                top == zeta[I] and members == weak.interval(bottom, zeta[I]),
                subset=sorted(I), n=n, zeta=zeta[I],
            )
        for w in group:
            d = descents(w)
            r.check(all(d <= descents(v) for v in weak.covers(w)), w=w, what="Des order-preserving")
            for I in subsets:
                r.check((d <= I) == weak.leq(w, zeta[I]), w=w, subset=sorted(I))


def group_axioms(r: VerifyReport, max_n: int) -> None:
    """Composition is associative with identity and inverses."""
    for n in range(0, min(max_n, 3) + 1):
        group = all_signed_permutations(n)
        e = identity(n)
        for u in group:
            r.check(compose(u, e) == u == compose(e, u), u=u)
            r.check(compose(u, inverse(u)) == e == compose(inverse(u), u), u=u)
            for v in group:
                uv = compose(u, v)
                for z in group:
                    r.check(compose(uv, z) == compose(u, compose(v, z)), u=u, v=v, z=z)


def standardization(r: VerifyReport, max_n: int) -> None:
    """Standardization agrees on positive words and is monotone on windows of comparable pairs."""
    for k in range(1, 5):
        for values in combinations(range(1, 8), k):
            for word in permutations(values):
                r.check(standardize(word) == standardize_plain(word), word=word)
    for n in range(2, min(max_n, 4) + 1):
        for u in all_signed_permutations(n):
            for v in weak.upset(u):
                for i in range(n):
                    for j in range(i + 2, n + 1):
                        r.check(
                            weak.leq(standardize(u[i:j]), standardize(v[i:j])),
                            u=u, v=v, window=(i + 1, j),
                        )


# --- embeddings -------------------------------------------------------------------------

def coset_profile(r: VerifyReport, max_n: int, samples: int = 10_000, seed: int = 11) -> None:
    """Statistic sets of (u x v) xi^{-1} from those of u, v, xi match the direct computation."""
    for n in range(2, min(max_n, 4) + 1):
        for p in range(1, n):
            q = n - p
            for xi in shuffle_perms(p, q):
                for u in all_signed_permutations(p):
                    for v in all_signed_permutations(q):
                        r.check(
                            embeddings.profile_via_formula(xi, u, v) == profile(embeddings.tau(xi, [u, v])),
                            xi=xi, u=u, v=v,
                        )
    if max_n >= 6:
        rng = random.Random(seed)
        for _ in range(samples):
            p = rng.randint(1, 5)
            q = 6 - p
            xi = rng.choice(shuffle_perms(p, q))
            u = _random_signed(rng, p)
            v = _random_signed(rng, q)
            r.check(
                embeddings.profile_via_formula(xi, u, v) == profile(embeddings.tau(xi, [u, v])),
                xi=xi, u=u, v=v,
            )
    else:
        r.skipped.append("random size-6 cases need --max-n 6")


def _random_signed(rng: random.Random, n: int) -> SignedPermutation:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return SignedPermutation([a if rng.random() < 0.5 else -a for a in values])


REFERENCE_COMPONENTS = {
    ((2, 1), (frozenset(),)): ("1,2,3", "-1,-2,3"),
    ((2, 1), (frozenset({1}),)): ("1,2,-3", "-1,-2,-3"),
    ((1, 2), (frozenset(),)): ("1,2,3", "-1,3,2"),
    ((1, 2), (frozenset({1}),)): ("1,-2,3", "-1,-3,2"),
    ((1, 2), (frozenset({2}),)): ("1,3,-2", "-1,2,-3"),
    ((1, 2), (frozenset({1, 2}),)): ("1,-3,-2", "-1,-2,-3"),
}

REFERENCE_IMAGES = {
    ("1,3,2", (2, 1), frozenset()): ("1,3,2", "-1,3,-2"),
    ("2,3,1", (2, 1), frozenset()): ("3,1,2", "3,-1,-2"),
    ("1,3,2", (2, 1), frozenset({1})): ("1,-3,2", "-1,-3,-2"),
    ("2,3,1", (2, 1), frozenset({1})): ("-3,1,2", "-3,-1,-2"),
    ("2,1,3", (1, 2), frozenset()): ("2,1,3", "3,-1,2"),
    ("3,1,2", (1, 2), frozenset()): ("2,3,1", "3,2,-1"),
    ("2,1,3", (1, 2), frozenset({1})): ("-2,1,3", "-3,-1,2"),
    ("3,1,2", (1, 2), frozenset({1})): ("-2,3,1", "-3,2,-1"),
    ("2,1,3", (1, 2), frozenset({2})): ("3,1,-2", "2,-1,-3"),
    ("3,1,2", (1, 2), frozenset({2})): ("3,-2,1", "2,-3,-1"),
    ("2,1,3", (1, 2), frozenset({1, 2})): ("-3,1,-2", "-2,-1,-3"),
    ("3,1,2", (1, 2), frozenset({1, 2})): ("-3,-2,1", "-2,-3,-1"),
}


def _image_bounds(xi: SignedPermutation, sig) -> tuple[SignedPermutation, SignedPermutation]:
    image = embeddings.component_members(sig, xi)
    return min(image, key=length), max(image, key=length)


def component_examples(r: VerifyReport, max_n: int) -> None:
    """The rank-3 cover graph, the components of B2 x B1 and B1 x B2, and their twelve shuffle images."""
    g = weak.build_cover_graph(3)
    r.check(len(g) == 48, what="vertices", got=len(g))
    r.check(g.edge_count == 72, what="edges", got=g.edge_count)
    r.check(g.height == 9, what="height", got=g.height)
    for (blocks, negs), (lo, hi) in REFERENCE_COMPONENTS.items():
        sig = embeddings.ComponentSignature(blocks, negs)
        got = embeddings.component_interval(sig)
        members = set(embeddings.component_members(sig))
        r.check(
            got == (parse(lo), parse(hi)) and members == weak.interval(parse(lo), parse(hi)),
            component=str(sig), expected=f"[{lo}; {hi}]", got=got,
        )
    for (xi, blocks, L), (lo, hi) in REFERENCE_IMAGES.items():
        sig = embeddings.ComponentSignature(blocks, (L,))
        x = parse(xi)
        got = _image_bounds(x, sig)
        r.check(
            got == (parse(lo), parse(hi)) and embeddings.image_is_interval(sig, x),
            xi=xi, component=str(sig), expected=f"[{lo}; {hi}]", got=got,
        )
    u, v = parse("1,3,2"), parse("1,3,-2")
    r.check(weak.leq(u, v) and length(v) - length(u) == 3, what="132 < 13-2 with gap 3")
    r.check(embeddings.gap_check(1, 2) == 3, what="least cross-component gap at (1,2)")


def component_partition(r: VerifyReport, max_n: int) -> None:
    """Shuffle images of components tile B_n; each is an interval; distinct components sit at distance >= 3."""
    for n in range(2, min(max_n, 4) + 1):
        for blocks in _compositions(n):
            r.check(embeddings.partition_check(*blocks), blocks=blocks, what="partition")
            gap = embeddings.gap_check(*blocks)
            r.check(gap is not None and gap >= 3, blocks=blocks, what="gap", got=gap)
            for sig in embeddings.signatures(blocks):
                r.check(embeddings.component_isomorphism_check(sig), component=str(sig), what="isomorphism")
                for xi in shuffle_perms(*blocks):
                    r.check(embeddings.image_is_interval(sig, xi), component=str(sig), xi=xi)


def component_embedding(r: VerifyReport, max_n: int) -> None:
    """tau_xi is a convex lattice embedding on each component; interval products; shuffle factorization."""
    for n in range(2, min(max_n, 4) + 1):
        for p in range(1, n):
            q = n - p
            for sig in embeddings.signatures((p, q)):
                for xi in shuffle_perms(p, q):
                    rep = embeddings.component_embedding_report(xi, sig)
                    r.check(bool(rep), component=str(sig), xi=xi, report=rep)
    for n in range(2, min(max_n, 4) + 1):
        for p in range(1, n):
            r.check(embeddings.interval_product_check(p, n - p), p=p, q=n - p)
    for n in range(2, 7):
        for parts in _compositions(n):
            r.check(embeddings.shuffle_bijection_check(parts[:-1], parts[-1]), blocks=parts)


# --- Hopf algebra -----------------------------------------------------------------------

def fundamental_examples(r: VerifyReport, max_n: int) -> None:
    """A product and a coproduct in the fundamental basis, term for term."""
    P = parse
    got = hsym.F(P("1,-2")) * hsym.F(P("-2,1"))
    expected = hsym.FormalSum("F", {P(w): 1 for w in (
        "1,-2,-4,3", "1,-4,-2,3", "1,-4,3,-2", "-4,1,-2,3", "-4,1,3,-2", "-4,3,1,-2")})
    r.check(got == expected, expected=expected, got=got)
    got_c = hsym.f_coproduct(hsym.F(P("1,-4,-2,3")))
    expected_c = hsym.TensorSum("F", {(P(a), P(b)): 1 for a, b in (
        ("", "1,-4,-2,3"), ("1", "-3,-1,2"), ("1,-2", "-1,2"), ("1,-3,-2", "1"), ("1,-4,-2,3", ""))})
    r.check(got_c == expected_c, expected=expected_c, got=got_c)
    got_u = hsym.F(P("1,2")) * hsym.F(P("2,1"))
    expected_u = hsym.FormalSum("F", {P(w): 1 for w in (
        "1,2,4,3", "1,4,2,3", "1,4,3,2", "4,1,2,3", "4,1,3,2", "4,3,1,2")})
    r.check(got_u == expected_u, expected=expected_u, got=got_u)


def _fs(basis: str, terms: dict) -> hsym.FormalSum:
    return hsym.FormalSum(basis, {parse(w): c for w, c in terms.items()})


def _ts(basis: str, terms: dict) -> hsym.TensorSum:
    return hsym.TensorSum(basis, {(parse(a), parse(b)): c for (a, b), c in terms.items()})


def monomial_examples(r: VerifyReport, max_n: int) -> None:
    """Monomial expansions, products and coproducts with their negative terms, up to grade 6."""
    P = parse
    cases = [
        (hsym.to_fundamental(hsym.M(P("2,3,1"))),
         _fs("F", {"2,3,1": 1, "3,2,1": -1, "2,3,-1": -1, "3,2,-1": 1})),
        (hsym.to_fundamental(hsym.M(P("1,2,-3"))),
         _fs("F", {"1,2,-3": 1, "2,1,-3": -1, "-1,2,-3": -1, "-1,-2,-3": 1})),
        (hsym.to_fundamental(hsym.M(P("1,-3,2"))),
         _fs("F", {"1,-3,2": 1, "2,-3,1": -1, "-1,-3,2": -1, "-1,-3,-2": 1})),
        (hsym.m_coproduct(hsym.M(P("1,2,-3"))),
         _ts("M", {("", "1,2,-3"): 1, ("1,2", "-1"): 1, ("-1", "1,-2"): -1, ("1,2,-3", ""): 1})),
        (hsym.m_coproduct(hsym.M(P("1,-3,2"))),
         _ts("M", {("", "1,-3,2"): 1, ("-1", "-2,1"): -1, ("-1,-2", "1"): -1, ("1,-3,2", ""): 1})),
        (hsym.M(P("1,2")) * hsym.M(P("1")),
         _fs("M", {"1,2,3": 1, "1,3,2": 2, "1,3,-2": 1, "2,3,1": 1, "2,3,-1": 1, "3,1,2": 1,
                   "1,-3,2": -1, "-3,1,2": -1})),
        (hsym.M(P("-1,2")) * hsym.M(P("1")),
         _fs("M", {"-1,2,3": 1, "-1,3,2": 2, "-1,3,-2": 1, "-2,3,-1": 1, "-2,3,1": 1, "3,-1,2": 1,
                   "-1,-3,2": -1, "-3,-1,2": -1})),
        (hsym.M(P("1")) * hsym.M(P("-2,-1")),
         _fs("M", {"1,-3,-2": 1, "-3,1,-2": 1, "-3,-2,1": 1})),
        (hsym.m_coproduct(hsym.M(P("-3,-1,-2,-4,-6,-5"))),
         _ts("M", {("", "-3,-1,-2,-4,-6,-5"): 1, ("-3,-1,-2", "-1,-3,-2"): 1,
                   ("-3,-1,-2,-4", "-2,-1"): 1, ("-3,-1,-2,-4,-6,-5", ""): 1})),
    ]
    for k, (got, expected) in enumerate(cases):
        r.check(got == expected, case=k, expected=expected, got=got)


def basis_change(r: VerifyReport, max_n: int) -> None:
    """F to M and M to F are mutually inverse and unitriangular along the weak order."""
    for n in range(0, min(max_n, 4) + 1):
        for u in all_signed_permutations(n):
            fm = hsym.to_monomial(hsym.F(u))
            mf = hsym.to_fundamental(hsym.M(u))
            tri = fm.coefficient(u) == 1 == mf.coefficient(u) and all(
                weak.leq(u, v) for v in (*fm.terms, *mf.terms)
            )
            r.check(tri, u=u, what="unitriangular")
            r.check(
                hsym.to_fundamental(fm) == hsym.F(u) and hsym.to_monomial(mf) == hsym.M(u),
                u=u, what="round trip",
            )


def global_descent_coproduct(r: VerifyReport, max_n: int) -> None:
    """On all-negative u the coproduct of M_u splits at 0, n and the global descents."""
    for n in range(0, min(max_n, 4) + 1):
        for perm in all_permutations(n):
            u = SignedPermutation([-a for a in perm])
            got = hsym.m_coproduct(hsym.M(u))
            expected = hsym.gdes_coproduct(u)
            r.check(got == expected, u=u, expected=expected, got=got)


def monomial_product_formulas(r: VerifyReport, max_n: int) -> None:
    """Shuffle-set counts b (and c when v is all negative) give the monomial product."""
    for n in range(2, min(max_n, 4) + 1):
        for p in range(1, n):
            q = n - p
            for u in all_signed_permutations(p):
                for v in all_signed_permutations(q):
                    direct = hsym.M(u) * hsym.M(v)
                    got_b = hsym.m_product_b_formula(u, v)
                    r.check(got_b == direct, u=u, v=v, formula="b", expected=direct, got=got_b)
                    if all(a < 0 for a in v):
                        got_c = hsym.m_product_c_formula(u, v)
                        r.check(
                            got_c == direct and all(c > 0 for c in got_c.terms.values()),
                            u=u, v=v, formula="c", expected=direct, got=got_c,
                        )


def hopf_axioms(r: VerifyReport, max_n: int) -> None:
    """Associativity, coassociativity and compatibility of product and coproduct."""
    report = hsym.hopf_axiom_suite(min(max_n, 4))
    r.attempted += report.checks
    r.passed += report.checks - report.failed
    if report.failures and r.counterexample is None:
        r.counterexample = {"first": report.failures[0]}


def unsigned_subalgebra(r: VerifyReport, max_n: int) -> None:
    """Unsigned permutations span a sub-bialgebra; dropping signs respects product and coproduct."""
    top = min(max_n, 3)
    for p in range(0, top + 1):
        for u in all_permutations(p):
            r.check(hsym.is_unsigned_tensor(hsym.f_coproduct(hsym.F(u))), u=u, what="coproduct closed")
            for q in range(0, top - p + 1):
                for v in all_permutations(q):
                    r.check(hsym.is_unsigned(hsym.F(u) * hsym.F(v)), u=u, v=v, what="product closed")
    for p in range(0, top + 1):
        for u in all_signed_permutations(p):
            fu = hsym.forget_signs_sum(hsym.F(u))
            dropped = hsym.TensorSum("F", {
                (forget_signs(a), forget_signs(b)): c
                for (a, b), c in hsym.f_coproduct(hsym.F(u)).terms.items()
            })
            r.check(dropped == hsym.f_coproduct(fu), u=u, what="coproduct intertwined")
            for q in range(0, top - p + 1):
                for v in all_signed_permutations(q):
                    lhs = hsym.forget_signs_sum(hsym.F(u) * hsym.F(v))
                    rhs = fu * hsym.forget_signs_sum(hsym.F(v))
                    r.check(lhs == rhs, u=u, v=v, what="product intertwined")


# --- type-B quasisymmetric functions ---------------------------------------------------------

def bq_realization(r: VerifyReport, max_n: int, m: int = 9) -> None:
    """F_alpha is the sum of M_beta over refinements, and the alternating sum inverts it, as polynomials."""
    for n in range(0, min(max_n, 4) + 1):
        for alpha in bqsym.pseudo_compositions(n):
            r.check(bqsym.pc_from_subset(bqsym.pc_to_subset(alpha), n) == alpha, alpha=alpha, what="round trip")
            f = bqsym.BQ_F(alpha)
            r.check(
                bqsym.realize(f, m) == bqsym.realize(bqsym.bq_to_monomial(f), m),
                alpha=alpha, what="F as sum of M",
            )
            mm = bqsym.BQ_M(alpha)
            r.check(
                bqsym.realize(mm, m) == bqsym.realize(bqsym.bq_to_fundamental(mm), m),
                alpha=alpha, what="M as alternating sum of F",
            )


def descent_map_product(r: VerifyReport, max_n: int) -> None:
    """The descent map sends products of F_u to products of F_alpha."""
    for n in range(0, min(max_n, 4) + 1):
        for p in range(0, n + 1):
            for u in all_signed_permutations(p):
                du = bqsym.descent_map(hsym.F(u))
                for v in all_signed_permutations(n - p):
                    lhs = bqsym.descent_map(hsym.F(u) * hsym.F(v))
                    rhs = bqsym.bq_product(du, bqsym.descent_map(hsym.F(v)))
                    r.check(lhs == rhs, u=u, v=v, expected=lhs, got=rhs)


def descent_map_monomial(r: VerifyReport, max_n: int) -> None:
    """M_w maps to M_Des(w) exactly when w tops its descent class, else to zero; Rota's identity."""
    for n in range(0, min(max_n, 4) + 1):
        for w in all_signed_permutations(n):
            got = bqsym.descent_map(hsym.M(w))
            expected = bqsym.descent_map_monomial(w)
            r.check(got == expected, w=w, expected=expected, got=got)
        r.check(bqsym.rota_check(n), n=n, what="rota identity")


# --- registry -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Callable[[VerifyReport, int], None]


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("order-criterion", order_criterion.__doc__, order_criterion),
        Suite("length-and-reflections", length_and_reflections.__doc__, length_and_reflections),
        Suite("cover-cases", cover_cases.__doc__, cover_cases),
        Suite("lattice-axioms", lattice_axioms.__doc__, lattice_axioms),
        Suite("mobius-recursion", mobius_recursion.__doc__, mobius_recursion),
        Suite("descent-classes", descent_classes.__doc__, descent_classes),
        Suite("group-axioms", group_axioms.__doc__, group_axioms),
        Suite("standardization", standardization.__doc__, standardization),
        Suite("coset-profile", coset_profile.__doc__, coset_profile),
        Suite("component-examples", component_examples.__doc__, component_examples),
        Suite("component-partition", component_partition.__doc__, component_partition),
        Suite("component-embedding", component_embedding.__doc__, component_embedding),
        Suite("fundamental-examples", fundamental_examples.__doc__, fundamental_examples),
        Suite("monomial-examples", monomial_examples.__doc__, monomial_examples),
        Suite("basis-change", basis_change.__doc__, basis_change),
        Suite("global-descent-coproduct", global_descent_coproduct.__doc__, global_descent_coproduct),
        Suite("monomial-product-formulas", monomial_product_formulas.__doc__, monomial_product_formulas),
        Suite("hopf-axioms", hopf_axioms.__doc__, hopf_axioms),
        Suite("unsigned-subalgebra", unsigned_subalgebra.__doc__, unsigned_subalgebra),
        Suite("bq-realization", bq_realization.__doc__, bq_realization),
        Suite("descent-map-product", descent_map_product.__doc__, descent_map_product),
        Suite("descent-map-monomial", descent_map_monomial.__doc__, descent_map_monomial),
    )
}


def run_suite(name: str, max_n: int = 4) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; see `verify --list`")
    report = VerifyReport(name)
    start = time.perf_counter()
    with rank_cap(max(max_n, 6)):
        SUITES[name].run(report, max_n)
    report.duration = time.perf_counter() - start
    return report


def run_all(max_n: int = 4) -> list[VerifyReport]:
    return [run_suite(name, max_n) for name in SUITES]
