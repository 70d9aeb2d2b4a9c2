"""The thirteen acceptance criteria, each run through the verify suites at its time bound.

Every criterion is an exact identity: a criterion passes when all of its
suites report zero failed checks and the wall time stays under the bound.
"""

import time

import pytest

from octaweak import weak
from octaweak.verify import run_suite

# (number, label, suites, max_n, seconds)
CRITERIA = [
    (1, "order criterion equals cover-graph reachability, n <= 4", ["order-criterion"], 4, 30),
    (2, "reflection sets: size equals length, three families, B4", ["length-and-reflections"], 4, 5),
    (3, "B3 cover graph and the twelve shuffle images of components", ["component-examples"], 4, 1),
    (4, "fundamental-basis product and coproduct examples", ["fundamental-examples"], 4, 1),
    (5, "monomial-basis expansions, products, coproducts up to grade 6", ["monomial-examples"], 4, 10),
    (6, "monomial coproduct splits at global descents, all-negative u, n <= 4",
     ["global-descent-coproduct"], 4, 60),
    (7, "b- and c-formulas for the monomial product, p + q <= 4", ["monomial-product-formulas"], 4, 120),
    (8, "components tile B_n, are intervals, and sit at distance >= 3",
     ["component-partition", "component-examples"], 4, 30),
    (9, "convex lattice embeddings of components and interval products, p + q <= 4",
     ["component-embedding"], 4, 60),
    (10, "statistic sets of shuffled products, exhaustive p + q <= 4 and 10^4 at size 6",
     ["coset-profile"], 6, 60),
    (11, "Galois connection, Rota identity, descent map on the monomial basis, n <= 4",
     ["descent-classes", "descent-map-monomial"], 4, 60),
    (12, "descent map is multiplicative into the truncated polynomial ring, p + q <= 4",
     ["descent-map-product"], 4, 120),
    (13, "associativity, coassociativity and compatibility, total grade <= 4", ["hopf-axioms"], 4, 120),
]

RESULTS: list[str] = []


@pytest.fixture(autouse=True)
def _cold_caches():
    # time each criterion from scratch rather than on the back of earlier tests
    weak._join.cache_clear()
    weak._meet.cache_clear()
    yield


@pytest.mark.parametrize(
    "number,label,suites,max_n,bound", CRITERIA, ids=[f"criterion-{c[0]:02d}" for c in CRITERIA]
)
def test_criterion(number, label, suites, max_n, bound):
    start = time.perf_counter()
    reports = [run_suite(name, max_n) for name in suites]
    elapsed = time.perf_counter() - start
    attempted = sum(r.attempted for r in reports)
    passed = sum(r.passed for r in reports)
    skipped = [s for r in reports for s in r.skipped]
    exact = all(r.ok for r in reports) and attempted > 0 and not skipped
    ok = exact and elapsed < bound
    verdict = "PASS" if ok else "FAIL"
    line = (
        f"criterion {number:2d}: {verdict}  {label}  "
        f"[{passed}/{attempted} checks, {elapsed:.2f}s < {bound}s]"
    )
    RESULTS.append(line)
    print(line)
    counterexamples = [r.counterexample for r in reports if r.counterexample]
    assert exact, f"{label}: {passed}/{attempted}; skipped={skipped}; first counterexample={counterexamples[:1]}"
    assert elapsed < bound, f"{label}: took {elapsed:.2f}s, bound {bound}s"
