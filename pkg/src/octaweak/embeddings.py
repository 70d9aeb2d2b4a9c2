"""Shifted products of hyperoctahedral groups and the coset maps into B_n.

``tau(xi, [u1, ..., uk])`` is ``(u1 x ... x uk) * xi^{-1}`` for a shuffle ``xi``:
it places the entries of the shifted product at the positions listed by ``xi``.
Components of a shifted product are the fibres of the negative-index sets
of the factors after the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from . import weak
from .perm import (
    OrderProfile,
    Shuffle,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    check_rank,
    compose,
    identity,
    inverse,
    is_shuffle,
    length,
    longest,
    pairs_to_bits,
    indices_to_bits,
    profile,
    render,
    shifted_product,
    shuffle_perms,
    standardize,
)


@dataclass(frozen=True)
class CosetFactorization:
    """``w == xi * (left x right)`` with ``xi`` a ``(p, n-p)``-shuffle."""

    xi: Shuffle
    left: SignedPermutation
    right: SignedPermutation

    def assemble(self) -> SignedPermutation:
        return compose(self.xi.perm, shifted_product(self.left, self.right))


def factorize(w: SignedPermutation, p: int) -> CosetFactorization:
    """Split ``w`` against the left cosets of ``B_p x B_{n-p}``.

    The shuffle lists the absolute values of the first ``p`` entries in
    increasing order, then those of the remaining entries.
    """
    n = len(w)
    if not 0 <= p <= n:
        raise ValueError(f"split point {p} outside [0, {n}]")
    head = sorted(abs(a) for a in w[:p])
    tail = sorted(abs(a) for a in w[p:])
    xi = Shuffle(SignedPermutation.trusted(head + tail), (p, n - p))
    return CosetFactorization(xi, standardize(w[:p]), standardize(w[p:]))


def _xi_perm(xi) -> SignedPermutation:
    return xi.perm if isinstance(xi, Shuffle) else SignedPermutation(xi)


def tau(xi, factors: Sequence[SignedPermutation]) -> SignedPermutation:
    """``(u1 x ... x uk) * xi^{-1}``; ``xi`` must be a shuffle for the factor sizes."""
    x = _xi_perm(xi)
    sizes = tuple(len(f) for f in factors)
    if sum(sizes) != len(x):
        raise ValueError(f"factor sizes {sizes} do not add up to the size of {render(x)}")
    if not is_shuffle(x, sizes):
        raise ValueError(f"{render(x)} is not a shuffle for blocks {sizes}")
    return compose(shifted_product(*factors), inverse(x))


def tau_preimage(w: SignedPermutation, blocks: Sequence[int]) -> tuple[SignedPermutation, list[SignedPermutation]]:
    """The unique ``(xi, factors)`` with ``tau(xi, factors) == w``."""
    if sum(blocks) != len(w):
        raise ValueError(f"blocks {tuple(blocks)} do not add up to {len(w)}")
    xi: list[int] = []
    factors = []
    offset = 0
    for b in blocks:
        positions = [k + 1 for k, a in enumerate(w) if offset < abs(a) <= offset + b]
        xi.extend(positions)
        factors.append(SignedPermutation.trusted(
            (w[k - 1] - offset) if w[k - 1] > 0 else (w[k - 1] + offset) for k in positions
        ))
        offset += b
    return SignedPermutation.trusted(xi), factors


def profile_via_formula(xi, u: SignedPermutation, v: SignedPermutation) -> OrderProfile:
    """Statistic sets of ``(u x v) * xi^{-1}`` computed from those of ``u``, ``v`` and ``xi`` alone."""
    x = _xi_perm(xi)
    p, q = len(u), len(v)
    n = p + q
    if len(x) != n or not is_shuffle(x, (p, q)):
        raise ValueError(f"{render(x)} is not a ({p},{q})-shuffle")
    pu, pv = profile(u), profile(v)
    nega_v = pv.nega
    xi_inv = profile(x).inv

    def image(r: int, s: int) -> tuple[int, int]:
        a, b = x[r - 1], x[s - 1]
        return (a, b) if a < b else (b, a)

    nega = {x[r - 1] for r in pu.nega} | {x[p + r - 1] for r in nega_v}
    inv = {image(r, s) for r, s in pu.inv}
    inv |= {image(p + r, p + s) for r, s in pv.inv}
    nsp = {image(r, s) for r, s in pu.nsp}
    nsp |= {image(p + r, p + s) for r, s in pv.nsp}
    for r in range(1, p + 1):
        for s_local in range(1, q + 1):
            s = p + s_local
            if (r, s) not in xi_inv:
                # r before s and the shuffle keeps their order
                if s_local in nega_v:
                    inv.add(image(r, s))
                    nsp.add(image(r, s))
            elif s_local in nega_v:
                nsp.add(image(r, s))
            else:
                inv.add(image(r, s))
    return OrderProfile(n, pairs_to_bits(inv, n), indices_to_bits(nega), pairs_to_bits(nsp, n))


def componentwise_order(us: Sequence[SignedPermutation], vs: Sequence[SignedPermutation]) -> tuple[bool, int | None]:
    """Compare ``us[0] x us[1] x ...`` with ``vs[0] x vs[1] x ...`` factor by factor.

    Returns ``(is_leq, length_gap)``; the gap is computed from the factors
    (lengths plus twice the preceding size times each new negative) and is
    ``None`` when the products are not comparable in that direction.
    """
    if [len(a) for a in us] != [len(b) for b in vs]:
        raise ValueError("factor sizes differ")
    if not all(weak.leq(a, b) for a, b in zip(us, vs)):
        return False, None
    gap = 0
    before = 0
    for a, b in zip(us, vs):
        gap += length(b) - length(a)
        gap += 2 * before * (sum(1 for x in b if x < 0) - sum(1 for x in a if x < 0))
        before += len(a)
    return True, gap


# --- components -----------------------------------------------------------------

@dataclass(frozen=True)
class ComponentSignature:
    """Block sizes ``(p1, ..., pk)`` and negative-index sets ``L2, ..., Lk``."""

    blocks: tuple[int, ...]
    negatives: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "negatives", tuple(frozenset(L) for L in self.negatives))
        if len(self.blocks) < 2:
            raise ValueError("a component needs at least two blocks")
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"block sizes must be positive: {self.blocks}")
        if len(self.negatives) != len(self.blocks) - 1:
            raise ValueError("need one negative-index set per block after the first")
        for p, L in zip(self.blocks[1:], self.negatives):
            if not L <= set(range(1, p + 1)):
                raise ValueError(f"{sorted(L)} is not a subset of [1, {p}]")

    @property
    def n(self) -> int:
        return sum(self.blocks)

    def __str__(self) -> str:
        parts = [f"B{self.blocks[0]}"]
        for p, L in zip(self.blocks[1:], self.negatives):
            parts.append(f"B{p},{{{','.join(map(str, sorted(L)))}}}")
        return " x ".join(parts)


def signatures(blocks: Sequence[int]) -> list[ComponentSignature]:
    blocks = tuple(blocks)
    choices = [
        [frozenset(c) for k in range(p + 1) for c in combinations(range(1, p + 1), k)]
        for p in blocks[1:]
    ]
    return [ComponentSignature(blocks, combo) for combo in product(*choices)]


def negative_block_bounds(p: int, negatives: Iterable[int]) -> tuple[SignedPermutation, SignedPermutation]:
    """Bottom and top of ``{v in B_p : Nega(v) = L}``."""
    L = sorted(negatives)
    rest = [i for i in range(1, p + 1) if i not in negatives]
    r = len(L)
    low = [0] * p
    high = [0] * p
    for k, pos in enumerate(L):
        low[pos - 1] = -(r - k)
        high[pos - 1] = -(p - r + 1 + k)
    for k, pos in enumerate(rest):
        low[pos - 1] = r + 1 + k
        high[pos - 1] = p - r - k
    return SignedPermutation(low), SignedPermutation(high)


def component_interval(sig: ComponentSignature) -> tuple[SignedPermutation, SignedPermutation]:
    lows = [identity(sig.blocks[0])]
    highs = [longest(sig.blocks[0])]
    for p, L in zip(sig.blocks[1:], sig.negatives):
        lo, hi = negative_block_bounds(p, L)
        lows.append(lo)
        highs.append(hi)
    return shifted_product(*lows), shifted_product(*highs)


def component_factors(sig: ComponentSignature) -> list[list[SignedPermutation]]:
    """Per block, the admissible factors: all of B_{p1}, then ``B_{p,L}``."""
    out = [all_signed_permutations(sig.blocks[0])]
    for p, L in zip(sig.blocks[1:], sig.negatives):
        out.append([w for w in all_signed_permutations(p) if {i + 1 for i, a in enumerate(w) if a < 0} == L])
    return out


def component_members(sig: ComponentSignature, xi=None) -> list[SignedPermutation]:
    """The component (or its image under ``tau(xi, .)``), enumerated."""
    combos = product(*component_factors(sig))
    if xi is None:
        return [shifted_product(*c) for c in combos]
    return [tau(xi, list(c)) for c in combos]


def partition_check(*blocks: int, cap: int | None = None) -> bool:
    """Do the images of all components under all shuffles tile B_n exactly once?"""
    n = sum(blocks)
    check_rank(n, cap)
    seen: set[SignedPermutation] = set()
    total = 0
    for xi in shuffle_perms(*blocks):
        for sig in signatures(blocks):
            image = component_members(sig, xi)
            total += len(image)
            seen.update(image)
    universe = set(all_signed_permutations(n))
    return total == len(universe) and seen == universe


def image_is_interval(sig: ComponentSignature, xi) -> bool:
    """Is ``tau_xi`` of the component the interval between the images of its ends?"""
    lo, hi = component_interval(sig)
    lo_f, hi_f = tau_preimage(lo, sig.blocks)[1], tau_preimage(hi, sig.blocks)[1]
    return set(component_members(sig, xi)) == weak.interval(tau(xi, lo_f), tau(xi, hi_f))


def component_of(w: SignedPermutation, blocks: Sequence[int]) -> tuple[frozenset[int], ...]:
    """Signature key of an element of the unshuffled product: negatives of blocks 2..k."""
    out = []
    offset = blocks[0]
    for p in blocks[1:]:
        out.append(frozenset(i - offset for i in range(offset + 1, offset + p + 1) if w[i - 1] < 0))
        offset += p
    return tuple(out)


def gap_check(*blocks: int, cap: int | None = None) -> int | None:
    """Smallest length difference of comparable pairs lying in different components."""
    check_rank(sum(blocks), cap)
    members = [(w, component_of(w, blocks)) for sig in signatures(blocks) for w in component_members(sig)]
    best = None
    for w, cw in members:
        for x, cx in members:
            if cw != cx and w != x and weak.leq(w, x):
                gap = length(x) - length(w)
                best = gap if best is None else min(best, gap)
    return best


def gap_witness(*blocks: int) -> tuple[SignedPermutation, SignedPermutation] | None:
    """A pair attaining :func:`gap_check`, least in window order."""
    best = gap_check(*blocks)
    if best is None:
        return None
    members = sorted(w for sig in signatures(blocks) for w in component_members(sig))
    for w in members:
        for x in members:
            if component_of(w, blocks) != component_of(x, blocks) and weak.leq(w, x) and length(x) - length(w) == best:
                return w, x
    return None


# --- convex embeddings ----------------------------------------------------------------

@dataclass
class EmbeddingReport:
    injective: bool
    order_reflecting: bool
    convex: bool
    meets: bool | None = None
    joins: bool | None = None

    def __bool__(self) -> bool:
        return all(x is not False for x in (self.injective, self.order_reflecting, self.convex, self.meets, self.joins))


def embedding_report(
    domain: Sequence,
    f: Callable,
    domain_leq: Callable,
    domain_meet: Callable | None = None,
    domain_join: Callable | None = None,
) -> EmbeddingReport:
    """Check that ``f`` embeds the finite poset ``domain`` convexly into the weak order."""
    images = [f(a) for a in domain]
    injective = len(set(images)) == len(images)
    reflecting = all(
        domain_leq(a, b) == weak.leq(fa, fb)
        for a, fa in zip(domain, images)
        for b, fb in zip(domain, images)
    )
    image_set = set(images)
    convex = True
    for a, fa in zip(domain, images):
        for c, fc in zip(domain, images):
            if domain_leq(a, c) and not weak.interval(fa, fc) <= image_set:
                convex = False
                break
        if not convex:
            break
    report = EmbeddingReport(injective, reflecting, convex)
    if domain_meet is not None:
        report.meets = all(
            f(domain_meet(a, b)) == weak.meet(fa, fb)
            for a, fa in zip(domain, images)
            for b, fb in zip(domain, images)
        )
    if domain_join is not None:
        report.joins = all(
            f(domain_join(a, b)) == weak.join(fa, fb)
            for a, fa in zip(domain, images)
            for b, fb in zip(domain, images)
        )
    return report


def _product_leq(a, b) -> bool:
    return all(weak.leq(x, y) for x, y in zip(a, b))


def _product_meet(a, b):
    return tuple(weak.meet(x, y) for x, y in zip(a, b))


def _product_join(a, b):
    return tuple(weak.join(x, y) for x, y in zip(a, b))


def component_embedding_report(xi, sig: ComponentSignature) -> EmbeddingReport:
    """``tau_xi`` restricted to one component, with the component ordered factorwise."""
    domain = [tuple(c) for c in product(*component_factors(sig))]
    return embedding_report(
        domain, lambda a: tau(xi, list(a)), _product_leq, _product_meet, _product_join
    )


def interval_product_check(p: int, q: int) -> bool:
    """``[u,u'] x [v,v'] == [u x v, u' x v']`` whenever ``v, v'`` share their negative indices."""
    bp, bq = all_signed_permutations(p), all_signed_permutations(q)
    for u in bp:
        for u2 in weak.upset(u):
            left = weak.interval(u, u2)
            for v in bq:
                for v2 in weak.upset(v):
                    if profile(v).nega_bits != profile(v2).nega_bits:
                        continue
                    lhs = {shifted_product(a, b) for a in left for b in weak.interval(v, v2)}
                    if lhs != weak.interval(shifted_product(u, v), shifted_product(u2, v2)):
                        return False
    return True


def shuffle_bijection_check(blocks: Sequence[int], q: int) -> bool:
    """``(z, z') -> z * (z' x 1_q)`` maps ``Sh(p, q) x Sh(blocks)`` onto ``Sh(blocks, q)``."""
    p = sum(blocks)
    images = [
        compose(z, shifted_product(z2, identity(q)))
        for z in shuffle_perms(p, q)
        for z2 in shuffle_perms(*blocks)
    ]
    return len(set(images)) == len(images) and set(images) == set(shuffle_perms(*blocks, q))


def component_isomorphism_check(sig: ComponentSignature) -> bool:
    """``z -> z * min^{-1}`` maps the component order-isomorphically onto ``B_{p1} x S_{p2} x ...``."""
    lo, _ = component_interval(sig)
    lo_inv = inverse(lo)
    members = component_members(sig)
    images = [compose(z, lo_inv) for z in members]
    target = set(parabolic_subgroup(sig.blocks, "B"))
    if set(images) != target or len(images) != len(target):
        return False
    return all(
        weak.leq(a, b) == weak.leq(fa, fb)
        for a, fa in zip(members, images)
        for b, fb in zip(members, images)
    )


# --- parabolic embeddings (types A and B) -------------------------------------------

def parabolic_subgroup(blocks: Sequence[int], kind: str = "B") -> list[SignedPermutation]:
    """``B_{p1} x S_{p2} x ...`` (kind ``"B"``) or ``S_{p1} x S_{p2} x ...`` (kind ``"A"``)."""
    if kind not in ("A", "B"):
        raise ValueError(f"kind must be 'A' or 'B', not {kind!r}")
    if not blocks:
        return [identity(0)]
    first = all_signed_permutations(blocks[0]) if kind == "B" else all_permutations(blocks[0])
    rest = [all_permutations(p) for p in blocks[1:]]
    return [shifted_product(*c) for c in product(first, *rest)]


def is_minimal_coset_rep(xi: Sequence[int], blocks: Sequence[int], kind: str = "B") -> bool:
    """Window test for minimal left coset representatives of the parabolic subgroup."""
    if sum(blocks) != len(xi):
        return False
    if kind == "A":
        return is_shuffle(xi, blocks)
    if kind != "B":
        raise ValueError(f"kind must be 'A' or 'B', not {kind!r}")
    start = 0
    for k, b in enumerate(blocks):
        seg = list(xi[start:start + b])
        if k == 0 and b and seg[0] <= 0:
            return False
        if any(x >= y for x, y in zip(seg, seg[1:])):
            return False
        start += b
    return True


def minimal_coset_reps(blocks: Sequence[int], kind: str = "B", cap: int | None = None) -> list[SignedPermutation]:
    n = sum(blocks)
    check_rank(n, cap)
    pool = all_signed_permutations(n) if kind == "B" else all_permutations(n)
    return [w for w in pool if is_minimal_coset_rep(w, blocks, kind)]


def rho(xi: Sequence[int], factors: Sequence[SignedPermutation], kind: str = "B") -> SignedPermutation:
    """``(u1 x u2 x ...) * xi^{-1}`` on the parabolic subgroup; ``xi`` must be a minimal coset representative."""
    blocks = tuple(len(f) for f in factors)
    x = SignedPermutation(xi)
    if not is_minimal_coset_rep(x, blocks, kind):
        raise ValueError(f"{render(x)} is not a minimal coset representative for blocks {blocks} (type {kind})")
    for k, f in enumerate(factors):
        if (k > 0 or kind == "A") and any(a < 0 for a in f):
            raise ValueError(f"factor {render(f)} must be an unsigned permutation")
    return compose(shifted_product(*factors), inverse(x))


def rho_report(xi: Sequence[int], blocks: Sequence[int], kind: str = "B") -> EmbeddingReport:
    """Convex-embedding check of ``u -> u * xi^{-1}`` on the parabolic subgroup, for any ``xi``."""
    x = SignedPermutation(xi)
    x_inv = inverse(x)
    domain = parabolic_subgroup(blocks, kind)
    return embedding_report(domain, lambda u: compose(u, x_inv), weak.leq)
