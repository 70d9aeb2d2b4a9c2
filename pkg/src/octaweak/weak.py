"""Left weak order on B_n.

The fast path compares statistic bitsets. :class:`CoverGraph` is the
brute-force substrate: it is built from generator moves and breadth-first
distances only, so reachability in it is an independent oracle for the order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

from .perm import (
    Reflection,
    SignedPermutation,
    all_signed_permutations,
    check_rank,
    compose,
    descents,
    generator,
    identity,
    inverse,
    length,
    profile,
    render,
)


def leq(u: SignedPermutation, v: SignedPermutation) -> bool:
    """``u <= v`` iff Inv, Nega and Nsp of ``u`` are contained in those of ``v``."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} vs {render(v)}")
    return profile(u) <= profile(v)


def left_multiply(i: int, w: SignedPermutation) -> SignedPermutation:
    """``s_i * w``: relabel the values ``i <-> i+1`` (or ``1 <-> -1`` for ``i = 0``)."""
    if i == 0:
        return SignedPermutation.trusted(-a if abs(a) == 1 else a for a in w)
    out = []
    for a in w:
        b = abs(a)
        if b == i:
            out.append(a + 1 if a > 0 else a - 1)
        elif b == i + 1:
            out.append(a - 1 if a > 0 else a + 1)
        else:
            out.append(a)
    return SignedPermutation.trusted(out)


def _signed_position(w_inv: SignedPermutation, value: int) -> int:
    # u^{-1}(k) with u^{-1}(0) = 0 and u^{-1}(-k) = -u^{-1}(k)
    return w_inv(value) if value else 0


def _goes_up(w_inv: SignedPermutation, i: int) -> bool:
    return _signed_position(w_inv, i) < _signed_position(w_inv, i + 1)


@lru_cache(maxsize=1 << 16)
def covers(u: SignedPermutation) -> frozenset[SignedPermutation]:
    """Upper covers ``s_i * u`` for the ``i`` with ``u^{-1}(i) < u^{-1}(i+1)``."""
    u_inv = inverse(u)
    return frozenset(left_multiply(i, u) for i in range(len(u)) if _goes_up(u_inv, i))


@lru_cache(maxsize=1 << 16)
def lower_covers(u: SignedPermutation) -> frozenset[SignedPermutation]:
    u_inv = inverse(u)
    return frozenset(left_multiply(i, u) for i in range(len(u)) if not _goes_up(u_inv, i))


def _closure(start: SignedPermutation, step) -> frozenset[SignedPermutation]:
    seen = {start}
    queue = deque([start])
    while queue:
        for y in step(queue.popleft()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@lru_cache(maxsize=1 << 14)
def upset(u: SignedPermutation) -> frozenset[SignedPermutation]:
    """``{v : u <= v}``, by walking upper covers."""
    return _closure(u, covers)


@lru_cache(maxsize=1 << 14)
def downset(u: SignedPermutation) -> frozenset[SignedPermutation]:
    return _closure(u, lower_covers)


# --- cover graph oracle ---------------------------------------------------------

class CoverGraph:
    """Hasse diagram of B_n under the weak order, densely indexed.

    Vertices are sorted by (length, window). ``up[k]`` lists ``(target, i)``
    for each cover ``elements[k] -> s_i * elements[k]``. Treat as immutable.
    """

    def __init__(self, n: int, elements, up, lengths):
        self.n = n
        self.elements: tuple[SignedPermutation, ...] = tuple(elements)
        self.index: dict[SignedPermutation, int] = {w: k for k, w in enumerate(self.elements)}
        self.up: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(e) for e in up)
        self.lengths: tuple[int, ...] = tuple(lengths)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def height(self) -> int:
        return max(self.lengths)

    @property
    def edge_count(self) -> int:
        return sum(len(e) for e in self.up)

    def edges(self) -> list[tuple[SignedPermutation, SignedPermutation, int]]:
        return [(self.elements[a], self.elements[b], i) for a, out in enumerate(self.up) for b, i in out]

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """``reach[k]`` is a bitmask over vertex indices of everything above ``elements[k]``."""
        masks = [0] * len(self.elements)
        for k in range(len(self.elements) - 1, -1, -1):
            m = 1 << k
            for b, _ in self.up[k]:
                m |= masks[b]
            masks[k] = m
        return tuple(masks)

    def reachable(self, u: SignedPermutation, v: SignedPermutation) -> bool:
        return bool(self.reach[self.index[u]] >> self.index[v] & 1)

    def members(self, mask: int) -> list[SignedPermutation]:
        return [self.elements[k] for k in range(len(self.elements)) if mask >> k & 1]

    def to_dot(self) -> str:
        lines = [f'digraph "B{self.n}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
        by_length: dict[int, list[int]] = {}
        for k, ell in enumerate(self.lengths):
            by_length.setdefault(ell, []).append(k)
        for ell in sorted(by_length):
            names = " ".join(f'"{render(self.elements[k])}";' for k in by_length[ell])
            lines.append(f"  {{ rank=same; {names} }}")
        for a, out in enumerate(self.up):
            for b, i in out:
                lines.append(
                    f'  "{render(self.elements[a])}" -> "{render(self.elements[b])}" [label="{i}"];'
                )
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _cover_graph(n: int) -> CoverGraph:
    gens = [generator(i, n) for i in range(n)]
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            x = compose(s, w)
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    elements = sorted(dist, key=lambda w: (dist[w], w))
    index = {w: k for k, w in enumerate(elements)}
    up = []
    for w in elements:
        out = []
        for i, s in enumerate(gens):
            x = compose(s, w)
            if dist[x] == dist[w] + 1:
                out.append((index[x], i))
        up.append(sorted(out))
    return CoverGraph(n, elements, up, [dist[w] for w in elements])


def build_cover_graph(n: int, cap: int | None = None) -> CoverGraph:
    """Cover graph of B_n from breadth-first Coxeter distances; cached per rank."""
    check_rank(n, cap)
    return _cover_graph(n)


# --- lattice operations -----------------------------------------------------------

def join(u: SignedPermutation, v: SignedPermutation, cap: int | None = None) -> SignedPermutation:
    """Least upper bound: the unique minimal-length common element of the two up-sets."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} vs {render(v)}")
    check_rank(len(u), cap)
    return _join(u, v)


@lru_cache(maxsize=1 << 16)
def _join(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    return _unique_extreme(upset(u) & upset(v), min, "join", u, v)


def meet(u: SignedPermutation, v: SignedPermutation, cap: int | None = None) -> SignedPermutation:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} vs {render(v)}")
    check_rank(len(u), cap)
    return _meet(u, v)


@lru_cache(maxsize=1 << 16)
def _meet(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    return _unique_extreme(downset(u) & downset(v), max, "meet", u, v)


def _unique_extreme(common, pick, what, u, v) -> SignedPermutation:
    best = pick(length(w) for w in common)
    found = [w for w in common if length(w) == best]
    if len(found) != 1:
        raise ArithmeticError(f"{what} of {render(u)} and {render(v)} is not unique: {found}")
    return found[0]


def interval(u: SignedPermutation, v: SignedPermutation) -> frozenset[SignedPermutation]:
    """``{z : u <= z <= v}``; empty when ``u`` is not below ``v``."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} vs {render(v)}")
    if not leq(u, v):
        return frozenset()
    pv = profile(v)
    return _closure(u, lambda z: (y for y in covers(z) if profile(y) <= pv))


@lru_cache(maxsize=1 << 12)
def mobius_from(u: SignedPermutation) -> dict[SignedPermutation, int]:
    """``{v: mu(u, v)}`` over the whole up-set of ``u``, filled in by increasing length."""
    above = sorted(upset(u), key=lambda w: (length(w), w))
    mu: dict[SignedPermutation, int] = {}
    placed: list[SignedPermutation] = []
    for v in above:
        if v == u:
            mu[v] = 1
        else:
            pv = profile(v)
            mu[v] = -sum(mu[z] for z in placed if profile(z) <= pv)
        placed.append(v)
    return mu


@lru_cache(maxsize=1 << 16)
def mobius(u: SignedPermutation, v: SignedPermutation) -> int:
    """Moebius function of the weak order; 0 when ``u`` is not below ``v``."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} vs {render(v)}")
    if u == v:
        return 1
    if not leq(u, v):
        return 0
    return -sum(mobius(u, z) for z in interval(u, v) if z != v)


# --- reflections --------------------------------------------------------------------

def all_reflections(n: int) -> list[Reflection]:
    out = [Reflection("transposition", i, s * j) for i, j in combinations(range(1, n + 1), 2) for s in (1, -1)]
    out.extend(Reflection("sign_change", i, -i) for i in range(1, n + 1))
    return out


def reflections_TR(w: SignedPermutation) -> frozenset[Reflection]:
    """Right reflection set, read off the statistic sets of ``w``."""
    prof = profile(w)
    out = {Reflection("transposition", i, j) for i, j in prof.inv}
    out.update(Reflection("sign_change", i, -i) for i in prof.nega)
    out.update(Reflection("transposition", i, -j) for i, j in prof.nsp)
    return frozenset(out)


# --- descent classes ------------------------------------------------------------------

@dataclass(frozen=True)
class DescentSet:
    """A subset of ``[0, n-1]`` together with its ambient ``n``."""

    elements: frozenset[int]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        bad = [i for i in self.elements if not 0 <= i <= self.n - 1]
        if bad:
            raise ValueError(f"descent positions {sorted(bad)} outside [0, {self.n - 1}]")

    def __iter__(self):
        return iter(sorted(self.elements))


def _as_descent_set(I, n: int | None) -> DescentSet:
    if isinstance(I, DescentSet):
        return I
    if n is None:
        raise ValueError("ambient size n is required")
    return DescentSet(frozenset(I), n)


def descent_class_max(I: DescentSet | Iterable[int], n: int | None = None) -> SignedPermutation:
    """Largest element of ``{w : Des(w) = I}``.

    The positions split at the positive elements of ``I``; each block after the
    first holds its values negated and decreasing in absolute value, and so does
    the first block when ``0`` is in ``I``. Otherwise the first block is ``1..p``.
    """
    ds = _as_descent_set(I, n)
    n = ds.n
    cuts = sorted(i for i in ds.elements if i > 0)
    bounds = [0, *cuts, n]
    window: list[int] = []
    for k in range(len(bounds) - 1):
        lo, hi = bounds[k] + 1, bounds[k + 1]
        if k == 0 and 0 not in ds.elements:
            window.extend(range(lo, hi + 1))
        else:
            window.extend(-a for a in range(hi, lo - 1, -1))
    return SignedPermutation.trusted(window)


def descent_class(I: DescentSet | Iterable[int], n: int | None = None, cap: int | None = None):
    """``(min, max, members)`` of the descent class ``Y_I``, by enumeration of B_n."""
    ds = _as_descent_set(I, n)
    check_rank(ds.n, cap)
    members = frozenset(w for w in all_signed_permutations(ds.n) if descents(w) == ds.elements)
    lowest = min(members, key=lambda w: (length(w), w))
    return lowest, descent_class_max(ds), members


def galois_adjoint_check(n: int, cap: int | None = None) -> bool:
    """``Des(w) <= I  <=>  w <= zeta_I`` for every ``w`` in B_n and every ``I``."""
    check_rank(n, cap)
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    zetas = {I: descent_class_max(I, n) for I in subsets}
    for w in all_signed_permutations(n):
        d = descents(w)
        for I in subsets:
            if (d <= I) != leq(w, zetas[I]):
                return False
    return True
