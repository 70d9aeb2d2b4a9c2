"""Brute-force reference implementations used only by the tests.

Nothing here imports the statistic-set machinery: lengths come from a
breadth-first search over generators, the order from its length definition,
and the F product from the pattern condition on entries.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations, product


def signed_perms(n):
    return [
        tuple(s * a for s, a in zip(signs, perm))
        for perm in permutations(range(1, n + 1))
        for signs in product((1, -1), repeat=n)
    ]


def compose(u, v):
    def ev(w, i):
        return w[i - 1] if i > 0 else -w[-i - 1]

    return tuple(ev(u, a) for a in v)


def inverse(w):
    out = [0] * len(w)
    for i, a in enumerate(w, start=1):
        out[abs(a) - 1] = i if a > 0 else -i
    return tuple(out)


def gens(n):
    out = []
    for i in range(n):
        w = list(range(1, n + 1))
        if i == 0:
            w[0] = -1
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        out.append(tuple(w))
    return out


@lru_cache(maxsize=None)
def lengths(n):
    """Coxeter length of every element, by breadth-first search from the identity."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens(n):
            x = compose(s, w)
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def length(w):
    return lengths(len(w))[tuple(w)]


def leq(u, v):
    """Left weak order by definition: l(v) = l(u) + l(v u^{-1})."""
    return length(v) == length(u) + length(compose(v, inverse(u)))


@lru_cache(maxsize=None)
def upset(u):
    return frozenset(v for v in lengths(len(u)) if leq(u, v))


@lru_cache(maxsize=None)
def mobius(u, v):
    if u == v:
        return 1
    if not leq(u, v):
        return 0
    return -sum(mobius(u, z) for z in upset(u) if z != v and leq(z, v))


def join(u, v):
    common = upset(u) & upset(v)
    return min(common, key=length)


def f_product(u, v):
    """Indices w of F_u F_v: small entries read off u, large ones (shifted down) read off v."""
    p, q = len(u), len(v)
    out = []
    for w in signed_perms(p + q):
        small = tuple(a for a in w if abs(a) <= p)
        large = tuple((abs(a) - p) * (1 if a > 0 else -1) for a in w if abs(a) > p)
        if small == tuple(u) and large == tuple(v):
            out.append(w)
    return sorted(out)


def sts(word):
    order = sorted(range(len(word)), key=lambda i: (abs(word[i]), i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank if word[i] > 0 else -rank
    return tuple(out)


def m_to_f(u):
    """{v: mu(u, v)} from the brute-force Moebius function."""
    return {v: mobius(u, v) for v in upset(tuple(u)) if mobius(u, v)}
