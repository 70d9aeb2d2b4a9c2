"""Signed permutations: values, group arithmetic, statistics and standardization.

A signed permutation of size ``n`` is stored in one-line notation as a tuple
``(w_1, ..., w_n)`` of nonzero integers whose absolute values are ``1..n``.
It acts on ``[-n, n]`` by ``w(i) = w_i``, ``w(0) = 0`` and ``w(-i) = -w(i)``.
"""

from __future__ import annotations

import os
import re
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_RANK = 6


class RankCapError(ValueError):
    """Raised when a computation would enumerate a group above the rank cap."""


_cap_override: list[int] = []


def max_rank() -> int:
    """Current rank cap: an active :func:`rank_cap` block, else ``OCTAWEAK_MAX_N``, else 6."""
    if _cap_override:
        return _cap_override[-1]
    value = os.environ.get("OCTAWEAK_MAX_N", "").strip()
    return int(value) if value else DEFAULT_MAX_RANK


@contextmanager
def rank_cap(n: int):
    """Temporarily set the rank cap used by :func:`check_rank`."""
    _cap_override.append(int(n))
    try:
        yield n
    finally:
        _cap_override.pop()


def check_rank(n: int, cap: int | None = None) -> None:
    cap = max_rank() if cap is None else cap
    if n > cap:
        raise RankCapError(f"rank {n} exceeds the rank cap {cap} (set OCTAWEAK_MAX_N to raise it)")


class SignedPermutation(tuple):
    """An element of the hyperoctahedral group B_n, as its one-line window.

    Instances are tuples, so they hash, compare and sort like their windows.
    Calling ``w(i)`` evaluates the permutation on ``[-n, n]`` and ``u * v``
    composes (``(u * v)(i) == u(v(i))``).
    """

    __slots__ = ()

    def __new__(cls, window: Iterable[int] = ()):
        values = tuple(int(a) for a in window)
        n = len(values)
        seen = set()
        for a in values:
            if a == 0:
                raise ValueError(f"zero entry in signed permutation {values}")
            if abs(a) > n:
                raise ValueError(f"entry {a} outside [-{n}, {n}] in {values}")
            if abs(a) in seen:
                raise ValueError(f"repeated absolute value {abs(a)} in {values}")
            seen.add(abs(a))
        return tuple.__new__(cls, values)

    @classmethod
    def trusted(cls, values: Iterable[int]) -> SignedPermutation:
        """Wrap a window already known to be valid, skipping validation."""
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if not 1 <= abs(i) <= len(self):
            raise ValueError(f"{i} is outside [-{len(self)}, {len(self)}]")
        return self[i - 1] if i > 0 else -self[-i - 1]

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, SignedPermutation):
            return compose(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"SignedPermutation({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


IOTA = SignedPermutation.trusted(())


@dataclass(frozen=True)
class Shuffle:
    """A positive permutation increasing on consecutive blocks of positions."""

    perm: SignedPermutation
    blocks: tuple[int, ...]

    def __post_init__(self):
        if sum(self.blocks) != len(self.perm) or any(b < 0 for b in self.blocks):
            raise ValueError(f"block sizes {self.blocks} do not fit size {len(self.perm)}")
        if not is_shuffle(self.perm, self.blocks):
            raise ValueError(f"{render(self.perm)} is not a shuffle for blocks {self.blocks}")


@dataclass(frozen=True)
class Reflection:
    """A reflection of B_n.

    ``kind == "transposition"`` is ``(i, j)(-i, -j)`` with ``1 <= i < |j|``;
    ``kind == "sign_change"`` is ``(i, -i)`` and carries ``j == -i``.
    """

    kind: str
    i: int
    j: int

    def __post_init__(self):
        if self.kind == "transposition":
            if not 1 <= self.i < abs(self.j):
                raise ValueError(f"bad transposition indices ({self.i}, {self.j})")
        elif self.kind == "sign_change":
            if self.i < 1 or self.j != -self.i:
                raise ValueError(f"bad sign change indices ({self.i}, {self.j})")
        else:
            raise ValueError(f"unknown reflection kind {self.kind!r}")

    def as_permutation(self, n: int) -> SignedPermutation:
        if max(self.i, abs(self.j)) > n:
            raise ValueError(f"{self} does not live in B_{n}")
        window = list(range(1, n + 1))
        if self.kind == "sign_change":
            window[self.i - 1] = -self.i
        else:
            sign = 1 if self.j > 0 else -1
            a = abs(self.j)
            window[self.i - 1] = sign * a
            window[a - 1] = sign * self.i
        return SignedPermutation(window)

    def __str__(self) -> str:
        if self.kind == "sign_change":
            return f"({self.i},{-self.i})"
        return f"({self.i},{self.j})({-self.i},{-self.j})"


# --- construction and text format -------------------------------------------

_SEP = re.compile(r"[,\s]+")


def parse(text: str) -> SignedPermutation:
    """Parse ``"2,-5,1,-3,-4"`` (commas and/or whitespace). Empty text is the empty permutation."""
    text = text.strip()
    if text.startswith(("(", "[")) and text.endswith((")", "]")):
        text = text[1:-1].strip()
    if not text:
        return IOTA
    try:
        values = [int(tok) for tok in _SEP.split(text) if tok]
    except ValueError:
        raise ValueError(f"malformed signed permutation {text!r}") from None
    return SignedPermutation(values)


def render(w: Sequence[int]) -> str:
    return ",".join(str(a) for a in w)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation.trusted(range(1, n + 1))


def longest(n: int) -> SignedPermutation:
    """The maximal element ``(-1, -2, ..., -n)`` of B_n, of length ``n**2``."""
    return SignedPermutation.trusted(range(-1, -n - 1, -1))


def generator(i: int, n: int) -> SignedPermutation:
    """The Coxeter generator ``s_i`` of B_n, ``0 <= i <= n - 1``."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range [0, {n - 1}]")
    window = list(range(1, n + 1))
    if i == 0:
        window[0] = -1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation.trusted(window)


def all_signed_permutations(n: int) -> list[SignedPermutation]:
    """Every element of B_n, sorted by window."""
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(SignedPermutation.trusted(s * a for s, a in zip(signs, perm)))
    out.sort()
    return out


def all_permutations(n: int) -> list[SignedPermutation]:
    return [SignedPermutation.trusted(p) for p in permutations(range(1, n + 1))]


# --- group structure ----------------------------------------------------------

def _same_size(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {render(u)} has size {len(u)}, {render(v)} has size {len(v)}")


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """``u o v``, i.e. ``i -> u(v(i))``."""
    _same_size(u, v)
    return SignedPermutation.trusted(u[a - 1] if a > 0 else -u[-a - 1] for a in v)


def inverse(w: Sequence[int]) -> SignedPermutation:
    out = [0] * len(w)
    for pos, a in enumerate(w, start=1):
        out[abs(a) - 1] = pos if a > 0 else -pos
    return SignedPermutation.trusted(out)


def is_permutation(w: Sequence[int]) -> bool:
    """True when ``w`` lies in the symmetric group (no negative entries)."""
    return all(a > 0 for a in w)


def forget_signs(w: Sequence[int]) -> SignedPermutation:
    return SignedPermutation.trusted(abs(a) for a in w)


# --- statistics -----------------------------------------------------------------

@lru_cache(maxsize=None)
def pair_slots(n: int) -> tuple[tuple[int, int], ...]:
    """Pairs ``(i, j)``, ``1 <= i < j <= n``, in row-major order; bit ``k`` of a pair set is slot ``k``."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def _slot_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(pair_slots(n))}


def pairs_to_bits(pairs: Iterable[tuple[int, int]], n: int) -> int:
    index = _slot_index(n)
    bits = 0
    for pair in pairs:
        bits |= 1 << index[pair]
    return bits


def bits_to_pairs(bits: int, n: int) -> frozenset[tuple[int, int]]:
    slots = pair_slots(n)
    return frozenset(slots[k] for k in range(len(slots)) if bits >> k & 1)


def indices_to_bits(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << (i - 1)
    return bits


def bits_to_indices(bits: int) -> frozenset[int]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class OrderProfile:
    """The statistic sets (Inv, Nega, Nsp) of a signed permutation, as bitsets.

    Pair sets use the slot order of :func:`pair_slots`; ``nega_bits`` has bit
    ``i - 1`` set for each negative index ``i``.
    """

    n: int
    inv_bits: int
    nega_bits: int
    nsp_bits: int

    @property
    def inv(self) -> frozenset[tuple[int, int]]:
        return bits_to_pairs(self.inv_bits, self.n)

    @property
    def nega(self) -> frozenset[int]:
        return bits_to_indices(self.nega_bits)

    @property
    def nsp(self) -> frozenset[tuple[int, int]]:
        return bits_to_pairs(self.nsp_bits, self.n)

    @property
    def length(self) -> int:
        return self.inv_bits.bit_count() + self.nega_bits.bit_count() + self.nsp_bits.bit_count()

    def __le__(self, other: OrderProfile) -> bool:
        return (
            self.n == other.n
            and self.inv_bits & ~other.inv_bits == 0
            and self.nega_bits & ~other.nega_bits == 0
            and self.nsp_bits & ~other.nsp_bits == 0
        )

    @classmethod
    def from_sets(cls, n, inv, nega, nsp) -> OrderProfile:
        return cls(n, pairs_to_bits(inv, n), indices_to_bits(nega), pairs_to_bits(nsp, n))


@lru_cache(maxsize=1 << 18)
def profile(w: SignedPermutation) -> OrderProfile:
    n = len(w)
    inv = nsp = nega = 0
    k = 0
    for i in range(n):
        a = w[i]
        if a < 0:
            nega |= 1 << i
        for j in range(i + 1, n):
            b = w[j]
            if a > b:
                inv |= 1 << k
            if a + b < 0:
                nsp |= 1 << k
            k += 1
    return OrderProfile(n, inv, nega, nsp)


def inv(w: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def length(w: SignedPermutation) -> int:
    """Coxeter length, ``inv(w) - sum of the negative entries``."""
    return inv(w) - sum(a for a in w if a < 0)


# --- standardization, shifts, shuffles ------------------------------------------

def _check_word(word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(int(a) for a in word)
    if any(a == 0 for a in word):
        raise ValueError(f"zero entry in word {word}")
    return word


def standardize(word: Sequence[int]) -> SignedPermutation:
    """``sts``: signs kept, absolute values replaced by their ranks (ties: earlier is smaller)."""
    word = _check_word(word)
    order = sorted(range(len(word)), key=lambda i: (abs(word[i]), i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank if word[i] > 0 else -rank
    return SignedPermutation.trusted(out)


def standardize_plain(word: Sequence[int]) -> SignedPermutation:
    """``st``: the permutation with the same relative order as ``word`` (ties: earlier is smaller)."""
    word = _check_word(word)
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return SignedPermutation.trusted(out)


def shift(w: Sequence[int], p: int) -> tuple[int, ...]:
    """``a -> a + sgn(a) * p`` entrywise."""
    return tuple(a + p if a > 0 else a - p for a in w)


def shifted_product(*factors: Sequence[int]) -> SignedPermutation:
    """``u x v x ...``: each factor's window shifted by the total size of the ones before it."""
    out: list[int] = []
    for f in factors:
        out.extend(shift(f, len(out)))
    return SignedPermutation.trusted(out)


def is_shuffle(w: Sequence[int], blocks: Sequence[int]) -> bool:
    if sum(blocks) != len(w) or any(a < 0 for a in w):
        return False
    start = 0
    for b in blocks:
        seg = w[start:start + b]
        if any(x >= y for x, y in zip(seg, seg[1:])):
            return False
        start += b
    return True


@lru_cache(maxsize=None)
def _shuffle_windows(blocks: tuple[int, ...]) -> tuple[SignedPermutation, ...]:
    n = sum(blocks)
    found = []

    def place(remaining: frozenset[int], k: int, acc: list[int]) -> None:
        if k == len(blocks):
            found.append(SignedPermutation.trusted(acc))
            return
        for chosen in combinations(sorted(remaining), blocks[k]):
            place(remaining.difference(chosen), k + 1, acc + list(chosen))

    place(frozenset(range(1, n + 1)), 0, [])
    found.sort()
    return tuple(found)


def shuffles(*blocks: int) -> Iterator[Shuffle]:
    """All permutations increasing on consecutive position blocks, in lexicographic order."""
    blocks = tuple(int(b) for b in blocks)
    if any(b < 0 for b in blocks):
        raise ValueError(f"negative block size in {blocks}")
    for w in _shuffle_windows(blocks):
        yield Shuffle(w, blocks)


def shuffle_perms(*blocks: int) -> tuple[SignedPermutation, ...]:
    """Like :func:`shuffles` but returns bare permutations (cached)."""
    return _shuffle_windows(tuple(int(b) for b in blocks))


# --- descents -------------------------------------------------------------------

def descents(w: Sequence[int]) -> frozenset[int]:
    """``{i in [0, n-1] : w_i > w_{i+1}}`` with ``w_0 = 0``."""
    padded = (0, *w)
    return frozenset(i for i in range(len(w)) if padded[i] > padded[i + 1])


def global_descents(w: Sequence[int]) -> frozenset[int]:
    """Positions ``i in [1, n-1]`` where every earlier entry exceeds every later one."""
    out = []
    for i in range(1, len(w)):
        if min(w[:i]) > max(w[i:]):
            out.append(i)
    return frozenset(out)
