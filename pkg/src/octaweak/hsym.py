"""The Hopf algebra of signed permutations in its fundamental and monomial bases.

Sums are exact: coefficients are Python ints and zero terms are never stored.
The monomial basis is reached from the fundamental one by Moebius inversion
along the weak order; products and coproducts in the monomial basis go
through that change of basis, and the closed-form structure constants are
kept separately as validators.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Iterator, Mapping

from . import weak
from .embeddings import tau
from .perm import (
    IOTA,
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    check_rank,
    compose,
    forget_signs,
    global_descents,
    inverse,
    render,
    shifted_product,
    shuffle_perms,
    standardize,
)

BASES = ("F", "M")


def _check_basis(basis: str) -> str:
    if basis not in BASES:
        raise ValueError(f"basis must be 'F' or 'M', not {basis!r}")
    return basis


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


def _term_key(w) -> tuple:
    return (len(w), tuple(w))


def _format_coeff(c: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    head = f"{sign} " if sign and not first else sign
    return head + ("" if mag == 1 else f"{mag}*")


class FormalSum:
    """Integer combination of ``F_u`` or ``M_u`` (any mix of grades)."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping[SignedPermutation, int] | None = None):
        self.basis = _check_basis(basis)
        clean = {}
        for w, c in (terms or {}).items():
            if c:
                w = w if isinstance(w, SignedPermutation) else SignedPermutation(w)
                clean[w] = clean.get(w, 0) + int(c)
        self._terms = _clean(clean)

    @classmethod
    def basis_element(cls, basis: str, w) -> FormalSum:
        return cls(basis, {w if isinstance(w, SignedPermutation) else SignedPermutation(w): 1})

    @property
    def terms(self) -> dict[SignedPermutation, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[SignedPermutation, int]]:
        """Terms sorted by grade, then window."""
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def __iter__(self) -> Iterator[tuple[SignedPermutation, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, w) -> int:
        return self._terms.get(SignedPermutation(w), 0)

    def grades(self) -> set[int]:
        return {len(w) for w in self._terms}

    def homogeneous(self, n: int) -> FormalSum:
        return FormalSum(self.basis, {w: c for w, c in self._terms.items() if len(w) == n})

    def _same(self, other: FormalSum) -> None:
        if not isinstance(other, FormalSum):
            raise TypeError(f"expected FormalSum, got {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: FormalSum) -> FormalSum:
        self._same(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return FormalSum(self.basis, out)

    def __neg__(self) -> FormalSum:
        return FormalSum(self.basis, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: FormalSum) -> FormalSum:
        return self + (-other)

    def __rmul__(self, scalar: int) -> FormalSum:
        if not isinstance(scalar, int):
            return NotImplemented
        return FormalSum(self.basis, {w: scalar * c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._same(other)
        return f_product(self, other) if self.basis == "F" else m_product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"FormalSum({self.basis!r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (w, c) in enumerate(self.items()):
            parts.append(f"{_format_coeff(c, k == 0)}{self.basis}[{render(w)}]")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"basis": self.basis, "terms": [{"perm": list(w), "coeff": c} for w, c in self.items()]}

    @classmethod
    def from_json(cls, data) -> FormalSum:
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[SignedPermutation, int] = defaultdict(int)
        for t in data["terms"]:
            terms[SignedPermutation(t["perm"])] += int(t["coeff"])
        return cls(data["basis"], terms)


def F(w) -> FormalSum:
    return FormalSum.basis_element("F", w)


def M(w) -> FormalSum:
    return FormalSum.basis_element("M", w)


class TensorSum:
    """Integer combination of ``X_a (x) X_b`` in one basis for both legs."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping[tuple, int] | None = None):
        self.basis = _check_basis(basis)
        clean: dict = {}
        for (a, b), c in (terms or {}).items():
            if c:
                key = (SignedPermutation(a), SignedPermutation(b))
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = _clean(clean)

    @property
    def terms(self) -> dict[tuple[SignedPermutation, SignedPermutation], int]:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: (_term_key(kv[0][0]), _term_key(kv[0][1])))

    def __iter__(self):
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, a, b) -> int:
        return self._terms.get((SignedPermutation(a), SignedPermutation(b)), 0)

    def __add__(self, other: TensorSum) -> TensorSum:
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TensorSum(self.basis, out)

    def __neg__(self) -> TensorSum:
        return TensorSum(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TensorSum) -> TensorSum:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSum):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TensorSum({self.basis!r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, ((a, b), c) in enumerate(self.items()):
            parts.append(f"{_format_coeff(c, k == 0)}{self.basis}[{render(a)}] (x) {self.basis}[{render(b)}]")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"left": list(a), "right": list(b), "coeff": c} for (a, b), c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> TensorSum:
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict = defaultdict(int)
        for t in data["terms"]:
            terms[(SignedPermutation(t["left"]), SignedPermutation(t["right"]))] += int(t["coeff"])
        return cls(data["basis"], terms)


def tensor(x: FormalSum, y: FormalSum) -> TensorSum:
    x._same(y)
    return TensorSum(x.basis, {(a, b): c * d for a, c in x._terms.items() for b, d in y._terms.items()})


def _require(x, basis: str, what: str) -> None:
    if x.basis != basis:
        raise ValueError(f"{what} expects the {basis} basis, got {x.basis}")


# --- fundamental basis ----------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def f_product_terms(u: SignedPermutation, v: SignedPermutation) -> tuple[SignedPermutation, ...]:
    """Indices of ``F_u F_v``: ``(u x v) * xi^{-1}`` over all ``(p, q)``-shuffles ``xi``."""
    return tuple(tau(xi, [u, v]) for xi in shuffle_perms(len(u), len(v)))


def f_product(x: FormalSum, y: FormalSum) -> FormalSum:
    _require(x, "F", "f_product")
    _require(y, "F", "f_product")
    out: dict[SignedPermutation, int] = defaultdict(int)
    for u, a in x._terms.items():
        for v, b in y._terms.items():
            for w in f_product_terms(u, v):
                out[w] += a * b
    return FormalSum("F", out)


@lru_cache(maxsize=1 << 16)
def f_coproduct_terms(u: SignedPermutation) -> tuple[tuple[SignedPermutation, SignedPermutation], ...]:
    return tuple((standardize(u[:i]), standardize(u[i:])) for i in range(len(u) + 1))


def f_coproduct(x: FormalSum) -> TensorSum:
    _require(x, "F", "f_coproduct")
    out: dict = defaultdict(int)
    for u, a in x._terms.items():
        for pair in f_coproduct_terms(u):
            out[pair] += a
    return TensorSum("F", out)


def counit(x: FormalSum) -> int:
    """Coefficient of the unit; the same in both bases."""
    return x._terms.get(IOTA, 0)


# --- change of basis ----------------------------------------------------------------------

def to_monomial(x: FormalSum, cap: int | None = None) -> FormalSum:
    """Rewrite an F-sum using ``F_u = sum of M_v over v >= u``."""
    if x.basis == "M":
        return x
    out: dict[SignedPermutation, int] = defaultdict(int)
    for u, c in x._terms.items():
        check_rank(len(u), cap)
        for v in weak.upset(u):
            out[v] += c
    return FormalSum("M", out)


def to_fundamental(x: FormalSum, cap: int | None = None) -> FormalSum:
    """Rewrite an M-sum using ``M_u = sum of mu(u, v) F_v over v >= u``."""
    if x.basis == "F":
        return x
    out: dict[SignedPermutation, int] = defaultdict(int)
    for u, c in x._terms.items():
        check_rank(len(u), cap)
        for v, m in weak.mobius_from(u).items():
            if m:
                out[v] += c * m
    return FormalSum("F", out)


def convert(x: FormalSum, basis: str) -> FormalSum:
    return to_monomial(x) if _check_basis(basis) == "M" else to_fundamental(x)


def _tensor_convert(t: TensorSum, basis: str) -> TensorSum:
    if t.basis == basis:
        return t
    leg = {}
    out: dict = defaultdict(int)
    for (a, b), c in t._terms.items():
        for w in (a, b):
            if w not in leg:
                leg[w] = convert(FormalSum.basis_element(t.basis, w), basis)._terms
        for a2, ca in leg[a].items():
            for b2, cb in leg[b].items():
                out[(a2, b2)] += c * ca * cb
    return TensorSum(basis, out)


def tensor_to_monomial(t: TensorSum) -> TensorSum:
    return _tensor_convert(t, "M")


def tensor_to_fundamental(t: TensorSum) -> TensorSum:
    return _tensor_convert(t, "F")


# --- monomial basis -----------------------------------------------------------------------------

def m_product(x: FormalSum, y: FormalSum) -> FormalSum:
    _require(x, "M", "m_product")
    _require(y, "M", "m_product")
    return to_monomial(f_product(to_fundamental(x), to_fundamental(y)))


def m_coproduct(x: FormalSum) -> TensorSum:
    _require(x, "M", "m_coproduct")
    return tensor_to_monomial(f_coproduct(to_fundamental(x)))


def product(x: FormalSum, y: FormalSum) -> FormalSum:
    """Product in the common basis of ``x`` and ``y``."""
    x._same(y)
    return f_product(x, y) if x.basis == "F" else m_product(x, y)


def coproduct(x: FormalSum) -> TensorSum:
    return f_coproduct(x) if x.basis == "F" else m_coproduct(x)


def gdes_coproduct(u: SignedPermutation) -> TensorSum:
    """Split ``u`` at ``0``, ``n`` and its global descents, in the M basis."""
    n = len(u)
    cuts = sorted(global_descents(u) | {0, n})
    return TensorSum("M", {(standardize(u[:p]), standardize(u[p:])): 1 for p in cuts})


# --- shuffle structure constants -----------------------------------------------------------------

@dataclass(frozen=True)
class ShuffleCoefficient:
    """The shuffle sets ``A``, ``B``, ``C`` for a triple ``(u, v, w)``."""

    A: frozenset[SignedPermutation]
    B: frozenset[SignedPermutation]
    C: frozenset[SignedPermutation]

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def b(self) -> int:
        return len(self.B)

    @property
    def c(self) -> int:
        return len(self.C)


def shuffle_coefficients(u: SignedPermutation, v: SignedPermutation, w: SignedPermutation) -> ShuffleCoefficient:
    """Shuffles ``xi`` with ``(u x v) xi^{-1} <= w``, and the subsets maximal in ``u`` / in ``(u, v)``."""
    p, q = len(u), len(v)
    if len(w) != p + q:
        raise ValueError(f"{render(w)} does not have size {p + q}")
    A, B, C = set(), set(), set()
    above_u = weak.upset(u) - {u}
    above_v = weak.upset(v)
    for xi in shuffle_perms(p, q):
        if not weak.leq(tau(xi, [u, v]), w):
            continue
        A.add(xi)
        if not any(weak.leq(tau(xi, [u2, v]), w) for u2 in above_u):
            B.add(xi)
            if not any(
                weak.leq(tau(xi, [u2, v2]), w)
                for u2 in weak.upset(u)
                for v2 in above_v
                if (u2, v2) != (u, v)
            ):
                C.add(xi)
    return ShuffleCoefficient(frozenset(A), frozenset(B), frozenset(C))


def _reach(z: SignedPermutation) -> int:
    g = weak.build_cover_graph(len(z))
    return g.reach[g.index[z]]


def _mask_members(mask: int, n: int) -> Iterator[SignedPermutation]:
    elements = weak.build_cover_graph(n).elements
    while mask:
        low = mask & -mask
        yield elements[low.bit_length() - 1]
        mask ^= low


def _b_mask(u, v, xi) -> int:
    """Bitmask of the ``w`` for which ``xi`` lies in ``B(u, v, w)``."""
    mask = _reach(tau(xi, [u, v]))
    for u2 in weak.upset(u):
        if u2 != u:
            mask &= ~_reach(tau(xi, [u2, v]))
    return mask


def m_product_b_formula(u: SignedPermutation, v: SignedPermutation) -> FormalSum:
    """``M_u M_v`` as ``sum over w, v' >= v of mu(v, v') b(u, v', w) M_w``; ``w`` ranges via the cover graph."""
    n = len(u) + len(v)
    check_rank(n)
    out: dict[SignedPermutation, int] = defaultdict(int)
    for v2, m in weak.mobius_from(v).items():
        if not m:
            continue
        for xi in shuffle_perms(len(u), len(v)):
            for w in _mask_members(_b_mask(u, v2, xi), n):
                out[w] += m
    return FormalSum("M", out)


def m_product_c_formula(u: SignedPermutation, v: SignedPermutation) -> FormalSum:
    """``M_u M_v`` as ``sum of c(u, v, w) M_w``; valid only when every entry of ``v`` is negative."""
    if any(a > 0 for a in v):
        raise ValueError(f"{render(v)} has a positive entry")
    n = len(u) + len(v)
    check_rank(n)
    out: dict[SignedPermutation, int] = defaultdict(int)
    for xi in shuffle_perms(len(u), len(v)):
        mask = _reach(tau(xi, [u, v]))
        for u2 in weak.upset(u):
            for v2 in weak.upset(v):
                if (u2, v2) != (u, v):
                    mask &= ~_reach(tau(xi, [u2, v2]))
        for w in _mask_members(mask, n):
            out[w] += 1
    return FormalSum("M", out)


# --- Hopf axioms ------------------------------------------------------------------------------

def tensor_product(s: TensorSum, t: TensorSum) -> TensorSum:
    """``(a (x) b)(c (x) d) = ac (x) bd`` in the fundamental basis."""
    if s.basis != "F" or t.basis != "F":
        raise ValueError("tensor_product works in the F basis")
    out: dict = defaultdict(int)
    for (a, b), c1 in s._terms.items():
        for (c, d), c2 in t._terms.items():
            for x in f_product_terms(a, c):
                for y in f_product_terms(b, d):
                    out[(x, y)] += c1 * c2
    return TensorSum("F", out)


def _coassoc_sides(u: SignedPermutation) -> tuple[dict, dict]:
    left: dict = defaultdict(int)
    right: dict = defaultdict(int)
    for a, b in f_coproduct_terms(u):
        for a1, a2 in f_coproduct_terms(a):
            left[(a1, a2, b)] += 1
        for b1, b2 in f_coproduct_terms(b):
            right[(a, b1, b2)] += 1
    return _clean(left), _clean(right)


@dataclass
class AxiomReport:
    checks: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed

    def record(self, passed: bool, what: str) -> None:
        self.checks += 1
        if not passed:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(what)


def basis_elements(max_grade: int, min_grade: int = 0) -> list[SignedPermutation]:
    return [w for n in range(min_grade, max_grade + 1) for w in all_signed_permutations(n)]


def hopf_axiom_suite(max_total_grade: int = 4) -> AxiomReport:
    """Associativity, coassociativity and product/coproduct compatibility on basis elements."""
    if max_total_grade > 5:
        raise ValueError("max_total_grade is limited to 5")
    report = AxiomReport()
    by_grade = {n: all_signed_permutations(n) for n in range(max_total_grade + 1)}
    grades = range(max_total_grade + 1)
    for p, q, r in cartesian(grades, repeat=3):
        if p + q + r > max_total_grade:
            continue
        for u, v, z in cartesian(by_grade[p], by_grade[q], by_grade[r]):
            lhs = f_product(f_product(F(u), F(v)), F(z))
            rhs = f_product(F(u), f_product(F(v), F(z)))
            report.record(lhs == rhs, f"associativity at {render(u)} | {render(v)} | {render(z)}")
    for n in grades:
        for u in by_grade[n]:
            left, right = _coassoc_sides(u)
            report.record(left == right, f"coassociativity at {render(u)}")
    for p, q in cartesian(grades, repeat=2):
        if p + q > max_total_grade:
            continue
        for u, v in cartesian(by_grade[p], by_grade[q]):
            lhs = f_coproduct(f_product(F(u), F(v)))
            rhs = tensor_product(f_coproduct(F(u)), f_coproduct(F(v)))
            report.record(lhs == rhs, f"compatibility at {render(u)} | {render(v)}")
    return report


def forget_signs_sum(x: FormalSum) -> FormalSum:
    """``F_u -> F_{|u|}``: the image in the Hopf algebra of permutations."""
    _require(x, "F", "forget_signs_sum")
    out: dict[SignedPermutation, int] = defaultdict(int)
    for u, c in x._terms.items():
        out[forget_signs(u)] += c
    return FormalSum("F", out)


def is_unsigned(x: FormalSum) -> bool:
    return all(a > 0 for w in x.terms for a in w)


def is_unsigned_tensor(t: TensorSum) -> bool:
    return all(a > 0 for pair in t.terms for w in pair for a in w)
