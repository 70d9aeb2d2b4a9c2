"""Type-B quasisymmetric functions and the descent map from signed permutations.

Elements are kept as integer combinations of pseudo-compositions in the
monomial (M) or fundamental (F) basis. Products are computed by realizing both
factors as polynomials in x0..xm and reading the result back in the M basis.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from . import weak
from .hsym import FormalSum, to_fundamental
from .perm import SignedPermutation, all_signed_permutations, check_rank, descents

BASES = ("F", "M")


@dataclass(frozen=True)
class PseudoComposition:
    """Parts ``(a1, ..., ak)`` with ``a1 >= 0`` and later parts positive.

    Grade 0 is the single pseudo-composition ``(0)``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a pseudo-composition has at least one part")
        if parts[0] < 0 or any(a <= 0 for a in parts[1:]):
            raise ValueError(f"bad pseudo-composition {parts}: first part >= 0, others > 0")
        if parts[0] == 0 and len(parts) == 1:
            return
        if sum(parts) == 0:
            raise ValueError(f"bad pseudo-composition {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def descent_set(self) -> frozenset[int]:
        """Proper prefix sums."""
        out, total = [], 0
        for a in self.parts[:-1]:
            total += a
            out.append(total)
        return frozenset(out)

    @classmethod
    def from_subset(cls, subset: Iterable[int], n: int) -> PseudoComposition:
        cuts = sorted(set(subset))
        if any(not 0 <= i <= n - 1 for i in cuts):
            raise ValueError(f"subset {cuts} not inside [0, {n - 1}]")
        bounds = [0, *cuts, n]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    def __le__(self, other: PseudoComposition) -> bool:
        """Refinement: ``D(self)`` is contained in ``D(other)``."""
        return self.n == other.n and self.descent_set <= other.descent_set

    def __lt__(self, other: PseudoComposition) -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def pc_from_subset(subset: Iterable[int], n: int) -> PseudoComposition:
    return PseudoComposition.from_subset(subset, n)


def pc_to_subset(alpha: PseudoComposition) -> frozenset[int]:
    return alpha.descent_set


_SUBSET_FORM = re.compile(r"^\s*\{([^}]*)\}\s*@\s*(\d+)\s*$")


def parse_pc(text: str) -> PseudoComposition:
    """Accepts ``(0,1,2)``, ``0,1,2`` or the subset form ``{0,1}@3``."""
    m = _SUBSET_FORM.match(text)
    if m:
        body = m.group(1).strip()
        subset = [int(t) for t in re.split(r"[,\s]+", body) if t] if body else []
        return PseudoComposition.from_subset(subset, int(m.group(2)))
    body = text.strip().strip("()[]")
    tokens = [t for t in re.split(r"[,\s]+", body) if t]
    try:
        parts = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"cannot parse pseudo-composition {text!r}") from None
    return PseudoComposition(parts or (0,))


@lru_cache(maxsize=None)
def pseudo_compositions(n: int) -> tuple[PseudoComposition, ...]:
    """All pseudo-compositions of ``n``, ordered by subset size then lexicographically."""
    return tuple(
        PseudoComposition.from_subset(c, n) for k in range(n + 1) for c in combinations(range(n), k)
    )


def _as_pc(a) -> PseudoComposition:
    if isinstance(a, PseudoComposition):
        return a
    if isinstance(a, str):
        return parse_pc(a)
    return PseudoComposition(tuple(a))


class BQFormalSum:
    """Integer combination of ``M_alpha`` or ``F_alpha``."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"basis must be 'F' or 'M', not {basis!r}")
        self.basis = basis
        clean: dict[PseudoComposition, int] = {}
        for a, c in (terms or {}).items():
            if c:
                a = _as_pc(a)
                clean[a] = clean.get(a, 0) + int(c)
        self._terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def basis_element(cls, basis: str, alpha) -> BQFormalSum:
        return cls(basis, {_as_pc(alpha): 1})

    @property
    def terms(self) -> dict[PseudoComposition, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[PseudoComposition, int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0].n, kv[0].parts))

    def __iter__(self) -> Iterator[tuple[PseudoComposition, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, alpha) -> int:
        return self._terms.get(_as_pc(alpha), 0)

    def grades(self) -> set[int]:
        return {a.n for a in self._terms}

    def homogeneous(self, n: int) -> BQFormalSum:
        return BQFormalSum(self.basis, {a: c for a, c in self._terms.items() if a.n == n})

    def _same(self, other: BQFormalSum) -> None:
        if not isinstance(other, BQFormalSum):
            raise TypeError(f"expected BQFormalSum, got {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: BQFormalSum) -> BQFormalSum:
        self._same(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return BQFormalSum(self.basis, out)

    def __neg__(self) -> BQFormalSum:
        return BQFormalSum(self.basis, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: BQFormalSum) -> BQFormalSum:
        return self + (-other)

    def __rmul__(self, scalar: int) -> BQFormalSum:
        if not isinstance(scalar, int):
            return NotImplemented
        return BQFormalSum(self.basis, {a: scalar * c for a, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return bq_product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BQFormalSum):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"BQFormalSum({self.basis!r}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (a, c) in enumerate(self.items()):
            if k == 0:
                sign = "-" if c < 0 else ""
            else:
                sign = "- " if c < 0 else "+ "
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}{self.basis}{a}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"composition": list(a.parts), "coeff": c} for a, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> BQFormalSum:
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[PseudoComposition, int] = defaultdict(int)
        for t in data["terms"]:
            terms[PseudoComposition(tuple(t["composition"]))] += int(t["coeff"])
        return cls(data["basis"], terms)


def BQ_M(alpha) -> BQFormalSum:
    return BQFormalSum.basis_element("M", alpha)


def BQ_F(alpha) -> BQFormalSum:
    return BQFormalSum.basis_element("F", alpha)


# --- change of basis ----------------------------------------------------------

def bq_to_monomial(x: BQFormalSum) -> BQFormalSum:
    """``F_alpha = sum of M_beta over beta refining alpha``."""
    if x.basis == "M":
        return x
    out: dict[PseudoComposition, int] = defaultdict(int)
    for a, c in x._terms.items():
        for b in pseudo_compositions(a.n):
            if a <= b:
                out[b] += c
    return BQFormalSum("M", out)


def bq_to_fundamental(x: BQFormalSum) -> BQFormalSum:
    """``M_alpha = sum of (-1)^(|D(beta)| - |D(alpha)|) F_beta over beta refining alpha``."""
    if x.basis == "F":
        return x
    out: dict[PseudoComposition, int] = defaultdict(int)
    for a, c in x._terms.items():
        da = len(a.descent_set)
        for b in pseudo_compositions(a.n):
            if a <= b:
                out[b] += c * (-1) ** (len(b.descent_set) - da)
    return BQFormalSum("F", out)


def bq_convert(x: BQFormalSum, basis: str) -> BQFormalSum:
    if basis not in BASES:
        raise ValueError(f"basis must be 'F' or 'M', not {basis!r}")
    return bq_to_monomial(x) if basis == "M" else bq_to_fundamental(x)


# --- polynomial realization ---------------------------------------------------

class TruncatedPolynomial:
    """Polynomial in ``x0..xm`` with integer coefficients, keyed by exponent vectors."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.m = m
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != m + 1:
                    raise ValueError(f"exponent vector {e} does not have {m + 1} entries")
                clean[tuple(e)] = c
        self._terms = clean

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coefficient(self, exponents: Iterable[int]) -> int:
        e = tuple(exponents)
        e = e + (0,) * (self.m + 1 - len(e))
        return self._terms.get(e, 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def _check(self, other: TruncatedPolynomial) -> None:
        if other.m != self.m:
            raise ValueError(f"width mismatch: {self.m} vs {other.m}")

    def __add__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedPolynomial(self.m, out)

    def __neg__(self) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        return self + (-other)

    def scale(self, k: int) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.m, {e: k * c for e, c in self._terms.items()})

    def __mul__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        self._check(other)
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return TruncatedPolynomial(self.m, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"TruncatedPolynomial(m={self.m}, terms={len(self._terms)})"


@lru_cache(maxsize=None)
def _realize_m(alpha: PseudoComposition, m: int) -> TruncatedPolynomial:
    head, rest = alpha.parts[0], alpha.parts[1:]
    terms = {}
    for idx in combinations(range(1, m + 1), len(rest)):
        e = [0] * (m + 1)
        e[0] = head
        for i, a in zip(idx, rest):
            e[i] = a
        terms[tuple(e)] = 1
    return TruncatedPolynomial(m, terms)


@lru_cache(maxsize=None)
def _realize_f(alpha: PseudoComposition, m: int) -> TruncatedPolynomial:
    n, strict = alpha.n, alpha.descent_set
    terms: dict[tuple[int, ...], int] = defaultdict(int)
    for seq in combinations_with_replacement(range(m + 1), n):
        chain = (0, *seq)
        if all(chain[j] < chain[j + 1] for j in strict):
            e = [0] * (m + 1)
            for i in seq:
                e[i] += 1
            terms[tuple(e)] += 1
    return TruncatedPolynomial(m, terms)


def realize(x: BQFormalSum, m: int) -> TruncatedPolynomial:
    """Specialize ``x`` to the variables ``x0..xm``; requires ``m`` at least every grade."""
    top = max(x.grades(), default=0)
    if m < top:
        raise ValueError(f"width m={m} is too small for grade {top}")
    build = _realize_m if x.basis == "M" else _realize_f
    out = TruncatedPolynomial(m)
    for a, c in x._terms.items():
        out = out + build(a, m).scale(c)
    return out


def _canonical_exponents(alpha: PseudoComposition, m: int) -> tuple[int, ...]:
    e = [0] * (m + 1)
    for i, a in enumerate(alpha.parts):
        e[i] = a
    return tuple(e)


def extract_monomial(poly: TruncatedPolynomial, grades: Iterable[int]) -> BQFormalSum:
    """Read a realized element back in the M basis and check nothing is left over.

    The coefficient of ``M_alpha`` is that of ``x0^a1 x1^a2 ... x(k-1)^ak``,
    which occurs in no other ``M_beta``.
    """
    out: dict[PseudoComposition, int] = {}
    for n in grades:
        if n > poly.m:
            raise ValueError(f"width m={poly.m} is too small for grade {n}")
        for a in pseudo_compositions(n):
            c = poly.coefficient(_canonical_exponents(a, poly.m))
            if c:
                out[a] = c
    result = BQFormalSum("M", out)
    if realize(result, poly.m) != poly:
        raise ArithmeticError(f"polynomial is not quasisymmetric at width {poly.m}")
    return result


def bq_product(x: BQFormalSum, y: BQFormalSum, m: int | None = None) -> BQFormalSum:
    """Product through realization at width ``2n+1`` for output grade ``n``; result in ``x``'s basis."""
    if x.basis != y.basis:
        raise ValueError(f"basis mismatch: {x.basis} vs {y.basis}")
    grades = {a + b for a in x.grades() for b in y.grades()}
    if not grades:
        return BQFormalSum(x.basis)
    width = 2 * max(grades) + 1 if m is None else m
    if width < max(grades):
        raise ValueError(f"width m={width} is too small for grade {max(grades)}")
    poly = realize(x, width) * realize(y, width)
    return bq_convert(extract_monomial(poly, sorted(grades)), x.basis)


# --- descent map -------------------------------------------------------------

def descent_composition(w: SignedPermutation) -> PseudoComposition:
    return PseudoComposition.from_subset(descents(w), len(w))


def descent_map(x: FormalSum) -> BQFormalSum:
    """``F_u -> F_Des(u)``; an M-sum is expanded in F first and the image returned in M."""
    fx = to_fundamental(x)
    out: dict[PseudoComposition, int] = defaultdict(int)
    for u, c in fx.terms.items():
        out[descent_composition(u)] += c
    image = BQFormalSum("F", out)
    return bq_to_monomial(image) if x.basis == "M" else image


def descent_map_monomial(w: SignedPermutation) -> BQFormalSum:
    """Image of ``M_w``: ``M_Des(w)`` when ``w`` is the top of its descent class, else zero."""
    d = descents(w)
    if weak.descent_class_max(d, len(w)) == w:
        return BQ_M(PseudoComposition.from_subset(d, len(w)))
    return BQFormalSum("M")


def rota_check(n: int, cap: int | None = None) -> bool:
    """Moebius sums over descent fibres against Boolean sums over preimages of ``w``."""
    check_rank(n, cap)
    if n > 4:
        raise ValueError("rota_check is limited to n <= 4")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    zeta = {J: weak.descent_class_max(J, n) for J in subsets}
    for w in all_signed_permutations(n):
        lhs: dict[frozenset[int], int] = defaultdict(int)
        for x, mu in weak.mobius_from(w).items():
            lhs[descents(x)] += mu
        for I in subsets:
            rhs = sum((-1) ** len(I - J) for J in subsets if J <= I and zeta[J] == w)
            if lhs.get(I, 0) != rhs:
                return False
    return True
