"""Left weak order on signed permutations and the Hopf algebra it carries."""

from .perm import (
    IOTA,
    RankCapError,
    Reflection,
    Shuffle,
    SignedPermutation,
    compose,
    inverse,
    length,
    parse,
    profile,
    rank_cap,
    render,
    shifted_product,
    shuffles,
    standardize,
)
from .weak import covers, interval, join, leq, meet, mobius
from .hsym import F, FormalSum, M, TensorSum
from .bqsym import BQFormalSum, PseudoComposition

__all__ = [
    "IOTA",
    "RankCapError",
    "Reflection",
    "Shuffle",
    "SignedPermutation",
    "compose",
    "inverse",
    "length",
    "parse",
    "profile",
    "rank_cap",
    "render",
    "shifted_product",
    "shuffles",
    "standardize",
    "covers",
    "interval",
    "join",
    "leq",
    "meet",
    "mobius",
    "F",
    "FormalSum",
    "M",
    "TensorSum",
    "BQFormalSum",
    "PseudoComposition",
]

__version__ = "0.1.0"
