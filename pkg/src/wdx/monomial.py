"""Squarefree monomials over ``m`` binary variables and their orders.

A monomial is an index bitmask: bit ``i`` set means ``x_i`` divides it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from typing import Iterable, Iterator

from .beta import BetaSum, beta_compare, beta_sum
from .errors import InputError

MAX_M = 16

__all__ = [
    "Monomial",
    "MonomialSet",
    "Partition",
    "divides",
    "gcd",
    "complement",
    "leq",
    "shift_leq",
    "is_decreasing",
    "decreasing_closure",
    "lambda_partition",
    "lambda_size",
    "lambda_restricted",
    "alpha",
    "row_to_monomial",
    "monomial_to_row",
    "all_monomials",
    "canonical_sort",
]


@dataclass(frozen=True, order=False)
class Monomial:
    m: int
    mask: int = 0

    def __post_init__(self):
        if not 1 <= self.m <= MAX_M:
            raise InputError(f"m must be in [1, {MAX_M}], got {self.m}")
        if self.mask < 0 or self.mask >> self.m:
            raise InputError(f"mask {self.mask:#x} has variables outside [0, {self.m - 1}]")

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> Monomial:
        mask = 0
        for i in indices:
            if not 0 <= i < m:
                raise InputError(f"index {i} out of range for m={m}")
            if mask >> i & 1:
                raise InputError(f"repeated index {i}")
            mask |= 1 << i
        return cls(m, mask)

    @classmethod
    def one(cls, m: int) -> Monomial:
        return cls(m, 0)

    @classmethod
    def parse(cls, m: int, text: str) -> Monomial:
        """Parse ``"x0x2x4"`` or ``"1"``."""
        text = text.strip().replace("*", "").replace("_", "")
        if text == "1":
            return cls(m, 0)
        if not re.fullmatch(r"(x\d+)+", text):
            raise InputError(f"cannot parse monomial {text!r}")
        return cls.from_indices(m, [int(t) for t in re.findall(r"\d+", text)])

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.m) if self.mask >> i & 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def beta(self) -> BetaSum:
        return beta_sum(self.indices)

    def __str__(self) -> str:
        return "".join(f"x{i}" for i in self.indices) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self.m}, {self})"

    def __truediv__(self, other: Monomial) -> Monomial:
        if not divides(other, self):
            raise InputError(f"{other} does not divide {self}")
        return Monomial(self.m, self.mask & ~other.mask)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_m(self, other)
        return Monomial(self.m, self.mask | other.mask)


def _check_m(f: Monomial, g: Monomial) -> None:
    if f.m != g.m:
        raise InputError(f"monomials over different variable counts ({f.m} vs {g.m})")


def divides(f: Monomial, g: Monomial) -> bool:
    _check_m(f, g)
    return f.mask & ~g.mask == 0


def gcd(f: Monomial, g: Monomial) -> Monomial:
    _check_m(f, g)
    return Monomial(f.m, f.mask & g.mask)


def complement(f: Monomial) -> Monomial:
    return Monomial(f.m, ((1 << f.m) - 1) & ~f.mask)


def leq(f: Monomial, g: Monomial) -> bool:
    """The decreasing-code order: f divides some monomial g* that g shift-dominates."""
    _check_m(f, g)
    if f.degree > g.degree:
        return False
    # compare the l-th largest indices positionally
    return all(a <= b for a, b in zip(reversed(f.indices), reversed(g.indices)))


def shift_leq(f: Monomial, g: Monomial) -> bool:
    _check_m(f, g)
    if f.degree != g.degree:
        raise InputError("shift order needs equal degrees")
    return all(a <= b for a, b in zip(f.indices, g.indices))


def lambda_partition(f: Monomial) -> Partition:
    if f.degree == 0:
        raise InputError("lambda partition is undefined for the constant monomial")
    s = f.degree
    parts = [i - k for k, i in enumerate(f.indices)]
    assert len(parts) == s
    return Partition(tuple(reversed(parts)))


def lambda_size(f: Monomial) -> int:
    """|lambda_f|, with |lambda_1| = 0."""
    return sum(i - k for k, i in enumerate(f.indices))


def free_below(f: Monomial, i: int) -> int:
    """Number of j < i with j not in ind(f)."""
    return i - (f.mask & ((1 << i) - 1)).bit_count()


def lambda_restricted(f: Monomial, g: Monomial) -> Partition:
    if not divides(g, f):
        raise InputError(f"{g} does not divide {f}")
    parts = sorted((free_below(f, i) for i in g.indices), reverse=True)
    return Partition(tuple(parts))


def alpha(f: Monomial, g: Monomial) -> int:
    """Collision exponent of two coprime degree-2 monomials."""
    _check_m(f, g)
    if f.degree != 2 or g.degree != 2:
        raise InputError("alpha needs degree-2 monomials")
    if f.mask & g.mask:
        raise InputError("alpha needs coprime monomials")
    if leq(g, f):
        big, small = f, g
    elif leq(f, g):
        big, small = g, f
    else:
        return 2
    i1 = big.indices[0]
    j2 = small.indices[1]
    return 1 if j2 > i1 else 0


def row_to_monomial(m: int, i: int) -> Monomial:
    if not 0 <= i < 1 << m:
        raise InputError(f"row {i} out of range for m={m}")
    return Monomial(m, (1 << m) - 1 - i)


def monomial_to_row(f: Monomial) -> int:
    return (1 << f.m) - 1 - f.mask


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InputError(f"partition parts must be non-increasing: {self.parts}")
        if any(p < 0 for p in self.parts):
            raise InputError("partition parts must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _canonical_cmp(f: Monomial, g: Monomial) -> int:
    a = (f.degree, lambda_size(f))
    b = (g.degree, lambda_size(g))
    if a != b:
        return -1 if a < b else 1
    c = beta_compare(f.beta, g.beta)
    if c:
        return c
    return (f.indices > g.indices) - (f.indices < g.indices)


def canonical_sort(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Degree, then weight-contribution level, then beta-expansion reliability."""
    return sorted(monomials, key=cmp_to_key(_canonical_cmp))


def all_monomials(m: int, degree: int | None = None) -> list[Monomial]:
    out = [Monomial(m, mask) for mask in range(1 << m)]
    if degree is not None:
        out = [f for f in out if f.degree == degree]
    return canonical_sort(out)


class MonomialSet:
    """Immutable set of monomials over a common ``m``."""

    __slots__ = ("m", "members", "_sorted")

    def __init__(self, m: int, members: Iterable[Monomial] = ()):
        members = frozenset(members)
        for f in members:
            if f.m != m:
                raise InputError(f"{f!r} is not over m={m}")
        self.m = m
        self.members = members
        self._sorted: list[Monomial] | None = None

    @classmethod
    def from_indices(cls, m: int, index_lists: Iterable[Iterable[int]]) -> MonomialSet:
        return cls(m, (Monomial.from_indices(m, ix) for ix in index_lists))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        if self._sorted is None:
            self._sorted = canonical_sort(self.members)
        return iter(self._sorted)

    def __contains__(self, f) -> bool:
        return f in self.members

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialSet) and self.m == other.m and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.m, self.members))

    def __repr__(self) -> str:
        return f"MonomialSet(m={self.m}, {{{', '.join(map(str, self))}}})"

    def __or__(self, other: MonomialSet) -> MonomialSet:
        return MonomialSet(self.m, self.members | other.members)

    def __sub__(self, other) -> MonomialSet:
        other = other.members if isinstance(other, MonomialSet) else frozenset(other)
        return MonomialSet(self.m, self.members - other)

    def layer(self, degree: int) -> list[Monomial]:
        return [f for f in self if f.degree == degree]

    @property
    def max_degree(self) -> int:
        return max((f.degree for f in self.members), default=-1)


def _predecessors(f: Monomial) -> Iterator[Monomial]:
    """Immediate predecessors under the decreasing order: drop a variable, or shift one down."""
    for i in f.indices:
        yield Monomial(f.m, f.mask & ~(1 << i))
        if i > 0 and not f.mask >> (i - 1) & 1:
            yield Monomial(f.m, f.mask & ~(1 << i) | 1 << (i - 1))


def is_decreasing(s: MonomialSet) -> bool:
    return all(g in s.members for f in s.members for g in _predecessors(f))


def decreasing_closure(generators: MonomialSet | Iterable[Monomial], m: int | None = None) -> MonomialSet:
    gens = list(generators)
    if m is None:
        if isinstance(generators, MonomialSet):
            m = generators.m
        elif gens:
            m = gens[0].m
        else:
            raise InputError("m is required for an empty generator list")
    seen = set(gens)
    stack = list(gens)
    while stack:
        f = stack.pop()
        for g in _predecessors(f):
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return MonomialSet(m, seen)
