"""Evaluation vectors, monomial codes and the brute-force weight oracle."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InputError, ResourceLimitError
from .monomial import Monomial, MonomialSet, is_decreasing

DEFAULT_BRUTE_LIMIT = 28
DEFAULT_CLASS_LIMIT = 20

__all__ = [
    "EvaluationVector",
    "CodeSpec",
    "WeightDistribution",
    "evaluate",
    "generator_matrix",
    "packed_generator",
    "brute_force_wd",
    "weight_class",
    "brute_limit",
]


def brute_limit() -> int:
    """Oracle dimension cap, overridable with ``WDX_BRUTE_LIMIT``."""
    raw = os.environ.get("WDX_BRUTE_LIMIT")
    return int(raw) if raw else DEFAULT_BRUTE_LIMIT


@dataclass(frozen=True)
class EvaluationVector:
    """Length-2**m bit vector; bit j of ``bits`` is coordinate j."""

    m: int
    bits: int

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> list[int]:
        return [j for j in range(self.n) if self.bits >> j & 1]

    def to_array(self) -> np.ndarray:
        return np.array([self.bits >> j & 1 for j in range(self.n)], dtype=np.uint8)

    def to_words(self) -> np.ndarray:
        w = max(1, self.n // 64)
        return np.array([(self.bits >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(w)], dtype=np.uint64)

    @classmethod
    def from_words(cls, m: int, words) -> EvaluationVector:
        bits = 0
        for i, w in enumerate(np.asarray(words, dtype=np.uint64).ravel()):
            bits |= int(w) << (64 * i)
        return cls(m, bits)

    def __add__(self, other: EvaluationVector) -> EvaluationVector:
        return EvaluationVector(self.m, self.bits ^ other.bits)

    def __mul__(self, other: EvaluationVector) -> EvaluationVector:
        return EvaluationVector(self.m, self.bits & other.bits)

    def __str__(self) -> str:
        return ",".join(str(self.bits >> j & 1) for j in range(self.n))


@lru_cache(maxsize=None)
def _ev_mask(m: int, mask: int) -> int:
    # coordinate j is the point whose variable bits are the complement of j
    bits = 0
    for j in range(1 << m):
        if j & mask == 0:
            bits |= 1 << j
    return bits


def evaluate(f: Monomial) -> EvaluationVector:
    return EvaluationVector(f.m, _ev_mask(f.m, f.mask))


@dataclass(frozen=True)
class CodeSpec:
    """Decreasing monomial code C(I)."""

    info_set: MonomialSet

    def __post_init__(self):
        if not is_decreasing(self.info_set):
            raise InputError("information set is not decreasing")

    @classmethod
    def from_indices(cls, m: int, index_lists) -> CodeSpec:
        return cls(MonomialSet.from_indices(m, index_lists))

    @property
    def m(self) -> int:
        return self.info_set.m

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return len(self.info_set)

    @property
    def r(self) -> int:
        return self.info_set.max_degree

    @property
    def w_min(self) -> int | None:
        return None if self.k == 0 else 1 << (self.m - self.r)

    def __repr__(self) -> str:
        return f"CodeSpec(n={self.n}, k={self.k}, r={self.r}, I={self.info_set!r})"


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    counts: dict[int, int] = field(default_factory=dict)
    complete: bool = True

    def __post_init__(self):
        for w, c in self.counts.items():
            if not 0 <= w <= self.n:
                raise InputError(f"weight {w} outside [0, {self.n}]")
            if c < 0:
                raise InputError("negative count")
        # drop explicit zeros so equality is by support
        object.__setattr__(self, "counts", {w: int(c) for w, c in sorted(self.counts.items()) if c})

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_weight(self) -> int | None:
        return min((w for w in self.counts if w), default=None)

    def is_symmetric(self) -> bool:
        return all(self[self.n - w] == c for w, c in self.counts.items())

    def polynomial(self) -> str:
        terms = []
        for w, c in self.counts.items():
            if w == 0:
                terms.append(str(c))
            else:
                x = "X" if w == 1 else f"X^{w}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(terms) or "0"


def generator_matrix(code: CodeSpec) -> np.ndarray:
    """K x 2**m 0/1 matrix with rows ev(f), f in canonical order."""
    rows = [evaluate(f).to_array() for f in code.info_set]
    if not rows:
        return np.zeros((0, code.n), dtype=np.uint8)
    return np.vstack(rows)


def packed_generator(code: CodeSpec) -> np.ndarray:
    w = max(1, code.n // 64)
    if code.k == 0:
        return np.zeros((0, w), dtype=np.uint64)
    return np.vstack([evaluate(f).to_words() for f in code.info_set])


def brute_force_wd(code: CodeSpec, limit: int | None = None, threads: int | None = None,
                   backend: str | None = None) -> WeightDistribution:
    """Exact distribution by walking all 2**K codewords."""
    limit = brute_limit() if limit is None else limit
    if code.k > limit:
        raise ResourceLimitError(f"K={code.k} exceeds the oracle limit {limit}; raise it to at least {code.k}")
    hist = kernels.weight_histogram(packed_generator(code), code.n, threads=threads, backend=backend)
    return WeightDistribution(code.n, code.k, {w: int(c) for w, c in enumerate(hist)}, complete=True)


def codeword_table(code: CodeSpec, limit: int = DEFAULT_CLASS_LIMIT) -> np.ndarray:
    """All codewords, packed (2**K, W)."""
    if code.k > limit:
        raise ResourceLimitError(f"K={code.k} exceeds the structural limit {limit}")
    return kernels.span_table(packed_generator(code))


def weight_class(code: CodeSpec, w: int, limit: int = DEFAULT_CLASS_LIMIT) -> list[EvaluationVector]:
    table = codeword_table(code, limit)
    sel = table[kernels.popcount_rows(table) == w]
    return [EvaluationVector.from_words(code.m, row) for row in sel]
