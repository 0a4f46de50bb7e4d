"""Exact arithmetic on sums of powers of beta = 2**(1/4).

A sum ``sum(beta**i for i in S)`` is stored as four integer coefficients
``(a0, a1, a2, a3)`` meaning ``a0 + a1*t + a2*t**2 + a3*t**3`` with ``t = 2**(1/4)``.
Index ``i`` contributes ``2**(i // 4)`` to coefficient ``i % 4``.  Since
``x**4 - 2`` is irreducible, two sums are equal iff their coefficients are.
Signs of differences are decided by integer interval refinement of ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import isqrt

__all__ = ["BetaSum", "beta_sum", "beta_compare"]


@lru_cache(maxsize=None)
def _t_bracket(k: int) -> int:
    """floor(2**(1/4) * 2**k)."""
    # floor((2 * 2**(4k)) ** (1/4)) == isqrt(isqrt(2 << 4k)) by monotonicity of floor-sqrt
    return isqrt(isqrt(2 << (4 * k)))


def _sign(d: tuple[int, int, int, int]) -> int:
    if not any(d):
        return 0
    k = 16
    while True:
        lo = _t_bracket(k)
        hi = lo + 1
        scale = 1 << k
        # bounds on sum d_i * t**i, all scaled by 2**(3k)
        low = high = 0
        for i, c in enumerate(d):
            a = c * lo**i * scale ** (3 - i)
            b = c * hi**i * scale ** (3 - i)
            low += min(a, b)
            high += max(a, b)
        if low > 0:
            return 1
        if high < 0:
            return -1
        k *= 2


@total_ordering
@dataclass(frozen=True)
class BetaSum:
    coeffs: tuple[int, int, int, int]

    def __sub__(self, other: BetaSum) -> tuple[int, int, int, int]:
        return tuple(a - b for a, b in zip(self.coeffs, other.coeffs))  # type: ignore[return-value]

    def __lt__(self, other: BetaSum) -> bool:
        return _sign(self - other) < 0

    def __float__(self) -> float:
        t = 2.0**0.25
        return sum(c * t**i for i, c in enumerate(self.coeffs))


def beta_sum(indices) -> BetaSum:
    c = [0, 0, 0, 0]
    for i in indices:
        c[i % 4] += 1 << (i // 4)
    return BetaSum(tuple(c))  # type: ignore[arg-type]


def beta_compare(a: BetaSum, b: BetaSum) -> int:
    """-1, 0 or 1 as a <, ==, > b."""
    return _sign(a - b)
