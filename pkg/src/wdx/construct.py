"""Code constructions and the weight-contribution order on monomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import comb

from .beta import beta_compare
from .codewords import CodeSpec, WeightDistribution
from .enumeration import complete_wd_rm2_subcode, low_weight_spectrum
from .errors import InputError
from .monomial import Monomial, MonomialSet, all_monomials, is_decreasing, lambda_size

__all__ = [
    "PosetLevel",
    "beta_leq",
    "wmin_leq",
    "poset_levels",
    "blended_order",
    "reliability_order",
    "construct_rm",
    "construct_polar",
    "construct_rmxpolar",
    "construct_wmin_beta",
    "code_leq_w",
]


@dataclass(frozen=True)
class PosetLevel:
    level: int
    members: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.members)


def beta_leq(f: Monomial, g: Monomial) -> bool:
    return beta_compare(f.beta, g.beta) <= 0


def wmin_leq(f: Monomial, g: Monomial) -> bool:
    """Strict: f contributes fewer minimum-weight codewords than g."""
    if f.degree != g.degree:
        raise InputError("weight-contribution order compares monomials of one degree only")
    return lambda_size(f) < lambda_size(g)


def _beta_cmp(f: Monomial, g: Monomial) -> int:
    c = beta_compare(f.beta, g.beta)
    if c == 0 and f != g:
        raise AssertionError(f"beta tie between {f} and {g}")
    return c


def reliability_order(monomials) -> list[Monomial]:
    """Most reliable first: ascending beta-expansion sum of the variable indices."""
    return sorted(monomials, key=cmp_to_key(_beta_cmp))


def poset_levels(m: int) -> list[PosetLevel]:
    if m < 3:
        raise InputError("poset levels need m >= 3")
    levels: dict[int, list[Monomial]] = {l: [] for l in range(2 * (m - 2) + 1)}
    for f in all_monomials(m, 2):
        levels[lambda_size(f)].append(f)
    return [PosetLevel(l, tuple(reliability_order(fs))) for l, fs in levels.items()]


def blended_order(m: int) -> list[Monomial]:
    """Degree-2 monomials by weight-contribution level, ties by beta reliability."""
    return [f for lvl in poset_levels(m) for f in lvl.members]


def _code(m: int, monomials) -> CodeSpec:
    s = MonomialSet(m, monomials)
    assert is_decreasing(s), "construction produced a non-decreasing set"
    return CodeSpec(s)


def construct_rm(r: int, m: int) -> CodeSpec:
    if not 0 <= r <= m:
        raise InputError(f"need 0 <= r <= m, got r={r}, m={m}")
    return _code(m, (Monomial(m, mask) for mask in range(1 << m) if mask.bit_count() <= r))


def _check_k(m: int, k: int) -> None:
    if not 0 <= k <= 1 << m:
        raise InputError(f"need 0 <= K <= 2^m = {1 << m}, got {k}")


def construct_polar(m: int, k: int) -> CodeSpec:
    _check_k(m, k)
    ranked = reliability_order(Monomial(m, mask) for mask in range(1 << m))
    return _code(m, ranked[:k])


def construct_rmxpolar(m: int, k: int) -> CodeSpec:
    _check_k(m, k)
    r, kk = 0, 0
    while r <= m and kk + comb(m, r) <= k:
        kk += comb(m, r)
        r += 1
    # r is now r' + 1
    base = [Monomial(m, mask) for mask in range(1 << m) if mask.bit_count() < r]
    extra = reliability_order(all_monomials(m, r))[: k - kk] if r <= m else []
    return _code(m, base + extra)


def construct_wmin_beta(m: int, k: int) -> CodeSpec:
    lo, hi = 1 + m, 1 + m + comb(m, 2)
    if not lo <= k <= hi:
        raise InputError(f"need {lo} <= K <= {hi} for m={m}, got {k}")
    chosen = [Monomial(m, mask) for mask in range(1 << m) if mask.bit_count() <= 1]
    left = k - lo
    for lvl in poset_levels(m) if m >= 3 else []:
        if left >= len(lvl):
            chosen.extend(lvl.members)
            left -= len(lvl)
        else:
            chosen.extend(lvl.members[:left])
            break
    return _code(m, chosen)


def _dist_in_range(I: MonomialSet, w_range: tuple[int, int]) -> dict[int, int]:
    lo, hi = w_range
    if I.max_degree <= 2:
        try:
            wd: WeightDistribution = complete_wd_rm2_subcode(I)
            return {w: wd[w] for w in range(lo, hi + 1)}
        except InputError:
            pass
    r = I.max_degree
    w_min = 1 << (I.m - r)
    entries = {e.weight: e for e in low_weight_spectrum(I)}
    out = {}
    for w in range(lo, hi + 1):
        if not w_min <= w < 2 * w_min:
            raise InputError(f"weight {w} not certified for this code")
        e = entries.get(w)
        if e is not None and not e.exact:
            raise InputError(f"count at weight {w} is not exact")
        out[w] = e.count if e else 0
    return out


def code_leq_w(I, J, w_range) -> bool:
    """C(I) precedes C(J) on the interval: J has at most as many codewords as I at each weight."""
    I = I.info_set if isinstance(I, CodeSpec) else I
    J = J.info_set if isinstance(J, CodeSpec) else J
    if isinstance(w_range, int):
        w_range = (w_range, w_range)
    a = _dist_in_range(I, w_range)
    b = _dist_in_range(J, w_range)
    return all(b[w] <= a[w] for w in a)
