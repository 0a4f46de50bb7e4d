"""Closed-form weight enumeration for decreasing monomial codes.

Counts below twice the minimum weight come from orbit cardinalities under
the lower-triangular affine group: the minimum weight from single orbits,
Type II weights from Minkowski sums of orbits of pairwise-coprime quotient
monomials.  For codes between R(1,m) and R(2,m) this gives the complete
distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .codewords import CodeSpec, WeightDistribution
from .errors import ConsistencyError, InputError
from .monomial import (
    Monomial,
    MonomialSet,
    alpha,
    complement,
    divides,
    free_below,
    is_decreasing,
    lambda_size,
)

__all__ = [
    "TypeIITuple",
    "SpectrumEntry",
    "count_min_weight",
    "enumerate_type_ii_tuples",
    "count_type_ii",
    "type_ii_term",
    "low_weight_spectrum",
    "spectrum_count",
    "complete_wd_rm2_subcode",
    "count_2wmin_orbit_formula",
    "dual_set",
    "macwilliams_dual_wd",
]


def _as_set(I) -> MonomialSet:
    if isinstance(I, CodeSpec):
        return I.info_set
    if not isinstance(I, MonomialSet):
        raise InputError(f"expected a MonomialSet or CodeSpec, got {type(I).__name__}")
    return I


def _decreasing(I) -> MonomialSet:
    I = _as_set(I)
    if not is_decreasing(I):
        raise InputError("monomial set is not decreasing")
    return I


@dataclass(frozen=True)
class TypeIITuple:
    h: Monomial
    factors: tuple[Monomial, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise InputError("a Type II tuple needs at least two factors")
        r = self.factors[0].degree
        if self.h.degree != r - 2:
            raise InputError("common divisor must have degree r - 2")
        for f in self.factors:
            if f.degree != r or not divides(self.h, f):
                raise InputError(f"{f} is not a degree-{r} multiple of {self.h}")
        for f, g in combinations(self.factors, 2):
            if f.mask & g.mask != self.h.mask:
                raise InputError(f"gcd({f}, {g}) differs from {self.h}")

    @property
    def mu(self) -> int:
        return len(self.factors)

    @property
    def quotients(self) -> tuple[Monomial, ...]:
        return tuple(f / self.h for f in self.factors)


@dataclass(frozen=True)
class SpectrumEntry:
    weight: int
    count: int
    exact: bool
    mu: int


def count_min_weight(I) -> int:
    I = _decreasing(I)
    r = I.max_degree
    if r < 0:
        raise InputError("empty monomial set has no minimum weight")
    return sum(1 << (r + lambda_size(f)) for f in I.layer(r))


def _k_cliques(adj: list[int], k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques of a graph given as adjacency bitmasks, vertices ascending."""

    def extend(clique: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        if len(clique) == k:
            yield clique
            return
        need = k - len(clique)
        while cand and cand.bit_count() >= need:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            yield from extend(clique + (v,), cand & adj[v])

    yield from extend((), (1 << len(adj)) - 1)


def _tuples(layer_r: list[Monomial], layer_h: list[Monomial], mu: int) -> Iterator[TypeIITuple]:
    for h in layer_h:
        cands = [f for f in layer_r if divides(h, f)]
        # highest-degree vertices get the low bits so they are expanded last
        adj0 = [sum(1 << j for j, g in enumerate(cands) if f.mask & g.mask == h.mask and g != f) for f in cands]
        order = sorted(range(len(cands)), key=lambda i: adj0[i].bit_count(), reverse=True)
        pos = {v: i for i, v in enumerate(order)}
        adj = [0] * len(cands)
        for v in range(len(cands)):
            for u in range(len(cands)):
                if adj0[v] >> u & 1:
                    adj[pos[v]] |= 1 << pos[u]
        for clique in _k_cliques(adj, mu):
            factors = sorted((cands[order[i]] for i in clique), key=lambda f: f.indices)
            yield TypeIITuple(h, tuple(factors))


def _check_mu(m: int, r: int, mu: int) -> None:
    if not 2 <= 2 * mu <= m - r + 2:
        raise InputError(f"mu={mu} not admissible for m={m}, r={r} (need 2 <= 2mu <= m-r+2)")


def enumerate_type_ii_tuples(I, mu: int) -> list[TypeIITuple]:
    I = _decreasing(I)
    r = I.max_degree
    _check_mu(I.m, r, mu)
    if mu < 2 or r < 2:
        return []
    out = list(_tuples(I.layer(r), I.layer(r - 2), mu))
    return sorted(out, key=lambda t: (t.h.indices, [f.indices for f in t.factors]))


def type_ii_term(t: TypeIITuple) -> int:
    """Size of the Minkowski-sum orbit carried by one tuple."""
    r = t.factors[0].degree
    e = r - 2 + 2 * t.mu + lambda_size(t.h)
    e += sum(free_below(f, i) for f, q in zip(t.factors, t.quotients) for i in q.indices)
    e -= sum(alpha(a, b) for a, b in combinations(t.quotients, 2))
    if e < 0:
        raise ConsistencyError(f"negative exponent for {t}")
    return 1 << e


def count_type_ii(I, mu: int) -> int:
    I = _decreasing(I)
    r = I.max_degree
    _check_mu(I.m, r, mu)
    if r < 2:
        return 0
    return sum(type_ii_term(t) for t in _tuples(I.layer(r), I.layer(r - 2), mu))


def _type_i_possible(m: int, r: int, mu: int) -> bool:
    return 3 <= mu <= r and m >= r + mu


def low_weight_spectrum(I) -> list[SpectrumEntry]:
    """Counts at w_min and every Type II weight below 2 w_min.

    ``exact`` is False where Type I codewords may add to the same weight;
    those counts are Type II only.
    """
    I = _decreasing(I)
    m, r = I.m, I.max_degree
    if r < 1:
        return []
    entries = [SpectrumEntry(1 << (m - r), count_min_weight(I), True, 1)]
    mu_max = max((m - r + 2) // 2, r if r >= 3 else 0)
    for mu in range(2, mu_max + 1):
        w = (1 << (m + 1 - r)) - (1 << (m + 1 - r - mu)) if m + 1 - r - mu >= 0 else None
        if w is None:
            break
        type_ii = 2 * mu <= m - r + 2
        type_i = _type_i_possible(m, r, mu)
        if not (type_ii or type_i):
            continue
        count = count_type_ii(I, mu) if type_ii else 0
        entries.append(SpectrumEntry(w, count, not type_i, mu))
    return entries


def spectrum_count(entries: list[SpectrumEntry], w: int, w_min: int) -> int:
    """Count at weight ``w`` in [w_min, 2 w_min): listed entries, else zero if every entry is exact."""
    if not w_min <= w < 2 * w_min:
        raise InputError(f"weight {w} outside [{w_min}, {2 * w_min})")
    for e in entries:
        if e.weight == w:
            if not e.exact:
                raise InputError(f"count at weight {w} is Type II only")
            return e.count
    if not all(e.exact for e in entries):
        raise InputError(f"weight {w} may carry Type I codewords")
    return 0


def _check_rm2_subcode(I: MonomialSet) -> None:
    for i in range(I.m):
        x = Monomial.from_indices(I.m, [i])
        if x not in I:
            raise InputError(f"code does not contain R(1,m): missing {x}")
    if Monomial.one(I.m) not in I:
        raise InputError("code does not contain R(1,m): missing 1")
    if I.max_degree > 2:
        excess = [str(f) for f in I if f.degree > 2]
        raise InputError(f"code is not inside R(2,m): degree {I.max_degree} monomials {', '.join(excess[:4])}")


def _rm2_type_ii(I: MonomialSet, mu: int) -> int:
    layer2 = I.layer(2)
    if mu == 1:
        return sum(1 << (2 + lambda_size(f)) for f in layer2)
    return sum(type_ii_term(t) for t in _tuples(layer2, [Monomial.one(I.m)], mu))


def complete_wd_rm2_subcode(I) -> WeightDistribution:
    I = _decreasing(I)
    _check_rm2_subcode(I)
    m, n, k = I.m, 1 << I.m, len(I)
    counts = {0: 1, n: 1}
    below = 1
    for mu in range(1, m // 2 + 1):
        w = (1 << (m - 1)) - (1 << (m - 1 - mu))
        c = _rm2_type_ii(I, mu)
        counts[w] = counts.get(w, 0) + c
        counts[n - w] = counts.get(n - w, 0) + c
        below += c
    # the all-ones word pairs weight w with n - w
    middle = (1 << k) - 2 * below
    if middle < 0:
        raise ConsistencyError("sub-2w_min mass exceeds the code size")
    counts[n // 2] = counts.get(n // 2, 0) + middle
    return WeightDistribution(n, k, counts, complete=True)


def count_2wmin_orbit_formula(I) -> dict[str, int]:
    """Weight-2^(m-1) count summed over orbit tuples, next to the symmetry count.

    Each tuple is l pairwise-coprime degree-2 monomials F plus a variable x_j
    outside them, contributing the Minkowski-sum size of F times
    2**(1 + #{k < j : k not in ind(F)}).
    """
    I = _decreasing(I)
    _check_rm2_subcode(I)
    m = I.m
    layer2 = I.layer(2)
    one = Monomial.one(m)
    total = 0
    for l in range(0, (m - 1) // 2 + 1):
        if l == 0:
            groups: list[tuple[int, int]] = [(0, 1)]
        elif l == 1:
            groups = [(f.mask, 1 << (2 + lambda_size(f))) for f in layer2]
        else:
            groups = [(sum(f.mask for f in t.factors), type_ii_term(t)) for t in _tuples(layer2, [one], l)]
        for used, size in groups:
            used_m = Monomial(m, used)
            for j in range(m):
                if used >> j & 1:
                    continue
                total += size << (1 + free_below(used_m, j))
    symmetric = complete_wd_rm2_subcode(I)[1 << (m - 1)]
    return {"orbit": total, "symmetry": symmetric}


def dual_set(I) -> MonomialSet:
    I = _decreasing(I)
    comp = {complement(f) for f in I}
    return MonomialSet(I.m, (Monomial(I.m, mask) for mask in range(1 << I.m) if Monomial(I.m, mask) not in comp))


def _krawtchouk_row(n: int, w: int) -> list[int]:
    """Coefficients of (1 - z)**w (1 + z)**(n - w)."""
    a = [(-1) ** s * comb(w, s) for s in range(w + 1)]
    b = [comb(n - w, s) for s in range(n - w + 1)]
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def macwilliams_dual_wd(W: WeightDistribution) -> WeightDistribution:
    if not W.complete or W.total != 1 << W.k:
        raise InputError("MacWilliams transform needs a complete distribution summing to 2^K")
    n = W.n
    acc = [0] * (n + 1)
    for w, a in W.counts.items():
        for j, c in enumerate(_krawtchouk_row(n, w)):
            acc[j] += a * c
    size = 1 << W.k
    counts = {}
    for j, v in enumerate(acc):
        q, rem = divmod(v, size)
        if rem or q < 0:
            raise ConsistencyError(f"non-integral dual count at weight {j}")
        counts[j] = q
    return WeightDistribution(n, n - W.k, counts, complete=True)
