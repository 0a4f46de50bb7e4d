"""Self-check sweeps comparing closed forms against explicit enumeration.

Each suite returns a :class:`SuiteReport`; nothing here prints or touches
files.  Failures carry a small counterexample record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .codewords import CodeSpec, brute_force_wd, brute_limit, codeword_table
from .construct import blended_order, construct_rm, poset_levels
from .enumeration import (
    complete_wd_rm2_subcode,
    count_min_weight,
    count_type_ii,
    enumerate_type_ii_tuples,
)
from .errors import InputError
from .monomial import (
    Monomial,
    MonomialSet,
    all_monomials,
    alpha,
    decreasing_closure,
    leq,
    lambda_size,
)
from .orbits import (
    DEFAULT_ORBIT_LIMIT,
    measured_alpha,
    minkowski_array,
    minkowski_size,
    orbit_array,
    orbit_size,
    verify_disjointness,
)

MAX_FAILURES = 10

__all__ = [
    "SuiteReport",
    "SUITES",
    "layer_downsets",
    "type_ii_pair_check",
    "run_suite",
]


@dataclass
class SuiteReport:
    name: str
    m: int
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def check(self, ok: bool, record: Callable[[], dict]) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(record())

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "m": self.m,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "info": self.info,
        }


def layer_downsets(m: int, degree: int = 2) -> Iterator[list[Monomial]]:
    """Every subset of the degree layer that is closed downward within the layer."""
    elems = all_monomials(m, degree)
    below = [[j for j, g in enumerate(elems[:i]) if leq(g, f)] for i, f in enumerate(elems)]
    chosen = [False] * len(elems)

    def rec(i: int) -> Iterator[list[Monomial]]:
        if i == len(elems):
            yield [f for f, c in zip(elems, chosen) if c]
            return
        chosen[i] = False
        yield from rec(i + 1)
        if all(chosen[j] for j in below[i]):
            chosen[i] = True
            yield from rec(i + 1)
            chosen[i] = False

    yield from rec(0)


def _rm2_subcode(m: int, layer2: list[Monomial]) -> CodeSpec:
    base = [f for f in all_monomials(m) if f.degree <= 1]
    return CodeSpec(MonomialSet(m, base + layer2))


def _ids(fs) -> list[list[int]]:
    return [list(f.indices) for f in fs]


def _suite_orbits(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("orbits", m)
    for f in all_monomials(m):
        if orbit_size(f) > DEFAULT_ORBIT_LIMIT:
            rep.skipped += 1
            continue
        got = orbit_array(f).shape[0]
        want = 1 << (f.degree + lambda_size(f))
        rep.check(got == want, lambda: {"monomial": list(f.indices), "formula": want, "enumerated": got})
    return rep


def _suite_alpha(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("alpha", m)
    for f, g in combinations(all_monomials(m, 2), 2):
        if f.mask & g.mask:
            continue
        got, want = measured_alpha(f, g), alpha(f, g)
        rep.check(got == want, lambda: {"pair": _ids([f, g]), "alpha": want, "measured": got})
    return rep


def _coprime_groups(fs: list[Monomial], size: int) -> Iterator[tuple[Monomial, ...]]:
    for group in combinations(fs, size):
        if all(a.mask & b.mask == 0 for a, b in combinations(group, 2)):
            yield group


def _minkowski_case(rep: SuiteReport, factors, h: Monomial | None = None) -> None:
    want = minkowski_size(factors, h)
    if want > DEFAULT_ORBIT_LIMIT:
        rep.skipped += 1
        return
    got = minkowski_array(factors, h).shape[0]
    rep.check(got == want, lambda: {
        "factors": _ids(factors), "h": list(h.indices) if h else [], "formula": want, "enumerated": got,
    })


def _suite_minkowski(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("minkowski", m)
    deg2 = all_monomials(m, 2)
    for mu in range(2, m // 2 + 1):
        for group in _coprime_groups(deg2, mu):
            _minkowski_case(rep, group)
    # common divisor of degree one with cubic factors
    if m >= 5:
        for t in enumerate_type_ii_tuples(construct_rm(3, m).info_set, 2):
            _minkowski_case(rep, t.factors, t.h)
    # quadratic orbits plus one linear orbit, the shape behind weight 2^(m-1)
    for l in range(0, (m - 1) // 2 + 1):
        groups = [()] if l == 0 else _coprime_groups(deg2, l)
        for group in groups:
            used = sum(f.mask for f in group)
            for j in range(m):
                if not used >> j & 1:
                    _minkowski_case(rep, list(group) + [Monomial.from_indices(m, [j])])
    return rep


def _suite_disjointness(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("disjointness", m)
    for r in (2, 3):
        if r > m or m - r + 2 < 4:
            continue
        I = construct_rm(r, m).info_set
        tuples = [t for mu in range(2, (m - r + 2) // 2 + 1) for t in enumerate_type_ii_tuples(I, mu)]
        if any(minkowski_size(t.factors, t.h) > DEFAULT_ORBIT_LIMIT for t in tuples):
            rep.skipped += 1
            continue
        ok = verify_disjointness(tuples)
        rep.check(ok, lambda: {"code": f"R({r},{m})", "tuples": len(tuples)})
    return rep


def _suite_rm2_sweep(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("rm2-sweep", m)
    for layer2 in layer_downsets(m):
        code = _rm2_subcode(m, layer2)
        if code.k > max_k:
            rep.skipped += 1
            continue
        closed = complete_wd_rm2_subcode(code)
        brute = brute_force_wd(code, limit=max_k)
        rep.check(closed.counts == brute.counts, lambda: {
            "layer2": _ids(layer2),
            "closed": {str(w): str(c) for w, c in closed.counts.items()},
            "oracle": {str(w): str(c) for w, c in brute.counts.items()},
        })
    return rep


def _random_r3_set(m: int, rng: np.random.Generator) -> MonomialSet:
    cubic = all_monomials(m, 3)
    quad = all_monomials(m, 2)
    gens = [cubic[i] for i in rng.choice(len(cubic), size=int(rng.integers(1, 3)), replace=False)]
    gens += [quad[i] for i in rng.choice(len(quad), size=int(rng.integers(0, 3)), replace=False)]
    return decreasing_closure(gens, m)


def _suite_r3(m: int, max_k: int, seed: int, samples: int = 24) -> SuiteReport:
    rep = SuiteReport("r3", m)
    if m < 5:
        raise InputError("the r=3 suite needs m >= 5")
    rng = np.random.default_rng(seed)
    seen: set[MonomialSet] = set()
    attempts = 0
    while rep.checked < 2 * samples and attempts < 50 * samples:
        attempts += 1
        I = _random_r3_set(m, rng)
        if len(I) > max_k or I in seen:
            continue
        seen.add(I)
        code = CodeSpec(I)
        wd = brute_force_wd(code, limit=max_k)
        w_min = code.w_min
        a, b = count_min_weight(I), wd[w_min]
        rep.check(a == b, lambda: {"set": _ids(I), "weight": w_min, "closed": a, "oracle": b})
        a2, b2 = count_type_ii(I, 2), wd[3 * w_min // 2]
        rep.check(a2 == b2, lambda: {"set": _ids(I), "weight": 3 * w_min // 2, "closed": a2, "oracle": b2})
    rep.info["sets"] = len(seen)
    return rep


def _suite_poset(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("poset", m)
    sizes = [len(lvl) for lvl in poset_levels(m)]
    rep.info["level_sizes"] = sizes
    rep.check(sizes == sizes[::-1], lambda: {"level_sizes": sizes, "property": "palindromic"})
    for l in range(m - 1):
        rep.check(sizes[l] == (l + 2) // 2, lambda: {"level": l, "size": sizes[l], "expected": (l + 2) // 2})
    order = blended_order(m)
    pos = {f: i for i, f in enumerate(order)}
    for f, g in combinations(order, 2):
        if leq(f, g) or leq(g, f):
            lo, hi = (f, g) if leq(f, g) else (g, f)
            rep.check(pos[lo] < pos[hi], lambda: {"pair": _ids([lo, hi]), "property": "linear extension"})
    if m >= 7:
        a = Monomial.from_indices(m, [0, 6])
        b = Monomial.from_indices(m, [2, 5])
        rep.check(pos[a] < pos[b], lambda: {"pair": _ids([a, b]), "property": "weight level precedes reliability"})
    rep.info["order"] = _ids(order)
    return rep


def type_ii_pair_check(code: CodeSpec, limit: int = 20) -> tuple[int, int]:
    """Count weight-1.5 w_min codewords, and those that are a sum of two w_min codewords."""
    table = codeword_table(code, limit)
    wts = kernels.popcount_rows(table)
    w_min = code.w_min
    low = table[wts == w_min]
    target = table[wts == 3 * w_min // 2]
    sums = (low[:, None, :] ^ low[None, :, :]).reshape(-1, table.shape[1])
    sums = np.unique(sums, axis=0)
    hit = {row.tobytes() for row in sums}
    covered = sum(row.tobytes() in hit for row in target)
    return int(target.shape[0]), int(covered)


def _suite_pairs(m: int, max_k: int, seed: int) -> SuiteReport:
    rep = SuiteReport("pairs", m)
    cap = min(max_k, 20)
    for layer2 in layer_downsets(m):
        if not layer2:
            continue
        code = _rm2_subcode(m, layer2)
        if code.k > cap:
            rep.skipped += 1
            continue
        total, covered = type_ii_pair_check(code, cap)
        rep.check(total == covered, lambda: {"layer2": _ids(layer2), "weight_class": total, "pair_sums": covered})
    return rep


SUITES: dict[str, Callable[[int, int, int], SuiteReport]] = {
    "orbits": _suite_orbits,
    "alpha": _suite_alpha,
    "minkowski": _suite_minkowski,
    "disjointness": _suite_disjointness,
    "rm2-sweep": _suite_rm2_sweep,
    "r3": _suite_r3,
    "poset": _suite_poset,
    "pairs": _suite_pairs,
}


def run_suite(name: str, m: int, max_k: int | None = None, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if not 3 <= m <= 9:
        raise InputError(f"verification suites run for 3 <= m <= 9, got m={m}")
    max_k = brute_limit() if max_k is None else max_k
    return SUITES[name](m, max_k, seed)
