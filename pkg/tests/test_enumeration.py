from math import comb, prod

import numpy as np
import pytest

from tables import M5_K12_LAYER2
from wdx.codewords import CodeSpec, WeightDistribution, brute_force_wd
from wdx.construct import construct_rm
from wdx.enumeration import (
    TypeIITuple,
    complete_wd_rm2_subcode,
    count_2wmin_orbit_formula,
    count_min_weight,
    count_type_ii,
    dual_set,
    enumerate_type_ii_tuples,
    low_weight_spectrum,
    macwilliams_dual_wd,
    spectrum_count,
    type_ii_term,
)
from wdx.errors import ConsistencyError, InputError
from wdx.monomial import Monomial, MonomialSet, all_monomials, decreasing_closure
from wdx.verify import layer_downsets


def rm_min_weight_count(r, m):
    return 2**r * prod(2 ** (m - i) - 1 for i in range(m - r)) // prod(2 ** (m - r - i) - 1 for i in range(m - r))


def rm2_distribution(m):
    """Second-order Reed-Muller weight distribution from the quadratic-form count."""
    n = 1 << m
    counts = {0: 1, n: 1}
    for h in range(1, m // 2 + 1):
        a = 2 ** (h * (h + 1)) * prod(2**i - 1 for i in range(m - 2 * h + 1, m + 1)) // prod(4**i - 1 for i in range(1, h + 1))
        counts[n // 2 - 2 ** (m - 1 - h)] = a
        counts[n // 2 + 2 ** (m - 1 - h)] = a
    counts[n // 2] = 2 ** (1 + m + comb(m, 2)) - sum(counts.values())
    return counts


@pytest.mark.parametrize("r,m", [(1, 4), (2, 5), (2, 8), (3, 6), (3, 9), (4, 10)])
def test_min_weight_count_reed_muller(r, m):
    assert count_min_weight(construct_rm(r, m)) == rm_min_weight_count(r, m)


@pytest.mark.parametrize("m", range(2, 12))
def test_rm2_complete_distribution(m):
    assert complete_wd_rm2_subcode(construct_rm(2, m)).counts == rm2_distribution(m)


def test_m5_k12_spectrum_and_orbit_count():
    I = MonomialSet.from_indices(5, [[]] + [[i] for i in range(5)] + M5_K12_LAYER2)
    assert count_min_weight(I) == 108
    assert count_type_ii(I, 2) == 576
    assert count_2wmin_orbit_formula(I) == {"orbit": 2726, "symmetry": 2726}


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_orbit_formula_matches_symmetry_on_all_subcodes(m):
    base = [[]] + [[i] for i in range(m)]
    for layer2 in layer_downsets(m):
        I = MonomialSet.from_indices(m, base + [list(f.indices) for f in layer2])
        res = count_2wmin_orbit_formula(I)
        assert res["orbit"] == res["symmetry"], layer2


@pytest.mark.parametrize("m", [4, 5])
def test_complete_distribution_against_oracle(m):
    base = [[]] + [[i] for i in range(m)]
    for layer2 in layer_downsets(m):
        code = CodeSpec.from_indices(m, base + [list(f.indices) for f in layer2])
        assert complete_wd_rm2_subcode(code).counts == brute_force_wd(code).counts


def test_rm2_subcode_preconditions():
    with pytest.raises(InputError, match="x3"):
        complete_wd_rm2_subcode(CodeSpec.from_indices(4, [[], [0], [1], [2]]))
    with pytest.raises(InputError, match="degree 3"):
        complete_wd_rm2_subcode(construct_rm(3, 4))
    with pytest.raises(InputError, match="not decreasing"):
        count_min_weight(MonomialSet.from_indices(4, [[1]]))


def test_type_ii_tuples_rm24():
    ts = enumerate_type_ii_tuples(construct_rm(2, 4), 2)
    assert len(ts) == 3
    assert sum(type_ii_term(t) for t in ts) == count_type_ii(construct_rm(2, 4), 2) == 448
    with pytest.raises(InputError):
        enumerate_type_ii_tuples(construct_rm(2, 4), 3)


def test_type_ii_tuple_validation():
    p = lambda s: Monomial.parse(5, s)
    TypeIITuple(p("x0"), (p("x0x1x2"), p("x0x3x4")))
    with pytest.raises(InputError):
        TypeIITuple(p("x0"), (p("x0x1x2"),))
    with pytest.raises(InputError):
        TypeIITuple(p("x0"), (p("x0x1x2"), p("x0x2x3")))
    with pytest.raises(InputError):
        TypeIITuple(Monomial.one(5), (p("x0x1x2"), p("x0x3x4")))


def r3_sets(m, count, seed):
    rng = np.random.default_rng(seed)
    cubic = all_monomials(m, 3)
    out = []
    while len(out) < count:
        gens = [cubic[i] for i in rng.choice(len(cubic), size=2, replace=False)]
        I = decreasing_closure(gens, m)
        if len(I) <= 22 and I not in out:
            out.append(I)
    return out


@pytest.mark.parametrize("m", [5, 6])
def test_low_weight_spectrum_against_oracle(m):
    for I in r3_sets(m, 8, m):
        wd = brute_force_wd(CodeSpec(I))
        entries = low_weight_spectrum(I)
        w_min = 1 << (m - 3)
        for e in entries:
            assert e.count == wd[e.weight] if e.exact else e.count <= wd[e.weight]
        if all(e.exact for e in entries):
            for w in range(w_min, 2 * w_min):
                assert spectrum_count(entries, w, w_min) == wd[w]


def test_inexact_entries_flagged():
    entries = low_weight_spectrum(construct_rm(3, 6))
    flags = {e.mu: e.exact for e in entries}
    assert flags[1] and flags[2] and not flags[3]
    with pytest.raises(InputError):
        spectrum_count(entries, 9, 8)


def test_spectrum_count_range():
    entries = low_weight_spectrum(construct_rm(2, 5))
    assert spectrum_count(entries, 9, 8) == 0
    with pytest.raises(InputError):
        spectrum_count(entries, 16, 8)


@pytest.mark.parametrize("r,m", [(0, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6)])
def test_dual_of_reed_muller(r, m):
    code = construct_rm(r, m)
    dual = CodeSpec(dual_set(code))
    assert dual.info_set == construct_rm(m - r - 1, m).info_set
    if max(code.k, dual.k) <= 22:
        assert macwilliams_dual_wd(brute_force_wd(code)).counts == brute_force_wd(dual).counts


def test_macwilliams_checks():
    with pytest.raises(ConsistencyError):
        macwilliams_dual_wd(WeightDistribution(2, 2, {0: 1, 1: 3}))
    with pytest.raises(InputError):
        macwilliams_dual_wd(WeightDistribution(4, 2, {0: 1, 2: 1}))
    full = WeightDistribution(4, 4, {w: comb(4, w) for w in range(5)})
    assert macwilliams_dual_wd(full).counts == {0: 1}
