import pytest

from tables import M6_LEVEL4, POLAR_128_25, POLAR_256_30_LOW, order_column
from wdx.codewords import brute_force_wd
from wdx.construct import (
    beta_leq,
    blended_order,
    code_leq_w,
    construct_polar,
    construct_rm,
    construct_rmxpolar,
    construct_wmin_beta,
    poset_levels,
    reliability_order,
    wmin_leq,
)
from wdx.enumeration import complete_wd_rm2_subcode, low_weight_spectrum
from wdx.errors import InputError
from wdx.monomial import Monomial, all_monomials, is_decreasing, lambda_size, leq


@pytest.mark.parametrize("m", range(5, 10))
def test_blended_order_columns(m):
    assert [list(f.indices) for f in blended_order(m)] == order_column(m)


def test_level_sizes():
    assert [len(l) for l in poset_levels(6)] == [1, 1, 2, 2, 3, 2, 2, 1, 1]
    assert [list(f.indices) for f in poset_levels(6)[4].members] == M6_LEVEL4
    with pytest.raises(InputError):
        poset_levels(2)


def test_orders():
    p = lambda s: Monomial.parse(7, s)
    assert wmin_leq(p("x0x6"), p("x2x5"))
    assert beta_leq(p("x2x5"), p("x0x6"))
    assert not beta_leq(p("x0x6"), p("x2x5"))
    with pytest.raises(InputError):
        wmin_leq(p("x0"), p("x0x1"))


def test_reliability_order_extends_partial_order():
    order = reliability_order(all_monomials(6))
    pos = {f: i for i, f in enumerate(order)}
    for f in order:
        for g in order:
            if f != g and leq(f, g):
                assert pos[f] < pos[g]


@pytest.mark.parametrize("m,k", [(5, 10), (6, 30), (7, 25), (8, 30), (9, 100)])
def test_constructions_are_decreasing(m, k):
    for code in (construct_polar(m, k), construct_rmxpolar(m, k)):
        assert code.k == k and is_decreasing(code.info_set)


def test_rm_dimensions():
    assert construct_rm(2, 7).k == 29
    assert construct_rm(3, 3).k == 8
    with pytest.raises(InputError):
        construct_rm(4, 3)


def test_rmxpolar_128_25_layout():
    code = construct_rmxpolar(7, 25)
    assert code.r == 2 and len(code.info_set.layer(2)) == 17


def test_polar_128_25():
    code = construct_polar(7, 25)
    assert sorted(list(f.indices) for f in code.info_set.layer(3)) == [[0, 1, 2], [0, 1, 3]]
    wd = brute_force_wd(code)
    for w, c in POLAR_128_25.items():
        assert wd[w] == c == wd[128 - w]


def test_polar_256_30_low_weights():
    code = construct_polar(8, 30)
    spectrum = {e.weight: e for e in low_weight_spectrum(code)}
    for w, c in POLAR_256_30_LOW.items():
        assert spectrum[w].count == c and spectrum[w].exact


def test_wmin_beta_fills_levels_then_reliability():
    code = construct_wmin_beta(6, 15)
    assert Monomial.parse(6, "x0x5") not in code.info_set
    assert {Monomial.parse(6, "x2x3"), Monomial.parse(6, "x1x4")} <= code.info_set.members
    with pytest.raises(InputError):
        construct_wmin_beta(6, 6)
    with pytest.raises(InputError):
        construct_wmin_beta(6, 23)


def test_wmin_beta_minimises_min_weight_count():
    for k in range(8, 30):
        code = construct_wmin_beta(7, k)
        levels = sorted(lambda_size(f) for f in code.info_set.layer(2))
        others = sorted(lambda_size(f) for f in all_monomials(7, 2))[: len(levels)]
        assert levels == others


def test_code_leq_w():
    full = construct_wmin_beta(6, 16)
    less = full.info_set - [Monomial.parse(6, "x0x5")]
    assert code_leq_w(full.info_set, less, 16)
    assert not code_leq_w(less, full.info_set, 16)
    assert code_leq_w(full, less, (16, 24))
    assert code_leq_w(construct_polar(7, 25), construct_rmxpolar(7, 25), (16, 24))
    with pytest.raises(InputError):
        code_leq_w(construct_rm(3, 6), construct_rm(3, 6), 20)
    wd = complete_wd_rm2_subcode(full)
    assert wd[16] == 300
