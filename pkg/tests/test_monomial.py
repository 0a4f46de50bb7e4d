from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdx.errors import InputError
from wdx.monomial import (
    Monomial,
    MonomialSet,
    all_monomials,
    alpha,
    canonical_sort,
    complement,
    decreasing_closure,
    divides,
    free_below,
    gcd,
    is_decreasing,
    lambda_partition,
    lambda_restricted,
    lambda_size,
    leq,
    monomial_to_row,
    row_to_monomial,
    shift_leq,
)


def leq_by_definition(f, g):
    """f divides some monomial of g's degree whose indices dominate f's."""
    if f.degree > g.degree:
        return False
    a = sorted(f.indices)
    return any(all(x <= y for x, y in zip(a, sorted(s))) for s in combinations(g.indices, f.degree))


@pytest.mark.parametrize("m", range(1, 7))
def test_leq_matches_definition(m):
    ms = all_monomials(m)
    for f in ms:
        for g in ms:
            assert leq(f, g) == leq_by_definition(f, g), (f, g)


@pytest.mark.parametrize("m", range(1, 6))
def test_leq_is_partial_order(m):
    ms = all_monomials(m)
    for f in ms:
        assert leq(f, f)
        for g in ms:
            if f != g and leq(f, g):
                assert not leq(g, f)
            for h in ms:
                if leq(f, g) and leq(g, h):
                    assert leq(f, h)


def test_divides_implies_leq():
    for f in all_monomials(5):
        for g in all_monomials(5):
            if divides(f, g):
                assert leq(f, g)


def test_shift_leq_requires_equal_degree():
    with pytest.raises(InputError):
        shift_leq(Monomial.parse(4, "x0"), Monomial.parse(4, "x0x1"))
    assert shift_leq(Monomial.parse(4, "x0x2"), Monomial.parse(4, "x1x3"))


def test_lambda_values():
    f = Monomial.parse(5, "x0x2x4")
    g = Monomial.parse(5, "x2x4")
    assert lambda_partition(f).parts == (2, 1, 0)
    assert lambda_partition(g).parts == (3, 2)
    assert lambda_restricted(f, g).parts == (2, 1)
    assert lambda_size(Monomial.one(5)) == 0
    with pytest.raises(InputError):
        lambda_partition(Monomial.one(5))


@given(st.integers(1, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, (1 << m) - 1))))
def test_lambda_size_counts_free_variables(args):
    m, mask = args
    f = Monomial(m, mask)
    assert lambda_size(f) == sum(free_below(f, i) for i in f.indices)
    assert lambda_partition(f).size == lambda_size(f)


def test_alpha_cases():
    p = lambda s: Monomial.parse(6, s)
    assert alpha(p("x0x1"), p("x2x3")) == 0
    assert alpha(p("x0x2"), p("x1x3")) == 1
    assert alpha(p("x0x3"), p("x1x2")) == 2
    assert alpha(p("x1x2"), p("x0x3")) == 2
    with pytest.raises(InputError):
        alpha(p("x0x1"), p("x1x2"))
    with pytest.raises(InputError):
        alpha(p("x0"), p("x1x2"))


def test_row_bijection():
    for m in (1, 3, 6):
        rows = [row_to_monomial(m, i) for i in range(1 << m)]
        assert len(set(rows)) == 1 << m
        assert all(monomial_to_row(f) == i for i, f in enumerate(rows))
    assert str(row_to_monomial(3, 0)) == "x0x1x2"
    assert str(row_to_monomial(3, 7)) == "1"


def test_parse_and_str():
    f = Monomial.parse(5, "x0x2x4")
    assert f.indices == (0, 2, 4) and str(f) == "x0x2x4"
    assert Monomial.parse(3, "1") == Monomial.one(3)
    for bad in ("x0x0", "x9", "y1", ""):
        with pytest.raises(InputError):
            Monomial.parse(5, bad)
    with pytest.raises(InputError):
        Monomial(17, 0)


def test_algebra():
    f = Monomial.parse(5, "x0x2x4")
    g = Monomial.parse(5, "x2x3")
    assert gcd(f, g) == Monomial.parse(5, "x2")
    assert f / Monomial.parse(5, "x2") == Monomial.parse(5, "x0x4")
    assert f * g == Monomial.parse(5, "x0x2x3x4")
    assert complement(f) == Monomial.parse(5, "x1x3")
    with pytest.raises(InputError):
        f / g
    with pytest.raises(InputError):
        divides(f, Monomial.parse(6, "x0"))


def decreasing_by_definition(s):
    return all(g in s for f in s for g in all_monomials(s.m) if leq(g, f))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda m: st.tuples(st.just(m), st.sets(st.integers(0, (1 << m) - 1), max_size=6))))
def test_closure_is_smallest_decreasing_superset(args):
    m, masks = args
    gens = [Monomial(m, x) for x in masks]
    c = decreasing_closure(gens, m)
    assert is_decreasing(c) and decreasing_by_definition(c)
    want = {g for g in all_monomials(m) if any(leq(g, f) for f in gens)}
    assert c.members == want


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5).flatmap(lambda m: st.tuples(st.just(m), st.sets(st.integers(0, (1 << m) - 1)))))
def test_is_decreasing_matches_definition(args):
    m, masks = args
    s = MonomialSet(m, (Monomial(m, x) for x in masks))
    assert is_decreasing(s) == decreasing_by_definition(s)


def test_canonical_order_and_set_ops():
    ms = canonical_sort(all_monomials(4, 2))
    assert [str(f) for f in ms] == ["x0x1", "x0x2", "x1x2", "x0x3", "x1x3", "x2x3"]
    s = MonomialSet.from_indices(4, [[], [0], [1]])
    assert [str(f) for f in s] == ["1", "x0", "x1"]
    assert s.layer(1) == [Monomial.parse(4, "x0"), Monomial.parse(4, "x1")]
    assert len(s | MonomialSet.from_indices(4, [[2]])) == 4
    assert len(s - [Monomial.one(4)]) == 2
    assert MonomialSet(4).max_degree == -1
    with pytest.raises(InputError):
        MonomialSet(4, [Monomial.one(5)])
