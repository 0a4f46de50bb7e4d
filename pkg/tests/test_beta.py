from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from wdx.beta import beta_compare, beta_sum


def fsum(ix):
    return sum(2 ** (i / 4) for i in ix)


@given(st.sets(st.integers(0, 15), max_size=8), st.sets(st.integers(0, 15), max_size=8))
def test_compare_agrees_with_floats(a, b):
    x, y = fsum(a), fsum(b)
    c = beta_compare(beta_sum(sorted(a)), beta_sum(sorted(b)))
    if abs(x - y) > 1e-9:
        assert c == (1 if x > y else -1)
    assert abs(float(beta_sum(sorted(a))) - x) < 1e-9


def test_exact_ties_are_equal():
    assert beta_compare(beta_sum([0, 4]), beta_sum([4, 0])) == 0
    assert beta_sum([0, 4]) == beta_sum([4, 0])


def test_no_ties_between_distinct_index_sets_m8():
    sums = {}
    for d in range(0, 9):
        for ix in combinations(range(8), d):
            key = beta_sum(ix)
            assert key not in sums, (ix, sums.get(key))
            sums[key] = ix


def test_ordering():
    assert beta_sum([0, 1]) < beta_sum([0, 2]) < beta_sum([1, 2])
    assert beta_sum([]) < beta_sum([0])
