import pytest
from hypothesis import given, strategies as st

from parastd.errors import DimensionMismatch
from parastd.orders import (
    BLOCK,
    GLOBAL,
    HOMOGENIZED,
    LOCAL,
    MIXED,
    CompositeOrder,
    MonomialOrder,
    classify,
    compare,
    composite_compare,
    exp_add,
    grevlex,
    homogenized_order,
    is_degree_compatible_local,
    lex,
    matrix_order,
    neg_grevlex,
)

LOCAL_ORDER = matrix_order([[-1, -1], [-1, 0]])
GREVLEX2 = matrix_order([[1, 1], [0, -1]])


def test_compare_local_order_prefers_low_weight():
    # under the local order x2 beats x1
    assert compare(LOCAL_ORDER, (1, 0), (0, 1)) == -1
    assert compare(LOCAL_ORDER, (0, 1), (1, 0)) == 1


def test_compare_reflexive():
    assert compare(LOCAL_ORDER, (2, 3), (2, 3)) == 0


def test_compare_grevlex():
    assert compare(GREVLEX2, (2, 0), (1, 1)) == 1


def test_compare_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compare(LOCAL_ORDER, (1, 0, 0), (0, 1, 0))


def test_classify_examples():
    assert classify(GREVLEX2) == GLOBAL
    assert classify(LOCAL_ORDER) == LOCAL
    assert classify(matrix_order([[1, -1], [1, 0]])) == MIXED
    assert classify(lex(3)) == GLOBAL
    assert classify(neg_grevlex(3)) == LOCAL


def test_homogenized_order_construction():
    h = homogenized_order(LOCAL_ORDER)
    assert h.rows == ((1, 1, 1), (-1, -1, 0), (-1, 0, 0))
    assert classify(h) == GLOBAL


def test_homogenized_order_comparisons():
    h = homogenized_order(LOCAL_ORDER)
    # x2*z vs x1*x2: equal degree, the local main order prefers x2
    assert compare(h, (0, 1, 1), (1, 1, 0)) == 1
    # z vs x1: equal degree, 1 beats x1 locally, so z wins
    assert compare(h, (0, 0, 1), (1, 0, 0)) == 1


def test_composite_block_compare():
    co = CompositeOrder(lex(2), param_dims=1, variant=BLOCK)
    # a*x1 vs a^2*x2: the x part decides
    assert composite_compare(co, ((1,), (1, 0)), ((2,), (0, 1))) == 1
    # a*x1 vs a^2*x1: x parts equal, parameter part decides
    assert composite_compare(co, ((1,), (1, 0)), ((2,), (1, 0))) == -1


def test_composite_homogenized_compare():
    co = CompositeOrder(LOCAL_ORDER, param_dims=1, variant=HOMOGENIZED)
    # a*x1*z vs x1*x2: compared by the homogenized main part first
    left = ((1,), (1, 0, 1))
    right = ((0,), (1, 1, 0))
    assert composite_compare(co, left, right) == compare(
        homogenized_order(LOCAL_ORDER), (1, 0, 1), (1, 1, 0))


def test_degree_compatibility_check():
    assert is_degree_compatible_local(LOCAL_ORDER)
    assert is_degree_compatible_local(neg_grevlex(3))
    assert not is_degree_compatible_local(matrix_order([[-1, -2], [-1, 0]]))
    assert not is_degree_compatible_local(grevlex(2))


small_exp = st.tuples(*[st.integers(min_value=0, max_value=6)] * 3)
orders3 = st.sampled_from([
    lex(3), grevlex(3), neg_grevlex(3),
    matrix_order([[-1, -1, -1], [-1, 0, 0], [0, -1, 0]]),
    matrix_order([[1, 2, 0], [0, -1, 3]]),
])


@given(orders3, small_exp, small_exp)
def test_totality(order, a, b):
    c = compare(order, a, b)
    assert c in (-1, 0, 1)
    assert (c == 0) == (a == b)
    assert compare(order, b, a) == -c


@given(orders3, small_exp, small_exp, small_exp)
def test_product_compatibility(order, a, b, g):
    assert compare(order, a, b) == compare(order, exp_add(a, g), exp_add(b, g))


@given(orders3)
def test_homogenized_always_global(order):
    assert classify(homogenized_order(order)) == GLOBAL


@given(st.integers(min_value=0, max_value=4),
       st.tuples(*[st.integers(min_value=0, max_value=4)] * 2),
       st.tuples(*[st.integers(min_value=0, max_value=4)] * 2))
def test_block_order_eliminates_main_variables(k, xpart, gamma):
    # with a global main order, any monomial containing an x variable
    # exceeds every pure-parameter monomial
    co = CompositeOrder(grevlex(2), param_dims=2, variant=BLOCK)
    if sum(xpart) == 0:
        return
    assert composite_compare(co, ((0, k), xpart), (gamma, (0, 0))) == 1


def test_product_compatibility_bulk():
    import random
    rng = random.Random(5)
    pools = {
        4: [lex(4), grevlex(4), neg_grevlex(4),
            matrix_order([[-2, -1, -3, -1], [0, 0, -1, 0]])],
        6: [lex(6), grevlex(6), neg_grevlex(6),
            matrix_order([[1, -1, 2, 0, 0, -3], [0, 1, 0, -1, 0, 0]])],
    }
    for _ in range(1000):
        n = rng.choice([4, 6])
        order = rng.choice(pools[n])
        a, b, g = (tuple(rng.randint(0, 5) for _ in range(n)) for _ in range(3))
        assert compare(order, a, b) == compare(order, exp_add(a, g), exp_add(b, g))
