from hypothesis import given, strategies as st

from algebra.combinat import Partition, partitions_of
from algebra.polyring import MultiPoly
from algebra.schurbasis import (
    GradedSchurSeries,
    SchurVector,
    e_h_product,
    pieri_e,
    pieri_h,
    restrict_to_vars,
    series_specialize,
    series_sum,
)
from algebra.symexpand import complete_poly, elementary_poly, schur_expand, schur_poly


def test_vector_arithmetic_drops_zeros():
    v = SchurVector.s([2]) + SchurVector.s([1, 1], 2)
    assert (v - SchurVector.s([2])).terms == {Partition([1, 1]): 2}
    assert not (v - v)
    assert v.total() == 3
    assert v.dimension() == 3
    assert (v + SchurVector.s([1])).degree_component(2) == v


def test_pieri_rules():
    assert pieri_h(SchurVector.s([1]), 1) == SchurVector.s([2]) + SchurVector.s([1, 1])
    assert pieri_e(SchurVector.s([1]), 2) == SchurVector.s([2, 1]) + SchurVector.s([1, 1, 1])
    assert SchurVector.one().pieri_h(3) == SchurVector.h(3)


def test_e_h_product_small_cases():
    assert e_h_product(0, 3) == SchurVector({Partition([3]): 1, Partition([2, 1]): 2, Partition([1, 1, 1]): 1})
    assert e_h_product(2, 1) == SchurVector.s([2, 1]) + SchurVector.s([1, 1, 1])


def test_e_h_product_restricted_to_three_variables():
    assert restrict_to_vars(e_h_product(2, 1), 3) == elementary_poly(2, 3) * elementary_poly(1, 3)


@given(st.sampled_from([lam for d in range(4) for lam in partitions_of(d)]), st.integers(0, 3))
def test_pieri_agrees_with_polynomial_product(lam, r):
    n = 4
    product = schur_poly(lam, n) * complete_poly(r, n)
    assert pieri_h(SchurVector.s(lam), r).to_expansion(n).terms == schur_expand(product).terms
    product = schur_poly(lam, n) * elementary_poly(r, n)
    assert pieri_e(SchurVector.s(lam), r).to_expansion(n).terms == schur_expand(product).terms


def test_restrict_drops_long_shapes():
    v = SchurVector.s([1, 1, 1]) + SchurVector.s([3])
    assert v.restrict(2) == SchurVector.s([3])
    assert restrict_to_vars(v, 2) == complete_poly(3, 2)


def test_series_specialization():
    g = GradedSchurSeries({(0, 0, Partition([2])): 1, (1, 0, Partition([1, 1])): 1, (0, 1, Partition([1, 1])): 1})
    assert g.specialize(q=1, t=1) == SchurVector.s([2]) + SchurVector.s([1, 1], 2)
    assert g.specialize(q=-1, t=1) == SchurVector.s([2])
    assert series_specialize(g, t_value=0) == GradedSchurSeries({(0, 0, Partition([2])): 1, (1, 0, Partition([1, 1])): 1})
    assert g.q_degrees() == [0, 1]
    assert g.dimension() == 3
    assert g.is_nonnegative()


def test_series_shift_and_sum():
    v = SchurVector.s([1])
    g = GradedSchurSeries.from_vector(v).shift(q=1, t=2)
    assert g.coefficient(1, 2, [1]) == 1
    assert series_sum([g, g]).coefficient(1, 2, [1]) == 2
    assert g.map_schur(lambda w: pieri_h(w, 1)) == GradedSchurSeries.from_vector(pieri_h(v, 1), q=1, t=2)


def test_series_json_order():
    g = GradedSchurSeries({(1, 0, Partition([1])): 1, (0, 0, Partition()): 2})
    assert g.to_json() == {"terms": [{"q": 0, "t": 0, "lambda": [], "coeff": "2"},
                                     {"q": 1, "t": 0, "lambda": [1], "coeff": "1"}]}


def test_restrict_to_vars_of_empty_vector():
    assert restrict_to_vars(SchurVector(), 3) == MultiPoly.zero(3)
