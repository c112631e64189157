import pytest
from hypothesis import given, strategies as st

from algebra.exceptions import AlphabetMismatchError, InexactDivisionError, ParameterRangeError
from algebra.polyring import LinearForm, MultiPoly, bareiss_det, expand_linear_forms

N = 3


@st.composite
def polys(draw, n=N, max_terms=4, max_exp=2):
    terms = draw(st.dictionaries(
        st.tuples(st.just(0), st.tuples(*[st.integers(0, max_exp)] * n), st.just(())),
        st.integers(-3, 3),
        max_size=max_terms,
    ))
    return MultiPoly(n, None, terms)


def x(i, n=N):
    return MultiPoly.x(i, n)


def test_zero_coefficients_are_dropped():
    p = MultiPoly(2, None, {(0, (1, 0), ()): 0, (0, (0, 1), ()): 2})
    assert len(p) == 1
    assert p.coefficient((0, 1)) == 2
    assert MultiPoly.zero(2) == 0


def test_terms_must_fit_alphabets():
    with pytest.raises(ParameterRangeError):
        MultiPoly(2, None, {(0, (1, 0, 0), ()): 1})


def test_mixing_alphabets_raises():
    with pytest.raises(AlphabetMismatchError):
        MultiPoly.x(1, 2) + MultiPoly.x(1, 3)


def test_basic_arithmetic():
    p = (x(1) + x(2)) ** 2
    assert p.coefficient((1, 1, 0)) == 2
    assert p - x(1) * x(1) - x(2) * x(2) == (x(1) * x(2)).scale(2)
    assert 1 + x(1) - 1 == x(1)
    assert p.degree() == 2
    assert p.is_homogeneous()
    assert MultiPoly.zero(3).degree() == -1


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys(), polys())
def test_exact_division_recovers_factor(a, b):
    if not b:
        return
    assert (a * b).exact_divide(b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (x(1) + 1).exact_divide(x(2))
    with pytest.raises(InexactDivisionError):
        x(1).exact_divide(MultiPoly.zero(3))


def test_specializations():
    p = x(1) * MultiPoly.q(3) + x(2) * x(3)
    assert p.q_degrees() == [0, 1]
    assert p.q_coefficient(1) == x(1)
    assert p.specialize_q(2) == x(1).scale(2) + x(2) * x(3)
    assert p.evaluate_all_ones() == 2
    assert p.evaluate_all_ones(q=-1) == 0
    assert p.evaluate((2, 3, 5), q=1) == 17


def test_permute_and_set_y_zero():
    p = MultiPoly.monomial(3, (2, 1, 0))
    assert p.permute_x([3, 1, 2]) == MultiPoly.monomial(3, (1, 0, 2))
    f = MultiPoly.x(1, 2, m=1) + MultiPoly.y(1, 2, 1)
    assert f.set_y_zero() == MultiPoly.x(1, 2)


def test_linear_form_product_matches_naive_product():
    forms = [LinearForm.subset_sum(s, 3) for s in ((1, 2), (1, 3), (2, 3))]
    naive = (x(1) + x(2)) * (x(1) + x(3)) * (x(2) + x(3))
    assert expand_linear_forms(forms) == naive
    assert expand_linear_forms(forms * 3, threads=3) == naive ** 3


def test_linear_form_with_constant_and_q():
    form = LinearForm((1, 1), const=1, qx=(1, 0))
    expected = 1 + MultiPoly.x(1, 2) + MultiPoly.x(2, 2) + MultiPoly.x(1, 2) * MultiPoly.q(2)
    assert form.to_poly() == expected


def test_empty_product_needs_alphabet():
    assert expand_linear_forms([], 2) == MultiPoly.one(2)
    with pytest.raises(ParameterRangeError):
        expand_linear_forms([])


def test_to_json_is_canonical():
    p = x(2) + x(1).scale(3)
    assert p.to_json() == [{"q": 0, "x": [0, 1, 0], "c": "1"}, {"q": 0, "x": [1, 0, 0], "c": "3"}]


def _cofactor_det(matrix):
    if not matrix:
        return 1
    return sum((-1) ** j * matrix[0][j] * _cofactor_det([row[:j] + row[j + 1:] for row in matrix[1:]])
               for j in range(len(matrix)))


@given(st.integers(1, 4).flatmap(
    lambda size: st.lists(st.lists(st.integers(-5, 5), min_size=size, max_size=size), min_size=size, max_size=size)))
def test_bareiss_matches_cofactor_expansion(matrix):
    assert bareiss_det(matrix) == _cofactor_det(matrix)


def test_bareiss_over_polynomials():
    a, b = x(1), x(2)
    matrix = [[a, b], [b, a]]
    assert bareiss_det(matrix) == a * a - b * b
    assert bareiss_det([]) == 1
    assert bareiss_det([[2, 0, 0], [0, 1, 0], [0, 0, 1]]) == 2
