import json

import pytest

from algebra.boolprod import boolean_product, check_schur_positive
from algebra.chern import Base, chern_roots
from algebra.combinat import Partition
from algebra.lascoux import rff_enumerate
from algebra.polyring import MultiPoly
from algebra.schurbasis import GradedSchurSeries, SchurVector
from algebra.symexpand import SchurExpansion, schur_expand
from services.render_service import RenderService


@pytest.fixture
def expansion():
    return SchurExpansion(3, {Partition(): 1, Partition([1]): 2, Partition([2, 1]): -1})


def test_json_is_compact_and_ordered(expansion):
    text = RenderService("json").render(expansion)
    assert text == '{"n":3,"terms":[{"lambda":[],"coeff":"1"},{"lambda":[1],"coeff":"2"},{"lambda":[2,1],"coeff":"-1"}]}'


def test_json_for_boolean_expand():
    text = RenderService("json").render(schur_expand(boolean_product(3, 2)))
    assert text == '{"n":3,"terms":[{"lambda":[2,1],"coeff":"1"}]}'


def test_json_for_polynomials_and_lists():
    p = MultiPoly.x(1, 2) + MultiPoly.x(2, 2)
    assert json.loads(RenderService("json").render(p)) == {
        "n": 2, "m": None, "terms": [{"q": 0, "x": [0, 1], "c": "1"}, {"q": 0, "x": [1, 0], "c": "1"}]}
    fillings = rff_enumerate([1], 3)
    assert json.loads(RenderService("json").render(fillings)) == [[[2]], [[1]]]


def test_plain_rendering(expansion):
    assert RenderService().render(expansion) == "[]\t1\n[1]\t2\n[2, 1]\t-1"
    assert RenderService().render(SchurVector()) == "0"
    p = MultiPoly.x(1, 2).scale(2) - MultiPoly.monomial(2, (0, 2))
    assert RenderService().render(p) == "-x2^2 + 2*x1"


def test_plain_rendering_of_reports_and_roots():
    report = check_schur_positive(MultiPoly.monomial(2, (2, 0)) + MultiPoly.monomial(2, (0, 2)))
    lines = RenderService().render(report).splitlines()
    assert lines[0] == "positive: False"
    assert lines[1].startswith("violation:")
    roots = RenderService().render(chern_roots(Base("E", 2)))
    assert roots.splitlines() == ["((0, 1), ())\t1", "((1, 0), ())\t1"]


def test_latex_rendering(expansion):
    assert RenderService("latex").render(expansion) == \
        r"s_{\emptyset}(X_{3}) + 2s_{(1)}(X_{3}) - s_{(2,1)}(X_{3})"
    series = GradedSchurSeries({(0, 0, Partition([2])): 1, (1, 2, Partition([1, 1])): 3})
    assert RenderService("latex").render(series) == r"s_{(2)} + 3qt^{2}s_{(1,1)}"
    p = MultiPoly.monomial(2, (2, 1), q=1)
    assert RenderService("latex").render(p) == "qx_{1}^{2}x_{2}"


def test_unknown_format():
    with pytest.raises(ValueError):
        RenderService("yaml")
