from math import comb

import pytest

from algebra.combinat import Partition, partitions_inside, staircase
from algebra.lascoux import (
    PathFamily,
    RFFilling,
    asm_count,
    binom,
    binomial_det,
    f_sequence,
    f_sequence_by_fillings,
    gv_enumerate,
    gv_from_filling,
    gv_to_filling,
    kirillov_fillings,
    kirillov_inverse,
    kirillov_transform,
    lascoux_det,
    lascoux_summary,
    lascoux_sym_expansion,
    lascoux_theorem_expansion,
    lascoux_wedge_expansion,
    rff_enumerate,
    sym_product,
    wedge_product,
)
from algebra.exceptions import ParameterRangeError
from algebra.schurbasis import SchurVector
from algebra.symexpand import schur_expand

WEDGE_3 = SchurVector({Partition(): 1, Partition([1]): 2, Partition([2]): 1, Partition([1, 1]): 2, Partition([2, 1]): 1})


def test_binomial_convention():
    assert binom(0, 0) == 1
    assert binom(2, 3) == 0
    assert binom(3, -1) == 0
    assert binom(4, 1) == 4


def test_lascoux_determinants_at_three():
    assert lascoux_det([2, 1], [1], 3) == 8
    assert lascoux_det([2, 1], [], 3) == 8
    assert binomial_det([1], 3) == 2
    assert binomial_det([2, 1], 3) == 1


def test_filling_counts_at_three():
    counts = [len(rff_enumerate(mu, 3)) for mu in partitions_inside(staircase(2))]
    assert counts == [1, 2, 1, 2, 1]
    assert all(t.is_valid() for mu in partitions_inside(staircase(2)) for t in rff_enumerate(mu, 3))


def test_filling_validity_rules():
    assert RFFilling.from_rows([[2], [1]], 3).is_valid()
    assert not RFFilling.from_rows([[1], [2]], 3).is_valid()
    assert not RFFilling.from_rows([[3]], 3).is_valid()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_three_way_counts(n):
    for mu in partitions_inside(staircase(n - 1)):
        fillings = len(rff_enumerate(mu, n))
        assert fillings == binomial_det(mu, n) == len(gv_enumerate(mu, n))
        assert lascoux_det(staircase(n - 1), mu, n) == fillings * 2 ** (comb(n, 2) - mu.size)


def test_wedge_expansion_at_three():
    assert lascoux_wedge_expansion(3) == WEDGE_3
    assert lascoux_theorem_expansion(3, "wedge") == WEDGE_3
    assert SchurVector.from_expansion(schur_expand(wedge_product(3))) == WEDGE_3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_expansions_match_products(n):
    wedge = SchurVector.from_expansion(schur_expand(wedge_product(n)))
    sym = SchurVector.from_expansion(schur_expand(sym_product(n)))
    assert lascoux_wedge_expansion(n) == wedge == lascoux_theorem_expansion(n, "wedge")
    assert lascoux_sym_expansion(n) == sym == lascoux_theorem_expansion(n, "sym")


def test_theorem_expansion_kind():
    with pytest.raises(ParameterRangeError):
        lascoux_theorem_expansion(3, "tensor")


def test_asm_numbers():
    assert [asm_count(n) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]
    for n in range(1, 6):
        assert lascoux_wedge_expansion(n).total() == asm_count(n)
    assert lascoux_summary(3) == {"n": 3, "fillings": 7, "asm": 7}


def test_f_sequence():
    assert [f_sequence(n) for n in range(1, 5)] == [3, 16, 147, 2304]
    assert [f_sequence_by_fillings(n) for n in range(1, 4)] == [3, 16, 147]


@pytest.mark.slow
def test_f_sequence_five():
    assert f_sequence(5) == 61347


def test_figure_family():
    family = PathFamily(5, Partition([2, 2, 1, 1]), ("ENEN", "NEN", "EN", "N", ""))
    assert family.is_nonintersecting()
    assert family in gv_enumerate([2, 2, 1, 1], 5)
    assert [family.points(i)[-1] for i in range(1, 6)] == [family.end(i) for i in range(1, 6)]
    assert [family.end(i) for i in range(1, 6)] == [(2, 6), (3, 5), (5, 3), (6, 2), (8, 0)]
    filling = gv_to_filling(family)
    assert filling.rows == ((3, 1), (3, 1), (1,), (1,))
    assert gv_from_filling(filling) == family


@pytest.mark.parametrize("n", [2, 3, 4])
def test_path_bijection_round_trips(n):
    for mu in partitions_inside(staircase(n - 1)):
        families = gv_enumerate(mu, n)
        assert sorted(gv_to_filling(f).rows for f in families) == sorted(t.rows for t in rff_enumerate(mu, n))
        for family in families:
            assert gv_from_filling(gv_to_filling(family)) == family


def test_kirillov_transform_is_a_bijection():
    n = 4
    for mu in partitions_inside(staircase(n - 1)):
        images = [kirillov_transform(t) for t in rff_enumerate(mu, n)]
        assert sorted(t.rows for t in images) == sorted(t.rows for t in kirillov_fillings(mu.conjugate(), n))
        for t, image in zip(rff_enumerate(mu, n), images):
            assert image.is_semistandard()
            assert kirillov_inverse(image, n) == t
