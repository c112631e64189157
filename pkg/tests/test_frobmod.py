from math import factorial

import pytest

from algebra.combinat import Partition, Permutation, derangements
from algebra.exceptions import InexactDivisionError, ParameterRangeError, UndefinedTermError
from algebra.frobmod import (
    Positroid,
    apply_generator,
    braid_relations_hold,
    coinvariant_grfrob,
    derangement_qsym_check,
    divergence_free_grfrob,
    hrs_grfrob,
    hrs_superspace,
    hrs_undefined_terms,
    polynomial_ring_grfrob,
    positroid_act,
    positroid_character,
    positroid_enumerate,
    positroid_frobenius,
    reduced_word,
    reiner_webb,
    signed_eh_sum,
    superspace_grfrob,
    t_binomial,
)
from algebra.schurbasis import GradedSchurSeries, SchurVector, e_h_product, pieri_e
from algebra.boolprod import boolean_q_abstract


def test_positroid_words():
    words = positroid_enumerate(3)
    assert len(words) == 16
    assert words[0] == Positroid([1, 2, 3])
    assert words[-1] == Positroid([0, 0, 0])
    assert [len(positroid_enumerate(n)) for n in range(5)] == [1, 2, 5, 16, 65]
    with pytest.raises(ParameterRangeError):
        Positroid([2, 0])


def test_generator_sign():
    assert apply_generator(1, [0, 0, 1]) == (Positroid([0, 0, 1]), -1)
    assert apply_generator(2, [0, 0, 1]) == (Positroid([0, 1, 0]), 1)


def test_reduced_words_realize_the_permutation():
    for w in (Permutation([3, 1, 2]), Permutation([2, 3, 1]), Permutation([3, 2, 1])):
        for strategy in ("first", "last"):
            word = list(range(1, 4))
            for i in reduced_word(w, strategy):
                word[i - 1], word[i] = word[i], word[i - 1]
            assert len(reduced_word(w, strategy)) == sum(
                1 for a in range(3) for b in range(a + 1, 3) if w[a] > w[b])
            # acting on 1..n through the word recovers w or its inverse
            assert Permutation(word) in (w, w.inverse())


def test_action_does_not_depend_on_reduced_word():
    for w in (Permutation([3, 2, 1]), Permutation([2, 3, 1])):
        for v in positroid_enumerate(3):
            assert positroid_act(w, v, "first") == positroid_act(w, v, "last")


def test_braid_relations():
    for n in range(1, 5):
        assert braid_relations_hold(n)


def test_positroid_character_at_identity_is_dimension():
    chi = positroid_character(3)
    assert chi[Partition([1, 1, 1])] == 16


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_positroid_frobenius_matches_e_h_sum(n):
    expected = SchurVector()
    for j in range(n + 1):
        expected = expected + e_h_product(j, n - j)
    assert positroid_frobenius(n) == expected
    assert positroid_frobenius(n, threads=3) == expected


def test_non_integral_character_is_a_division_error(monkeypatch):
    monkeypatch.setattr("algebra.frobmod.positroid_character",
                        lambda n, threads=None: {Partition([2]): 1, Partition([1, 1]): 0})
    with pytest.raises(InexactDivisionError) as info:
        positroid_frobenius(2)
    assert info.value.error_code == "E_DIVISION"


def test_coinvariant_three():
    expected = GradedSchurSeries({(0, 0, Partition([3])): 1, (0, 1, Partition([2, 1])): 1,
                                  (0, 2, Partition([2, 1])): 1, (0, 3, Partition([1, 1, 1])): 1})
    assert coinvariant_grfrob(3) == expected
    assert coinvariant_grfrob(3).specialize(q=1, t=1) == e_h_product(0, 3)


def test_superspace_three():
    series = superspace_grfrob(3)
    expected = coinvariant_grfrob(3)
    expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([2]), 1), q=1)
    expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([1, 1]), 1), q=1, t=1)
    expected = expected + GradedSchurSeries.from_vector(pieri_e(SchurVector.s([1]), 2), q=2)
    expected = expected + GradedSchurSeries.from_vector(SchurVector.e(3), q=3)
    assert series == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_superspace_at_t_one(n):
    assert superspace_grfrob(n).specialize(t=1) == boolean_q_abstract(n)


def test_smallest_ascent_expansion():
    assert reiner_webb(3) == SchurVector.s([2, 1])
    for n in range(2, 7):
        assert reiner_webb(n) == signed_eh_sum(n)
        assert reiner_webb(n).dimension() == len(derangements(n))
    with pytest.raises(ParameterRangeError):
        reiner_webb(1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_derangement_quasisymmetric_expansion(n):
    assert derangement_qsym_check(n)


def test_t_binomial():
    assert t_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert t_binomial(2, 3) == ()
    assert t_binomial(3, 0) == (1,)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hrs_degenerates_to_coinvariants(n):
    assert hrs_grfrob(n, n, n) == coinvariant_grfrob(n)


def test_hrs_dimension_at_k_equals_one():
    # R_{n,1,r} is one-dimensional
    for n in range(1, 5):
        assert hrs_grfrob(n, 1, 0).dimension() == 1


def test_hrs_nonnegative():
    for n in range(5):
        for k in range(n + 1):
            for r in range(k + 1):
                assert hrs_grfrob(n, k, r).is_nonnegative()


def test_hrs_empty_module():
    assert hrs_grfrob(0, 0, 0) == GradedSchurSeries({(0, 0, Partition()): 1})
    with pytest.raises(ParameterRangeError):
        hrs_grfrob(2, 3, 1)


def test_hrs_undefined_term_policies():
    assert hrs_undefined_terms(2, 2, 2) == [1, 2]
    with pytest.raises(UndefinedTermError):
        hrs_superspace(2, 2, 2, policy="error")
    skipped = hrs_superspace(2, 2, 2, policy="skip")
    assert skipped == hrs_grfrob(2, 2, 2)
    clamped = hrs_superspace(2, 2, 2, policy="clamp")
    assert clamped == superspace_grfrob(2)
    with pytest.raises(ParameterRangeError):
        hrs_superspace(2, 2, 2, policy="ignore")


def test_polynomial_ring_series():
    series = polynomial_ring_grfrob(2, 3)
    # Hilbert series of C[x1, x2] is 1/(1-t)^2: coefficients 1, 2, 3, 4
    by_degree = [sum(c for (_, t, _), c in series.terms.items() if t == d) for d in range(4)]
    assert by_degree == [1, 2, 3, 4]
    assert divergence_free_grfrob(1, 2).coefficient(1, 0, [1]) == 1


def test_positroid_dimension():
    for n in range(1, 5):
        assert positroid_frobenius(n).dimension() == sum(factorial(n) // factorial(j) for j in range(n + 1))
