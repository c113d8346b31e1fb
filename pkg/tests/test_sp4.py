from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siegel2.cyclotomic import CONDUCTOR, CycNum, ONE, zeta_pow
from siegel2.sp4 import (
    EigenvaluePairingError,
    character_polynomial,
    dimension,
    evaluate,
    evaluate_at_root_exponents,
)


def test_dimension_formula():
    assert dimension(0, 0) == 1
    assert dimension(1, 0) == 4
    assert dimension(1, 1) == 5
    assert dimension(2, 0) == 10
    assert dimension(2, 2) == 14
    assert dimension(3, 1) == 35
    assert dimension(2, 1) == 16
    with pytest.raises(ValueError):
        dimension(1, 2)
    with pytest.raises(ValueError):
        dimension(2, -1)


def test_standard_representation_character():
    # weight (1,0) is the standard 4-dimensional representation:
    # chi = x + 1/x + y + 1/y
    terms = character_polynomial(1, 0).terms
    assert terms == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}


def test_weight_11_character():
    # weight (1,1): chi = xy + x/y + y/x + 1/(xy) + 1
    terms = character_polynomial(1, 1).terms
    assert terms == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}


def test_trivial_character():
    assert character_polynomial(0, 0).terms == {(0, 0): 1}


def test_value_at_identity_is_dimension():
    for l in range(9):
        for m in range(l + 1):
            char = character_polynomial(l, m)
            val = evaluate(char, (ONE, ONE, ONE, ONE))
            assert val.as_rational() == dimension(l, m)


def test_value_at_minus_identity():
    # -id acts on the weight-(l, m) irreducible by (-1)^(l+m)
    minus = (-ONE, -ONE, -ONE, -ONE)
    for l in range(7):
        for m in range(l + 1):
            char = character_polynomial(l, m)
            want = (-1) ** (l + m) * dimension(l, m)
            assert evaluate(char, minus).as_rational() == want


def test_generic_rational_eigenvalues():
    two = CycNum.from_rational(2)
    three = CycNum.from_rational(3)
    eigs = (two, three, two.inverse(), three.inverse())
    val = evaluate(character_polynomial(1, 0), eigs)
    assert val.as_rational() == Fraction(2) + Fraction(1, 2) + 3 + Fraction(1, 3)


def test_pairing_error():
    nums = [CycNum.from_rational(v) for v in (2, 3, 4, 5)]
    with pytest.raises(EigenvaluePairingError):
        evaluate(character_polynomial(1, 0), nums)
    with pytest.raises(EigenvaluePairingError):
        evaluate(character_polynomial(1, 0), nums[:3])


weights = st.tuples(st.integers(0, 5), st.integers(0, 5)).map(
    lambda t: (max(t), min(t))
)


@settings(max_examples=40, deadline=None)
@given(weights, st.integers(0, CONDUCTOR - 1), st.integers(0, CONDUCTOR - 1))
def test_weyl_group_invariance(w, ex, ey):
    # the character is invariant under swapping and inverting eigenvalues
    char = character_polynomial(*w)
    v = evaluate_at_root_exponents(char, ex, ey)
    assert evaluate_at_root_exponents(char, ey, ex) == v
    assert evaluate_at_root_exponents(char, (-ex) % CONDUCTOR, ey) == v
    assert evaluate_at_root_exponents(char, ex, (-ey) % CONDUCTOR) == v


@settings(max_examples=30, deadline=None)
@given(weights, st.integers(0, CONDUCTOR - 1), st.integers(0, CONDUCTOR - 1))
def test_fast_path_matches_term_sum(w, ex, ey):
    char = character_polynomial(*w)
    direct = CycNum.from_rational(0)
    for (a, b), c in char.terms.items():
        direct = direct + c * zeta_pow((a * ex + b * ey) % CONDUCTOR)
    assert evaluate_at_root_exponents(char, ex, ey) == direct


def test_evaluate_routes_roots_to_fast_path():
    char = character_polynomial(3, 1)
    eigs = (zeta_pow(30), zeta_pow(90), zeta_pow(20), zeta_pow(100))
    assert evaluate(char, eigs) == evaluate_at_root_exponents(char, 30, 20)
