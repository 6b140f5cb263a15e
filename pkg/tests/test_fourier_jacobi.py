import math
from fractions import Fraction

import pytest

from sp4whittaker.fourier_jacobi import (SL2Label, fj_evaluate, fj_function,
                                         fj_index_bounds_ok, fj_nonvanishing,
                                         fj_weight_parities)
from sp4whittaker.solutions import ParameterError, classify


def test_nonvanishing_truth_table():
    p = classify(2, -1)
    assert fj_nonvanishing(p, SL2Label("+", 3)) is True
    assert fj_nonvanishing(p, SL2Label("-", 3)) is False
    assert fj_nonvanishing(p, SL2Label("+", 2)) is True
    assert fj_nonvanishing(p, SL2Label("+", 4)) is False
    q = classify(1, -3)
    assert fj_nonvanishing(q, SL2Label("-", 4)) is True
    assert fj_nonvanishing(q, SL2Label("+", 4)) is False
    assert fj_nonvanishing(q, SL2Label("-", 2)) is True


def test_label_validation():
    with pytest.raises(ParameterError):
        SL2Label("*", 3)
    with pytest.raises(ParameterError):
        SL2Label("+", 1)


def test_single_term_branch_type_ii():
    p = classify(2, -1)
    f = fj_function(p, SL2Label("+", 3))
    assert f.power == 3
    assert f.terms == ((Fraction(1), 3, 4),)


def test_sum_branch_type_ii():
    p = classify(3, -1)
    f = fj_function(p, SL2Label("+", 2))
    assert f.power == 5
    assert f.terms == ((Fraction(1), 2, 3), (Fraction(-2), 4, 5))


def test_single_term_branch_type_iii():
    p = classify(1, -3)
    f = fj_function(p, SL2Label("-", 4))
    assert f.power == 3
    assert f.terms == ((Fraction(1), -4, 0),)


def test_inadmissible_label_rejected():
    with pytest.raises(ParameterError):
        fj_function(classify(2, -1), SL2Label("-", 3))


def test_evaluate_single_term():
    p = classify(2, -1)
    f = fj_function(p, SL2Label("+", 3))
    (w, k, v), = fj_evaluate(f, 2.0)
    assert (w, k) == (3, 4) and v == 8.0


def test_evaluate_homogeneity():
    p = classify(3, -1)
    f = fj_function(p, SL2Label("+", 2))
    va = fj_evaluate(f, 1.3)
    vb = fj_evaluate(f, 2.6)
    for (w1, k1, x), (w2, k2, y) in zip(va, vb):
        assert (w1, k1) == (w2, k2)
        assert abs(y / x - 2.0 ** f.power) < 1e-12


def test_evaluate_sum_branch_at_one():
    f = fj_function(classify(3, -1), SL2Label("+", 2))
    assert [v for _, _, v in fj_evaluate(f, 1.0)] == [1.0, -2.0]


def test_coefficient_product_oracle():
    # brute-force product evaluation of the printed coefficient formula
    for l1 in range(2, 13):
        for l2 in range(-l1 + 1, 0):
            if l1 + l2 > 12:
                continue
            p = classify(l1, l2)
            f = fj_function(p, SL2Label("+", -l2 + 1))
            assert len(f.terms) == (l1 + l2) // 2 + 1
            for i, (c, w, k) in enumerate(f.terms):
                prod = Fraction(1)
                for j in range(1, i + 1):
                    prod *= -l2 + j
                assert c == Fraction(-1) ** i * prod / math.factorial(i)
                assert w == -l2 + 2 * i + 1
                assert k == -2 * l2 + 2 * i + 1
            for i in range(len(f.terms) - 1):
                assert f.terms[i + 1][0] / f.terms[i][0] == Fraction(-(-l2 + 1 + i), i + 1)
            assert fj_index_bounds_ok(f)
            assert len(fj_weight_parities(f)) == 1


def test_type_iii_sum_branch_structure():
    p = classify(2, -3)
    f = fj_function(p, SL2Label("-", 3))
    assert f.power == 5
    assert fj_index_bounds_ok(f)
    assert len(fj_weight_parities(f)) == 1
    # all rank-one weights are negative in the antiholomorphic chamber
    assert all(w < 0 for _, w, _ in f.terms)
