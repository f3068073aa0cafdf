import pytest

from anchorperms.closed_form import K3_COEFFS, gf_k2, gf_k3, k2_table, k3_table
from anchorperms.seqmine import (
    InsufficientDataError,
    conjecture_probe,
    find_recurrence,
    predict,
    to_gf,
)


def test_recovers_k2_recurrence():
    rec = find_recurrence(k2_table(30), max_order=6)
    assert rec.order == 3
    assert rec.coefficients == (1, 0, 1)


def test_recovers_k3_depth8_recurrence():
    rec = find_recurrence(k3_table(40), max_order=12)
    assert rec.order == 8
    assert rec.coefficients == K3_COEFFS


def test_recovers_fibonacci():
    fib = [1, 1]
    while len(fib) < 24:
        fib.append(fib[-1] + fib[-2])
    rec = find_recurrence(fib, max_order=5)
    assert rec.order == 2
    assert rec.coefficients == (1, 1)


def test_allows_leading_transient():
    # 9, then Fibonacci: the relation only holds past the first term.
    terms = [9, 1, 1]
    while len(terms) < 26:
        terms.append(terms[-1] + terms[-2])
    rec = find_recurrence(terms, max_order=5)
    assert rec.order == 2
    assert rec.coefficients == (1, 1)
    assert rec.n0 >= 4


def test_no_low_order_recurrence_for_factorials():
    import math

    terms = [math.factorial(n) for n in range(1, 21)]
    assert find_recurrence(terms, max_order=5) is None


def test_insufficient_data_raises():
    with pytest.raises(InsufficientDataError):
        find_recurrence([1, 1, 2, 3, 5], max_order=4)
    with pytest.raises(ValueError):
        find_recurrence(k2_table(30), max_order=0)


def test_modular_presearch_path_agrees_with_plain_scan():
    # max_order above the plain-scan threshold routes through the modular
    # binary search; the result must be identical.
    terms = k3_table(100)
    rec = find_recurrence(terms, max_order=40)
    assert rec.order == 8
    assert rec.coefficients == K3_COEFFS


def test_predict_extends_sequence():
    terms = k2_table(25)
    rec = find_recurrence(terms[:20], max_order=6)
    assert predict(rec, terms[:20], 5) == terms[20:]
    with pytest.raises(ValueError):
        predict(rec, terms[:2], 1)


def test_to_gf_reproduces_proven_generating_functions():
    terms2 = k2_table(30)
    assert to_gf(find_recurrence(terms2, 6), terms2) == gf_k2()
    terms3 = k3_table(40)
    assert to_gf(find_recurrence(terms3, 12), terms3) == gf_k3()


def test_conjecture_probe_k2():
    report = conjecture_probe(2, terms_n=30, holdout=10)
    assert report.order == 3
    assert report.coefficients == (1, 0, 1)
    assert report.gf == gf_k2()
    assert report.holdout_match
    assert report.state_space_size == 8
    assert report.terms_used == 30 and report.holdout_used == 10


def test_conjecture_probe_k4():
    report = conjecture_probe(4, terms_n=80, holdout=20)
    assert report.order == 31
    assert report.holdout_match
    assert report.state_space_size == 95
    assert report.gf.denominator[0] == 1
    assert len(report.gf.denominator) == report.order + 1
