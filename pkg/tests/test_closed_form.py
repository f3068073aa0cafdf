import pytest

from anchorperms.backtrack import count_brute, count_classes_fgh
from anchorperms.closed_form import (
    FGH_SEEDS_F,
    FGH_SEEDS_G,
    FGH_SEEDS_H,
    K3_COEFFS,
    RationalGF,
    Recurrence,
    count_k1,
    count_k2,
    count_k3,
    expand_gf,
    fg_two_term_table,
    fgh_table,
    gf_k2,
    gf_k3,
    h_eliminated,
    k2_table,
    k3_table,
)
from anchorperms.core import ANCHORED
from anchorperms.polys import poly_gcd


def test_count_k1():
    assert count_k1(1) == 1
    assert count_k1(7) == 1
    assert count_k1(100) == 1


def test_count_k2_known_values():
    assert count_k2(3) == 1
    assert count_k2(7) == 6
    assert count_k2(12) == 41
    assert k2_table(7) == [1, 1, 1, 2, 3, 4, 6]


def test_count_k3_known_values():
    assert count_k3(8) == 56
    assert count_k3(9) == 118
    assert count_k3(10) == 254
    assert k3_table(8) == [1, 1, 1, 2, 6, 14, 28, 56]


def test_count_k2_matches_brute_oracle():
    for n in range(1, 17):
        assert count_k2(n) == count_brute(2, n, ANCHORED)


def test_count_k3_matches_brute_oracle():
    for n in range(1, 13):
        assert count_k3(n) == count_brute(3, n, ANCHORED)


def test_fgh_seeds_match_filtered_enumeration():
    for n in range(1, 6):
        assert count_classes_fgh(n) == (
            FGH_SEEDS_F[n - 1],
            FGH_SEEDS_G[n - 1],
            FGH_SEEDS_H[n - 1],
        )


def test_fgh_table_known_values():
    f, g, h = fgh_table(8)
    assert g[8] == 93
    assert h[6] == 5
    assert f[7] == 28 == g[6] + h[6] + f[2]


def test_two_term_system_agrees_with_three_term():
    f3, g3, _ = fgh_table(30)
    f2, g2 = fg_two_term_table(30)
    assert f2.values() == f3.values()
    assert g2.values() == g3.values()
    assert f2[1] == 1
    assert f2[5] == 6 and g2[5] == 10
    assert f2[9] == count_k3(9) == 118


def test_fgh_agrees_with_depth8_recurrence():
    f, _, _ = fgh_table(40)
    assert f.values() == k3_table(40)


def test_h_eliminated():
    assert h_eliminated(4) == 2
    assert h_eliminated(5) == 3
    assert h_eliminated(1) == 0
    _, _, h = fgh_table(20)
    for n in range(1, 21):
        assert h_eliminated(n) == h[n]


def test_gf_polynomials_exact():
    g2 = gf_k2()
    assert g2.numerator == (0, 1)
    assert g2.denominator == (1, -1, 0, -1)
    g3 = gf_k3()
    assert g3.numerator == (0, 1, -1, 0, -1)
    assert g3.denominator == (1, -2, 1, -2, -1, -1, 0, 1, 1)
    for gf in (g2, g3):
        assert gf.denominator[0] == 1
        assert len(poly_gcd(list(gf.numerator), list(gf.denominator))) == 1


def test_expand_gf_examples():
    assert expand_gf(gf_k2(), 7) == [1, 1, 1, 2, 3, 4, 6]
    assert expand_gf(gf_k3(), 8) == [1, 1, 1, 2, 6, 14, 28, 56]
    assert expand_gf(RationalGF((0, 1), (1, -1)), 5) == [1, 1, 1, 1, 1]
    assert expand_gf(gf_k2(), 0) == []


def test_expand_gf_matches_recurrences_to_200():
    assert expand_gf(gf_k2(), 200) == k2_table(200)
    assert expand_gf(gf_k3(), 200) == k3_table(200)


def test_depth8_recurrence_also_holds_at_n8():
    # The relation is needed from n = 9 but, with the zero convention for
    # indices below 1, it already holds at n = 8.
    f = k3_table(13)
    for n in range(8, 14):
        assert f[n - 1] == sum(
            c * (f[n - 1 - j] if n - j >= 1 else 0)
            for j, c in enumerate(K3_COEFFS, start=1)
        )


def test_recurrence_type_invariants():
    with pytest.raises(ValueError):
        Recurrence(order=2, coefficients=(1, 0), initial=(1, 1), n0=3)
    with pytest.raises(ValueError):
        Recurrence(order=2, coefficients=(1, 1), initial=(1,), n0=3)
    with pytest.raises(ValueError):
        Recurrence(order=2, coefficients=(1, 1), initial=(1, 1), n0=2)


def test_rational_gf_type_invariants():
    with pytest.raises(ValueError):
        RationalGF((0, 1), (2, -1))
    with pytest.raises(ValueError):
        RationalGF((0, 1, -1), (1, -1))  # shares the factor 1 - x


def test_rational_gf_reduced_preserves_value():
    # Scaling is fixed so the denominator's constant term is 1.
    assert RationalGF.reduced([0, 2], [2, -2]) == RationalGF((0, 1), (1, -1))
    # Common polynomial factors are stripped: (2x - 2x^2)/(2 - 2x) = x.
    assert RationalGF.reduced([0, 2, -2], [2, -2]) == RationalGF((0, 1), (1,))
    # A numerator with content > 1 must not be rescaled on its own.
    gf = RationalGF.reduced([0, 4], [1, -1])
    assert gf == RationalGF((0, 4), (1, -1))
    assert expand_gf(gf, 3) == [4, 4, 4]


def test_bad_n_rejected():
    for fn in (count_k1, count_k2, count_k3, h_eliminated):
        with pytest.raises(ValueError):
            fn(0)
