"""Tests for the auxiliary sums and the product-identity coefficients."""

import math
from fractions import Fraction

import numpy as np
import pytest

from pdum.cnoidal.basis import coeff_scale, eval_grid
from pdum.cnoidal.coefficients import (
    F_sum,
    coeff_a,
    coeff_table,
    e_ell,
    identity_mean,
    leading_coefficient,
    lemma_a1,
    lemma_a2,
    product_identity_rows,
    ramanujan_sides,
    verify_convolution,
    verify_identity,
)
from pdum.cnoidal.types import CapabilityError, CnoidalParam, DomainError, SeriesRep, SingularConvention

# e_4 at s = 1 is -E_4(i)/60 with E_4(i) = 3 Gamma(1/4)^8 / (2 pi)^6
E4_AT_ONE = -3.0 * math.gamma(0.25) ** 8 / (60.0 * (2.0 * math.pi) ** 6)


def test_e2_and_e4_at_s_one():
    """Test the closed forms e_2(1) = 1/(2 pi) and e_4(1) = -E_4(i)/60."""
    assert e_ell(1.0, 2).value == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-14)
    assert e_ell(1.0, 4).value == pytest.approx(E4_AT_ONE, rel=1e-13)


def test_e6_vanishes_at_s_one():
    """Test e_6(1) = 0 (E_6 vanishes at tau = i)."""
    assert abs(e_ell(1.0, 6).value) < 1e-12
    assert abs(e_ell(1.0, 6, SeriesRep.LARGE_S).value) < 1e-12


@pytest.mark.parametrize("s", [0.6, 1.0, 1.7])
def test_e8_is_minus_thirty_e4_squared(s):
    """Test e_8 = -30 e_4^2 (a consequence of E_8 = E_4^2)."""
    assert e_ell(s, 8).value == pytest.approx(-30.0 * e_ell(s, 4).value ** 2, rel=1e-12)


def test_e_odd_orders_vanish():
    """Test that odd orders give exactly zero."""
    assert e_ell(0.7, 3).value == 0.0
    assert F_sum(0.7, 5).value == 0.0


@pytest.mark.parametrize("s", [0.8, 1.0, 1.25])
@pytest.mark.parametrize("ell", [2, 4, 6, 8])
def test_e_small_and_large_agree(s, ell):
    """Test the direct and Poisson-summed forms of e_l."""
    small = e_ell(s, ell, SeriesRep.SMALL_S)
    large = e_ell(s, ell, SeriesRep.LARGE_S)
    assert small.rep is SeriesRep.SMALL_S and large.rep is SeriesRep.LARGE_S
    assert large.value == pytest.approx(small.value, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("s", [0.8, 1.0, 1.25])
@pytest.mark.parametrize("ell", [0, 2, 4, 6, 8])
def test_F_small_and_large_agree(s, ell):
    """Test the direct and Poisson-summed forms of F_l."""
    small = F_sum(s, ell, SeriesRep.SMALL_S).value
    large = F_sum(s, ell, SeriesRep.LARGE_S).value
    assert large == pytest.approx(small, rel=1e-12 if ell <= 4 else 1e-11)


def test_F_against_brute_force():
    """Test F_0 and F_2 against a direct numpy lattice sum."""
    s = 1.3
    ks = np.arange(1, 200)
    for ell in (0, 2):
        brute = 2.0 * np.sum(ks ** (ell + 2.0) / np.sinh(ks * math.pi / s) ** 2)
        if ell == 0:
            brute += (s / math.pi) ** 2
        assert F_sum(s, ell).value == pytest.approx(brute, rel=1e-13)


def test_auto_representation_choice():
    """Test which representation AUTO selects."""
    assert e_ell(0.5, 4).rep is SeriesRep.SMALL_S
    assert e_ell(2.0, 4).rep is SeriesRep.LARGE_S
    assert e_ell(2.0, 10).rep is SeriesRep.SMALL_S
    assert F_sum(2.0, 4).rep is SeriesRep.LARGE_S
    assert F_sum(2.0, 6).rep is SeriesRep.SMALL_S


def test_series_errors():
    """Test domain and capability errors of the sums."""
    with pytest.raises(DomainError):
        e_ell(1.0, 1)
    with pytest.raises(DomainError):
        e_ell(0.0, 2)
    with pytest.raises(DomainError):
        F_sum(1.0, -2)
    with pytest.raises(CapabilityError):
        e_ell(1.0, 10, SeriesRep.LARGE_S)
    with pytest.raises(CapabilityError):
        F_sum(1.0, 10, SeriesRep.LARGE_S)


def test_series_metadata():
    """Test that term counts and tail bounds are reported."""
    value = e_ell(0.9, 4, SeriesRep.SMALL_S, tol=1e-10)
    assert value.terms_used >= 3
    assert 0.0 <= value.tail_bound <= 1e-9


@pytest.mark.parametrize("order", [4, 8])
def test_ramanujan_identity(order):
    """Test both sides of the sinh^-2 identity at s = 1 with 50 terms."""
    lhs, rhs = ramanujan_sides(order)
    assert lhs == pytest.approx(rhs, abs=1e-13)
    if order == 4:
        assert lhs == pytest.approx(0.007723, abs=5e-6)


def test_ramanujan_domain():
    """Test that orders other than positive multiples of 4 raise."""
    with pytest.raises(DomainError):
        ramanujan_sides(6)


@pytest.mark.parametrize("s", [0.8, 1.0, 1.25])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_poisson_lemmas(s, n):
    """Test both Poisson-summation lemmas."""
    lhs, rhs = lemma_a1(s, n)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    lhs, rhs = lemma_a2(s, n)
    assert lhs == pytest.approx(rhs, abs=1e-12)


@pytest.mark.parametrize(
    "alpha, beta, expected",
    [
        (0, 0, Fraction(2, 6)),
        (1, 0, Fraction(-2 * 2 * 1, 24)),
        (2, 2, Fraction(2 * 6 * 6, 5040)),
    ],
)
def test_leading_coefficient(alpha, beta, expected):
    """Test the exact leading convolution coefficient."""
    assert leading_coefficient(alpha, beta) == expected


def test_coeff_a_examples():
    """Test a(2) for alpha = beta = 0, the vanishing a(1+alpha+beta) and the swap symmetry."""
    assert coeff_a(0, 0, 2, 1.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert coeff_a(2, 1, 4, 0.7) == 0.0
    for n in range(4):
        assert coeff_a(1, 0, n, 1.1) == pytest.approx(-coeff_a(0, 1, n, 1.1), rel=1e-15, abs=1e-300)
    with pytest.raises(DomainError):
        coeff_a(1, 1, 5, 1.0)


@pytest.mark.parametrize("s", [0.5, 1.0, 1.5])
@pytest.mark.parametrize("alpha, beta", [(a, b) for a in range(5) for b in range(5) if a + b <= 6])
def test_coeff_table_invariants(alpha, beta, s):
    """Test parity, symmetry and the constant term of the coefficient table."""
    table = coeff_table(alpha, beta, s)
    assert len(table.b) == table.order + 1
    assert table.b[table.order] == float(table.leading)
    assert table.b[table.order - 1] == 0.0
    for n, bn in enumerate(table.b):
        if (alpha + beta + n) % 2:
            assert bn == 0.0
    mirrored = coeff_table(beta, alpha, s)
    assert np.allclose(table.b, mirrored.b, rtol=1e-14, atol=1e-15)
    if (alpha + beta) % 2:
        assert table.c == 0.0


def test_coeff_table_rows():
    """Test individual entries of the low-order identities."""
    s = 1.0
    e2, e4, e6 = (e_ell(s, ell).value for ell in (2, 4, 6))
    mean = s / math.pi

    t00 = coeff_table(0, 0, s)
    assert t00.leading == Fraction(-1, 3)
    assert t00.b[0] == pytest.approx(2 * (mean - e2), rel=1e-14)
    assert t00.c == pytest.approx(F_sum(s, 0).value - mean * t00.b[0], rel=1e-14)

    t22 = coeff_table(2, 2, s)
    assert t22.leading == Fraction(-1, 70)
    assert t22.b[2] == pytest.approx(2 * e4, rel=1e-14)
    assert t22.b[0] == pytest.approx(-6 * e6, abs=1e-14)

    t40 = coeff_table(4, 0, s)
    assert t40.leading == Fraction(-1, 21)
    assert t40.b[2] == pytest.approx(10 * e4, rel=1e-14)
    assert t40.b[4] == pytest.approx(mean - e2, rel=1e-14)

    assert coeff_table(3, 1, s).leading == Fraction(-2, 105)
    assert coeff_table(1, 0, 0.9).c == 0.0


def test_coeff_table_cap():
    """Test the coefficient order cap."""
    with pytest.raises(CapabilityError):
        coeff_table(9, 0, 1.0)
    with pytest.raises(DomainError):
        coeff_table(-1, 0, 1.0)


def test_product_identity_rows():
    """Test the nine bundled low-order identities against the general formulas."""
    for s in (0.5, 1.0, 1.5):
        rows = product_identity_rows(s)
        assert len(rows) == 9
        for row in rows:
            assert row.leading_exact, (row.alpha, row.beta)
            for entry in row.entries:
                assert entry.computed == pytest.approx(entry.expected, rel=1e-13, abs=1e-15)
            assert row.c_computed == pytest.approx(row.c_expected, rel=1e-13, abs=1e-15)
            assert row.zero_slot_max == 0.0
    tags = {(row.alpha, row.beta): {e.n: e.tag for e in row.entries} for row in product_identity_rows(1.0)}
    assert tags[(1, 1)][0] == "-4e4"
    assert tags[(2, 1)][5] == "-1/30"
    assert tags[(0, 0)][0] == "2(s/pi-e2)"
    print("\n✓ All nine bundled identities reproduced")


@pytest.mark.parametrize("s", [0.5, 1.0, 1.5])
@pytest.mark.parametrize("alpha, beta", [(a, b) for a in range(7) for b in range(7) if a + b <= 6])
def test_verify_identity_suite(alpha, beta, s):
    """Test u^(alpha) u^(beta) = sum_n b(n) u^(n) + c pointwise."""
    assert verify_identity(alpha, beta, s, 64) < 1e-8


@pytest.mark.parametrize(
    "alpha, beta, s",
    [(0, 0, 1.0), (2, 1, 1.5), (3, 1, 0.5)],
)
def test_verify_identity_examples(alpha, beta, s):
    """Test the tighter residual on the worked examples."""
    assert verify_identity(alpha, beta, s, 64) < 1e-9


def test_verify_identity_grid_domain():
    """Test the minimum grid size."""
    with pytest.raises(DomainError):
        verify_identity(0, 0, 1.0, 4)


@pytest.mark.parametrize("s, rtol", [(1.0, 1e-8), (5.0, 1e-6)])
def test_verify_identity_highest_orders(s, rtol):
    """Test alpha = beta = 8, whose right-hand side reaches u^(18)."""
    scale = coeff_scale(CnoidalParam(s), 8) ** 2
    assert verify_identity(8, 8, s, 64) < rtol * scale


@pytest.mark.parametrize("s", [0.7, 1.0, 1.4])
@pytest.mark.parametrize("j", [1, 2, 5])
@pytest.mark.parametrize("alpha, beta", [(a, b) for a in range(5) for b in range(5) if a + b <= 4])
def test_convolution_oracle(alpha, beta, j, s):
    """Test the closed-form convolution coefficients against the brute-force lattice sum."""
    assert verify_convolution(alpha, beta, j, s) < 1e-11


def test_convolution_negative_shift():
    """Test that negative shifts also satisfy the formula."""
    assert verify_convolution(1, 2, -2, 1.0) < 1e-12
    assert verify_convolution(2, 1, 2, 1.0) < 1e-12


def test_convolution_singular_conventions():
    """Test that skipping the singular lattice points breaks the formula when alpha = 0."""
    assert verify_convolution(0, 0, 1, 1.0) < 1e-12
    assert verify_convolution(0, 0, 1, 1.0, convention=SingularConvention.SKIP) > 1e-3


def test_convolution_zero_shift():
    """Test that j = 0 raises."""
    with pytest.raises(DomainError):
        verify_convolution(0, 0, 0, 1.0)


@pytest.mark.parametrize("alpha, beta", [(0, 0), (1, 1), (2, 0), (3, 1)])
def test_identity_mean_matches_grid_mean(alpha, beta):
    """Test b(0) s/pi + c against the grid mean of u^(alpha) u^(beta)."""
    s = 0.9
    x = 2.0 * math.pi * np.arange(128) / 128
    param = CnoidalParam(s)
    grid_mean = float(np.mean(eval_grid(param, x, alpha) * eval_grid(param, x, beta)))
    assert identity_mean(alpha, beta, s) == pytest.approx(grid_mean, rel=1e-12, abs=1e-14)
