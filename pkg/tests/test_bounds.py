import math

import pytest

from domset.bounds import (
    DEFAULT_TK,
    alpha_star,
    gamma32,
    gamma_l2,
    general_lower_l,
    gerbner_bounds,
    layered_rate,
    lemma2_rhs,
    new_upper,
    round_lower_3,
    round_upper_3,
    table1,
)

# Printed table values: (lower, previous upper, new upper) per k.
PRINTED_TABLE = {
    3: (0.604, 0.778, 0.691),
    4: (0.447, 0.790, 0.683),
    5: (0.384, 0.796, 0.673),
    6: (0.305, 0.800, 0.666),
    7: (0.279, 0.802, 0.661),
}


def test_gamma32_values():
    assert gamma32(5) == 6
    assert gamma32(9) == 24
    assert gamma32(2) == 0  # degenerate boundary, outside the proven range
    with pytest.raises(ValueError):
        gamma32(1)


def test_lemma2_rhs():
    assert lemma2_rhs(5) == 4
    assert lemma2_rhs(9) == 12
    assert lemma2_rhs(8) == 10


def test_alpha_star_closed_form_k3():
    # 2x^3 - 3x + 1 = (x - 1)(2x^2 + 2x - 1); the relevant root is (sqrt 3 - 1)/2
    assert abs(alpha_star(3) - (math.sqrt(3) - 1) / 2) <= 1e-9


def test_alpha_star_residuals():
    for k in range(3, 8):
        a = alpha_star(k)
        assert abs((k - 1) * a**k - k * a + 1) <= 1e-10
        if k >= 4:
            assert 0.125 < a < 0.40


def test_alpha_star_rejects_small_k():
    with pytest.raises(ValueError):
        alpha_star(2)


def test_new_upper_matches_printed_after_display_rounding():
    for k, (_, _, printed) in PRINTED_TABLE.items():
        assert abs(round_upper_3(new_upper(k)) - printed) <= 0.0005


def test_layered_rate_identity_at_optimum():
    # substituting a^k = (k a - 1)/(k - 1) turns the rate into the bound gap
    for k in range(3, 13):
        a = alpha_star(k)
        assert abs(layered_rate(k, a) - (1 - new_upper(k))) <= 1e-9


def test_layered_rate_point_value():
    assert abs(layered_rate(3, 0.25) - 0.2857142857142857) <= 1e-12


def test_layered_rate_vanishes_at_zero():
    assert layered_rate(3, 1e-6) < 1e-5


def test_gerbner_bounds():
    lower, upper = gerbner_bounds(3, DEFAULT_TK[3])
    assert abs(lower - 0.604) <= 0.0005
    assert abs(upper - 7 / 9) <= 1e-12
    assert abs(round_upper_3(gerbner_bounds(4, 0.5)[1]) - 0.790) <= 1e-12
    assert abs(round_upper_3(gerbner_bounds(7, 0.5)[1]) - 0.802) <= 1e-12


def test_table1_reproduces_all_printed_numbers():
    rows = table1()
    assert len(rows) == 5
    for row in rows:
        printed = PRINTED_TABLE[row.k]
        d = row.display()
        assert abs(d["lower"] - printed[0]) <= 0.0005
        assert abs(d["gerbner_upper"] - printed[1]) <= 0.0005
        assert abs(d["new_upper"] - printed[2]) <= 0.0005


def test_table1_row_invariants():
    for row in table1():
        assert row.lower < row.new_upper < row.gerbner_upper


def test_table1_override_and_validation():
    rows = table1({3: 0.55})
    assert rows[0].turan_upper_tk == 0.55
    with pytest.raises(ValueError):
        table1({3: 1.5})


def test_new_upper_strictly_decreasing():
    values = [new_upper(k) for k in range(3, 8)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_new_upper_improves_on_previous():
    for k in range(3, 8):
        assert new_upper(k) < gerbner_bounds(k, 0.5)[1]


def test_gamma32_ratio_approaches_three_quarters():
    for n in (10**3, 10**4):
        # closed form without the binomial guard: C(n,2) - floor((n+1)^2/8)
        value = n * (n - 1) // 2 - (n + 1) ** 2 // 8
        ratio = value / (n * (n - 1) / 2)
        assert abs(ratio - 0.75) <= 1e-3
    assert abs(gamma_l2(3) - 0.75) <= 1e-12


def test_gamma_l2():
    assert abs(gamma_l2(4) - 7 / 15) <= 1e-12


def test_general_lower_consistency():
    assert abs(general_lower_l(4, 2, 2 / 3) - gamma_l2(4)) <= 1e-12
    with pytest.raises(ValueError):
        general_lower_l(4, 2, 1.2)


def test_display_rounding_conventions():
    assert round_lower_3(0.6042667) == 0.604
    assert round_upper_3(0.7890625) == 0.790
    assert round_upper_3(0.778) == 0.778
