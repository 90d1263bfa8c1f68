from dataclasses import replace
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from etaforge.exceptions import QuartetViolatesRelation
from etaforge.field5 import Sqrt5Number
from etaforge.verify import (
    GOLDEN_QUARTET,
    TABLE1,
    TABLE2,
    coefficient_rule,
    four_squares_identity,
    gbinom,
    hyp2f1_terminating,
    legendre5_identity,
    lemma_closed_form,
    lemma_g_forms,
    level7_integral_check,
    nth_derivative_at,
    random_rational_quartets,
    rp_checks,
    run_suite,
    s_coefficient,
    theorem_L1_closed,
    verify_limit_theorems,
    verify_recurrence,
    verify_table1_row,
    verify_table2_row,
    verify_theorem_T1,
)


def falling_binomial(u, k):
    """Oracle: falling factorial over k!, computed with Fractions."""
    num = Fraction(1)
    for i in range(k):
        num *= u - i
    for i in range(1, k + 1):
        num /= i
    return num


@given(st.integers(-30, 30), st.integers(0, 12))
def test_generalized_binomial(u, k):
    assert gbinom(u, k) == falling_binomial(u, k)


def test_negative_binomial_examples():
    assert gbinom(-1, 3) == -1 and gbinom(-2, 6) == 7


@pytest.mark.parametrize("tag, n, want", [
    ("5", 0, 1), ("5", 1, -5), ("5", 2, 35), ("10", 2, 18), ("6A", 1, 5),
])
def test_coefficient_examples(tag, n, want):
    assert coefficient_rule(tag, n) == want


def test_level10_direct_sum():
    for n in range(8):
        assert coefficient_rule("10", n) == sum(comb(n, j) ** 4 for j in range(n + 1))


@pytest.mark.parametrize("tag", list(TABLE1))
def test_table1_rows(tag):
    checks = verify_table1_row(tag, 60)
    assert all(c.passed for c in checks), [c.to_json() for c in checks if not c.passed]


@pytest.mark.parametrize("tag", list(TABLE1))
def test_recurrences(tag):
    row = TABLE1[tag]
    assert verify_recurrence(row.rule, row.params, 20).passed


@pytest.mark.parametrize("tag", list(TABLE1))
@pytest.mark.parametrize("slot", [0, 2])
def test_perturbed_parameters_fail(tag, slot):
    row = TABLE1[tag]
    p = list(row.params)
    p[slot] += 1
    checks = verify_table1_row(replace(row, params=tuple(p)), 30)
    assert not all(c.passed for c in checks)


def test_corrupted_alpha_level5_reports_mismatch():
    row = replace(TABLE1["5"], params=(12, 3, 1))
    failed = [c for c in verify_table1_row(row, 60) if not c.passed]
    assert failed and all(c.first_mismatch is not None for c in failed)


def test_sign_flipped_level8_parameters_rejected():
    assert not verify_recurrence(TABLE1["8"].rule, (12, 4, -32)).passed


@pytest.mark.parametrize("tag", list(TABLE2))
def test_table2_rows(tag):
    checks = verify_table2_row(tag, 40)
    assert all(c.passed for c in checks), [c.to_json() for c in checks if not c.passed]


def test_table2_level1_at_thirty():
    assert all(c.passed for c in verify_table2_row("1", 30))


def test_table2_perturbed_fails():
    row = TABLE2["10"]
    bad = replace(row, xden=tuple(x + (1 if i == 1 else 0) for i, x in enumerate(row.xden)))
    assert not all(c.passed for c in verify_table2_row(bad, 20))


def test_level7_integral():
    assert level7_integral_check(100).passed


@pytest.mark.parametrize("index", range(1, 7))
def test_integral_identities(index):
    r = verify_theorem_T1(index, 300)
    assert r.passed, r.to_json()


def test_classical_identities():
    assert legendre5_identity(500).passed
    assert four_squares_identity(500).passed


def test_rp_suite():
    assert all(c.passed for c in rp_checks(200))


# -- polynomial forms -------------------------------------------------------------

def test_hypergeometric_gauss_case():
    assert hyp2f1_terminating(-2, 3, 1, Fraction(1, 2)) == Fraction(-1, 2)


@given(st.integers(1, 12))
def test_hypergeometric_gauss_formula(m):
    # Gauss' second summation: 2F1(-n, n+1; 1; 1/2) vanishes for odd n
    n = 2 * m - 1
    assert hyp2f1_terminating(-n, n + 1, 1, Fraction(1, 2)) == 0


def test_polynomial_forms_small():
    assert lemma_g_forms(1, "g1") == ()
    assert lemma_closed_form(2) == (Fraction(-1, 2), Fraction(1), Fraction(-1, 2))


@pytest.mark.parametrize("form", ["g1", "g2", "g3", "g4", "gfinal"])
def test_polynomial_forms_agree(form):
    for n in range(1, 31):
        assert lemma_g_forms(n, form) == lemma_closed_form(n)


# -- limits -------------------------------------------------------------------

def test_golden_quartet_odd_vanish():
    for n in range(1, 16, 2):
        assert nth_derivative_at(*GOLDEN_QUARTET, n) == 0


def test_golden_quartet_n2():
    assert nth_derivative_at(*GOLDEN_QUARTET, 2) == Sqrt5Number(0, Fraction(-4, 5))
    assert theorem_L1_closed(*GOLDEN_QUARTET, 2) == Sqrt5Number(0, Fraction(-4, 5))


def test_random_quartets():
    qs = random_rational_quartets(20, seed=10)
    assert all(c.passed for c in verify_limit_theorems(10, qs))


def test_quartet_relation_enforced():
    with pytest.raises(QuartetViolatesRelation):
        verify_limit_theorems(2, [(1, 2, 3, 4)])


def test_closed_form_sensitive():
    # dropping the relation breaks the closed form: a negative control
    al, be, ga, de = random_rational_quartets(1, seed=3)[0]
    assert nth_derivative_at(al, be, ga, de + 1, 2) != theorem_L1_closed(al, be, ga, de + 1, 2)


def test_suite_report_json():
    rep = run_suite("lemmas")
    js = rep.to_json()
    assert rep.passed and js["suite"] == "lemmas"
    assert all(set(c) >= {"name", "status"} for c in js["checks"])
