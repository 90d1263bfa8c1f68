import mpmath
import pytest

from etaforge.exceptions import InsufficientTruncation, NotIntegrableAtZero
from etaforge.numeric import (
    INTEGRALS,
    appendix_k_certificate,
    closed_form_value,
    context,
    default_precision,
    eval_series,
    fine3_quadrature,
    integral_quadrature,
    integral_value,
    k_closed_form,
    q_level10,
    quadrature_check,
    ramanujan_fine_value,
    row_quadrature,
)
from etaforge.qseries import PuiseuxSeries, eta_quotient_series, k_series


def direct_k(ctx, q):
    """Oracle: the level-10 product for k through mpmath's q-Pochhammer."""
    q10 = q ** 10
    num = ctx.qp(q, q10) * ctx.qp(q ** 2, q10) * ctx.qp(q ** 8, q10) * ctx.qp(q ** 9, q10)
    den = ctx.qp(q ** 3, q10) * ctx.qp(q ** 4, q10) * ctx.qp(q ** 6, q10) * ctx.qp(q ** 7, q10)
    return q * num / den


def test_k_at_level10_point():
    ctx = context(256)
    q0 = q_level10(ctx)
    assert abs(q0 - mpmath.mpf("0.137117")) < 1e-6
    v = eval_series(k_series(400), q0, prec=256)
    assert abs(v.value - k_closed_form(ctx)) < mpmath.mpf(10) ** -60
    assert abs(v.value - direct_k(ctx, q0)) < mpmath.mpf(10) ** -60
    assert abs(v.value - mpmath.mpf("0.116434")) < 1e-6


def test_series_q_is_q0():
    ctx = context(128)
    v = eval_series(PuiseuxSeries([1], 1, 50), "0.3", prec=128)
    assert abs(v.value - ctx.mpf("0.3")) < 1e-35


def test_u_value():
    ctx = context(256)
    k = eval_series(k_series(400), q_level10(ctx), prec=256).value
    assert abs(1 / k - k - (4 + 2 * ctx.sqrt(5))) < 1e-30


def test_insufficient_truncation():
    with pytest.raises(InsufficientTruncation):
        eval_series(k_series(10), 0.5, tol=1e-30)


def test_bad_point():
    with pytest.raises(ValueError):
        eval_series(k_series(10), 1.5)


def test_tail_honored():
    ctx = context(256)
    q0 = q_level10(ctx)
    s = eta_quotient_series({1: 8, 2: -7, 10: 3}, 60)
    a = eval_series(s, q0, prec=256)
    b = eval_series(eta_quotient_series({1: 8, 2: -7, 10: 3}, 120), q0, prec=256)
    assert abs(a.value - b.value) <= a.tail


def test_precision_refinement():
    lo = ramanujan_fine_value("1.0", 256)
    hi = ramanujan_fine_value("1.0", 512)
    assert abs(lo.series_value - hi.series_value) < mpmath.mpf(10) ** -70


def test_default_precision_env(monkeypatch):
    monkeypatch.setenv("ETAFORGE_PREC", "300")
    assert default_precision() == 300
    monkeypatch.delenv("ETAFORGE_PREC")
    assert default_precision() == 256


@pytest.mark.parametrize("label, approx", [("1.0", "0.080988"), ("3.0", "0.0068715")])
def test_row_values(label, approx):
    v = ramanujan_fine_value(label)
    assert v.abs_error < 1e-20
    assert abs(v.series_value - mpmath.mpf(approx)) < 1e-6


def test_row_3_1_closed_form():
    ctx = context(256)
    s5 = ctx.sqrt(5)
    want = ctx.mpf(1) / 24 + (15 * s5 - 34) * ctx.sqrt(10 + 4 * s5) / 48
    v = ramanujan_fine_value("3.1")
    assert abs(v.series_value - want) < 1e-20


@pytest.mark.parametrize("label", ["4.0", "5", "7", "1.2", "4.3"])
def test_rows_via_antiderivative(label):
    assert ramanujan_fine_value(label).abs_error < 1e-20


@pytest.mark.parametrize("label", ["2.0", "2.3"])
def test_excluded_rows(label):
    with pytest.raises(NotIntegrableAtZero):
        ramanujan_fine_value(label)


@pytest.mark.parametrize("name", list(INTEGRALS))
def test_integrals_series_route(name):
    assert integral_value(name, 256).passed


@pytest.mark.parametrize("name", ["fine0", "integral2", "integral6", "integral1", "level7"])
def test_integrals_quadrature(name):
    c = integral_quadrature(name)
    assert c.passed, c.to_json()


def test_fine_third_by_quadrature():
    assert fine3_quadrature().passed


def test_row_quadrature():
    assert row_quadrature("3.0").passed


def test_quadrature_detects_wrong_reference():
    c = quadrature_check(lambda ctx, t: t, 1, 0.6)
    assert not c.passed


def test_appendix_certificate():
    checks = appendix_k_certificate(256)
    assert len(checks) == 5
    assert all(c.passed for c in checks), [c.to_json() for c in checks if not c.passed]
    js = checks[-1].to_json()
    assert set(js) == {"check", "lhs", "rhs", "abs_error", "precision_bits", "passed"}


def test_closed_form_fallback_matches_display():
    # 3.0 has a displayed form; the generic g(k0) - g(0) route must agree with it
    from etaforge.kernel10 import antiderivative_in_k, table8_row
    from etaforge.numeric import _eval_rf
    ctx = context(256)
    g = antiderivative_in_k(table8_row("3.0").a)
    generic = _eval_rf(ctx, g, k_closed_form(ctx)) - _eval_rf(ctx, g, ctx.zero)
    assert abs(generic - closed_form_value("3.0")) < 1e-60
