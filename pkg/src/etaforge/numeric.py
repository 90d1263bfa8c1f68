"""High-precision evaluation of series, special values, and definite integrals.

Precision is always a per-call argument: every function builds its own
``mpmath.MPContext`` and never touches the global ``mpmath.mp``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

import mpmath

from .exceptions import InsufficientTruncation, NotIntegrableAtZero, ToleranceNotMet
from .field5 import RationalFunction5
from .kernel10 import (
    EtaExponents,
    FamilyLabel,
    ParamExponents,
    antiderivative_in_k,
    family_exponents,
    table8,
)
from .qseries import PuiseuxSeries, eta_quotient_series, k_series, rr_series

__all__ = [
    "DEFAULT_PREC",
    "default_precision",
    "context",
    "SeriesValue",
    "eval_series",
    "q_level10",
    "k_closed_form",
    "ramanujan_fine_value",
    "closed_form_value",
    "INTEGRALS",
    "integral_value",
    "quadrature_check",
    "appendix_k_certificate",
]

DEFAULT_PREC = 256
DEFAULT_TERMS = 400


def default_precision() -> int:
    """``DEFAULT_PREC`` unless the ``ETAFORGE_PREC`` environment variable overrides it."""
    raw = os.environ.get("ETAFORGE_PREC")
    if raw is None:
        return DEFAULT_PREC
    bits = int(raw)
    if bits < 16:
        raise ValueError("ETAFORGE_PREC must be at least 16 bits")
    return bits


def context(prec: int | None = None) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = default_precision() if prec is None else prec
    return ctx


def _mpf(ctx, x):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


@dataclass
class SeriesValue:
    value: mpmath.mpf
    tail: mpmath.mpf
    terms: int


def _tail_bound(ctx, s: PuiseuxSeries, q0):
    """Geometric tail estimate from the growth of the last 20 coefficients."""
    cs = [abs(_mpf(ctx, c)) for c in s.coeffs]
    n = len(cs)
    if n < 40:
        last = max(cs) if cs else ctx.zero
        rho = ctx.one
    else:
        last = max(cs[-20:])
        before = max(cs[-40:-20])
        rho = ctx.one if not before else max(ctx.one, (last / before) ** (ctx.one / 20))
    ratio = rho * q0
    if ratio >= 1:
        return ctx.inf
    return last * q0 ** (s.precision) / (1 - ratio) * rho


def eval_series(s: PuiseuxSeries, q0, *, prec: int | None = None, tol=None) -> SeriesValue:
    """Value of a truncated series at ``0 < q0 < 1`` with a tail estimate."""
    ctx = context(prec)
    q0 = ctx.mpf(q0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie strictly between 0 and 1")
    acc = ctx.zero
    for c in reversed(s.coeffs):
        acc = acc * q0 + _mpf(ctx, c)
    off = s.offset if not s.is_zero else Fraction(0)
    value = acc * ctx.power(q0, _mpf(ctx, off))
    tail = _tail_bound(ctx, s, q0)
    if tol is not None and tail > ctx.mpf(tol):
        raise InsufficientTruncation(f"tail estimate {ctx.nstr(tail, 5)} exceeds {tol}")
    return SeriesValue(value, tail, s.truncation)


# ---------------------------------------------------------------------------
# the level-10 point

def q_level10(ctx):
    return ctx.exp(-2 * ctx.pi / ctx.sqrt(10))


def k_closed_form(ctx):
    s5 = ctx.sqrt(5)
    return ctx.sqrt(10 + 4 * s5) - 2 - s5


def _eval_rf(ctx, g: RationalFunction5, x):
    def poly(p):
        acc = ctx.zero
        for c in reversed(p.coeffs):
            acc = acc * x + c.to_mpf(ctx)
        return acc
    return poly(g.num) / poly(g.den)


def _row(label: str) -> tuple[str, EtaExponents, ParamExponents]:
    for row in table8():
        if row.label == label:
            return row.label, row.e, row.a
    fl = FamilyLabel.parse(label)
    e, a = family_exponents(fl)
    return str(fl), e, a


_CLOSED: dict[str, Callable] = {
    "1.0": lambda c, s5: 1 - 2 * c.sqrt((10 - 4 * s5) / 5),
    "3.0": lambda c, s5: (c.sqrt(10 - 4 * s5) - 1) / 4,
    "4.0": lambda c, s5: (c.sqrt((10 + 4 * s5) / 5) - 1) / 4,
    "3.1": lambda c, s5: c.mpf(1) / 24 + (15 * s5 - 34) * c.sqrt(10 + 4 * s5) / 48,
}


def closed_form_value(label: str, prec: int | None = None):
    """Closed form of the integral over ``[0, q0]`` for a level-10 row.

    Rows with a displayed algebraic value use it; other rows fall back to
    ``g(k0) - g(0)`` with the exact antiderivative in ``k``.
    """
    ctx = context(prec)
    name, _, a = _row(label)
    if a.a0 < 1:
        raise NotIntegrableAtZero(f"row {name} has a0 = {a.a0}")
    if name in _CLOSED:
        return _CLOSED[name](ctx, ctx.sqrt(5))
    g = antiderivative_in_k(a)
    return _eval_rf(ctx, g, k_closed_form(ctx)) - _eval_rf(ctx, g, ctx.zero)


@dataclass
class FineValue:
    label: str
    series_value: mpmath.mpf
    closed_value: mpmath.mpf
    tail: mpmath.mpf
    precision_bits: int

    @property
    def abs_error(self):
        return abs(self.series_value - self.closed_value)


def ramanujan_fine_value(label: str, prec: int | None = None, terms: int = DEFAULT_TERMS) -> FineValue:
    """``int_0^q0 u(q) dq/q`` for a level-10 row, by the series route and the closed form."""
    name, e, a = _row(label)
    if a.a0 < 1:
        raise NotIntegrableAtZero(f"row {name} is not integrable at q = 0 (a0 = {a.a0})")
    ctx = context(prec)
    v = e.series(terms).antiderivative_dq_over_q()
    sv = eval_series(v, q_level10(ctx), prec=ctx.prec)
    return FineValue(name, sv.value, closed_form_value(name, ctx.prec), sv.tail, ctx.prec)


# ---------------------------------------------------------------------------
# other displayed integrals

def _E(ctx, x):
    return ctx.qp(x)


def _eta_direct(ctx, exps: Mapping[int, int], t):
    """``prod E(t^d)^e_d`` by direct products, without the ``t`` power."""
    out = ctx.one
    for d, e in exps.items():
        out *= _E(ctx, t ** d) ** e
    return out


def _rr_direct(ctx, t):
    t5 = t ** 5
    return t ** (ctx.one / 5) * ctx.qp(t, t5) * ctx.qp(t ** 4, t5) / (ctx.qp(t ** 2, t5) * ctx.qp(t ** 3, t5))


@dataclass(frozen=True)
class IntegralSpec:
    """``int_0^q0 U(t) dt = V(q0) = value``."""
    name: str
    q0: Callable                      # ctx -> upper limit
    antiderivative: Callable          # N -> PuiseuxSeries of V
    integrand: Callable               # (ctx, t) -> U(t), computed directly
    value: Callable                   # ctx -> closed form


def _eta_spec(name, q0, v: Mapping[int, int], u: Mapping[int, int], value):
    off = Fraction(sum(d * e for d, e in u.items()), 24)

    def integrand(ctx, t):
        return t ** (_mpf(ctx, off) - 1) * _eta_direct(ctx, u, t)

    return IntegralSpec(name, q0, lambda N: eta_quotient_series(v, N), integrand, value)


def _integral1_integrand(ctx, t):
    return _eta_direct(ctx, {1: 5, 5: -1}, t) * _rr_direct(ctx, t) ** 5 / t


def _level7_integrand(ctx, t):
    P = _eta_direct(ctx, {1: 4, 7: -4}, t)
    return _eta_direct(ctx, {7: 6, 1: -2}, t) * ctx.cbrt(P + 13 * t + 49 * t * t / P) ** 2


_q6 = lambda c: c.exp(-2 * c.pi / c.sqrt(6))
_q3 = lambda c: c.exp(-2 * c.pi / c.sqrt(3))
_q2 = lambda c: c.exp(-2 * c.pi / c.sqrt(2))

_V2, _U2 = {2: 1, 6: 5, 1: -5, 3: -1}, {2: 8, 3: 6, 1: -10}
_V3, _U3 = {1: 4, 6: 8, 2: -8, 3: -4}, {1: 8, 6: 6, 2: -10}
_V4, _U4 = {1: 3, 6: 9, 2: -3, 3: -9}, {1: 6, 6: 8, 3: -10}

INTEGRALS: dict[str, IntegralSpec] = {s.name: s for s in [
    IntegralSpec("integral1", lambda c: c.exp(-2 * c.pi / c.sqrt(5)),
                 lambda N: rr_series(N).pow_int(5), _integral1_integrand,
                 lambda c: c.sqrt(((1 + c.sqrt(5)) / 2) ** 10 + 1) - ((1 + c.sqrt(5)) / 2) ** 5),
    _eta_spec("integral2", _q6, _V2, _U2, lambda c: c.sqrt(2) / 12),
    _eta_spec("integral2@3", _q3, _V2, _U2, lambda c: (c.sqrt(3) - 1) / 24),
    _eta_spec("integral2@2", _q2, _V2, _U2, lambda c: (c.sqrt(6) - 2) / 36),
    _eta_spec("integral3", _q6, _V3, _U3, lambda c: (c.sqrt(2) - 1) ** 2 / 3),
    _eta_spec("integral3@3", _q3, _V3, _U3, lambda c: (2 - c.sqrt(3)) ** 2 / 3),
    _eta_spec("integral3@2", _q2, _V3, _U3, lambda c: (c.sqrt(6) - 2) ** 2 / 18),
    _eta_spec("integral4", _q6, _V4, _U4, lambda c: (3 * c.sqrt(2) - 4) / 4),
    _eta_spec("integral4@3", _q3, _V4, _U4, lambda c: (c.sqrt(3) - 1) ** 3 / 16),
    _eta_spec("integral4@2", _q2, _V4, _U4, lambda c: (c.sqrt(6) - 2) ** 3 / 8),
    _eta_spec("integral5", lambda c: c.exp(-c.pi / c.sqrt(2)), {2: 2, 8: 4, 1: -4, 4: -2},
              {2: 8, 4: 4, 1: -8}, lambda c: 1 / c.sqrt(32)),
    _eta_spec("integral6", lambda c: c.exp(-2 * c.pi / 3), {9: 3, 1: -3}, {3: 10, 1: -6},
              lambda c: 1 / (3 * c.sqrt(3))),
    _eta_spec("fine0", lambda c: c.exp(-c.pi), {4: 8, 1: -8}, {2: 20, 1: -16},
              lambda c: c.mpf(1) / 16),
    IntegralSpec("level7", lambda c: c.exp(-2 * c.pi / c.sqrt(7)),
                 lambda N: eta_quotient_series({7: 4, 1: -4}, N), _level7_integrand,
                 lambda c: c.mpf(1) / 7),
]}


@dataclass
class NumericCheck:
    check: str
    lhs: mpmath.mpf
    rhs: mpmath.mpf
    precision_bits: int
    tolerance: float
    passed: bool | None = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = bool(self.abs_error <= self.tolerance)

    @property
    def abs_error(self):
        return abs(self.lhs - self.rhs)

    def to_json(self, digits: int = 40) -> dict:
        return {
            "check": self.check,
            "lhs": mpmath.nstr(self.lhs, digits),
            "rhs": mpmath.nstr(self.rhs, digits),
            "abs_error": mpmath.nstr(self.abs_error, 5),
            "precision_bits": self.precision_bits,
            "passed": self.passed,
        }


def integral_value(name: str, prec: int | None = None, terms: int = DEFAULT_TERMS,
                   tol: float = 1e-20) -> NumericCheck:
    """Antiderivative series at ``q0`` against the displayed closed form."""
    spec = INTEGRALS[name]
    ctx = context(prec)
    sv = eval_series(spec.antiderivative(terms), spec.q0(ctx), prec=ctx.prec)
    return NumericCheck(f"{name} antiderivative", sv.value, spec.value(ctx), ctx.prec, tol)


def quadrature_check(integrand: Callable, q0, reference, *, tol: float = 1e-12,
                     prec: int = 128, name: str = "quadrature") -> NumericCheck:
    """Gauss-Legendre value of ``int_0^q0 integrand(ctx, t) dt`` against ``reference``.

    mpmath doubles the node count until successive estimates settle; the
    reported error estimate must fall below ``tol / 10``.
    """
    ctx = context(prec)
    q0 = ctx.mpf(q0)
    value, err = ctx.quad(lambda t: integrand(ctx, t), [0, q0], method="gauss-legendre",
                          error=True, maxdegree=10)
    if err > tol / 10:
        raise ToleranceNotMet(f"{name}: quadrature error estimate {ctx.nstr(err, 5)}")
    return NumericCheck(name, value, ctx.mpf(reference), ctx.prec, tol)


def integral_quadrature(name: str, tol: float = 1e-12, prec: int = 128) -> NumericCheck:
    spec = INTEGRALS[name]
    ctx = context(prec)
    return quadrature_check(spec.integrand, spec.q0(ctx), spec.value(ctx), tol=tol, prec=prec,
                            name=f"{name} quadrature")


def row_quadrature(label: str, tol: float = 1e-12, prec: int = 128) -> NumericCheck:
    """Direct quadrature of a level-10 row's eta quotient over ``[0, q0]``."""
    name, e, a = _row(label)
    if a.a0 < 1:
        raise NotIntegrableAtZero(f"row {name} has a0 = {a.a0}")
    ctx = context(prec)
    exps = e.as_map()

    def integrand(c, t):
        return t ** (a.a0 - 1) * _eta_direct(c, exps, t)

    return quadrature_check(integrand, q_level10(ctx), closed_form_value(name, prec), tol=tol,
                            prec=prec, name=f"row {name} quadrature")


def fine3_quadrature(tol: float = 1e-12, prec: int = 128) -> NumericCheck:
    """Quadrature only: no eta-quotient antiderivative is used."""
    ctx = context(prec)

    def integrand(c, t):
        return _eta_direct(c, {2: 14, 6: 6, 1: -8, 4: -8}, t)

    return quadrature_check(integrand, ctx.exp(-ctx.pi / ctx.sqrt(3)), ctx.mpf(1) / 3,
                            tol=tol, prec=prec, name="fine3 quadrature")


# ---------------------------------------------------------------------------
# the value of k at q0

def appendix_k_certificate(prec: int | None = None, terms: int = DEFAULT_TERMS,
                           tol: float = 1e-30) -> list[NumericCheck]:
    ctx = context(prec)
    q0 = q_level10(ctx)
    k = eval_series(k_series(terms), q0, prec=ctx.prec).value
    s5 = ctx.sqrt(5)
    P1, P2, P3 = 1 - k * k, 1 + k - k * k, 1 - 4 * k - k * k
    out = []
    # eta5^6/eta1^6 from direct products, before the transformation formula is applied
    eta_ratio = q0 * _eta_direct(ctx, {5: 6, 1: -6}, q0)
    out.append(NumericCheck("degree relation from the 1 and 5 parametrizations",
                            k / P2 * (P1 / P3) ** 2, eta_ratio, ctx.prec, tol))
    out.append(NumericCheck("(i) k/(1+k-k^2) * (1-k^2)/(1-4k-k^2) = 1/5",
                            k / P2 * P1 / P3, ctx.mpf(1) / 5, ctx.prec, tol))
    out.append(NumericCheck("(ii) 1/k - k = 4 + 2 sqrt5", 1 / k - k, 4 + 2 * s5, ctx.prec, tol))
    out.append(NumericCheck("(iii) 0 < k < sqrt5 - 2", k, s5 - 2, ctx.prec, tol,
                            passed=bool(0 < k < s5 - 2)))
    tol_iv = 1e-60 if ctx.prec >= 256 else tol
    out.append(NumericCheck("(iv) k(q0) closed form", k, k_closed_form(ctx), ctx.prec, tol_iv))
    return out
