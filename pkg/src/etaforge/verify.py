"""Executable certificates for the series identities, tables, and limits.

Every check compares two exactly computed truncated series (or exact
polynomials, or exact field elements) and reports the first place where they
disagree.  Descriptor tables are plain data so negative controls can perturb
them with :func:`dataclasses.replace`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exceptions import QuartetViolatesRelation
from .field5 import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    Poly5,
    RationalFunction5,
    Sqrt5Number,
    taylor_at_point,
)
from .kernel10 import (
    FamilyLabel,
    K_POLY,
    antiderivative_in_k,
    compose_rational_with_k,
    decide_rationality,
    family_exponents,
    integrand,
    rp_identity_series,
    table8,
    y10_series,
)
from .qseries import (
    PuiseuxSeries,
    eisenstein_Q,
    eisenstein_R,
    eta_quotient_series,
    first_mismatch,
    k_series,
    lambert_legendre_5,
    lambert_series,
    rr_series,
)

__all__ = [
    "CheckResult",
    "SuiteReport",
    "Table1Row",
    "Table2Row",
    "TABLE1",
    "TABLE2",
    "SUITES",
    "gbinom",
    "coefficient_rule",
    "s_coefficient",
    "t_coefficient",
    "verify_recurrence",
    "verify_table1_row",
    "verify_table2_row",
    "verify_theorem_T1",
    "hyp2f1_terminating",
    "lemma_g_forms",
    "lemma_closed_form",
    "nth_derivative_at",
    "theorem_L1_closed",
    "lemma_limit_closed",
    "check_quartet",
    "random_rational_quartets",
    "verify_limit_theorems",
    "run_suite",
]


# ---------------------------------------------------------------------------
# reports

@dataclass
class CheckResult:
    name: str
    passed: bool
    first_mismatch: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.first_mismatch is not None:
            out["first_mismatch"] = self.first_mismatch
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def compare_series(name: str, lhs: PuiseuxSeries, rhs: PuiseuxSeries, min_precision) -> CheckResult:
    """Equal up to their common precision, which must reach ``min_precision``."""
    prec = min(lhs.precision, rhs.precision)
    mm = first_mismatch(lhs, rhs)
    if mm is not None:
        return CheckResult(name, False, str(mm), f"coefficients of q^{mm} differ")
    if prec < min_precision:
        return CheckResult(name, False, None, f"only checked below q^{prec}")
    return CheckResult(name, True, detail=f"agree below q^{prec}")


def _eta(exps: Mapping[int, int], N: int) -> PuiseuxSeries:
    return eta_quotient_series(exps, N)


def _plain(exps: Mapping[int, int], N: int) -> PuiseuxSeries:
    """``prod E(q^d)^e_d`` without the ``q`` power."""
    s = eta_quotient_series(exps, N)
    return s.shift(-s.offset)


# ---------------------------------------------------------------------------
# binomial sums

def gbinom(u: int, k: int) -> int:
    """``u (u-1) ... (u-k+1) / k!``, valid for negative ``u`` as well."""
    if k < 0:
        return 0
    if u >= 0:
        return math.comb(u, k)
    # C(u, k) = (-1)^k C(k - u - 1, k) for u < 0
    return (-1) ** k * math.comb(k - u - 1, k)


C = gbinom


def _multinomial(n_plus_j: int, j: int, rest: int) -> int:
    # (n+j)! / (j!^4 rest!)
    return math.factorial(n_plus_j) // (math.factorial(j) ** 4 * math.factorial(rest))


def _s_5(n):
    return sum((-1) ** (j + n) * C(n, j) ** 3 * C(4 * n - 5 * j, 3 * n) for j in range(n + 1))


def _s_6a(n):
    return sum(C(n, j) ** 2 * C(n + j, j) ** 2 for j in range(n + 1))


def _s_6b(n):
    return (-1) ** n * sum(C(n, j) ** 2 * C(2 * j, j) * C(2 * n - 2 * j, n - j) for j in range(n + 1))


def _s_6c(n):
    return sum((-3) ** (n - 3 * j) * _multinomial(n + j, j, n - 3 * j) for j in range(n // 3 + 1))


def _s_8(n):
    return sum(C(n, j) ** 2 * C(2 * j, n) ** 2 for j in range(n + 1))


def _s_9(n):
    return sum(C(n, j) ** 2 * C(n, l) * C(j, l) * C(j + l, n)
               for j in range(n + 1) for l in range(j + 1))


def _t_1(n):
    return C(6 * n, 3 * n) * C(3 * n, n) * C(2 * n, n)


def _t_2(n):
    return C(4 * n, 2 * n) * C(2 * n, n) ** 2


def _t_3(n):
    return C(3 * n, n) * C(2 * n, n) ** 2


def _t_4(n):
    return C(2 * n, n) ** 3


def _t_5(n):
    return C(2 * n, n) * sum(C(n, j) ** 2 * C(n + j, j) for j in range(n + 1))


def _t_6a(n):
    return C(2 * n, n) * sum((-8) ** (n - j) * C(n, j) * C(j, l) ** 3
                             for j in range(n + 1) for l in range(j + 1))


def _t_6b(n):
    return C(2 * n, n) * sum(C(n, j) ** 2 * C(2 * j, j) for j in range(n + 1))


def _t_6c(n):
    return C(2 * n, n) * sum(C(n, j) ** 3 for j in range(n + 1))


def _t_7(n):
    return sum(C(n, j) ** 2 * C(2 * j, n) * C(n + j, j) for j in range(n + 1))


def _t_8(n):
    return C(2 * n, n) * (-1) ** n * sum(C(n, j) * C(2 * j, j) * C(2 * n - 2 * j, n - j)
                                         for j in range(n + 1))


def _t_9(n):
    return C(2 * n, n) * sum((-3) ** (n - 3 * j) * C(n, j) * C(n - j, j) * C(n - 2 * j, j)
                             for j in range(n // 3 + 1))


def _t_10(n):
    return sum(C(n, j) ** 4 for j in range(n + 1))


_S_RULES: dict[str, Callable[[int], int]] = {
    "5": _s_5, "6A": _s_6a, "6B": _s_6b, "6C": _s_6c, "8": _s_8, "9": _s_9,
}
_T_RULES: dict[str, Callable[[int], int]] = {
    "1": _t_1, "2": _t_2, "3": _t_3, "4": _t_4, "5": _t_5, "6A": _t_6a, "6B": _t_6b,
    "6C": _t_6c, "7": _t_7, "8": _t_8, "9": _t_9, "10": _t_10,
}


def _tag(tag) -> str:
    return str(tag).upper().replace("(", "").replace(")", "").replace(" ", "")


def s_coefficient(tag, n: int) -> int:
    """``s(n)`` for a level in ``TABLE1`` (``5``, ``6A``, ``6B``, ``6C``, ``8``, ``9``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _S_RULES[_tag(tag)](n)


def t_coefficient(tag, n: int) -> int:
    """``T(n)`` for a level in ``TABLE2`` (``1`` to ``10`` with ``6A``, ``6B``, ``6C``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _T_RULES[_tag(tag)](n)


def coefficient_rule(tag, n: int, table: int | None = None) -> int:
    """Binomial-sum coefficient of a level.

    ``table=None`` means ``TABLE1`` when the level has a row there, else ``TABLE2``.
    """
    t = _tag(tag)
    if table is None:
        table = 1 if t in _S_RULES else 2
    return s_coefficient(t, n) if table == 1 else t_coefficient(t, n)


# ---------------------------------------------------------------------------
# modular-equation data: x, w, y and (alpha, beta, gamma)

@dataclass(frozen=True)
class Table1Row:
    tag: str
    x: Mapping[int, int] | None      # None means r(q)^5
    w: Mapping[int, int]
    y: Mapping[int, int]
    params: tuple[int, int, int]     # (alpha, beta, gamma)
    rule: Callable[[int], int]

    def x_series(self, N: int) -> PuiseuxSeries:
        return rr_series(N).pow_int(5) if self.x is None else _eta(self.x, N)


TABLE1: dict[str, Table1Row] = {
    "5": Table1Row("5", None, {5: 6, 1: -6}, {1: 5, 5: -1}, (11, 3, 1), _s_5),
    "6A": Table1Row("6A", {2: 1, 6: 5, 1: -5, 3: -1}, {1: 12, 6: 12, 2: -12, 3: -12},
                    {2: 7, 3: 7, 1: -5, 6: -5}, (-17, -6, -72), _s_6a),
    "6B": Table1Row("6B", {1: 4, 6: 8, 2: -8, 3: -4}, {2: 6, 6: 6, 1: -6, 3: -6},
                    {1: 4, 3: 4, 2: -2, 6: -2}, (10, 3, -9), _s_6b),
    "6C": Table1Row("6C", {1: 3, 6: 9, 2: -3, 3: -9}, {3: 4, 6: 4, 1: -4, 2: -4},
                    {1: 3, 2: 3, 3: -1, 6: -1}, (7, 2, 8), _s_6c),
    # signs fixed by the x, w and s(n) relations; (12, 4, -32) satisfies none of them
    "8": Table1Row("8", {2: 2, 8: 4, 1: -4, 4: -2}, {1: 8, 8: 8, 2: -8, 4: -8},
                   {2: 6, 4: 6, 1: -4, 8: -4}, (-12, -4, -32), _s_8),
    "9": Table1Row("9", {9: 3, 1: -3}, {1: 6, 9: 6, 3: -12}, {3: 10, 1: -3, 9: -3},
                   (-9, -3, -27), _s_9),
}

LEVEL8_FLIPPED_PARAMS = (12, 4, -32)


def verify_recurrence(rule: Callable[[int], int], params: tuple, n_max: int = 20) -> CheckResult:
    """``(n+1)^3 s(n+1) = -(2n+1)(a n^2 + a n + a - 2b) s(n) - (a^2 + 4c) n^3 s(n-1)``."""
    a, b, c = params
    s = [rule(n) for n in range(n_max + 2)]
    if s[0] != 1:
        return CheckResult("recurrence", False, "0", f"s(0) = {s[0]}")
    for n in range(n_max + 1):
        prev = s[n - 1] if n else 0
        rhs = -(2 * n + 1) * (a * n * n + a * n + a - 2 * b) * s[n] - (a * a + 4 * c) * n ** 3 * prev
        if (n + 1) ** 3 * s[n + 1] != rhs:
            return CheckResult("recurrence", False, str(n + 1), f"fails at n = {n}")
    return CheckResult("recurrence", True)


def _sum_in(coeffs: Sequence[int], X: PuiseuxSeries, N: int) -> PuiseuxSeries:
    """``sum coeffs[n] X^n`` by Horner; ``X`` must have positive valuation."""
    acc = PuiseuxSeries.constant(coeffs[-1], N)
    for c in reversed(coeffs[:-1]):
        acc = acc * X + PuiseuxSeries.constant(c, N)
    return acc.truncate_to(N)


def verify_table1_row(tag, N_terms: int = 60) -> list[CheckResult]:
    """All relations of one ``TABLE1`` row to ``q^N_terms``; accepts a tag or a row."""
    row = tag if isinstance(tag, Table1Row) else TABLE1[_tag(tag)]
    if N_terms < 3:
        raise ValueError("N_terms must be at least 3")
    N = N_terms
    a, _, c = row.params
    x = row.x_series(N)
    w = _eta(row.w, N)
    y = _eta(row.y, N)
    name = f"table1[{row.tag}]"
    out = [
        compare_series(f"{name} w = x/(1 - a x - c x^2)", w, x / (1 - a * x - c * x * x), N),
        compare_series(f"{name} y = q d/dq log x", y, x.q_log_derivative(), N),
        compare_series(f"{name} y = sum s(n) w^n", y, _sum_in([row.rule(n) for n in range(N + 1)], w, N), N),
    ]
    rec = verify_recurrence(row.rule, row.params)
    rec.name = f"{name} recurrence"
    out.append(rec)
    return out


# ---------------------------------------------------------------------------
# modular-equation data: w, X and Z

def _level1_w(N: int) -> PuiseuxSeries:
    Q32 = eisenstein_Q(N).pow_rational(Fraction(3, 2))
    R = eisenstein_R(N)
    return ((Q32 - R) / (Q32 + R)).scale(Fraction(1, 432))


@dataclass(frozen=True)
class Table2Row:
    tag: str
    w: Mapping[int, int] | None      # None means the Eisenstein expression of level 1
    xden: tuple[int, int, int]       # X = w / (xden[0] + xden[1] w + xden[2] w^2)
    z_eta: Mapping[int, int]
    z_power: Fraction                # Z = eta quotient / X^z_power
    rule: Callable[[int], int]

    def w_series(self, N: int) -> PuiseuxSeries:
        return _level1_w(N) if self.w is None else _eta(self.w, N)


TABLE2: dict[str, Table2Row] = {
    "1": Table2Row("1", None, (1, 864, 432 ** 2), {1: 4}, Fraction(1, 6), _t_1),
    "2": Table2Row("2", {2: 24, 1: -24}, (1, 128, 64 ** 2), {1: 2, 2: 2}, Fraction(1, 4), _t_2),
    "3": Table2Row("3", {3: 12, 1: -12}, (1, 54, 27 ** 2), {1: 2, 3: 2}, Fraction(1, 3), _t_3),
    "4": Table2Row("4", {4: 8, 1: -8}, (1, 32, 16 ** 2), {1: 2, 4: 2}, Fraction(5, 12), _t_4),
    "5": Table2Row("5", {5: 6, 1: -6}, (1, 22, 125), {1: 2, 5: 2}, Fraction(1, 2), _t_5),
    "6A": Table2Row("6A", {1: 12, 6: 12, 2: -12, 3: -12}, (1, -34, 1),
                    {1: 1, 2: 1, 3: 1, 6: 1}, Fraction(1, 2), _t_6a),
    "6B": Table2Row("6B", {2: 6, 6: 6, 1: -6, 3: -6}, (1, 20, 64),
                    {1: 1, 2: 1, 3: 1, 6: 1}, Fraction(1, 2), _t_6b),
    "6C": Table2Row("6C", {3: 4, 6: 4, 1: -4, 2: -4}, (1, 14, 81),
                    {1: 1, 2: 1, 3: 1, 6: 1}, Fraction(1, 2), _t_6c),
    "7": Table2Row("7", {7: 4, 1: -4}, (1, 13, 49), {1: 2, 7: 2}, Fraction(2, 3), _t_7),
    # X = w/(1 + 2a w + (a^2 + 4c) w^2) with (a, c) = (-12, -32)
    "8": Table2Row("8", {1: 8, 8: 8, 2: -8, 4: -8}, (1, -24, 16), {2: 2, 4: 2}, Fraction(1, 2), _t_8),
    "9": Table2Row("9", {1: 6, 9: 6, 3: -12}, (1, -18, -27), {3: 4}, Fraction(1, 2), _t_9),
    "10": Table2Row("10", {5: 2, 10: 2, 1: -2, 2: -2}, (1, 6, 25),
                    {1: 1, 2: 1, 5: 1, 10: 1}, Fraction(3, 4), _t_10),
}

# the middle sign that (12, 4, -32) would give; kept as a negative control
LEVEL8_UNCORRECTED_XDEN = (1, 24, 16)


def verify_table2_row(tag, N_terms: int = 40) -> list[CheckResult]:
    """``q d/dq log w = Z`` and ``Z = sum T(n) X^n`` to ``q^N_terms``."""
    row = tag if isinstance(tag, Table2Row) else TABLE2[_tag(tag)]
    if N_terms < 3:
        raise ValueError("N_terms must be at least 3")
    N = N_terms
    # level 1 loses a coefficient to cancellation in Q^(3/2) - R
    w = row.w_series(N + 2)
    c0, c1, c2 = row.xden
    X = w / (c0 + c1 * w + c2 * w * w)
    Z = _eta(row.z_eta, N + 2) / X.pow_rational(row.z_power)
    name = f"table2[{row.tag}]"
    out = [
        compare_series(f"{name} q d/dq log w = Z", w.q_log_derivative(), Z, N),
        compare_series(f"{name} Z = sum T(n) X^n", Z, _sum_in([row.rule(n) for n in range(N + 1)], X, N), N),
    ]
    if row.tag == "4":
        out.append(compare_series(f"{name} Z = eta2^20/(eta1^8 eta4^8)", Z,
                                  _eta({2: 20, 1: -8, 4: -8}, N), N))
    return out


def level7_integral_check(N_terms: int = 100) -> CheckResult:
    """``d/dq [q E(q^7)^4/E(q)^4]`` against the integrand with the 2/3 power."""
    N = N_terms
    V = _eta({7: 4, 1: -4}, N)                # q E(q^7)^4 / E(q)^4
    P = _plain({1: 4, 7: -4}, N)              # E(q)^4 / E(q^7)^4
    q = PuiseuxSeries.monomial(1, 1, N)
    inner = P + 13 * q + 49 * q * q / P
    dV = _plain({7: 6, 1: -2}, N) * inner.pow_rational(Fraction(2, 3))
    return compare_series("level7 integral", V.q_derivative(), q * dV, N)


# ---------------------------------------------------------------------------
# the six integrals as series identities

# (V, U): q d/dq V = U.  Index 1 is handled separately since V = r(q)^5.
T1_PAIRS: dict[int, tuple[Mapping[int, int], Mapping[int, int]]] = {
    2: ({2: 1, 6: 5, 1: -5, 3: -1}, {2: 8, 3: 6, 1: -10}),
    3: ({1: 4, 6: 8, 2: -8, 3: -4}, {1: 8, 6: 6, 2: -10}),
    4: ({1: 3, 6: 9, 2: -3, 3: -9}, {1: 6, 6: 8, 3: -10}),
    5: ({2: 2, 8: 4, 1: -4, 4: -2}, {2: 8, 4: 4, 1: -8}),
    6: ({9: 3, 1: -3}, {3: 10, 1: -6}),
}
FINE_PAIR = ({4: 8, 1: -8}, {2: 20, 1: -16})


def verify_theorem_T1(index: int, N_terms: int = 300) -> CheckResult:
    if N_terms < 3:
        raise ValueError("N_terms must be at least 3")
    N = N_terms
    if index == 1:
        V = rr_series(N).pow_int(5)
        U = V * _eta({1: 5, 5: -1}, N)
    elif index in T1_PAIRS:
        v, u = T1_PAIRS[index]
        V, U = _eta(v, N), _eta(u, N)
    else:
        raise ValueError("index must be between 1 and 6")
    return compare_series(f"integral{index}", V.q_derivative(), U, N)


def fine_identity_check(N_terms: int = 500) -> CheckResult:
    v, u = FINE_PAIR
    return compare_series("fine antiderivative", _eta(v, N_terms).q_derivative(), _eta(u, N_terms), N_terms)


# ---------------------------------------------------------------------------
# opening identities

def legendre5_identity(N_terms: int = 500) -> CheckResult:
    return compare_series("quintic Legendre identity", lambert_legendre_5(N_terms),
                          _eta({1: 5, 5: -1}, N_terms), N_terms)


def four_squares_identity(N_terms: int = 500) -> CheckResult:
    N = N_terms
    rhs = 1 + 8 * lambert_series(1, 1, N) - 32 * lambert_series(1, 4, N)
    return compare_series("four squares identity", _eta({2: 20, 1: -8, 4: -8}, N), rhs, N)


def rr_log_derivative_identity(N_terms: int = 500) -> CheckResult:
    r5 = rr_series(N_terms).pow_int(5)
    return compare_series("q d/dq log r^5", r5.q_log_derivative(), _eta({1: 5, 5: -1}, N_terms), N_terms)


# ---------------------------------------------------------------------------
# the level-10 parametrization and the k-integrals

def rp_checks(N_terms: int = 200) -> list[CheckResult]:
    N = N_terms
    out = []
    for i in (1, 2, 3, 4):
        lhs, rhs = rp_identity_series(i, N)
        out.append(compare_series(f"rp{i}", lhs, rhs, lhs.offset + N))
    k = k_series(N)
    out.append(compare_series("y10 = q d/dq log k", k.q_log_derivative(), y10_series(N), N))
    r = rr_series(N)
    out.append(compare_series("k = r(q) r(q^2)^2", k, r * r.dilate(2).pow_int(2), 1 + N))
    return out


def derivative_identity(label: str, e, g: RationalFunction5, N_terms: int = 200) -> CheckResult:
    """``q d/dq g(k(q))`` against the eta quotient of ``e``."""
    rhs = e.series(N_terms)
    # g(k) may start at q^0 or below, so compose far enough to cover rhs
    lhs = compose_rational_with_k(g, N_terms + abs(int(rhs.offset)) + g.den.degree + 1).q_derivative()
    return compare_series(f"row {label}: q d/dq g(k)", lhs, rhs, rhs.offset + N_terms)


def tables89_checks(N_terms: int = 200, m_max: int = 8, m_decide: int = 20) -> list[CheckResult]:
    out = []
    for row in table8():
        out.append(derivative_identity(row.label, row.e, row.g, N_terms))
        ok = (row.g.derivative() == integrand(row.a)) and decide_rationality(row.a, with_g=False).rational
        out.append(CheckResult(f"row {row.label}: g' = integrand, rational", ok))
    for fam in (1, 2, 3, 4):
        for m in range(m_decide + 1):
            label = FamilyLabel(fam, m)
            e, a = family_exponents(label)
            cert = decide_rationality(a)
            ok = cert.rational and cert.g is not None and cert.g.is_rational()
            out.append(CheckResult(f"family {label}: rational with rational g", ok))
            if ok and m <= m_max:
                out.append(derivative_identity(str(label), e, cert.g, N_terms))
    return out


# ---------------------------------------------------------------------------
# the polynomial identity in z

def _padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pscale(a: list, c) -> list:
    return [c * x for x in a]


def _ptrim(a: list) -> tuple[Fraction, ...]:
    a = [Fraction(x) for x in a]
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def _ppow(a: list, n: int) -> list:
    out = [Fraction(1)]
    for _ in range(n):
        out = _pmul(out, a)
    return out


def _poch(x, k: int):
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def hyp2f1_terminating(a: int, b: int, c: int, x):
    """Terminating ``2F1(a, b; c; x)``; one of ``a``, ``b`` must be a nonpositive integer.

    ``x`` may be a number or a polynomial given as a coefficient list.
    """
    stops = [-p for p in (a, b) if isinstance(p, int) and p <= 0]
    if not stops:
        raise ValueError("2F1 is only evaluated when it terminates")
    T = min(stops)
    if isinstance(c, int) and c <= 0 and -c < T:
        raise ZeroDivisionError("lower parameter hits a nonpositive integer first")
    terms = []
    t = Fraction(1)
    for k in range(T + 1):
        terms.append(t)
        t = t * (a + k) * (b + k) / ((c + k) * (k + 1))
    if isinstance(x, (list, tuple)):
        acc: list = [terms[-1]]
        for coef in reversed(terms[:-1]):
            acc = _padd(_pmul(acc, list(x)), [coef])
        return acc
    acc = Fraction(0)
    for coef in reversed(terms):
        acc = acc * x + coef
    return acc


def _g1(n):
    total: list = []
    one_plus_z = [1, 1]
    for t in range(n + 1):
        inner = [Fraction(0)] * (n - t + 1)
        for s in range(n - t + 1):
            inner[s] = Fraction(math.comb(n, s) * math.comb(n, s + t))
        coef = math.comb(t + n, t) * Fraction(-1, 2) ** t
        total = _padd(total, _pscale(_pmul(_ppow(one_plus_z, t), inner), coef))
    return total


_HALF_1PZ = [Fraction(1, 2), Fraction(1, 2)]
_HALF_1MZ = [Fraction(1, 2), Fraction(-1, 2)]


def _g2(n):
    total: list = []
    for s in range(n + 1):
        F = hyp2f1_terminating(n + 1, s - n, s + 1, _HALF_1PZ)
        total = _padd(total, _pscale(_pmul([0] * s + [1], F), math.comb(n, s) ** 2))
    return total


def _g3(n):
    total: list = []
    for s in range(n + 1):
        F = hyp2f1_terminating(n + 1, -s, n + 1 - s, _HALF_1PZ)
        total = _padd(total, _pscale(_pmul([0] * (n - s) + [1], F), math.comb(n, s) ** 2))
    return total


def _g4(n):
    total: list = []
    for s in range(n + 1):
        F = hyp2f1_terminating(n + 1, -s, 1, _HALF_1MZ)
        total = _padd(total, _pscale(_pmul([0] * (n - s) + [1], F), math.comb(n, s) * (-1) ** s))
    return total


def _gfinal(n):
    return _pscale(_ppow([-1, 1], n), hyp2f1_terminating(-n, n + 1, 1, Fraction(1, 2)))


_G_FORMS = {"g1": _g1, "g2": _g2, "g3": _g3, "g4": _g4, "gfinal": _gfinal}


def lemma_g_forms(n: int, form: str) -> tuple[Fraction, ...]:
    """Coefficients (low to high in ``z``) of one form of the lemma's polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    return _ptrim(_G_FORMS[form](n))


def lemma_closed_form(n: int) -> tuple[Fraction, ...]:
    if n % 2:
        return ()
    c = Fraction((-1) ** (n // 2) * math.comb(n, n // 2), 2 ** n)
    return _ptrim(_pscale(_ppow([-1, 1], n), c))


def lemma_checks(n_max: int = 30) -> list[CheckResult]:
    out = []
    for n in range(1, n_max + 1):
        ref = lemma_closed_form(n)
        bad = [f for f in _G_FORMS if lemma_g_forms(n, f) != ref]
        out.append(CheckResult(f"lemma forms n={n}", not bad, None,
                               f"differs: {','.join(bad)}" if bad else None))
    return out


# ---------------------------------------------------------------------------
# derivative limits at a quartet of points

def _s5(x) -> Sqrt5Number:
    return x if isinstance(x, Sqrt5Number) else Sqrt5Number(Fraction(x))


def check_quartet(alpha, beta, gamma, delta) -> None:
    al, be, ga, de = map(_s5, (alpha, beta, gamma, delta))
    vals = [al, be, ga, de]
    if any(vals[i] == vals[j] for i in range(4) for j in range(i + 1, 4)):
        raise QuartetViolatesRelation("entries must be distinct")
    if (al + be) * (ga + de) != 2 * (al * be + ga * de):
        raise QuartetViolatesRelation("(a+b)(c+d) != 2(ab+cd)")


def nth_derivative_at(alpha, beta, gamma, delta, n: int) -> Sqrt5Number:
    """``d^n/dk^n [(k-c)^n (k-d)^n / (k-b)^(n+1)]`` at ``k = a``, by exact Taylor expansion."""
    al, be, ga, de = map(_s5, (alpha, beta, gamma, delta))
    num = Poly5.linear_root(ga) ** n * Poly5.linear_root(de) ** n
    den = Poly5.linear_root(be) ** (n + 1)
    f = RationalFunction5(num, den, reduce=False)
    return taylor_at_point(f, al, n)[n] * math.factorial(n)


def _odd_square_product(n: int) -> int:
    out = 1
    for i in range(1, n, 2):
        out *= i * i
    return out


def theorem_L1_closed(alpha, beta, gamma, delta, n: int) -> Sqrt5Number:
    al, be, ga, de = map(_s5, (alpha, beta, gamma, delta))
    if n % 2:
        return Sqrt5Number(0)
    sign = (-1) ** (n // 2)
    return (ga - de) ** n * ((al - be) ** (n + 1)).inv() * (sign * _odd_square_product(n))


def lemma_limit_closed(a, b, n: int) -> Sqrt5Number:
    a, b = _s5(a), _s5(b)
    if n % 2:
        return Sqrt5Number(0)
    sign = (-1) ** (n // 2)
    return (a - b) ** n * ((a + b) * (2 * a * b).inv()) ** (n + 1) * (sign * _odd_square_product(n))


def random_rational_quartets(count: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    """Distinct rational quartets with ``delta`` solved from the relation."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        al, be, ga = (Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(3))
        if al + be == 2 * ga:
            continue
        de = (2 * al * be - ga * (al + be)) / (al + be - 2 * ga)
        if len({al, be, ga, de}) < 4:
            continue
        out.append((al, be, ga, de))
    return out


GOLDEN_QUARTET = (ALPHA, BETA, GAMMA, DELTA)


def verify_limit_theorems(n_max: int, quartets: Iterable[tuple]) -> list[CheckResult]:
    out = []
    for q in quartets:
        check_quartet(*q)
        bad = None
        for n in range(1, n_max + 1):
            if nth_derivative_at(*q, n) != theorem_L1_closed(*q, n):
                bad = n
                break
        out.append(CheckResult(f"limit theorem {tuple(str(x) for x in q)}", bad is None,
                               None if bad is None else f"n={bad}"))
    return out


def verify_lemma_limit(n_max: int, pairs: Iterable[tuple]) -> list[CheckResult]:
    """The special case ``beta = 0`` at ``x0 = 2ab/(a+b)``."""
    out = []
    for a, b in pairs:
        a, b = _s5(a), _s5(b)
        if not a or not b or a == b or not (a + b):
            raise QuartetViolatesRelation("need nonzero a != b with a + b != 0")
        x0 = 2 * a * b * (a + b).inv()
        bad = None
        for n in range(1, n_max + 1):
            if nth_derivative_at(x0, 0, a, b, n) != lemma_limit_closed(a, b, n):
                bad = n
                break
        out.append(CheckResult(f"lemma limit a={a} b={b}", bad is None,
                               None if bad is None else f"n={bad}"))
    return out


# ---------------------------------------------------------------------------
# suites

def _suite_section1() -> list[CheckResult]:
    return [legendre5_identity(500), four_squares_identity(500), fine_identity_check(500),
            rr_log_derivative_identity(500)]


def _suite_table1() -> list[CheckResult]:
    out = []
    for tag in TABLE1:
        out.extend(verify_table1_row(tag, 60))
    examples = [(("5", 0), 1), (("5", 1), -5), (("5", 2), 35), (("6A", 1), 5)]
    for (tag, n), want in examples:
        out.append(CheckResult(f"s({n}) level {tag}", s_coefficient(tag, n) == want))
    wrong = verify_recurrence(_s_8, LEVEL8_FLIPPED_PARAMS)
    out.append(CheckResult("table1[8] sign-flipped parameters rejected", not wrong.passed))
    return out


def _suite_table2() -> list[CheckResult]:
    out = []
    for tag in TABLE2:
        out.extend(verify_table2_row(tag, 40))
    wrong = verify_table2_row(replace(TABLE2["8"], xden=LEVEL8_UNCORRECTED_XDEN), 40)
    out.append(CheckResult("table2[8] X with a = +12 rejected", not wrong[1].passed))
    out.append(level7_integral_check(100))
    return out


def _suite_t1() -> list[CheckResult]:
    return [verify_theorem_T1(i, 300) for i in range(1, 7)]


def _suite_lemmas() -> list[CheckResult]:
    return lemma_checks(30)


def _suite_limits() -> list[CheckResult]:
    out = verify_limit_theorems(16, [GOLDEN_QUARTET])
    out += verify_limit_theorems(10, random_rational_quartets(20, seed=10))
    pairs = [(1, 2), (3, -5), (Fraction(2, 7), Fraction(-9, 4)), (ALPHA, GAMMA)]
    out += verify_lemma_limit(10, pairs)
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "section1": _suite_section1,
    "table1": _suite_table1,
    "table2": _suite_table2,
    "t1": _suite_t1,
    "lemmas": _suite_lemmas,
    "limits": _suite_limits,
    "rp": lambda: rp_checks(200),
    "tables89": lambda: tables89_checks(200, 8, 20),
}


def run_suite(name: str) -> SuiteReport:
    """Run one named suite, or every suite in a fixed order for ``all``."""
    if name == "all":
        report = SuiteReport("all")
        for key, fn in SUITES.items():
            for c in fn():
                c.name = f"{key}: {c.name}"
                report.checks.append(c)
        return report
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SuiteReport(name, SUITES[name]())
