"""Level-10 calculus in terms of Ramanujan's parameter ``k``.

Every admissible eta quotient ``u = eta1^e1 eta2^e2 eta5^e5 eta10^e10``
factors as ``f(k) * q d/dq log k`` with

    f(k) = k^a0 (1-k^2)^a1 (1+k-k^2)^a2 (1-4k-k^2)^a3,

so ``int u dq/q = int f(k) dk/k``.  This module maps exponents, decides
whether that k-integral is rational (all residues vanish), builds the
antiderivative ``g(k)`` and composes rational functions of ``k`` back into
q-series.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .exceptions import NonIntegralParams, NonInvertibleComposition
from .field5 import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    LEVEL10_POLES,
    POLE_NAMES,
    Poly5,
    RationalFunction5,
    Sqrt5Number,
    integrate_partial_fractions,
    partial_fractions,
)
from .qseries import PuiseuxSeries, eta_quotient_series, k_series

__all__ = [
    "EtaExponents",
    "ParamExponents",
    "FamilyLabel",
    "Table8Row",
    "RationalityCertificate",
    "e_to_a",
    "a_to_e",
    "family_exponents",
    "table8",
    "table8_row",
    "golden_triples",
    "integrand",
    "pole_orders",
    "level10_residues",
    "is_rational_integral",
    "decide_rationality",
    "rp_identity_series",
    "y10_series",
    "compose_rational_with_k",
    "antiderivative_in_k",
    "DIVISORS",
]

DIVISORS = (1, 2, 5, 10)

# polynomial factors of the integrand
K_POLY = Poly5([0, 1])
P1 = Poly5([1, 0, -1])       # 1 - k^2
P2 = Poly5([1, 1, -1])       # 1 + k - k^2
P3 = Poly5([1, -4, -1])      # 1 - 4k - k^2


@dataclass(frozen=True, order=True)
class EtaExponents:
    e1: int
    e2: int
    e5: int
    e10: int

    @property
    def admissible(self) -> bool:
        return (self.e1 + self.e2 + self.e5 + self.e10 == 4
                and (self.e1 + 2 * self.e2 + 5 * self.e5 + 10 * self.e10) % 24 == 0)

    def as_map(self) -> dict[int, int]:
        return {1: self.e1, 2: self.e2, 5: self.e5, 10: self.e10}

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.e1, self.e2, self.e5, self.e10)

    def series(self, N: int) -> PuiseuxSeries:
        return eta_quotient_series(self.as_map(), N)

    def involution(self) -> "EtaExponents":
        """``(e1, e2, e5, e10) -> (e10, e5, e2, e1)``."""
        return EtaExponents(self.e10, self.e5, self.e2, self.e1)

    def permutations(self) -> list["EtaExponents"]:
        """The orbit listed with each row of the tables."""
        e1, e2, e5, e10 = self.as_tuple()
        return [EtaExponents(e1, e2, e5, e10), EtaExponents(e5, e10, e1, e2),
                EtaExponents(e10, e5, e2, e1), EtaExponents(e2, e1, e10, e5)]

    def __str__(self) -> str:
        return ",".join(map(str, self.as_tuple()))


@dataclass(frozen=True, order=True)
class ParamExponents:
    a0: int
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        if self.a0 + self.a1 + self.a2 + self.a3 != 0:
            raise ValueError(f"a0+a1+a2+a3 must vanish, got {self.as_tuple()}")

    @classmethod
    def from_triple(cls, a1: int, a2: int, a3: int) -> "ParamExponents":
        return cls(-(a1 + a2 + a3), a1, a2, a3)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __str__(self) -> str:
        return ",".join(map(str, self.as_tuple()))


@dataclass(frozen=True)
class FamilyLabel:
    family: int
    m: int

    def __post_init__(self):
        if self.family not in (1, 2, 3, 4):
            raise ValueError("family index must be 1, 2, 3 or 4")
        if self.m < 0:
            raise ValueError("m must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "FamilyLabel":
        f, m = text.split(".")
        return cls(int(f), int(m))

    def __str__(self) -> str:
        return f"{self.family}.{self.m}"


def e_to_a(e: EtaExponents) -> ParamExponents:
    e1, e2, e5, e10 = e.as_tuple()
    nums = (e1 + 2 * e2 + 5 * e5 + 10 * e10,
            -4 * e1 - 5 * e2 + 4 * e5 - e10,
            -e1 + 4 * e2 - 5 * e5 - 4 * e10,
            4 * e1 - e2 - 4 * e5 - 5 * e10)
    if any(n % 24 for n in nums):
        raise NonIntegralParams(f"exponents {e} give non-integral a = {[Fraction(n, 24) for n in nums]}")
    return ParamExponents(*(n // 24 for n in nums))


def a_to_e(a: ParamExponents) -> EtaExponents:
    """Inverse of :func:`e_to_a` on vectors with ``e1+e2+e5+e10 = 4``."""
    a0, a1, a2, _ = a.as_tuple()
    return EtaExponents(1 - 3 * a0 - 4 * a1 - 5 * a2,
                        2 + a0 + 2 * a1 + 5 * a2,
                        3 - a0 + 4 * a1 + a2,
                        -2 + 3 * a0 - 2 * a1 - a2)


# ---------------------------------------------------------------------------
# golden tables

@dataclass(frozen=True)
class Table8Row:
    label: str
    e: EtaExponents
    a: ParamExponents
    g: RationalFunction5


@lru_cache(maxsize=None)
def _tables() -> dict:
    with resources.files("etaforge.data").joinpath("tables.json").open() as fh:
        return json.load(fh)


def _g_from_data(spec: dict) -> RationalFunction5:
    num = Poly5([Fraction(spec["c"])])
    for factor in spec["num"]:
        num = num * Poly5(factor)
    den = K_POLY ** spec["k"] * P1 ** spec["f1"] * P2 ** spec["f2"] * P3 ** spec["f3"]
    return RationalFunction5(num, den)


@lru_cache(maxsize=None)
def table8() -> tuple[Table8Row, ...]:
    rows = []
    for r in _tables()["table8"]:
        rows.append(Table8Row(r["label"], EtaExponents(*r["e"]), ParamExponents(*r["a"]),
                              _g_from_data(r["g"])))
    return tuple(rows)


def table8_row(label: str) -> Table8Row:
    for row in table8():
        if row.label == label:
            return row
    raise KeyError(label)


def family_exponents(label: FamilyLabel) -> tuple[EtaExponents, ParamExponents]:
    spec = _tables()["table9"][label.family - 1]
    m = label.m
    e = EtaExponents(*(s * m + c for s, c in spec["e"]))
    a = ParamExponents(*(s * m + c for s, c in spec["a"]))
    return e, a


def golden_triples(R: int) -> set[tuple[int, int, int]]:
    """Golden sporadic triples plus family triples with all entries in ``[-R, R]``."""
    out = {row.a.triple for row in table8() if all(abs(x) <= R for x in row.a.triple)}
    for fam in (1, 2, 3, 4):
        m = 0
        while True:
            _, a = family_exponents(FamilyLabel(fam, m))
            if max(abs(x) for x in a.triple) > R:
                break
            out.add(a.triple)
            m += 1
    return out


# ---------------------------------------------------------------------------
# the integrand and its residues

def integrand(a: ParamExponents) -> RationalFunction5:
    """``k^(a0-1) (1-k^2)^a1 (1+k-k^2)^a2 (1-4k-k^2)^a3``."""
    return RationalFunction5.from_factors(
        1, [(K_POLY, a.a0 - 1), (P1, a.a1), (P2, a.a2), (P3, a.a3)], coprime=True)


def _linear_exponents(a: ParamExponents) -> list[tuple[Sqrt5Number, int]]:
    # 1-k^2 = -(k-1)(k+1); 1+k-k^2 = -(k-alpha)(k-beta); 1-4k-k^2 = -(k-gamma)(k-delta)
    p0, p1, m1, al, be, ga, de = LEVEL10_POLES
    return [(p0, a.a0 - 1), (p1, a.a1), (m1, a.a1), (al, a.a2), (be, a.a2), (ga, a.a3), (de, a.a3)]


def pole_orders(a: ParamExponents) -> dict[str, int]:
    """Order of the pole of the integrand at each of the seven candidate points."""
    return {name: max(0, -e) for name, (_, e) in zip(POLE_NAMES, _linear_exponents(a))}


def _binomial_power(c, e: int, n: int) -> list:
    """Coefficients of ``(c + t)**e`` through ``t**(n-1)``; ``c != 0``."""
    out = []
    inv = 1 / c
    term = c ** e
    for j in range(n):
        out.append(term)
        term = term * Fraction(e - j, j + 1) * inv
    return out


def _mul_trunc(x: list, y: list, n: int) -> list:
    out = [0] * n
    for i, xi in enumerate(x[:n]):
        if not xi:
            continue
        for j in range(min(len(y), n - i)):
            out[i + j] = out[i + j] + xi * y[j]
    return out


def _residue_fast(lin: list[tuple[Sqrt5Number, int]], idx: int):
    p, e = lin[idx]
    m = -e
    rational = p.is_rational()
    pv = p.a if rational else p
    sign = -1 if (sum(ex for _, ex in lin[1:]) // 2) % 2 else 1
    acc = [Fraction(sign)] + [Fraction(0)] * (m - 1)
    paired = set()
    for j, (q, eq) in enumerate(lin):
        if j == idx or eq == 0 or j in paired:
            continue
        if q.is_rational():
            factor = _binomial_power(pv - q.a, eq, m)
        elif rational:
            # (p+t-q)(p+t-conj q) has rational coefficients
            paired.add(next(i for i, (r, _) in enumerate(lin) if i != j and r == q.conjugate()))
            c0 = (pv - q) * (pv - q.conjugate())
            c1 = 2 * pv - (q + q.conjugate())
            factor = _quadratic_power(c0.a, c1.a, eq, m)
        else:
            factor = _binomial_power(pv - q, eq, m)
        acc = _mul_trunc(acc, factor, m)
    res = acc[m - 1]
    return res if isinstance(res, Sqrt5Number) else Sqrt5Number(res)


def _quadratic_power(c0: Fraction, c1: Fraction, e: int, n: int) -> list[Fraction]:
    """``(c0 + c1 t + t^2)**e`` through ``t**(n-1)`` by Miller's recurrence."""
    f = (c0, c1, Fraction(1))
    g = [c0 ** e]
    for m in range(1, n):
        acc = Fraction(0)
        for k in (1, 2):
            if k <= m and f[k]:
                acc += ((e + 1) * k - m) * f[k] * g[m - k]
        g.append(acc / (m * c0))
    return g


# residues at beta/delta are conjugates of those at alpha/gamma, 1 and -1 are rational
_EVAL_ORDER = (0, 1, 2, 3, 5)
_CONJ = {4: 3, 6: 5}


def level10_residues(a: ParamExponents, *, stop_at_nonzero: bool = False) -> dict[str, Sqrt5Number]:
    """Residues of the integrand at every pole, via local binomial expansions.

    With ``stop_at_nonzero`` the computation returns as soon as a nonzero
    residue is found, which is all a rationality scan needs.
    """
    lin = _linear_exponents(a)
    out: dict[str, Sqrt5Number] = {}
    for idx in _EVAL_ORDER:
        if lin[idx][1] >= 0:
            continue
        r = _residue_fast(lin, idx)
        out[POLE_NAMES[idx]] = r
        if stop_at_nonzero and r:
            return out
    for idx, src in _CONJ.items():
        if lin[idx][1] < 0:
            out[POLE_NAMES[idx]] = out[POLE_NAMES[src]].conjugate()
    return {name: out[name] for name in POLE_NAMES if name in out}


def is_rational_integral(a: ParamExponents) -> bool:
    return not any(level10_residues(a, stop_at_nonzero=True).values())


@dataclass
class RationalityCertificate:
    a: ParamExponents
    rational: bool
    residues: dict[str, Sqrt5Number]
    orders: dict[str, int]
    g: RationalFunction5 | None = None

    def to_json(self) -> dict:
        return {
            "a": list(self.a.as_tuple()),
            "rational": self.rational,
            "poles": {k: v for k, v in self.orders.items() if v},
            "residues": {k: v.to_json() for k, v in self.residues.items()},
            "g": self.g.to_json() if self.g is not None else None,
        }


def antiderivative_in_k(a: ParamExponents) -> RationalFunction5:
    """``g(k)`` with zero constant; raises ``LogTermPresent`` when not rational."""
    return integrate_partial_fractions(partial_fractions(integrand(a)))


def decide_rationality(a: ParamExponents, *, with_g: bool = True) -> RationalityCertificate:
    residues = level10_residues(a)
    rational = not any(residues.values())
    g = antiderivative_in_k(a) if rational and with_g else None
    return RationalityCertificate(a, rational, residues, pole_orders(a), g)


# ---------------------------------------------------------------------------
# q-side: parametrizations and composition

_RP_FACTORS = {
    # index: (k power, (1-k^2), (1+k-k^2), (1-4k-k^2)) exponents of eta_d^24 / y10^6
    1: (1, -4, -1, 4),
    2: (2, -5, 4, -1),
    3: (5, 4, -5, -4),
    4: (10, -1, -4, -5),
}
_RP_DIVISOR = {1: 1, 2: 2, 3: 5, 4: 10}


def y10_series(N: int) -> PuiseuxSeries:
    """``eta1 eta2^2 eta5^3 / eta10^2``, which equals ``q d/dq log k``."""
    return eta_quotient_series({1: 1, 2: 2, 5: 3, 10: -2}, N)


def rp_rational(index: int) -> RationalFunction5:
    kp, f1, f2, f3 = _RP_FACTORS[index]
    return RationalFunction5.from_factors(1, [(K_POLY, kp), (P1, f1), (P2, f2), (P3, f3)], coprime=True)


def rp_identity_series(index: int, N: int) -> tuple[PuiseuxSeries, PuiseuxSeries]:
    """Both sides of ``eta_d^24 = y10^6 * R_d(k)`` for ``d = 1, 2, 5, 10``."""
    if index not in _RP_FACTORS:
        raise ValueError("index must be 1, 2, 3 or 4")
    d = _RP_DIVISOR[index]
    lhs = eta_quotient_series({d: 24}, N)
    rhs = y10_series(N).pow_int(6) * compose_rational_with_k(rp_rational(index), N)
    return lhs, rhs


def _integer_poly(p: Poly5) -> tuple[list[int], int]:
    if not p.is_rational():
        raise ValueError("composition with k needs rational coefficients")
    import math
    cs = [c.a for c in p.coeffs]
    den = 1
    for c in cs:
        den = math.lcm(den, c.denominator)
    return [int(c * den) for c in cs], den


def _horner(coeffs: list[int], k: PuiseuxSeries, N: int) -> PuiseuxSeries:
    big = N + len(coeffs) + 2
    acc = PuiseuxSeries.constant(coeffs[-1], big)
    for c in reversed(coeffs[:-1]):
        acc = acc * k
        if c:
            acc = acc + PuiseuxSeries.constant(c, big)
    return acc


def compose_rational_with_k(g: RationalFunction5, N: int, k: PuiseuxSeries | None = None) -> PuiseuxSeries:
    """q-expansion of ``g(k(q))`` with ``N`` retained coefficients."""
    if k is None or k.truncation < N:
        k = k_series(N)
    num, dn = _integer_poly(g.num)
    den, dd = _integer_poly(g.den)
    top = _horner(num, k, N) if num else PuiseuxSeries.zero(N)
    bottom = _horner(den, k, N)
    if bottom.is_zero:
        raise NonInvertibleComposition("denominator vanishes identically at k(q)")
    out = (top / bottom).scale(Fraction(dd, dn))
    if out.truncation < N and not out.is_zero:
        raise NonInvertibleComposition(f"only {out.truncation} coefficients survive the composition")
    return out.truncate(N)


def iter_admissible(e_max: int) -> Iterator[EtaExponents]:
    """Admissible exponent vectors with every ``|e_d| <= e_max``, lexicographic.

    Solves ``e1 = 4 - e2 - e5 - e10`` and ``e2 = -4 - 4 e5 - 9 e10 (mod 24)``
    instead of scanning the full box.
    """
    out = []
    for e5 in range(-e_max, e_max + 1):
        for e10 in range(-e_max, e_max + 1):
            r = (-4 - 4 * e5 - 9 * e10) % 24
            start = -e_max + ((r + e_max) % 24)
            for e2 in range(start, e_max + 1, 24):
                e1 = 4 - e2 - e5 - e10
                if abs(e1) <= e_max:
                    out.append(EtaExponents(e1, e2, e5, e10))
    out.sort()
    return iter(out)
