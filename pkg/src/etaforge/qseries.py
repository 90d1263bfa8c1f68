"""Exact truncated q-series with rational leading exponent.

A :class:`PuiseuxSeries` stores ``q**offset * (c0 + c1*q + ... )`` with
``truncation`` known coefficients, so the error term is
``O(q**(offset + truncation))``.  Every coefficient is a
:class:`fractions.Fraction`; truncation only ever shrinks through arithmetic.

Constructors cover Euler products ``E(q**d)``, eta quotients, generalized
eta products (Rogers-Ramanujan ``r(q)`` and Ramanujan's ``k(q)``), Lambert
series and the Eisenstein series ``Q`` and ``R``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

from .exceptions import (
    ConstantTermPresent,
    DivisionByZeroSeries,
    NonIntegerExponent,
    NonUnitLeadingCoefficient,
    OffsetMismatch,
)

__all__ = [
    "PuiseuxSeries",
    "GeneralizedEtaProduct",
    "K_PRODUCT",
    "RR_PRODUCT",
    "euler_series",
    "eta_quotient_series",
    "generalized_eta_series",
    "k_series",
    "rr_series",
    "lambert_series",
    "lambert_legendre_5",
    "eisenstein_Q",
    "eisenstein_R",
    "legendre5",
    "first_mismatch",
]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# integer kernels

def _lcm_den(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        if v.denominator != 1:
            d = math.lcm(d, v.denominator)
    return d


def _pack(values: Sequence[int], nbytes: int) -> int:
    pos = b"".join((a if a > 0 else 0).to_bytes(nbytes, "little") for a in values)
    neg = b"".join((-a if a < 0 else 0).to_bytes(nbytes, "little") for a in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def int_convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer sequences.

    Uses Kronecker substitution: both sequences are packed into one big
    integer each, multiplied once, and unpacked with signed carries.
    """
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b or n <= 0:
        return [0] * max(n, 0)
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if ma == 0 or mb == 0:
        return [0] * n
    if len(a) < 8 or len(b) < 8:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(min(len(b), n - i)):
                    out[i + j] += x * b[j]
        return out
    nbytes = ((ma * mb * min(len(a), len(b))).bit_length() + 2 + 7) // 8
    bits = 8 * nbytes
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    prod &= (1 << (bits * n)) - 1
    raw = prod.to_bytes(nbytes * n, "little")
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    for i in range(n):
        c = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        if c >= half:
            c -= full
            carry = 1
        else:
            carry = 0
        out.append(c)
    return out


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    da, db = _lcm_den(a), _lcm_den(b)
    ia = [int(x * da) for x in a[:n]]
    ib = [int(x * db) for x in b[:n]]
    den = da * db
    return [Fraction(c, den) for c in int_convolve(ia, ib, n)]


def _series_divide(a: Sequence[Fraction], t: Sequence[Fraction], n: int) -> list[Fraction]:
    """Coefficients of ``a / t`` by the direct recursion; ``t[0] != 0``."""
    a = list(a[:n]) + [ZERO] * (n - len(a))
    da, dt = _lcm_den(a), _lcm_den(t)
    ia = [int(x * da) for x in a]
    it = [int(x * dt) for x in t[:n]]
    lead = it[0]
    nz = [(k, c) for k, c in enumerate(it) if k and c]
    scale = Fraction(dt, da)
    if lead in (1, -1):
        out: list[int] = []
        for m in range(n):
            acc = ia[m]
            for k, c in nz:
                if k > m:
                    break
                acc -= c * out[m - k]
            out.append(acc * lead)
        return [scale * c for c in out]
    res: list[Fraction] = []
    inv = Fraction(1, lead)
    for m in range(n):
        acc = Fraction(ia[m])
        for k, c in nz:
            if k > m:
                break
            acc -= c * res[m - k]
        res.append(acc * inv)
    return [scale * c for c in res]


def _unit_power(f: Sequence[Fraction], p: Fraction, g0: Fraction, n: int) -> list[Fraction]:
    """Coefficients of ``f**p`` for ``f[0] != 0`` given ``g0 = f[0]**p``.

    J. C. P. Miller's recurrence ``n f0 g_n = sum ((p+1)k - n) f_k g_{n-k}``.
    Runs over the nonzero ``f_k`` only, so sparse inputs are cheap.
    """
    f0 = f[0]
    nz = [(k, c) for k, c in enumerate(f[:n]) if k and c]
    if p.denominator == 1 and f0 == 1 and g0 == 1 and all(c.denominator == 1 for _, c in nz):
        ip = p.numerator
        inz = [(k, c.numerator) for k, c in nz]
        gi = [1]
        for m in range(1, n):
            acc = 0
            for k, c in inz:
                if k > m:
                    break
                acc += ((ip + 1) * k - m) * c * gi[m - k]
            q, r = divmod(acc, m)
            assert r == 0
            gi.append(q)
        return [Fraction(x) for x in gi]
    g = [g0]
    for m in range(1, n):
        acc = ZERO
        for k, c in nz:
            if k > m:
                break
            acc += ((p + 1) * k - m) * c * g[m - k]
        g.append(acc / (m * f0))
    return g


def _rational_root(c: Fraction, v: int) -> Fraction | None:
    if v == 1:
        return c
    sign = 1
    if c < 0:
        if v % 2 == 0:
            return None
        sign = -1
        c = -c
    num = _int_root(c.numerator, v)
    den = _int_root(c.denominator, v)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _int_root(x: int, v: int) -> int | None:
    if x in (0, 1):
        return x
    r = round(x ** (1.0 / v)) if x < 2 ** 1000 else _iroot_newton(x, v)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** v == x:
            return cand
    r = _iroot_newton(x, v)
    return r if r ** v == x else None


def _iroot_newton(x: int, v: int) -> int:
    r = 1 << ((x.bit_length() + v - 1) // v)
    while True:
        s = ((v - 1) * r + x // r ** (v - 1)) // v
        if s >= r:
            return r
        r = s


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# the series type

class PuiseuxSeries:
    """Truncated series ``q**offset * sum(coeffs[n] * q**n) + O(q**(offset+truncation))``.

    The constructor normalizes: leading zeros are shifted into the offset
    (consuming truncation), so ``coeffs[0] != 0`` unless the series is zero.
    A zero series keeps its precision; its offset is the fractional part of
    that precision (``0`` whenever the precision is an integer).
    """

    __slots__ = ("offset", "coeffs", "truncation")

    def __init__(self, coeffs: Iterable = (), offset=0, truncation: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        off = _as_fraction(offset)
        if truncation is None:
            truncation = len(cs)
        truncation = int(truncation)
        if len(cs) > truncation:
            cs = cs[:max(truncation, 0)]
        elif len(cs) < truncation:
            cs.extend([ZERO] * (truncation - len(cs)))
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead == len(cs):
            prec = off + truncation
            frac = prec - math.floor(prec)
            self.offset = frac
            self.coeffs: tuple[Fraction, ...] = ()
            self.truncation = int(prec - frac)
        else:
            self.offset = off + lead
            self.coeffs = tuple(cs[lead:])
            self.truncation = truncation - lead

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, c, precision) -> "PuiseuxSeries":
        """The constant ``c`` known through absolute exponent ``precision``."""
        precision = _as_fraction(precision)
        if precision <= 0:
            return cls.zero(precision)
        return cls([c], offset=0, truncation=math.ceil(precision))

    @classmethod
    def monomial(cls, c, exponent, truncation: int) -> "PuiseuxSeries":
        return cls([c], offset=exponent, truncation=truncation)

    @classmethod
    def zero(cls, precision=0) -> "PuiseuxSeries":
        """The zero series ``O(q**precision)``."""
        precision = _as_fraction(precision)
        floor = math.floor(precision)
        return cls((), offset=precision - floor, truncation=floor)

    # -- basic properties ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def precision(self) -> Fraction:
        """Absolute exponent of the error term."""
        return self.offset + self.truncation

    @property
    def valuation(self) -> Fraction:
        return self.offset

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, exponent) -> Fraction:
        e = _as_fraction(exponent)
        if e >= self.precision:
            raise IndexError(f"exponent {e} is beyond precision {self.precision}")
        n = e - self.offset
        if n.denominator != 1:
            raise IndexError(f"exponent {e} is not of the form offset + integer")
        n = int(n)
        if n < 0:
            return ZERO
        return self.coeffs[n] if n < len(self.coeffs) else ZERO

    def terms(self):
        """Yield ``(exponent, coefficient)`` for the nonzero retained terms."""
        for n, c in enumerate(self.coeffs):
            if c:
                yield self.offset + n, c

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- structural operations ----------------------------------------------

    def truncate(self, n: int) -> "PuiseuxSeries":
        """Keep at most ``n`` coefficients counted from the offset."""
        if n >= self.truncation:
            return self
        return PuiseuxSeries(self.coeffs[:n], self.offset, n)

    def truncate_to(self, precision) -> "PuiseuxSeries":
        """Drop every term at or beyond absolute exponent ``precision``."""
        precision = _as_fraction(precision)
        if precision >= self.precision:
            return self
        if self.is_zero:
            return PuiseuxSeries.zero(precision)
        n = math.ceil(precision - self.offset)
        return PuiseuxSeries(self.coeffs[:max(n, 0)], self.offset, n)

    def shift(self, exponent) -> "PuiseuxSeries":
        """Multiply by ``q**exponent``."""
        e = _as_fraction(exponent)
        if self.is_zero:
            return PuiseuxSeries.zero(self.precision + e)
        return PuiseuxSeries(self.coeffs, self.offset + e, self.truncation)

    def dilate(self, d: int) -> "PuiseuxSeries":
        """Substitute ``q -> q**d``."""
        if d < 1:
            raise ValueError("dilation factor must be a positive integer")
        if self.is_zero:
            return PuiseuxSeries.zero(self.precision * d)
        cs = [ZERO] * (len(self.coeffs) * d)
        for n, c in enumerate(self.coeffs):
            cs[n * d] = c
        return PuiseuxSeries(cs, self.offset * d, self.truncation * d)

    # -- ring arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "PuiseuxSeries":
        if isinstance(other, PuiseuxSeries):
            return other
        c = _as_fraction(other)
        prec = self.precision
        if prec.denominator != 1:
            if c == 0:
                return PuiseuxSeries.zero(prec)
            raise OffsetMismatch("cannot add a constant to a series with fractional exponents")
        return PuiseuxSeries.constant(c, prec)

    def __add__(self, other) -> "PuiseuxSeries":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero and self.is_zero:
            return PuiseuxSeries.zero(min(self.precision, other.precision))
        if (self.offset - other.offset).denominator != 1 and not (self.is_zero or other.is_zero):
            raise OffsetMismatch(f"offsets {self.offset} and {other.offset} differ by a non-integer")
        prec = min(self.precision, other.precision)
        base = min(x.offset for x in (self, other) if not x.is_zero)
        if (prec - base).denominator != 1:
            raise OffsetMismatch(f"precision {prec} incompatible with offset {base}")
        n = int(prec - base)
        out = [ZERO] * max(n, 0)
        for s in (self, other):
            if s.is_zero:
                continue
            sh = int(s.offset - base)
            for i, c in enumerate(s.coeffs):
                if sh + i >= n:
                    break
                out[sh + i] += c
        return PuiseuxSeries(out, base, n)

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxSeries":
        if self.is_zero:
            return self
        return PuiseuxSeries([-c for c in self.coeffs], self.offset, self.truncation)

    def __pos__(self) -> "PuiseuxSeries":
        return self

    def __sub__(self, other) -> "PuiseuxSeries":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PuiseuxSeries":
        return (-self) + other

    def scale(self, c) -> "PuiseuxSeries":
        c = _as_fraction(c)
        if c == 0:
            return PuiseuxSeries.zero(self.precision)
        return PuiseuxSeries([c * x for x in self.coeffs], self.offset, self.truncation)

    def __mul__(self, other) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if self.is_zero or other.is_zero:
            lo1 = self.precision if self.is_zero else self.offset
            lo2 = other.precision if other.is_zero else other.offset
            return PuiseuxSeries.zero(lo1 + lo2)
        n = min(self.truncation, other.truncation)
        return PuiseuxSeries(_convolve(self.coeffs, other.coeffs, n), self.offset + other.offset, n)

    def __rmul__(self, other) -> "PuiseuxSeries":
        return self.__mul__(other)

    def inverse(self) -> "PuiseuxSeries":
        if self.is_zero:
            raise DivisionByZeroSeries("cannot invert the zero series")
        n = self.truncation
        return PuiseuxSeries(_series_divide([ONE], self.coeffs, n), -self.offset, n)

    def __truediv__(self, other) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if c == 0:
                raise DivisionByZeroSeries("division by zero scalar")
            return self.scale(1 / c)
        if other.is_zero:
            raise DivisionByZeroSeries("division by the zero series")
        if self.is_zero:
            return PuiseuxSeries.zero(self.precision - other.offset)
        n = min(self.truncation, other.truncation)
        return PuiseuxSeries(_series_divide(self.coeffs, other.coeffs, n), self.offset - other.offset, n)

    def __rtruediv__(self, other) -> "PuiseuxSeries":
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.inverse().scale(c)

    def pow_int(self, n: int) -> "PuiseuxSeries":
        n = int(n)
        if self.is_zero:
            if n < 0:
                raise DivisionByZeroSeries("negative power of the zero series")
            if n == 0:
                return PuiseuxSeries.constant(1, max(self.precision, 1))
            return PuiseuxSeries.zero(self.precision * n)
        return self.pow_rational(Fraction(n))

    def pow_rational(self, p) -> "PuiseuxSeries":
        """``self ** p`` by the binomial series of the unit part.

        The leading coefficient must have an exact rational ``p``-th power.
        """
        p = _as_fraction(p)
        if self.is_zero:
            if p > 0:
                return PuiseuxSeries.zero(self.precision * p)
            raise DivisionByZeroSeries("non-positive power of the zero series")
        c0 = self.coeffs[0]
        root = _rational_root(c0, p.denominator)
        if root is None:
            raise NonUnitLeadingCoefficient(
                f"leading coefficient {c0} has no rational {p.denominator}-th root")
        g0 = root ** p.numerator
        n = self.truncation
        return PuiseuxSeries(_unit_power(self.coeffs, p, g0, n), self.offset * p, n)

    def __pow__(self, p) -> "PuiseuxSeries":
        p = _as_fraction(p)
        if p.denominator == 1:
            return self.pow_int(p.numerator)
        return self.pow_rational(p)

    # -- calculus ------------------------------------------------------------

    def q_derivative(self) -> "PuiseuxSeries":
        """``q d/dq`` applied termwise: ``c q**e -> e c q**e``."""
        if self.is_zero:
            return self
        return PuiseuxSeries([(self.offset + n) * c for n, c in enumerate(self.coeffs)],
                             self.offset, self.truncation)

    def q_log_derivative(self) -> "PuiseuxSeries":
        """``q d/dq log(self)``; the offset contributes the constant ``offset``."""
        if self.is_zero:
            raise DivisionByZeroSeries("logarithmic derivative of the zero series")
        return self.q_derivative() / self

    def antiderivative_dq_over_q(self) -> "PuiseuxSeries":
        """Inverse of :meth:`q_derivative` with zero constant of integration."""
        if self.is_zero:
            return self
        if self.offset.denominator != 1:
            raise NonIntegerExponent(f"exponents {self.offset} + n are not integers")
        out = []
        for n, c in enumerate(self.coeffs):
            e = self.offset + n
            if e == 0:
                if c:
                    raise ConstantTermPresent(f"coefficient {c} at q^0 has no antiderivative in q")
                out.append(ZERO)
            else:
                out.append(c / e)
        return PuiseuxSeries(out, self.offset, self.truncation)

    # -- comparison / io -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.offset, self.coeffs, self.truncation) == (other.offset, other.coeffs, other.truncation)

    def __hash__(self):
        return hash((self.offset, self.coeffs, self.truncation))

    def agrees_with(self, other: "PuiseuxSeries") -> bool:
        return first_mismatch(self, other) is None

    def to_json(self) -> dict:
        return {
            "offset": str(self.offset),
            "coeffs": [str(c) for c in self.coeffs],
            "truncation": self.truncation,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PuiseuxSeries":
        return cls([Fraction(c) for c in data["coeffs"]], Fraction(data["offset"]), int(data["truncation"]))

    def __repr__(self) -> str:
        shown = []
        for e, c in list(self.terms())[:8]:
            shown.append(f"{c}*q^{e}")
        body = " + ".join(shown) if shown else "0"
        return f"PuiseuxSeries({body} + O(q^{self.precision}))"


def first_mismatch(a: PuiseuxSeries, b: PuiseuxSeries):
    """Smallest exponent below the common precision where ``a`` and ``b`` differ.

    Returns ``None`` when the series agree to their common precision.
    """
    try:
        d = a - b
    except OffsetMismatch:
        return min(a.offset, b.offset)
    if d.is_zero:
        return None
    return d.offset


# ---------------------------------------------------------------------------
# Euler products and eta quotients

def _pentagonal_int(n: int) -> list[int]:
    """Integer coefficients of ``prod (1 - q**j)`` below ``q**n``."""
    out = [0] * n
    if n:
        out[0] = 1
    k = 1
    while True:
        p1 = k * (3 * k - 1) // 2
        if p1 >= n:
            break
        s = -1 if k % 2 else 1
        out[p1] += s
        p2 = k * (3 * k + 1) // 2
        if p2 < n:
            out[p2] += s
        k += 1
    return out


def euler_series(d: int, N: int) -> PuiseuxSeries:
    """``E(q**d)`` to ``N`` coefficients via the pentagonal number theorem."""
    if d < 1 or N < 1:
        raise ValueError("need d >= 1 and N >= 1")
    m = -(-N // d)
    base = _pentagonal_int(m)
    cs = [0] * N
    for i, c in enumerate(base):
        if c and i * d < N:
            cs[i * d] = c
    return PuiseuxSeries(cs, 0, N)


def _int_power(f: list[int], e: int, n: int) -> list[int]:
    """``f**e`` for an integer sequence with ``f[0] == 1``."""
    if e == 0:
        return [1] + [0] * (n - 1)
    nz = [(k, c) for k, c in enumerate(f[:n]) if k and c]
    g = [1]
    for m in range(1, n):
        acc = 0
        for k, c in nz:
            if k > m:
                break
            acc += ((e + 1) * k - m) * c * g[m - k]
        q, r = divmod(acc, m)
        assert r == 0
        g.append(q)
    return g


def eta_quotient_int(exponents: Mapping[int, int], N: int) -> tuple[Fraction, list[int]]:
    """Offset and integer coefficients of ``prod eta(d tau)**e_d``."""
    offset = Fraction(sum(d * e for d, e in exponents.items()), 24)
    acc = [1] + [0] * (N - 1)
    for d, e in sorted(exponents.items()):
        if d < 1:
            raise ValueError("divisors must be positive")
        if e == 0:
            continue
        m = -(-N // d)
        part = _int_power(_pentagonal_int(m), e, m)
        dil = [0] * N
        for i, c in enumerate(part):
            if i * d < N:
                dil[i * d] = c
        acc = int_convolve(acc, dil, N)
    return offset, acc


def eta_quotient_series(exponents: Mapping[int, int], N: int) -> PuiseuxSeries:
    """``q**(sum d e_d / 24) * prod E(q**d)**e_d`` to ``N`` coefficients."""
    if N < 1:
        raise ValueError("N must be positive")
    offset, cs = eta_quotient_int(exponents, N)
    return PuiseuxSeries(cs, offset, N)


@dataclass(frozen=True)
class GeneralizedEtaProduct:
    """``q**prefactor * prod_{j>=1} prod_(r,e) (1 - q**(m j - r))**e``."""

    modulus: int
    factors: tuple[tuple[int, int], ...]
    prefactor: Fraction = Fraction(0)

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        for r, _ in self.factors:
            if not 0 < r < self.modulus:
                raise ValueError(f"residue {r} not in (0, {self.modulus})")
        object.__setattr__(self, "prefactor", Fraction(self.prefactor))


K_PRODUCT = GeneralizedEtaProduct(
    10, ((9, 1), (8, 1), (2, 1), (1, 1), (7, -1), (6, -1), (4, -1), (3, -1)), Fraction(1))
RR_PRODUCT = GeneralizedEtaProduct(5, ((4, 1), (1, 1), (3, -1), (2, -1)), Fraction(1, 5))


def generalized_eta_series(p: GeneralizedEtaProduct, N: int) -> PuiseuxSeries:
    if N < 1:
        raise ValueError("N must be positive")
    cs = [1] + [0] * (N - 1)
    for r, e in p.factors:
        j = 1
        while p.modulus * j - r < N:
            n = p.modulus * j - r
            for _ in range(abs(e)):
                if e > 0:
                    for i in range(N - 1, n - 1, -1):
                        cs[i] -= cs[i - n]
                else:
                    for i in range(n, N):
                        cs[i] += cs[i - n]
            j += 1
    return PuiseuxSeries(cs, p.prefactor, N)


def k_series(N: int) -> PuiseuxSeries:
    """Ramanujan's level-10 parameter ``k(q) = r(q) r(q^2)^2``."""
    return generalized_eta_series(K_PRODUCT, N)


def rr_series(N: int) -> PuiseuxSeries:
    """Product form of the Rogers-Ramanujan continued fraction ``r(q)``."""
    return generalized_eta_series(RR_PRODUCT, N)


# ---------------------------------------------------------------------------
# Lambert and Eisenstein series

def legendre5(j: int) -> int:
    return (0, 1, -1, -1, 1)[j % 5]


def lambert_series(power: int, modulus: int, N: int,
                   weight: Callable[[int], int] | None = None) -> PuiseuxSeries:
    """``sum_{j>=1} w(j) j**power q**(c j) / (1 - q**(c j))`` below ``q**N``."""
    if N < 1 or modulus < 1:
        raise ValueError("need N >= 1 and modulus >= 1")
    cs = [0] * N
    j = 1
    while modulus * j < N:
        w = 1 if weight is None else weight(j)
        if w:
            t = w * j ** power
            step = modulus * j
            for e in range(step, N, step):
                cs[e] += t
        j += 1
    return PuiseuxSeries(cs, 0, N)


def lambert_legendre_5(N: int) -> PuiseuxSeries:
    """``1 - 5 sum (j/5) j q**j / (1 - q**j)``."""
    return 1 - 5 * lambert_series(1, 1, N, legendre5)


def eisenstein_Q(N: int) -> PuiseuxSeries:
    return 1 + 240 * lambert_series(3, 1, N)


def eisenstein_R(N: int) -> PuiseuxSeries:
    return 1 - 504 * lambert_series(5, 1, N)
