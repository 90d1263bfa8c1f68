"""Exact arithmetic in Q(sqrt 5), polynomials and rational functions over it.

Partial fractions, residues and local Taylor expansions are computed
exactly; nothing here touches floating point.  Poles are located by trial
division against a fixed candidate set (by default the seven points
``0, 1, -1, alpha, beta, gamma, delta`` where every level-10 integrand can
have a pole).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .exceptions import LogTermPresent, PoleAtExpansionPoint, UnsplitDenominator

__all__ = [
    "Sqrt5Number",
    "Poly5",
    "RationalFunction5",
    "PartialFractionForm",
    "SQRT5",
    "ALPHA",
    "BETA",
    "GAMMA",
    "DELTA",
    "LEVEL10_POLES",
    "POLE_NAMES",
    "multiplicity",
    "residue_at",
    "residue_at_infinity",
    "partial_fractions",
    "integrate_partial_fractions",
    "taylor_at_point",
    "series_in_t",
]


class Sqrt5Number:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    @staticmethod
    def coerce(x) -> "Sqrt5Number":
        if isinstance(x, Sqrt5Number):
            return x
        if isinstance(x, (int, Rational)):
            return Sqrt5Number(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to Sqrt5Number")

    def __add__(self, other):
        if isinstance(other, Sqrt5Number):
            return Sqrt5Number(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Rational)):
            return Sqrt5Number(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Sqrt5Number(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, Sqrt5Number):
            return Sqrt5Number(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Rational)):
            return Sqrt5Number(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Sqrt5Number):
            a, b, c, d = self.a, self.b, other.a, other.b
            if not b:
                return Sqrt5Number(a * c, a * d)
            if not d:
                return Sqrt5Number(a * c, b * c)
            return Sqrt5Number(a * c + 5 * b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return Sqrt5Number(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "Sqrt5Number":
        return Sqrt5Number(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inv(self) -> "Sqrt5Number":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return Sqrt5Number(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt5)")
            return Sqrt5Number(self.a / other, self.b / other)
        if isinstance(other, Sqrt5Number):
            if not other.b:
                return self / other.a
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other):
        return Sqrt5Number.coerce(other) * self.inv()

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inv() ** (-n)
        out = Sqrt5Number(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, Sqrt5Number):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Sign of the real number ``a + b sqrt5`` decided exactly."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with 5 b^2
        big_a = a * a > 5 * b * b
        return (1 if a > 0 else -1) if big_a else (1 if b > 0 else -1)

    def __lt__(self, other) -> bool:
        return (self - Sqrt5Number.coerce(other)).sign() < 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5 ** 0.5

    def to_mpf(self, ctx):
        """Numeric value in an mpmath context."""
        return ctx.mpf(self.a.numerator) / self.a.denominator + \
            ctx.mpf(self.b.numerator) / self.b.denominator * ctx.sqrt(5)

    def to_json(self) -> list[str]:
        return [str(self.a), str(self.b)]

    @classmethod
    def from_json(cls, data) -> "Sqrt5Number":
        return cls(Fraction(data[0]), Fraction(data[1]))

    def __repr__(self) -> str:
        if not self.b:
            return f"{self.a}"
        if not self.a:
            return f"{self.b}*sqrt5"
        return f"({self.a} + {self.b}*sqrt5)" if self.b > 0 else f"({self.a} - {-self.b}*sqrt5)"


S0 = Sqrt5Number(0)
S1 = Sqrt5Number(1)
SQRT5 = Sqrt5Number(0, 1)
ALPHA = Sqrt5Number(Fraction(1, 2), Fraction(1, 2))
BETA = Sqrt5Number(Fraction(1, 2), Fraction(-1, 2))
GAMMA = Sqrt5Number(-2, 1)
DELTA = Sqrt5Number(-2, -1)

LEVEL10_POLES: tuple[Sqrt5Number, ...] = (
    Sqrt5Number(0), Sqrt5Number(1), Sqrt5Number(-1), ALPHA, BETA, GAMMA, DELTA)
POLE_NAMES = ("0", "1", "-1", "alpha", "beta", "gamma", "delta")


def _s5(x) -> Sqrt5Number:
    return x if isinstance(x, Sqrt5Number) else Sqrt5Number.coerce(x)


class Poly5:
    """Dense polynomial over Q(sqrt5); ``coeffs[i]`` multiplies ``k**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_s5(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Sqrt5Number, ...] = tuple(cs)

    @classmethod
    def monomial(cls, c, n: int) -> "Poly5":
        return cls([0] * n + [c])

    @classmethod
    def linear_root(cls, p) -> "Poly5":
        """The monic factor ``k - p``."""
        return cls([-_s5(p), 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Sqrt5Number:
        return self.coeffs[-1] if self.coeffs else S0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(c.b == 0 for c in self.coeffs)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (S0,) * (n - len(self.coeffs))
        b = other.coeffs + (S0,) * (n - len(other.coeffs))
        return Poly5(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly5(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly5):
            c = _s5(other)
            return Poly5(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly5()
        out = [S0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly5(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly5([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly5") -> tuple["Poly5", "Poly5"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.lead.inv() if other.lead != 1 else S1
        quo = [S0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * inv_lead
            quo[i - dq] = f
            for j, y in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * y
        return Poly5(quo), Poly5(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_poly(other))[1]

    def monic(self) -> "Poly5":
        if self.is_zero() or self.lead == 1:
            return self
        inv = self.lead.inv()
        return Poly5(c * inv for c in self.coeffs)

    def gcd(self, other: "Poly5") -> "Poly5":
        a, b = self, _poly(other)
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else Poly5([1])

    def derivative(self) -> "Poly5":
        return Poly5(c * i for i, c in enumerate(self.coeffs) if i)

    def integral(self) -> "Poly5":
        return Poly5([S0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        acc = S0 if isinstance(x, Sqrt5Number) or not self.coeffs else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, p) -> "Poly5":
        """Coefficients of ``self(p + t)`` as a polynomial in ``t``."""
        p = _s5(p)
        cs = list(self.coeffs)
        n = len(cs)
        # repeated synthetic division
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] = cs[j] + p * cs[j + 1]
        return Poly5(cs)

    def conjugate(self) -> "Poly5":
        return Poly5(c.conjugate() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational, Sqrt5Number)):
            other = Poly5([other])
        if not isinstance(other, Poly5):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list:
        if self.is_rational():
            return [str(c.a) for c in self.coeffs]
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly5(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c!r}" + ("" if i == 0 else "*k" if i == 1 else f"*k^{i}"))
        return "Poly5(" + " + ".join(terms) + ")"


def _poly(x) -> Poly5:
    return x if isinstance(x, Poly5) else Poly5([x])


K = Poly5([0, 1])


class RationalFunction5:
    """Reduced quotient of polynomials over Q(sqrt5) with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = _poly(num)
        den = Poly5([1]) if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly5(), Poly5([1])
            return
        if reduce and den.degree > 0 and num.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.lead
        if lead != 1:
            inv = lead.inv()
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def from_factors(cls, scale, factors: Sequence[tuple[Poly5, int]], *,
                     coprime: bool = False) -> "RationalFunction5":
        """``scale * prod f**e`` for polynomial factors with integer exponents.

        ``coprime=True`` promises pairwise coprime factors and skips the gcd.
        """
        num, den = Poly5([scale]), Poly5([1])
        for f, e in factors:
            if e > 0:
                num = num * f ** e
            elif e < 0:
                den = den * f ** (-e)
        return cls(num, den, reduce=not coprime)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_rational(self) -> bool:
        """True when every coefficient lies in Q (the function is conjugation-fixed)."""
        return self.num.is_rational() and self.den.is_rational()

    def conjugate(self) -> "RationalFunction5":
        return RationalFunction5(self.num.conjugate(), self.den.conjugate(), reduce=False)

    def __add__(self, other):
        other = _rf(other)
        if self.den == other.den:
            return RationalFunction5(self.num + other.num, self.den)
        return RationalFunction5(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction5(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_rf(other))

    def __rsub__(self, other):
        return _rf(other) - self

    def __mul__(self, other):
        other = _rf(other)
        return RationalFunction5(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction5(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rf(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFunction5(self.num ** n, self.den ** n, reduce=False)
        return RationalFunction5(self.den ** (-n), self.num ** (-n))

    def derivative(self) -> "RationalFunction5":
        n, d = self.num, self.den
        return RationalFunction5(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"pole at {x!r}")
        return self.num(x) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational, Sqrt5Number, Poly5)):
            other = _rf(other)
        if not isinstance(other, RationalFunction5):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self) -> str:
        return f"RationalFunction5({self.num!r} / {self.den!r})"


def _rf(x) -> RationalFunction5:
    return x if isinstance(x, RationalFunction5) else RationalFunction5(_poly(x))


# ---------------------------------------------------------------------------
# local analysis

def multiplicity(poly: Poly5, p) -> tuple[int, Poly5]:
    """Largest ``m`` with ``(k - p)**m | poly`` and the cofactor."""
    p = _s5(p)
    m = 0
    lin = Poly5.linear_root(p)
    while poly.degree > 0:
        q, r = poly.divmod(lin)
        if not r.is_zero():
            break
        poly = q
        m += 1
    return m, poly


def series_in_t(num: Poly5, den: Poly5, order: int) -> list[Sqrt5Number]:
    """First ``order + 1`` coefficients of ``num(t) / den(t)`` with ``den(0) != 0``."""
    d0 = den.coeffs[0] if den.coeffs else S0
    if not d0:
        raise PoleAtExpansionPoint("denominator vanishes at the expansion point")
    inv = d0.inv() if d0 != 1 else S1
    a = list(num.coeffs[:order + 1]) + [S0] * (order + 1 - len(num.coeffs[:order + 1]))
    dcs = [(j, c) for j, c in enumerate(den.coeffs) if j and c]
    out: list[Sqrt5Number] = []
    for n in range(order + 1):
        acc = a[n]
        for j, c in dcs:
            if j > n:
                break
            acc = acc - c * out[n - j]
        out.append(acc * inv)
    return out


def taylor_at_point(f: RationalFunction5, p, order: int) -> list[Sqrt5Number]:
    """Exact coefficients of ``f(p + t)`` in ``t`` through ``t**order``."""
    p = _s5(p)
    if not f.den(p):
        raise PoleAtExpansionPoint(f"{p!r} is a pole")
    return series_in_t(f.num.taylor_shift(p), f.den.taylor_shift(p), order)


def _laurent_head(f: RationalFunction5, p, m: int, cofactor: Poly5) -> list[Sqrt5Number]:
    # f = num / ((k-p)^m cofactor); expand num/cofactor at p to order m-1
    return series_in_t(f.num.taylor_shift(p), cofactor.taylor_shift(p), m - 1)


def residue_at(f: RationalFunction5, p) -> Sqrt5Number:
    """Coefficient of ``(k - p)**-1`` in the Laurent expansion of ``f`` at ``p``."""
    p = _s5(p)
    m, cof = multiplicity(f.den, p)
    if m == 0:
        return S0
    return _laurent_head(f, p, m, cof)[m - 1]


def residue_at_infinity(f: RationalFunction5) -> Sqrt5Number:
    """``-[k**-1]`` of the expansion of ``f`` about ``k = infinity``."""
    _, r = f.num.divmod(f.den)
    if r.is_zero() or r.degree != f.den.degree - 1:
        return S0
    return -(r.lead / f.den.lead)


@dataclass
class PartialFractionForm:
    """``polynomial + sum coeff / (k - pole)**order``."""

    polynomial: Poly5
    terms: list[tuple[Sqrt5Number, int, Sqrt5Number]] = field(default_factory=list)

    def poles(self) -> list[Sqrt5Number]:
        seen: list[Sqrt5Number] = []
        for p, _, _ in self.terms:
            if p not in seen:
                seen.append(p)
        return seen

    def coefficient(self, pole, order: int) -> Sqrt5Number:
        pole = _s5(pole)
        for p, j, c in self.terms:
            if p == pole and j == order:
                return c
        return S0

    def residues(self) -> list[tuple[Sqrt5Number, Sqrt5Number]]:
        return [(p, self.coefficient(p, 1)) for p in self.poles()]

    def reassemble(self) -> RationalFunction5:
        orders: dict[Sqrt5Number, int] = {}
        for p, j, _ in self.terms:
            orders[p] = max(orders.get(p, 0), j)
        den = Poly5([1])
        for p, m in orders.items():
            den = den * Poly5.linear_root(p) ** m
        num = self.polynomial * den
        for p, j, c in self.terms:
            if c:
                num = num + (den // Poly5.linear_root(p) ** j) * c
        return RationalFunction5(num, den)


def partial_fractions(f: RationalFunction5,
                      poles: Sequence = LEVEL10_POLES) -> PartialFractionForm:
    """Exact decomposition over the linear factors ``k - p``, ``p`` in ``poles``."""
    rest = f.den
    found = []
    for p in poles:
        p = _s5(p)
        m, rest_after = multiplicity(rest, p)
        if m:
            found.append((p, m))
            rest = rest_after
    if rest.degree > 0:
        raise UnsplitDenominator(f"denominator factor {rest!r} does not split over the pole set")
    poly, rem = f.num.divmod(f.den)
    terms = []
    for p, m in found:
        cof = f.den // Poly5.linear_root(p) ** m
        head = series_in_t(rem.taylor_shift(p), cof.taylor_shift(p), m - 1)
        for i, c in enumerate(head):
            terms.append((p, m - i, c))
    terms.sort(key=lambda t: (_pole_index(t[0], poles), t[1]))
    return PartialFractionForm(poly, terms)


def _pole_index(p, poles) -> int:
    for i, q in enumerate(poles):
        if _s5(q) == p:
            return i
    return len(poles)


def integrate_partial_fractions(pf: PartialFractionForm) -> RationalFunction5:
    """Termwise antiderivative with zero constant; refuses logarithmic terms."""
    logs = [(p, c) for p, j, c in pf.terms if j == 1 and c]
    if logs:
        p, c = logs[0]
        raise LogTermPresent(f"nonzero residue {c!r} at k = {p!r}")
    orders: dict[Sqrt5Number, int] = {}
    for p, j, c in pf.terms:
        if c and j >= 2:
            orders[p] = max(orders.get(p, 0), j - 1)
    powers = {p: Poly5.linear_root(p) ** m for p, m in orders.items()}
    den = Poly5([1])
    for pw in powers.values():
        den = den * pw
    num = pf.polynomial.integral() * den
    for p, m in orders.items():
        # the pole's share of the numerator as a polynomial in t = k - p
        local = [S0] * m
        for q, j, c in pf.terms:
            if q == p and c and j >= 2:
                local[m - j + 1] = local[m - j + 1] - c / (j - 1)
        cof = Poly5([1])
        for q, pw in powers.items():
            if q != p:
                cof = cof * pw
        num = num + Poly5(local).taylor_shift(-p) * cof
    # each pole keeps a nonzero top coefficient, so num and den are coprime
    return RationalFunction5(num, den, reduce=False)
