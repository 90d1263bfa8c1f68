"""Computer searches over level-10 eta quotients.

Two independent searches live here:

* the q-side search enumerates admissible exponent vectors ``e`` and asks
  whether ``b * u(q)`` is ``q d/dq`` of a series with integer coefficients
  (``divisibility_test``); passing vectors are then certified with the exact
  residue decider;
* the k-side scan runs the exact decider over a box of ``(a1, a2, a3)``.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .exceptions import NoPassingMultiplier, NonIntegralParams
from .kernel10 import (
    EtaExponents,
    ParamExponents,
    a_to_e,
    decide_rationality,
    e_to_a,
    golden_triples,
    is_rational_integral,
    iter_admissible,
)
from .qseries import eta_quotient_int

__all__ = [
    "DivisibilityResult",
    "SearchHit",
    "ScanResult",
    "divisibility_test",
    "minimal_multiplier",
    "search_level10",
    "scan_a",
    "dual_oracle_agreement",
    "DEFAULT_TERMS",
    "DEEP_TERMS",
]

DEFAULT_TERMS = 500
DEEP_TERMS = 2000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass
class DivisibilityResult:
    passed: bool
    failing_exponent: int | None = None
    # failures at primes j coprime to b: the discriminating cases
    prime_failures: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def _coefficients(e: EtaExponents, N: int) -> tuple[int, list[int]]:
    a0 = e.e1 + 2 * e.e2 + 5 * e.e5 + 10 * e.e10
    if a0 % 24:
        raise ValueError(f"{e} is not admissible")
    a0 //= 24
    n = max(N - a0, 1)
    _, cs = eta_quotient_int(e.as_map(), n)
    return a0, cs


def divisibility_test(e: EtaExponents, b: int, N: int = DEFAULT_TERMS, *,
                      _cache: tuple[int, list[int]] | None = None) -> DivisibilityResult:
    """Does ``b * u(q) = sum j c(j) q^j`` with integers ``c(j)`` for ``j < N``?"""
    if not e.admissible:
        raise ValueError(f"{e} is not admissible")
    if b < 1:
        raise ValueError("multiplier must be positive")
    if N < 50:
        raise ValueError("truncation must be at least 50")
    a0, cs = _cache if _cache is not None else _coefficients(e, N)
    first = None
    prime_failures = []
    for i, c in enumerate(cs):
        j = a0 + i
        if j >= N:
            break
        if j == 0:
            if c:
                first = 0
            continue
        if (b * c) % j:
            if first is None:
                first = j
            if _is_prime(abs(j)) and math.gcd(j, b) == 1:
                prime_failures.append(j)
    return DivisibilityResult(first is None, first, prime_failures)


def minimal_multiplier(e: EtaExponents, b_bound: int, N: int = DEFAULT_TERMS) -> int:
    """Smallest divisor ``b`` of ``b_bound`` passing :func:`divisibility_test`."""
    cache = _coefficients(e, N)
    if not divisibility_test(e, b_bound, N, _cache=cache):
        raise NoPassingMultiplier(f"{e} fails even with b = {b_bound}")
    divisors = sorted(d for d in range(1, math.isqrt(b_bound) + 1) if b_bound % d == 0)
    divisors = sorted(set(divisors) | {b_bound // d for d in divisors})
    for d in divisors:
        if divisibility_test(e, d, N, _cache=cache):
            return d
    return b_bound  # unreachable: b_bound itself passes


@dataclass
class SearchHit:
    e: EtaExponents
    a: ParamExponents | None
    minimal_b: int
    truncation: int
    status: str            # "candidate" or "certified"

    def to_json(self) -> dict:
        return {
            "e": list(self.e.as_tuple()),
            "a": list(self.a.as_tuple()) if self.a is not None else None,
            "minimal_b": self.minimal_b,
            "truncation": self.truncation,
            "status": self.status,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _examine(args) -> SearchHit | None:
    e, b, N = args
    cache = _coefficients(e, N)
    if not divisibility_test(e, b, N, _cache=cache):
        return None
    mb = minimal_multiplier(e, b, N)
    try:
        a = e_to_a(e)
    except NonIntegralParams:
        return SearchHit(e, None, mb, N, "candidate")
    status = "certified" if is_rational_integral(a) else "candidate"
    return SearchHit(e, a, mb, N, status)


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so aggregation is deterministic
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def search_level10(e_max: int, b: int = 1, N: int = DEFAULT_TERMS, *, jobs: int = 1) -> list[SearchHit]:
    """All admissible ``e`` with ``|e_d| <= e_max`` passing the test with multiplier ``b``."""
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    cands = [(e, b, N) for e in iter_admissible(e_max)]
    return [h for h in _map(_examine, cands, jobs) if h is not None]


def _scan_chunk(args) -> list[tuple[int, int, int]]:
    a1, R = args
    out = []
    for a2, a3 in product(range(-R, R + 1), repeat=2):
        if is_rational_integral(ParamExponents.from_triple(a1, a2, a3)):
            out.append((a1, a2, a3))
    return out


@dataclass
class ScanResult:
    R: int
    found: list[tuple[int, int, int]]
    golden: set[tuple[int, int, int]]

    @property
    def missing(self) -> list[tuple[int, int, int]]:
        return sorted(self.golden - set(self.found))

    @property
    def extra(self) -> list[tuple[int, int, int]]:
        return sorted(set(self.found) - self.golden)

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self) -> dict:
        return {
            "range": self.R,
            "count": len(self.found),
            "found": [list(t) for t in self.found],
            "missing": [list(t) for t in self.missing],
            "extra": [list(t) for t in self.extra],
            "diff": "EMPTY-DIFF" if self.matches else "NONEMPTY-DIFF",
        }


def scan_a(R: int, *, jobs: int = 1) -> ScanResult:
    """Every ``(a1, a2, a3)`` in ``[-R, R]^3`` whose k-integral is rational."""
    if R < 1:
        raise ValueError("R must be positive")
    chunks = _map(_scan_chunk, [(a1, R) for a1 in range(-R, R + 1)], jobs)
    found = [t for chunk in chunks for t in chunk]
    return ScanResult(R, found, golden_triples(R))


def dual_oracle_agreement(triples: Iterable[tuple[int, int, int]], b_bound: int,
                          N: int = DEFAULT_TERMS) -> list[dict]:
    """Compare the exact decider with the q-side divisibility test.

    Rational rows must pass at their minimal multiplier; non-rational rows
    must fail even at ``b_bound`` (hence at every divisor of it).
    """
    rows = []
    for t in triples:
        a = ParamExponents.from_triple(*t)
        e = a_to_e(a)
        rational = is_rational_integral(a)
        cache = _coefficients(e, N)
        passes_bound = bool(divisibility_test(e, b_bound, N, _cache=cache))
        if rational and passes_bound:
            mb = minimal_multiplier(e, b_bound, N)
            q_side = bool(divisibility_test(e, mb, N, _cache=cache))
        else:
            mb = None
            q_side = passes_bound
        rows.append({"a": list(a.as_tuple()), "e": list(e.as_tuple()), "rational": rational,
                     "q_side": q_side, "minimal_b": mb, "agree": rational == q_side})
    return rows


def certify(e: EtaExponents):
    """Exact certificate for an exponent vector (``None`` if ``a`` is non-integral)."""
    try:
        return decide_rationality(e_to_a(e))
    except NonIntegralParams:
        return None
