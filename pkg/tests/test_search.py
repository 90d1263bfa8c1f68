import json
import math
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from etaforge.exceptions import NoPassingMultiplier
from etaforge.kernel10 import EtaExponents, FamilyLabel, family_exponents, is_rational_integral, iter_admissible, table8
from etaforge.search import (
    divisibility_test,
    dual_oracle_agreement,
    minimal_multiplier,
    scan_a,
    search_level10,
)

from conftest import brute_eta

E10A = EtaExponents(8, -7, 0, 3)
E10B = EtaExponents(0, 3, 8, -7)
E10C = EtaExponents(3, 0, -7, 8)
E10D = EtaExponents(-7, 8, 3, 0)
LCM30 = reduce(math.lcm, range(1, 31))


def oracle_divisible(e, b, N):
    """Direct check on brute-force coefficients."""
    m = e.as_map()
    a0 = sum(d * x for d, x in m.items()) // 24
    cs = brute_eta(m, N - a0)
    for i, c in enumerate(cs):
        j = a0 + i
        if j == 0:
            if c:
                return False
        elif (b * c) % j:
            return False
    return True


def test_divisibility_examples():
    assert divisibility_test(E10A, 1, 400)
    r = divisibility_test(E10C, 1)
    assert not r
    assert divisibility_test(E10C, 2)
    r = divisibility_test(E10D, 1)
    assert not r and r.failing_exponent == 2
    assert divisibility_test(E10D, 2)


def test_prime_failures_flagged():
    r = divisibility_test(E10C, 1)
    assert 2 in r.prime_failures


@pytest.mark.parametrize("e", [E10A, E10B, E10C, E10D, EtaExponents(8, -13, 0, 9)])
@pytest.mark.parametrize("b", [1, 2, 6])
def test_divisibility_matches_oracle(e, b):
    assert bool(divisibility_test(e, b, 80)) == oracle_divisible(e, b, 80)


def test_divisibility_preconditions():
    with pytest.raises(ValueError):
        divisibility_test(EtaExponents(1, 1, 1, 1), 1)
    with pytest.raises(ValueError):
        divisibility_test(E10A, 1, 10)


candidates = st.sampled_from(list(iter_admissible(6)))


@settings(max_examples=30)
@given(candidates, st.integers(1, 12), st.integers(50, 150))
def test_truncation_monotone(e, b, N):
    if divisibility_test(e, b, N):
        assert divisibility_test(e, b, 50)


@settings(max_examples=30)
@given(candidates, st.integers(1, 12), st.integers(2, 5))
def test_multiplier_monotone(e, b, m):
    if divisibility_test(e, b, 100):
        assert divisibility_test(e, b * m, 100)


def test_minimal_multiplier_examples():
    assert minimal_multiplier(E10A, 210) == 1
    assert minimal_multiplier(E10C, 210) == 2


def test_minimal_multiplier_row5():
    e = EtaExponents(8, -13, 0, 9)
    b = minimal_multiplier(e, 27720)
    assert 27720 % b == 0
    row = next(r for r in table8() if r.e == e)
    # g has a monic integer denominator, so the numerator denominators bound b
    assert all(c.a.denominator == 1 for c in row.g.den.coeffs)
    dens = [c.a.denominator for c in row.g.num.coeffs]
    assert reduce(math.lcm, dens, 1) % b == 0


def test_no_passing_multiplier():
    # a = (0, 0, 0, 0): the constant term of u survives every multiplier
    with pytest.raises(NoPassingMultiplier):
        minimal_multiplier(EtaExponents(1, 2, 3, -2), LCM30, 100)


def test_search_small():
    hits = search_level10(8, 1, 400)
    es = {h.e for h in hits}
    assert {E10A, E10B} <= es
    assert E10C not in es and E10D not in es
    hits2 = {h.e for h in search_level10(8, 2, 400)}
    assert {E10C, E10D} <= hits2


def test_search_empty_box():
    assert search_level10(0) == []


def test_certified_hits_are_rational():
    for h in search_level10(8, 12, 200):
        if h.status == "certified":
            assert is_rational_integral(h.a)


def test_search_deterministic_and_ordered():
    a = [h.to_json_line() for h in search_level10(8, 2, 200)]
    b = [h.to_json_line() for h in search_level10(8, 2, 200, jobs=2)]
    assert a == b
    es = [json.loads(x)["e"] for x in a]
    assert es == sorted(es)


def test_search_finds_table8():
    hits = {h.e for h in search_level10(19, LCM30, 100, jobs=2) if h.status == "certified"}
    assert {row.e for row in table8()} <= hits


def test_scan_small():
    res = scan_a(2)
    assert {(0, -2, 1), (1, 0, 0), (-2, 0, 0)} <= set(res.found)
    assert (0, 0, 0) not in res.found
    assert res.matches


def test_dual_oracle_small():
    triples = [(0, -2, 1), (0, 0, 0), (1, 0, 0), (2, 3, -1)]
    rows = dual_oracle_agreement(triples, LCM30, 300)
    assert all(r["agree"] for r in rows)
    assert [r["rational"] for r in rows] == [True, False, True, False]


def test_family_multipliers_reported():
    e, _ = family_exponents(FamilyLabel(2, 1))
    assert minimal_multiplier(e, LCM30, 300) >= 1
