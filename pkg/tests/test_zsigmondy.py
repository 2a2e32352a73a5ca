from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import assume, given, strategies as st
from sympy.ntheory import n_order

from classgraph.factor import factorint, is_prime, primes_up_to
from classgraph.zsigmondy import (
    ZSIGMONDY_EXCEPTIONS,
    DomainError,
    SignedBase,
    count_eta_interval,
    cyclotomic_eval,
    eta,
    greatest_primitive_divisor,
    has_primitive_divisor,
    interval_prime_failures,
    k_value,
    lifted_r_part,
    mult_order,
    mult_order_two,
    nu,
    nu_eps,
    pi_part,
    prime_in_interval,
    prime_in_open_interval,
    primitive_prime_divisors,
)

bases = st.integers(2, 40).flatmap(lambda m: st.sampled_from([m, -m]))


def test_k_spot_values():
    assert [k_value(20, 2), k_value(6, 2), k_value(3, 4), k_value(2, 2), k_value(2, -2)] == [41, 1, 7, 3, 1]


def test_mult_order_examples():
    assert mult_order(3, 2) == 2
    assert mult_order(5, 2) == 4
    # (-2)^3 = -8 = 6 mod 7, so the order is 6, not 3
    assert mult_order(7, -2) == 6
    assert mult_order_two(5) == 1 and mult_order_two(7) == 2


def test_mult_order_rejects_bad_moduli():
    with pytest.raises(DomainError):
        mult_order(9, 2)
    with pytest.raises(DomainError):
        mult_order(3, 6)
    with pytest.raises(DomainError):
        mult_order_two(4)


def test_cyclotomic_examples():
    assert cyclotomic_eval(20, 2) == 205
    assert cyclotomic_eval(3, 4) == 21
    assert cyclotomic_eval(1, -5) == -6
    with pytest.raises(DomainError):
        cyclotomic_eval(3, 1)
    with pytest.raises(DomainError):
        cyclotomic_eval(0, 3)


def test_signed_base():
    b = SignedBase(3, -1)
    assert int(b) == -3 and str(b) == "-3"
    assert k_value(5, b) == k_value(5, -3) == k_value(10, 3)
    with pytest.raises(DomainError):
        SignedBase(1)


def test_primitive_divisor_examples():
    assert primitive_prime_divisors(3, 4) == {7}
    assert primitive_prime_divisors(6, 2) == set()
    assert primitive_prime_divisors(20, 2) == {41}
    assert int(greatest_primitive_divisor(20, 2)) == 41


def test_zsigmondy_exceptions_exactly():
    empty = {(a, i) for m in range(2, 51) for a in (m, -m) for i in range(1, 51) if not has_primitive_divisor(i, a)}
    assert empty == ZSIGMONDY_EXCEPTIONS


def test_eta_nu():
    assert (eta(9), eta(10), eta(4)) == (9, 5, 2)
    assert (nu(4), nu(6), nu(3)) == (4, 3, 6)
    assert nu_eps(7, 1) == 7
    with pytest.raises(DomainError):
        eta(0)


@given(st.integers(1, 400))
def test_nu_is_an_involution(k):
    assert nu(nu(k)) == k


def test_pi_part_examples():
    assert [int(pi_part(n, s)) for n, s in [(12, {2}), (12, {2, 3}), (35, {2})]] == [4, 12, 1]
    with pytest.raises(DomainError):
        pi_part(0, {2})


def test_lifted_r_part():
    assert lifted_r_part(1, 4, 9, 3) == 27
    assert lifted_r_part(1, 5, 1, 2) == 4
    # (-4)^3 - 1 = -65 = -5 * 13
    assert lifted_r_part(-1, 4, 3, 5) == 5
    with pytest.raises(DomainError):
        lifted_r_part(1, 4, 3, 5)


def test_count_eta_interval():
    assert count_eta_interval(2, 10) == 3
    assert count_eta_interval(1, 2) == 1
    assert count_eta_interval(2, 9) == 3
    with pytest.raises(DomainError):
        count_eta_interval(3, 3)


def test_interval_primes():
    assert prime_in_interval(30) == 29
    assert prime_in_interval(36) == 31
    assert prime_in_interval(54, "eight-ninths") == 53
    assert prime_in_open_interval(Fraction(115, 3), 46, smallest=True) == 41
    with pytest.raises(DomainError):
        prime_in_interval(36, "eight-ninths")
    with pytest.raises(DomainError):
        prime_in_interval(29)
    assert interval_prime_failures(2000, Fraction(8, 9)) == [35, 36, 37, 53]
    assert interval_prime_failures(2000, Fraction(5, 6)) == []


@given(st.integers(1, 60), bases)
def test_cyclotomic_matches_sympy(i, a):
    assert cyclotomic_eval(i, a) == sympy.cyclotomic_poly(i, a)


@given(st.integers(3, 60), bases)
def test_k_value_matches_definition(i, a):
    # product of primitive prime divisors with their multiplicity in a^i - 1
    assume(abs(cyclotomic_eval(i, a)) < 10**20)
    full = abs(a**i - 1)
    expected = 1
    for r in sympy.primefactors(sympy.cyclotomic_poly(i, a)):
        if a % r and n_order(a % r, r) == i:
            while full % r == 0:
                full //= r
                expected *= r
    assert k_value(i, a) == expected


@given(st.sampled_from(primes_up_to(3000)[1:]), bases)
def test_mult_order_matches_sympy(r, a):
    if a % r:
        assert mult_order(r, a) == n_order(a % r, r)


@given(bases, st.integers(1, 40), st.integers(1, 40))
def test_k_values_coprime(a, i, j):
    if i != j:
        assert gcd(k_value(i, a), k_value(j, a)) == 1


@given(bases, st.integers(1, 30))
def test_negated_base(a, i):
    if i % 2:
        assert k_value(i, -a) == k_value(2 * i, a)
    elif i % 4 == 0:
        assert k_value(i, -a) == k_value(i, a)


@given(st.integers(2, 12).flatmap(lambda m: st.sampled_from([m, -m])), st.integers(1, 24), st.sampled_from([2, 3, 5]))
def test_power_base(a, i, p):
    big, small = k_value(i * p, a), k_value(i, a**p)
    assert small % big == 0
    if i % p == 0:
        assert big == small


@given(st.integers(2, 30), st.integers(3, 40))
def test_k_lower_bound(a, i):
    if (a, i) not in ((2, 3), (2, 6)):
        for s in (1, -1):
            assert k_value(i, s * a) ** 2 > a ** sympy.totient(i)


@given(st.integers(-10**15, 10**15).filter(bool))
def test_factorint_matches_sympy(n):
    assert factorint(n) == sympy.factorint(abs(n))


@given(st.integers(0, 10**6))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_factorint_medium_semiprime():
    p, q = 1000000007, 998244353
    assert factorint(p * q * 12) == {2: 2, 3: 1, q: 1, p: 1}


@given(st.fractions(0, 500), st.integers(0, 120))
def test_open_interval_prime_matches_sympy(lo, width):
    hi = lo + width
    primes = [p for p in sympy.primerange(0, int(hi) + 2) if lo < p < hi]
    assert prime_in_open_interval(lo, hi, smallest=True) == (primes[0] if primes else None)
    assert prime_in_open_interval(lo, hi) == (primes[-1] if primes else None)
