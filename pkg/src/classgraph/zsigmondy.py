"""Primitive prime divisors, greatest primitive divisors and cyclotomic values.

A base is either a plain integer (possibly negative) or a SignedBase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .factor import factorint, is_prime, primes_up_to

ZSIGMONDY_EXCEPTIONS = frozenset({(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)})


class DomainError(ValueError):
    """Arguments outside the domain of an arithmetic function."""


class LemmaViolation(AssertionError):
    """A computation contradicted a statement it was meant to confirm."""


@dataclass(frozen=True)
class SignedBase:
    """The integer sign * magnitude, with magnitude > 1."""

    magnitude: int
    sign: int = 1

    def __post_init__(self):
        if self.magnitude <= 1:
            raise DomainError("magnitude must exceed 1")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")

    @property
    def value(self):
        return self.sign * self.magnitude

    def __int__(self):
        return self.value

    def __str__(self):
        return ("-" if self.sign < 0 else "") + str(self.magnitude)


def _base(a):
    a = int(a)
    if abs(a) <= 1:
        raise DomainError(f"base must satisfy |a| > 1, got {a}")
    return a


@dataclass
class FactoredInteger:
    """An integer together with the factorization of its absolute value.

    The factorization is computed on first access unless supplied.
    """

    value: int
    _factors: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        if self._factors is not None:
            self._check(self._factors)

    def _check(self, factors):
        prod = 1
        for p, e in factors.items():
            if e < 1 or not is_prime(p):
                raise LemmaViolation(f"bad factor {p}^{e}")
            prod *= p**e
        if prod != abs(self.value):
            raise LemmaViolation(f"factors do not multiply to {self.value}")

    @property
    def factors(self):
        if self._factors is None:
            self._factors = factorint(self.value)
        return self._factors

    @property
    def primes(self):
        return set(self.factors)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FactoredInteger):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)


def mult_order(r, a):
    """Multiplicative order of a modulo the odd prime r.

    Uses the factorization of r - 1.

    >>> mult_order(3, 2), mult_order(5, 2), mult_order(7, -2)
    (2, 4, 6)
    """
    a = int(a)
    if r == 2 or not is_prime(r):
        raise DomainError(f"{r} is not an odd prime")
    if a % r == 0:
        raise DomainError(f"{r} divides {a}")
    a %= r
    order = r - 1
    for p in factorint(r - 1):
        while order % p == 0 and pow(a, order // p, r) == 1:
            order //= p
    return order


def mult_order_two(n):
    """The convention e(2, n): 1 if n = 1 mod 4, else 2 (n odd)."""
    n = int(n)
    if n % 2 == 0:
        raise DomainError(f"{n} is even")
    return 1 if n % 4 == 1 else 2


def order_mod(r, a):
    """e(r, a) for any prime r coprime to a, using the convention at r = 2."""
    if r == 2:
        return mult_order_two(a)
    return mult_order(r, a)


def divisors(n):
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


@lru_cache(maxsize=None)
def _cyclo(i, a):
    num = a**i - 1
    den = 1
    for d in divisors(i)[:-1]:
        den *= _cyclo(d, a)
    value, rem = divmod(num, den)
    if rem:
        raise LemmaViolation(f"inexact division computing Phi_{i}({a})")
    return value


def cyclotomic_eval(i, a):
    """Value of the i-th cyclotomic polynomial at the integer a.

    >>> cyclotomic_eval(20, 2), cyclotomic_eval(3, 4), cyclotomic_eval(1, -5)
    (205, 21, -6)
    """
    if i < 1:
        raise DomainError("index must be positive")
    return _cyclo(i, _base(a))


def largest_prime_factor(n):
    return max(factorint(n)) if n > 1 else 1


def strip_prime(n, r):
    while n % r == 0:
        n //= r
    return n


@lru_cache(maxsize=None)
def _k(i, a):
    if i == 1:
        return abs(a - 1) // 2 if a % 4 == 3 else abs(a - 1)
    if i == 2:
        return _k(1, -a)
    r = largest_prime_factor(i)
    return abs(_cyclo(i, a)) // math.gcd(r, _cyclo(strip_prime(i, r), a))


def k_value(i, a):
    """Greatest primitive divisor k_i(a) as a plain integer.

    >>> k_value(20, 2), k_value(6, 2), k_value(3, 4), k_value(2, 2), k_value(2, -2)
    (41, 1, 7, 3, 1)
    """
    if i < 1:
        raise DomainError("index must be positive")
    return _k(i, _base(a))


def greatest_primitive_divisor(i, a):
    """k_i(a) as a FactoredInteger (factorization computed lazily)."""
    return FactoredInteger(k_value(i, a))


def primitive_prime_divisors(i, a):
    """The set R_i(a) of primes r with e(r, a) = i.

    Candidates are the prime divisors of Phi_i(a); each is kept only if its
    order is exactly i.

    >>> sorted(primitive_prime_divisors(3, 4)), primitive_prime_divisors(6, 2)
    ([7], set())
    """
    a = _base(a)
    if i < 1:
        raise DomainError("index must be positive")
    cands = set(factorint(_cyclo(i, a))) if abs(_cyclo(i, a)) > 1 else set()
    return {r for r in cands if a % r and order_mod(r, a) == i}


def has_primitive_divisor(i, a):
    """Whether R_i(a) is nonempty, decided without full factorization.

    An odd prime dividing Phi_i(a) but not i has order exactly i, so after
    stripping 2 and the primes of i from Phi_i(a) the set is nonempty iff
    something remains. The stripped primes are checked directly.
    """
    a = _base(a)
    special = ({2} | set(factorint(i))) if i > 1 else {2}
    m = abs(_cyclo(i, a))
    for r in special:
        m = strip_prime(m, r)
    if m > 1:
        return True
    return any(a % r and order_mod(r, a) == i for r in special)


def eta(k):
    """k for odd k, k/2 for even k.

    >>> eta(9), eta(10), eta(4)
    (9, 5, 2)
    """
    if k < 1:
        raise DomainError("argument must be positive")
    return k if k % 2 else k // 2


def nu(k):
    """k if 4 | k, k/2 if k = 2 mod 4, 2k if k is odd.

    >>> nu(4), nu(6), nu(3)
    (4, 3, 6)
    """
    if k < 1:
        raise DomainError("argument must be positive")
    if k % 4 == 0:
        return k
    if k % 2 == 0:
        return k // 2
    return 2 * k


def nu_eps(k, eps):
    return k if eps > 0 else nu(k)


def p_part(n, p):
    """Largest power of p dividing n."""
    n = abs(n)
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def pi_part(n, primes):
    """Largest divisor of n supported on the given primes.

    >>> [int(pi_part(n, s)) for n, s in [(12, {2}), (12, {2, 3}), (35, {2})]]
    [4, 12, 1]
    """
    n = int(n)
    if n == 0:
        raise DomainError("pi-part of zero")
    out = 1
    for p in primes:
        out *= p_part(n, p)
    return FactoredInteger(out)


def lifted_r_part(eps, q, m, r):
    """r-part of (eps*q)^m - 1 by the lifting formula m_r * (eps*q - 1)_r.

    The closed form is compared with the r-part of the directly computed value.

    >>> lifted_r_part(1, 4, 9, 3), lifted_r_part(1, 5, 1, 2), lifted_r_part(-1, 4, 3, 5)
    (27, 4, 5)
    """
    base = eps * q
    if q <= 1 or m < 1:
        raise DomainError("need q > 1 and m >= 1")
    if r == 2:
        if (base - 1) % 4:
            raise DomainError("r = 2 needs 4 | eps*q - 1")
    elif not is_prime(r) or (base - 1) % r:
        raise DomainError(f"{r} must be an odd prime dividing {base - 1}")
    closed = p_part(m, r) * p_part(base - 1, r)
    direct = p_part(base**m - 1, r)
    if closed != direct:
        raise LemmaViolation(f"r-part mismatch {closed} != {direct}")
    return closed


def count_eta_interval(a, b):
    """|{i : b - a < eta(i) <= b}|, checked against [3a/2] or [(3a+1)/2].

    >>> count_eta_interval(2, 10), count_eta_interval(1, 2), count_eta_interval(2, 9)
    (3, 1, 3)
    """
    if not b > a >= 1:
        raise DomainError("need b > a >= 1")
    count = sum(1 for i in range(1, 2 * b + 1) if b - a < eta(i) <= b)
    closed = (3 * a) // 2 if b % 2 == 0 else (3 * a + 1) // 2
    if count != closed:
        raise LemmaViolation(f"eta count {count} != {closed} for a={a}, b={b}")
    return count


INTERVAL_MODES = {"five-sixths": Fraction(5, 6), "eight-ninths": Fraction(8, 9)}
EIGHT_NINTHS_EXCEPTIONS = frozenset({35, 36, 37, 53})


def prime_in_open_interval(lo, hi, smallest=False):
    """Largest (or smallest) prime p with lo < p < hi, or None.

    Bounds may be Fractions.

    >>> prime_in_open_interval(Fraction(115, 3), 46), prime_in_open_interval(Fraction(115, 3), 46, smallest=True)
    (43, 41)
    """
    start = math.floor(lo) + 1
    end = math.ceil(hi) - 1
    order = range(start, end + 1) if smallest else range(end, start - 1, -1)
    for p in order:
        if p >= 2 and is_prime(p):
            return p
    return None


def prime_in_interval(n, mode="five-sixths"):
    """A prime in (5n/6, n) or (8n/9, n), the largest one found.

    >>> prime_in_interval(30), prime_in_interval(36), prime_in_interval(54, "eight-ninths")
    (29, 31, 53)
    """
    if mode not in INTERVAL_MODES:
        raise DomainError(f"unknown mode {mode!r}")
    if n < 30:
        raise DomainError("n must be at least 30")
    if mode == "eight-ninths" and n in EIGHT_NINTHS_EXCEPTIONS:
        raise DomainError(f"n = {n} is an exception for the 8/9 interval")
    p = prime_in_open_interval(INTERVAL_MODES[mode] * n, n)
    if p is None:
        raise LemmaViolation(f"no prime in ({INTERVAL_MODES[mode] * n}, {n})")
    return p


def interval_prime_failures(nmax, frac, nmin=30):
    """All n in [nmin, nmax] whose interval (frac*n, n) has no prime, by sieve."""
    primes = primes_up_to(nmax)
    bad = []
    idx = 0
    # for each n, the largest prime below n must exceed frac*n
    largest_below = 0
    for n in range(nmin, nmax + 1):
        while idx < len(primes) and primes[idx] < n:
            largest_below = primes[idx]
            idx += 1
        if not largest_below > frac * n:
            bad.append(n)
    return bad


def euler_phi(n):
    out = n
    for p in factorint(n) if n > 1 else ():
        out -= out // p
    return out
