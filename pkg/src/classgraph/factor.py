"""Integer factorization: trial division, Miller-Rabin and Pollard-Brent.

Every factorization is checked by multiplying the factors back together.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

TRIAL_BOUND = 10**4

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=None)
def primes_up_to(n):
    """Sieve of Eratosthenes, returned as a tuple.

    >>> primes_up_to(20)
    (2, 3, 5, 7, 11, 13, 17, 19)
    """
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n):
    """Miller-Rabin. Deterministic below 3.3e24, probabilistic above.

    >>> [k for k in range(30) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES
    if n >= 3317044064679887385961981:
        rng = random.Random(n)
        bases = _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(12))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n, seed):
    # Pollard-Brent cycle finding with batched gcds
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n, out, seed=1):
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent(m, seed)
        seed += 1
        stack += [d, m // d]


def factorint(n, trial_bound=TRIAL_BOUND):
    """Prime factorization of |n| as a dict prime -> exponent.

    >>> factorint(-360)
    {2: 3, 3: 2, 5: 1}
    >>> factorint(1)
    {}
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    m = n
    for p in primes_up_to(trial_bound):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1:
        _split(m, out)
    out = dict(sorted(out.items()))
    check = 1
    for p, e in out.items():
        check *= p**e
    if check != n:
        raise ArithmeticError(f"factorization of {n} failed verification")
    return out


def prime_factors(n):
    return set(factorint(n))
