"""Finite simple classical groups: descriptors, orders and the index calculus."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .factor import factorint
from .zsigmondy import (
    DomainError,
    FactoredInteger,
    cyclotomic_eval,
    divisors,
    eta,
    has_primitive_divisor,
    nu_eps,
)

LINEAR = "linear"  # linear (eps=+) or unitary (eps=-)
SYMPLECTIC = "symplectic"
ODD_ORTHOGONAL = "odd_orthogonal"
EVEN_ORTHOGONAL = "even_orthogonal"
FAMILIES = (LINEAR, SYMPLECTIC, ODD_ORTHOGONAL, EVEN_ORTHOGONAL)

# groups excluded by the simplicity floor that still satisfy the rank bounds
_NOT_SIMPLE = {(LINEAR, 1, 2, 2), (LINEAR, 1, 2, 3), (LINEAR, -1, 3, 2), (SYMPLECTIC, 1, 2, 2)}


def prime_power(q):
    """Return (p, f) with q = p**f, or raise DomainError."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise DomainError(f"{q} is not a prime power")
    (p, f), = fac.items()
    return p, f


@dataclass(frozen=True)
class GroupDescriptor:
    family: str
    n: int
    q: int
    eps: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.eps not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if self.family in (SYMPLECTIC, ODD_ORTHOGONAL) and self.eps != 1:
            raise DomainError("symplectic and odd orthogonal groups carry no sign")
        prime_power(self.q)
        floor = 4 if self.family == EVEN_ORTHOGONAL else 2
        if self.n < floor:
            raise DomainError(f"{self.family} groups need n >= {floor}")
        if (self.family, self.eps, self.n, self.q) in _NOT_SIMPLE:
            raise DomainError(f"{self} is not simple")

    @property
    def p(self):
        return prime_power(self.q)[0]

    @property
    def f(self):
        return prime_power(self.q)[1]

    @property
    def is_linear(self):
        return self.family == LINEAR

    @property
    def is_unitary(self):
        return self.family == LINEAR and self.eps == -1

    @property
    def is_orthogonal_even(self):
        return self.family == EVEN_ORTHOGONAL

    @property
    def sign_char(self):
        return "+" if self.eps > 0 else "-"

    def with_q(self, q):
        return GroupDescriptor(self.family, self.n, q, self.eps)

    def __str__(self):
        if self.family == LINEAR:
            return f"L{self.n}{self.sign_char}(q={self.q})"
        if self.family == SYMPLECTIC:
            return f"S(n={self.n},q={self.q})"
        if self.family == ODD_ORTHOGONAL:
            return f"O(n={self.n},q={self.q})"
        return f"O{self.sign_char}(n={self.n},q={self.q})"

    def pretty(self):
        if self.family == LINEAR:
            name = "L" if self.eps > 0 else "U"
            return f"{name}_{self.n}({self.q})"
        if self.family == SYMPLECTIC:
            return f"S_{2 * self.n}({self.q})"
        if self.family == ODD_ORTHOGONAL:
            return f"O_{2 * self.n + 1}({self.q})"
        return f"O^{self.sign_char}_{2 * self.n}({self.q})"


_DESCRIPTOR_GRAMMAR = """descriptor grammar:
  L<n><sign>(q=<q>)      linear (+) or unitary (-), e.g. L45+(q=9)
  U<n>(q=<q>)            unitary, same as L<n>-(q=<q>)
  L<sign>(n=<n>,q=<q>)   keyword form of the above
  S(n=<n>,q=<q>)         symplectic S_2n(q)
  O(n=<n>,q=<q>)         odd orthogonal O_2n+1(q)
  O<sign>(n=<n>,q=<q>)   even orthogonal O^sign_2n(q)
'u=' may be used in place of 'q='."""

_PAT_SHORT = re.compile(r"^([LU])(\d+)([+-]?)\((?:q|u)=(\d+)\)$")
_PAT_KW = re.compile(r"^([LUSO])([+-]?)\(n=(\d+),(?:q|u)=(\d+)\)$")


class DescriptorSyntaxError(DomainError):
    pass


def parse_descriptor(text):
    """Parse descriptor text such as 'L45+(q=9)' or 'O-(n=30,q=4)'.

    >>> str(parse_descriptor("O-(n=30, u=2)"))
    'O-(n=30,q=2)'
    """
    s = re.sub(r"\s+", "", text)
    m = _PAT_SHORT.match(s)
    if m:
        letter, n, sign, q = m.groups()
        if letter == "U" and sign == "+":
            raise DescriptorSyntaxError(f"cannot parse {text!r}\n{_DESCRIPTOR_GRAMMAR}")
        eps = -1 if letter == "U" or sign == "-" else 1
        return GroupDescriptor(LINEAR, int(n), int(q), eps)
    m = _PAT_KW.match(s)
    if m:
        letter, sign, n, q = m.groups()
        n, q = int(n), int(q)
        if letter in "LU":
            if letter == "U" and sign == "+":
                raise DescriptorSyntaxError(f"cannot parse {text!r}\n{_DESCRIPTOR_GRAMMAR}")
            return GroupDescriptor(LINEAR, n, q, -1 if letter == "U" or sign == "-" else 1)
        if letter == "S" and not sign:
            return GroupDescriptor(SYMPLECTIC, n, q)
        if letter == "O":
            if not sign:
                return GroupDescriptor(ODD_ORTHOGONAL, n, q)
            return GroupDescriptor(EVEN_ORTHOGONAL, n, q, 1 if sign == "+" else -1)
    raise DescriptorSyntaxError(f"cannot parse {text!r}\n{_DESCRIPTOR_GRAMMAR}")


def dim_of(L):
    if L.family == LINEAR:
        return L.n
    if L.family == ODD_ORTHOGONAL:
        return 2 * L.n + 1
    return 2 * L.n


def prk_of(L):
    return L.n


def _order_pieces(L):
    """The order as (power of q, list of (eps*q)^i - 1 style factors, divisor d).

    Each factor is given as (base, i) meaning base^i - 1 up to sign.
    """
    n, q, eps = L.n, L.q, L.eps
    if L.family == LINEAR:
        qexp = n * (n - 1) // 2
        pieces = [(eps * q, i) for i in range(2, n + 1)]
        d = math.gcd(n, q - eps)
    elif L.family in (SYMPLECTIC, ODD_ORTHOGONAL):
        qexp = n * n
        pieces = [(q, 2 * i) for i in range(1, n + 1)]
        d = math.gcd(2, q - 1)
    else:
        qexp = n * (n - 1)
        pieces = [(q, 2 * i) for i in range(1, n)]
        # (None, n) stands for the factor q^n - eps
        pieces.append((None, n))
        d = math.gcd(4, q**n - eps)
    return qexp, pieces, d


def order_value(L):
    """|L| by the product formula, with no factorization.

    >>> order_value(parse_descriptor("L2+(q=4)")), order_value(parse_descriptor("S(n=2,q=3)"))
    (60, 25920)
    >>> order_value(parse_descriptor("U3(q=3)"))
    6048
    """
    qexp, pieces, d = _order_pieces(L)
    total = L.q**qexp
    for base, i in pieces:
        if base is None:
            total *= L.q**i - L.eps
        else:
            total *= abs(base**i - 1)
    value, rem = divmod(total, d)
    assert rem == 0
    return value


_PHI_FACTORS = {}


def _phi_factors(d, a):
    key = (d, a)
    if key not in _PHI_FACTORS:
        _PHI_FACTORS[key] = factorint(cyclotomic_eval(d, a))
    return _PHI_FACTORS[key]


def _add(acc, fac, mult=1):
    for r, e in fac.items():
        acc[r] = acc.get(r, 0) + mult * e


def order_of(L):
    """|L| as a FactoredInteger, assembled from factored cyclotomic values."""
    qexp, pieces, d = _order_pieces(L)
    acc = {}
    _add(acc, {L.p: L.f * qexp})
    for base, i in pieces:
        if base is None:
            # q^n - eps: for eps = -1 this is q^n + 1 = (q^2n - 1)/(q^n - 1)
            if L.eps > 0:
                for k in divisors(i):
                    _add(acc, _phi_factors(k, L.q))
            else:
                for k in divisors(2 * i):
                    if i % k:
                        _add(acc, _phi_factors(k, L.q))
            continue
        for k in divisors(i):
            _add(acc, _phi_factors(k, base))
    _add(acc, factorint(d), -1)
    acc = {r: e for r, e in sorted(acc.items()) if e}
    return FactoredInteger(order_value(L), acc)


def delta_of(L):
    """The prime set pi(eps*q - 1) for linear/unitary, pi((2, q - 1)) otherwise."""
    if L.family == LINEAR:
        return set(factorint(L.eps * L.q - 1))
    return {2} if L.q % 2 else set()


def phi_of_index(i, L):
    """phi for primes with e(r, q) = i: nu_eps(i) or eta(i).

    >>> S = GroupDescriptor(SYMPLECTIC, 5, 3)
    >>> U = GroupDescriptor(LINEAR, 5, 3, -1)
    >>> phi_of_index(6, S), phi_of_index(3, U), phi_of_index(4, U)
    (3, 6, 4)
    """
    if i < 1:
        raise DomainError("index must be positive")
    if L.family == LINEAR:
        return nu_eps(i, L.eps)
    return eta(i)


@dataclass(frozen=True)
class IndexClass:
    i: int
    phi: int


def index_of_phi(phi, L, even=None):
    """Recover e(r, q) from phi.

    For symplectic and orthogonal groups an odd phi comes from an odd or an
    even index, so `even` must say which; linear and unitary groups need no
    extra data.
    """
    if phi < 1:
        raise DomainError("phi must be positive")
    if L.family == LINEAR:
        if even is not None:
            i = nu_eps(phi, L.eps)
            if (i % 2 == 0) != even:
                raise DomainError(f"phi = {phi} forces index {i}")
        return IndexClass(nu_eps(phi, L.eps), phi)
    if phi % 2 == 0:
        if even is False:
            raise DomainError(f"even phi = {phi} cannot come from an odd index")
        return IndexClass(2 * phi, phi)
    if even is None:
        raise DomainError("odd phi needs the parity of the index")
    return IndexClass(2 * phi if even else phi, phi)


def index_range(L, bound=None):
    """Indices allowed by the order formula, before discarding empty classes."""
    n = L.n
    bound = bound or 4 * n + 4
    if L.family == LINEAR:
        ok = lambda i: nu_eps(i, L.eps) <= n
    elif L.family in (SYMPLECTIC, ODD_ORTHOGONAL):
        ok = lambda i: eta(i) <= n
    elif L.eps > 0:
        ok = lambda i: eta(i) <= n - 1 or i == n
    else:
        ok = lambda i: eta(i) <= n - 1 or i == 2 * n
    return {i for i in range(1, bound + 1) if ok(i)}


def valid_indices(L):
    """Indices i such that some r in R_i(q) divides |L|.

    >>> sorted(valid_indices(GroupDescriptor(SYMPLECTIC, 5, 5)))
    [1, 2, 3, 4, 5, 6, 8, 10]
    """
    return {i for i in index_range(L) if has_primitive_divisor(i, L.q)}


def p_exponent(L):
    """Least power of p exceeding the maximal height h(L).

    >>> p_exponent(parse_descriptor("L45+(q=2)")), p_exponent(parse_descriptor("S(n=28,q=3)"))
    (64, 81)
    """
    n = L.n
    if L.family == LINEAR:
        h = n - 1
    elif L.family == EVEN_ORTHOGONAL:
        h = 2 * n - 3
    else:
        h = 2 * n - 1
    pe = L.p
    while pe <= h:
        pe *= L.p
    return pe
