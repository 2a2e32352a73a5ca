"""Semisimple element orders through maximal-torus covers, cyclic Hall
subgroups and the size bounds on element orders.

A maximal torus of a classical group is a product of cyclic pieces, one per
part of a signed partition of the rank:

* linear/unitary: parts of size s give (eps q)^s - 1, and hold the primes
  r_i with nu_eps(i) | s; the sizes sum to at most n;
* symplectic/orthogonal: a '+' part of size s gives q^s - 1 and holds r_i
  with i | s; a '-' part gives q^s + 1 and holds r_i with i even and
  s / eta(i) odd. The sizes sum to at most n, and for O^eps_2n a torus using
  the full rank needs an even (eps = +) or odd (eps = -) number of '-' parts.

A product k_{i_1}(q)...k_{i_l}(q) is an element order iff the indices can be
spread over the parts of one such torus. This model is built independently
of the adjacency predicate in primegraph and is checked against it pairwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .groups import EVEN_ORTHOGONAL, LINEAR, SYMPLECTIC, ODD_ORTHOGONAL, order_value, phi_of_index, valid_indices
from .tables import RangeError, table1
from .zsigmondy import (
    DomainError,
    LemmaViolation,
    eta,
    k_value,
    nu_eps,
    prime_in_open_interval,
)


@dataclass
class TorusPart:
    kind: str  # '+' or '-'
    size: int
    members: tuple
    representative: int = None  # a member whose phi equals the size, if any

    def as_dict(self):
        return {"kind": self.kind, "size": self.size, "members": list(self.members),
                "representative": self.representative}


@dataclass
class IndexCover:
    group: object
    parts: list
    budget_used: int
    grade: str = "exact"  # 'model' for three or more indices

    def as_dict(self):
        return {"group": str(self.group), "parts": [p.as_dict() for p in self.parts],
                "budget_used": self.budget_used, "grade": self.grade}


def _v2(x):
    return (x & -x).bit_length() - 1


def _part_options(block, L):
    """Cheapest (kind, size) choices for a single torus part holding `block`."""
    if L.family == LINEAR:
        return [("+", math.lcm(*(nu_eps(i, L.eps) for i in block)))]
    opts = [("+", math.lcm(*block))]
    etas = [eta(i) for i in block]
    if all(i % 2 == 0 for i in block) and len({_v2(h) for h in etas}) == 1:
        opts.append(("-", math.lcm(*etas)))
    return opts


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def _fits(choice, L):
    total = sum(size for _, size in choice)
    if total > L.n:
        return False
    if L.family == EVEN_ORTHOGONAL and total == L.n:
        minus = sum(kind == "-" for kind, _ in choice)
        return minus % 2 == (0 if L.eps > 0 else 1)
    # slack is filled by parts of size 1 of whichever sign is needed
    return True


def _representative(block, size, L):
    for i in sorted(block, reverse=True):
        if phi_of_index(i, L) == size:
            return i
    return None


def semisimple_member(indices, L, valid=None):
    """A torus cover showing k_{i_1}(q)...k_{i_l}(q) is an element order, or None.

    Among all covers the one with the smallest total size is returned. Covers
    of three or more indices are graded 'model'.

    >>> from .groups import GroupDescriptor
    >>> c = semisimple_member([54, 18], GroupDescriptor(SYMPLECTIC, 28, 3))
    >>> [(p.kind, p.size, p.members) for p in c.parts]
    [('-', 27, (18, 54))]
    >>> semisimple_member([45, 23], GroupDescriptor(LINEAR, 45, 2)) is None
    True
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise DomainError("indices must be distinct")
    if valid is None:
        valid = valid_indices(L)
    for i in idx:
        if i <= 2:
            raise DomainError(f"index {i} <= 2 is not handled")
        if i not in valid:
            raise DomainError(f"index {i} is not valid for {L}")
    return torus_cover(idx, L)


def _best_cover(indices, L, accept, exact_upto):
    idx = sorted(set(indices))
    best = None
    for blocks in _set_partitions(idx):
        blocks = [tuple(sorted(b)) for b in blocks]
        for choice in product(*(_part_options(b, L) for b in blocks)):
            total = sum(size for _, size in choice)
            if accept(choice, total) and (best is None or total < best[0]):
                best = (total, blocks, choice)
    if best is None:
        return None
    total, blocks, choice = best
    parts = [
        TorusPart(kind, size, b, _representative(b, size, L))
        for b, (kind, size) in sorted(zip(blocks, choice), key=lambda x: (-x[1][1], x[0]))
    ]
    return IndexCover(L, parts, total, "exact" if len(idx) <= exact_upto else "model")


def torus_cover(indices, L):
    """The cover search itself, with no validity checks on the indices.

    Repeated indices are merged: primes from one class share a cyclic factor.
    """
    return _best_cover(indices, L, lambda choice, total: _fits(choice, L), 2)


def unipotent_cost(L):
    """Rank taken by a unipotent element of order p next to a torus."""
    return 1 if L.family in (SYMPLECTIC, ODD_ORTHOGONAL) else 2


def char_cover(indices, L):
    """A torus cover leaving room for an element of order p = char(L), or None.

    p k_{i_1}(q)...k_{i_l}(q) is an element order when the indices fit in
    rank n - 2 (linear, unitary, even orthogonal) or n - 1 (symplectic, odd
    orthogonal). The leftover block absorbs the sign of an even orthogonal
    torus, so no parity rule applies.

    >>> from .groups import GroupDescriptor
    >>> L = GroupDescriptor(SYMPLECTIC, 28, 3)
    >>> char_cover([13], L).budget_used, char_cover([13, 30], L)
    (13, None)
    """
    room = L.n - unipotent_cost(L)
    return _best_cover(indices, L, lambda choice, total: total <= room, 1)


def has_cyclic_hall(i, L):
    """Whether L has a cyclic Hall subgroup of order k_i(q): n/2 < phi <= n.

    >>> from .groups import GroupDescriptor
    >>> has_cyclic_hall(nu_eps(30, 1), GroupDescriptor(LINEAR, 45, 2))
    True
    >>> has_cyclic_hall(20, GroupDescriptor(SYMPLECTIC, 28, 3))
    False
    """
    phi = phi_of_index(i, L)
    return 2 * phi > L.n and phi <= L.n


def hall_part_is_exact(i, L):
    """gcd(k_i(q), |L| / k_i(q)) == 1, computed from the order formula."""
    k = k_value(i, L.q)
    order = order_value(L)
    if order % k:
        return False
    return math.gcd(k, order // k) == 1


# Large element orders.

@dataclass
class SpectralWitness:
    group: object
    value: int
    j: int
    exponent: Fraction  # value >= q**exponent
    route: str
    index: int = None  # the e-index whose k-value is returned
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {"group": str(self.group), "value": str(self.value), "j": self.j, "index": self.index,
                "exponent": str(self.exponent), "route": self.route}


def _meets(value, q, exponent):
    # value >= q**(a/b)  <=>  value**b >= q**a
    return value**exponent.denominator >= q**exponent.numerator


def _linear_witness(L, t):
    n = L.n
    if n < 23:
        raise RangeError(f"the large-element bound for linear and unitary groups needs n >= 23, got {n}")
    if n <= 28:
        j, route = 23, "explicit"
    else:
        j = prime_in_open_interval(Fraction(5 * (n + 1), 6), n + 1, smallest=True)
        if j is None:
            raise LemmaViolation(f"no prime in (5(n+1)/6, n+1) for n = {n}")
        route = "five-sixths interval"
    if not (2 * j > n and j <= n):
        raise LemmaViolation(f"witness {j} is not a large index for n = {n}")
    index = nu_eps(j, L.eps)
    return j, index, k_value(index, L.q), route


def _so_explicit(L, t):
    n = L.n
    odd_type = L.family != EVEN_ORTHOGONAL
    if 48 <= n <= 53:
        return 53 if t == 41 else 47
    if 44 <= n <= 47:
        return 43
    if n in (42, 43):
        return 41
    if 38 <= n <= 41:
        return 41 if (odd_type and n == 41) else 37
    if 33 <= n <= 37:
        return 37 if t == 29 else 32
    if n == 32:
        return 31
    return 29


def _so_witness(L, t):
    n = L.n
    odd_type = L.family != EVEN_ORTHOGONAL
    floor = 29 if odd_type else 30
    if n < floor:
        raise RangeError(f"the large-element bound for {L.family} groups needs n >= {floor}, got {n}")
    if n >= 54:
        if n % 2 == 0:
            lo, hi = Fraction(8 * (n + 1), 9), n + 1
        elif odd_type:
            lo, hi = Fraction(8 * (n + 2), 9), n + 2
        else:
            lo, hi = Fraction(8 * n, 9), n
        j = prime_in_open_interval(lo, hi, smallest=True)
        if j is None:
            raise LemmaViolation(f"no prime in ({lo}, {hi})")
        route = "eight-ninths interval"
    else:
        j = _so_explicit(L, t)
        route = "explicit"
    if j == 32:
        if not 2 * j > n > j:
            raise LemmaViolation(f"power-of-two witness {j} outside (n/2, n) for n = {n}")
        value = k_value(2 * j, L.q)
        if value != (L.q**j + 1) // math.gcd(2, L.q - 1):
            raise LemmaViolation("k_64(q) differs from (q^32 + 1)/(2, q - 1)")
        return j, 2 * j, value, "power of two"
    if not (j < n or (odd_type and j <= n)):
        raise LemmaViolation(f"prime witness {j} too large for n = {n}")
    # both k_j(q) and k_j(-q) = k_{2j}(q) are element orders; take the larger
    a, b = k_value(j, L.q), k_value(2 * j, L.q)
    return (j, j, a, route) if a >= b else (j, 2 * j, b, route)


def big_spectral_element(L):
    """An element order with only large prime divisors and a guaranteed size.

    Linear/unitary (n >= 23): value >= q^(4t/3). Symplectic and orthogonal
    (n >= 29, or n >= 30 for even dimension): value >= q^(10t/9).

    >>> from .groups import GroupDescriptor
    >>> w = big_spectral_element(GroupDescriptor(LINEAR, 45, 2))
    >>> w.j, w.exponent
    (41, Fraction(92, 3))
    """
    t = table1(L)[0]
    if L.family == LINEAR:
        j, index, value, route = _linear_witness(L, t)
        exponent = Fraction(4 * t, 3)
    else:
        j, index, value, route = _so_witness(L, t)
        exponent = Fraction(10 * t, 9)
    if not _meets(value, L.q, exponent):
        raise LemmaViolation(f"{L}: k-value for j = {j} is below q^{exponent}")
    return SpectralWitness(L, value, j, exponent, route, index)


def lie_rank(L):
    return L.n - 1 if L.family == LINEAR else L.n


def max_spectral_bound(L):
    """q^(m+1)/(q-1) with m the Lie rank, checked against q^(2t).

    >>> from .groups import GroupDescriptor
    >>> max_spectral_bound(GroupDescriptor(SYMPLECTIC, 28, 3))
    Fraction(68630377364883, 2)
    """
    q = L.q
    bound = Fraction(q ** (lie_rank(L) + 1), q - 1)
    t = table1(L)[0]
    if bound > q ** (2 * t):
        raise LemmaViolation(f"{L}: q^(m+1)/(q-1) exceeds q^(2t) with t = {t}")
    return bound
