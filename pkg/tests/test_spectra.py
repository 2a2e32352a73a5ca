from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import given, strategies as st
from sympy.utilities.iterables import partitions

from classgraph.groups import EVEN_ORTHOGONAL, LINEAR, ODD_ORTHOGONAL, SYMPLECTIC, GroupDescriptor, valid_indices
from classgraph.primegraph import char_nonadjacent, nonadjacent
from classgraph.spectra import (
    big_spectral_element,
    char_cover,
    has_cyclic_hall,
    hall_part_is_exact,
    max_spectral_bound,
    semisimple_member,
    torus_cover,
)
from classgraph.tables import RangeError
from classgraph.zsigmondy import DomainError, eta, nu_eps, primitive_prime_divisors

TYPES = [(LINEAR, 1), (LINEAR, -1), (SYMPLECTIC, 1), (ODD_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, -1)]


def _parts(n):
    for p in partitions(n):
        yield [k for k, m in p.items() for _ in range(m)]


@lru_cache(maxsize=None)
def maximal_tori(family, eps, n, q):
    """Orders of the maximal tori as lists of cyclic factors."""
    out = []
    if family == LINEAR:
        for lam in _parts(n):
            out.append([abs((eps * q) ** k - 1) for k in lam])
        return out
    for a in range(n + 1):
        plus = list(_parts(a)) if a else [[]]
        minus = list(_parts(n - a)) if n - a else [[]]
        for alpha in plus:
            for beta in minus:
                if family == EVEN_ORTHOGONAL and len(beta) % 2 != (0 if eps > 0 else 1):
                    continue
                out.append([q**k - 1 for k in alpha] + [q**k + 1 for k in beta])
    return out


def adjacent_by_tori(r, s, L):
    # in an abelian torus some element has order r*s iff both primes divide its order
    for T in maximal_tori(L.family, L.eps, L.n, L.q):
        if any(x % r == 0 for x in T) and any(x % s == 0 for x in T):
            return True
    return False


small = st.builds(lambda fe, n, q: GroupDescriptor(fe[0], n, q, fe[1]),
                  st.sampled_from(TYPES), st.integers(4, 9), st.sampled_from([2, 3, 4, 5]))


@given(small)
def test_covers_match_maximal_tori(L):
    valid = valid_indices(L)
    vs = sorted(i for i in valid if i > 2)
    prime = {i: min(primitive_prime_divisors(i, L.q)) for i in vs}
    for i, j in combinations(vs, 2):
        by_tori = adjacent_by_tori(prime[i], prime[j], L)
        assert (semisimple_member([i, j], L, valid) is not None) == by_tori
        assert nonadjacent(i, j, L, valid) == (not by_tori)


@given(small)
def test_singletons_are_present(L):
    for i in valid_indices(L):
        if i > 2:
            assert semisimple_member([i], L) is not None


@given(small)
def test_char_routes_agree(L):
    for i in valid_indices(L):
        if i > 2:
            assert (char_cover([i], L) is None) == char_nonadjacent(i, L)


@given(small, st.data())
def test_covers_are_monotone(L, data):
    vs = sorted(i for i in valid_indices(L) if i > 2)
    sub = data.draw(st.lists(st.sampled_from(vs), min_size=1, max_size=3, unique=True))
    if torus_cover(sub, L) is not None:
        for k in range(1, len(sub)):
            for part in combinations(sub, k):
                assert torus_cover(list(part), L) is not None


def test_cover_examples():
    S = GroupDescriptor(SYMPLECTIC, 28, 3)
    c = semisimple_member([54, 18], S)
    assert [(p.kind, p.size, p.members) for p in c.parts] == [("-", 27, (18, 54))]
    assert c.grade == "exact"
    assert semisimple_member([45, 23], GroupDescriptor(LINEAR, 45, 2)) is None
    assert semisimple_member([18, 6, 8], S).grade == "model"
    with pytest.raises(DomainError):
        semisimple_member([18, 18], S)
    with pytest.raises(DomainError):
        semisimple_member([57], S)


def test_hall():
    L = GroupDescriptor(LINEAR, 45, 2)
    S = GroupDescriptor(SYMPLECTIC, 28, 3)
    assert has_cyclic_hall(nu_eps(30, 1), L)
    assert not has_cyclic_hall(20, S)
    assert has_cyclic_hall(56, S) and eta(56) == S.n
    assert hall_part_is_exact(56, S)


def test_big_element_examples():
    assert big_spectral_element(GroupDescriptor(LINEAR, 45, 2)).j == 41
    w = big_spectral_element(GroupDescriptor(SYMPLECTIC, 33, 3))
    assert (w.j, w.route) == (32, "power of two")
    assert big_spectral_element(GroupDescriptor(EVEN_ORTHOGONAL, 31, 3, -1)).j == 29
    with pytest.raises(RangeError):
        big_spectral_element(GroupDescriptor(SYMPLECTIC, 28, 3))


@pytest.mark.parametrize("fe", TYPES)
@pytest.mark.parametrize("q", [2, 3, 5])
def test_big_element_meets_its_bound(fe, q):
    for n in (30, 41, 54, 60):
        w = big_spectral_element(GroupDescriptor(fe[0], n, q, fe[1]))
        assert w.value ** w.exponent.denominator >= q ** w.exponent.numerator


def test_max_bound():
    assert max_spectral_bound(GroupDescriptor(SYMPLECTIC, 28, 3)) == Fraction(3**29, 2)
    assert max_spectral_bound(GroupDescriptor(LINEAR, 45, 2)) == 2**45
