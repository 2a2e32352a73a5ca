from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.ntheory import n_order

from classgraph.groups import (
    EVEN_ORTHOGONAL,
    LINEAR,
    ODD_ORTHOGONAL,
    SYMPLECTIC,
    DescriptorSyntaxError,
    GroupDescriptor,
    delta_of,
    dim_of,
    index_of_phi,
    order_of,
    order_value,
    p_exponent,
    parse_descriptor,
    phi_of_index,
    prime_power,
    valid_indices,
)
from classgraph.zsigmondy import DomainError

# orders of small simple groups, as tabulated in the ATLAS
KNOWN_ORDERS = {
    "L2+(q=4)": 60,
    "L2+(q=8)": 504,
    "L3+(q=2)": 168,
    "L4+(q=2)": 20160,
    "U3(q=3)": 6048,
    "U4(q=3)": 3265920,
    "S(n=2,q=3)": 25920,
    "S(n=2,q=4)": 979200,
    "S(n=3,q=2)": 1451520,
    "O(n=3,q=3)": 4585351680,
    "O+(n=4,q=2)": 174182400,
    "O-(n=4,q=2)": 197406720,
}


@pytest.mark.parametrize("text,order", sorted(KNOWN_ORDERS.items()))
def test_known_orders(text, order):
    L = parse_descriptor(text)
    assert order_value(L) == order
    assert order_of(L).value == order


def _det(m, p):
    return round(sympy.Matrix(m).det()) % p


@pytest.mark.parametrize("n,p", [(2, 5), (2, 7), (3, 2), (3, 3)])
def test_linear_order_by_counting_matrices(n, p):
    # |SL_n(p)| by brute force, then divide by the centre
    sl = sum(1 for e in product(range(p), repeat=n * n)
             if _det([e[k * n:(k + 1) * n] for k in range(n)], p) == 1)
    centre = sympy.gcd(n, p - 1)
    assert order_value(GroupDescriptor(LINEAR, n, p)) == sl // centre


small_groups = st.builds(
    lambda fam, n, q: (fam, n, q),
    st.sampled_from([(LINEAR, 1), (LINEAR, -1), (SYMPLECTIC, 1), (ODD_ORTHOGONAL, 1),
                     (EVEN_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, -1)]),
    st.integers(2, 7),
    st.sampled_from([2, 3, 4, 5, 7, 8, 9]),
)


def _make(key):
    (fam, eps), n, q = key
    try:
        return GroupDescriptor(fam, n, q, eps)
    except DomainError:
        return None


@given(small_groups)
def test_order_factorization_matches_sympy(key):
    L = _make(key)
    if L is None:
        return
    assert order_of(L).factors == sympy.factorint(order_value(L))


@given(small_groups)
def test_valid_indices_match_factored_order(key):
    L = _make(key)
    if L is None:
        return
    # for r = 2 the index is read modulo 4: 1 if 4 | q - 1, else 2
    e = lambda r: (1 if L.q % 4 == 1 else 2) if r == 2 else n_order(L.q % r, r)
    expected = {e(r) for r in sympy.primefactors(order_value(L)) if r != L.p}
    assert valid_indices(L) == expected


def test_parse_forms():
    assert parse_descriptor("L45+(q=9)") == GroupDescriptor(LINEAR, 45, 9)
    assert parse_descriptor("U45(q=4)") == parse_descriptor("L-(n=45,u=4)") == GroupDescriptor(LINEAR, 45, 4, -1)
    assert parse_descriptor("O+(n=31, q=5)") == GroupDescriptor(EVEN_ORTHOGONAL, 31, 5)
    assert parse_descriptor("O(n=28,q=3)").family == ODD_ORTHOGONAL
    L = parse_descriptor("S(n=28,q=3)")
    assert str(L) == "S(n=28,q=3)" and L.pretty() == "S_56(3)"


@pytest.mark.parametrize("text", ["X45(q=2)", "U45+(q=2)", "S+(n=5,q=3)", "L45(q=6)", "S(n=2,q=2)", "O+(n=3,q=2)", ""])
def test_parse_errors(text):
    with pytest.raises(DomainError):
        parse_descriptor(text)


def test_parse_error_shows_grammar():
    with pytest.raises(DescriptorSyntaxError, match="descriptor grammar"):
        parse_descriptor("L(45)")


def test_prime_power():
    assert prime_power(81) == (3, 4)
    with pytest.raises(DomainError):
        prime_power(12)


def test_dims():
    assert dim_of(GroupDescriptor(LINEAR, 45, 2)) == 45
    assert dim_of(GroupDescriptor(SYMPLECTIC, 28, 3)) == 56
    assert dim_of(GroupDescriptor(ODD_ORTHOGONAL, 28, 3)) == 57


def test_delta():
    assert delta_of(GroupDescriptor(LINEAR, 5, 4)) == {3}
    assert delta_of(GroupDescriptor(LINEAR, 5, 4, -1)) == {5}
    assert delta_of(GroupDescriptor(SYMPLECTIC, 28, 3)) == {2}
    assert delta_of(GroupDescriptor(SYMPLECTIC, 28, 4)) == set()


def test_phi_and_inverse():
    S = GroupDescriptor(SYMPLECTIC, 5, 3)
    U = GroupDescriptor(LINEAR, 5, 3, -1)
    assert (phi_of_index(6, S), phi_of_index(3, U), phi_of_index(4, U)) == (3, 6, 4)
    assert index_of_phi(3, S, even=True).i == 6
    assert index_of_phi(3, S, even=False).i == 3
    assert index_of_phi(6, U).i == 3
    with pytest.raises(DomainError):
        index_of_phi(3, S)
    with pytest.raises(DomainError):
        index_of_phi(4, S, even=False)
    with pytest.raises(DomainError):
        index_of_phi(6, U, even=True)


def test_p_exponent():
    assert p_exponent(parse_descriptor("L45+(q=2)")) == 64
    assert p_exponent(parse_descriptor("S(n=28,q=3)")) == 81
    assert p_exponent(parse_descriptor("O+(n=31,q=5)")) == 125


def test_valid_indices_symplectic_example():
    assert sorted(valid_indices(GroupDescriptor(SYMPLECTIC, 5, 5))) == [1, 2, 3, 4, 5, 6, 8, 10]


def test_descriptor_validation():
    with pytest.raises(DomainError):
        GroupDescriptor(SYMPLECTIC, 5, 3, -1)
    with pytest.raises(DomainError):
        GroupDescriptor(EVEN_ORTHOGONAL, 3, 3)
    with pytest.raises(DomainError):
        GroupDescriptor("spin", 5, 3)
