"""Closed-form coclique data: greatest cocliques, cocliques through the
characteristic, and cocliques of size at most four.

Index sets are returned as sets of e-indices restricted to the valid indices
of the group (every listed set is stated in terms of eta or nu_eps values,
which are turned into indices here).
"""

from __future__ import annotations

from fractions import Fraction

from .groups import EVEN_ORTHOGONAL, LINEAR, index_range
from .zsigmondy import DomainError, eta, nu_eps


class RangeError(DomainError):
    """Parameters below the floor where a closed form is stated."""


TABLE_FLOOR = 13


def _indices(L, pred):
    return {i for i in index_range(L) if i > 2 and pred(i)}


def table1(L):
    """(t, E, J minus E) for a greatest coclique, n >= 13."""
    n = L.n
    if n < TABLE_FLOOR:
        raise RangeError(f"greatest-coclique table needs n >= {TABLE_FLOOR}, got n = {n}")
    half = Fraction(n, 2)
    if L.family == LINEAR:
        nv = lambda i: nu_eps(i, L.eps)
        if n % 2:
            return (n + 1) // 2, _indices(L, lambda i: half < nv(i) <= n), set()
        E = _indices(L, lambda i: half < nv(i) < n)
        return n // 2, E, {nu_eps(n // 2, L.eps), nu_eps(n, L.eps)}
    r = n % 4
    if L.family != EVEN_ORTHOGONAL:
        if r == 0:
            return (3 * n + 4) // 4, _indices(L, lambda i: half <= eta(i) <= n), set()
        if r == 1:
            return (3 * n + 5) // 4, _indices(L, lambda i: half < eta(i) <= n), set()
        if r == 2:
            return (3 * n + 2) // 4, _indices(L, lambda i: half < eta(i) <= n), {n // 2, n}
        E = _indices(L, lambda i: Fraction(n + 1, 2) < eta(i) <= n)
        return (3 * n + 3) // 4, E, {(n - 1) // 2, n - 1, n + 1}
    if L.eps > 0:
        if r == 0:
            E = _indices(L, lambda i: half <= eta(i) <= n and i != 2 * n)
            return 3 * n // 4, E, set()
        if r == 1:
            E = _indices(L, lambda i: half < eta(i) <= n and i not in (2 * n, n + 1))
            return (3 * n + 1) // 4, E, {n - 1, n + 1}
        if r == 2:
            E = _indices(L, lambda i: half < eta(i) <= n and i != 2 * n)
            return (3 * n - 2) // 4, E, {n // 2, n}
        E = _indices(L, lambda i: Fraction(n - 1, 2) <= eta(i) <= n and i not in (2 * n, n - 1))
        return (3 * n + 3) // 4, E, set()
    if r == 0:
        return (3 * n + 4) // 4, _indices(L, lambda i: half <= eta(i) <= n), set()
    if r == 1:
        E = _indices(L, lambda i: half < eta(i) <= n and i not in (n, (n + 1) // 2))
        return (3 * n + 1) // 4, E, {(n + 1) // 2, n - 1}
    if r == 2:
        return (3 * n + 2) // 4, _indices(L, lambda i: half < eta(i) <= n), {n // 2, n - 2, n}
    E = _indices(L, lambda i: Fraction(n - 1, 2) <= eta(i) <= n and i not in (n, (n - 1) // 2))
    return (3 * n + 3) // 4, E, set()


_TABLE2_EXCLUDED = {
    LINEAR: {(4, -2), (6, 2), (7, 2)},  # keyed by (n, eps*q)
}


def table2_applies(L):
    n, q = L.n, L.q
    if L.family == LINEAR:
        return n >= 4 and (n, L.eps * q) not in _TABLE2_EXCLUDED[LINEAR]
    if L.family == EVEN_ORTHOGONAL:
        return n >= 4 and (n, q) != (4, 2)
    return n >= 3 and (n, q) != (3, 2)


def table2(L):
    """(t(p, L), J(p, L)) for cocliques through the characteristic."""
    if not table2_applies(L):
        raise RangeError(f"characteristic-coclique table does not cover {L}")
    n = L.n
    if L.family == LINEAR:
        return 3, {nu_eps(n - 1, L.eps), nu_eps(n, L.eps)}
    if L.family != EVEN_ORTHOGONAL:
        return (2, {2 * n}) if n % 2 == 0 else (3, {n, 2 * n})
    if L.eps > 0:
        return (3, {n - 1, 2 * n - 2}) if n % 2 == 0 else (3, {n, 2 * n - 2})
    return (4, {n - 1, 2 * n - 2, 2 * n}) if n % 2 == 0 else (3, {2 * n - 2, 2 * n})


# Rows of the size-at-most-four table as (e, modulus, residue, t, J-builder).
# For linear/unitary groups e and J entries are nu_eps arguments.
_T3_LINEAR = [
    (2, 2, 0, 2, lambda n: [n - 1]),
    (2, 2, 1, 2, lambda n: [n]),
    (3, 3, 0, 3, lambda n: [n - 2, n - 1]),
    (3, 3, 1, 3, lambda n: [n - 2, n]),
    (3, 3, 2, 3, lambda n: [n - 1, n]),
    (4, 4, 0, 4, lambda n: [n - 3, n - 2, n - 1]),
    (4, 4, 1, 4, lambda n: [n - 3, n - 2, n]),
    (4, 4, 2, 4, lambda n: [n - 3, n - 1, n]),
    (4, 4, 3, 4, lambda n: [n - 2, n - 1, n]),
]

_T3_SO = [
    (1, 1, 0, 2, lambda n: [2 * n]),
    (2, 2, 0, 2, lambda n: [2 * n]),
    (2, 2, 1, 2, lambda n: [n]),
    (4, 4, 0, 4, lambda n: [n - 1, 2 * n - 2, 2 * n]),
    (4, 4, 1, 4, lambda n: [n, 2 * n - 2, 2 * n]),
    (4, 4, 2, 3, lambda n: [n - 1, 2 * n - 2]),
    (4, 4, 3, 3, lambda n: [n, 2 * n]),
    (3, 6, 4, 4, lambda n: [2 * n - 4, 2 * n - 2, 2 * n]),
    (6, 6, 4, 4, lambda n: [2 * n - 4, n - 1, 2 * n]),
]

_T3_OPLUS = [
    (1, 1, 0, 2, lambda n: [2 * n - 2]),
    (2, 2, 0, 2, lambda n: [n - 1]),
    (2, 2, 1, 2, lambda n: [n]),
    (4, 4, 0, 3, lambda n: [n - 1, 2 * n - 2]),
    (4, 4, 1, 4, lambda n: [n - 2, 2 * n - 2, n]),
    (4, 4, 2, 3, lambda n: [n - 1, 2 * n - 2]),
    (4, 4, 3, 3, lambda n: [n - 2, n]),
    (3, 6, 4, 4, lambda n: [2 * n - 6, 2 * n - 4, 2 * n - 2]),
    (6, 6, 4, 4, lambda n: [2 * n - 4, n - 3, n - 1]),
    (6, 6, 5, 4, lambda n: [2 * n - 2, n - 2, n]),
]

_T3_OMINUS = [
    (1, 1, 0, 2, lambda n: [2 * n]),
    (2, 2, 0, 2, lambda n: [2 * n]),
    (2, 2, 1, 2, lambda n: [2 * n - 2]),
    (4, 4, 0, 4, lambda n: [n - 1, 2 * n - 2, 2 * n]),
    (4, 4, 1, 4, lambda n: [2 * n - 4, 2 * n - 2, 2 * n]),
    (4, 4, 2, 4, lambda n: [n - 1, 2 * n - 4, 2 * n - 2]),
    (4, 4, 3, 3, lambda n: [2 * n - 4, 2 * n]),
    (3, 6, 5, 4, lambda n: [2 * n - 4, 2 * n - 2, 2 * n]),
]

# e = nu_eps(1) rows for linear/unitary groups depend on |eps q - 1|_r versus n_r
T3_LINEAR_E1 = {
    "equal": (3, lambda n: [n - 1, n]),
    "greater": (2, lambda n: [n]),
    "less": (2, lambda n: [n - 1]),
}


def _t3_rows(L):
    if L.family == LINEAR:
        return _T3_LINEAR
    if L.family != EVEN_ORTHOGONAL:
        return _T3_SO
    return _T3_OPLUS if L.eps > 0 else _T3_OMINUS


def table3(L, e, rpart_relation=None):
    """(t(r, L), J(r, L)) for a prime r with e(r, q) = e, or None if no row.

    For linear/unitary groups `e` is the e-index itself; rows are stored by
    nu_eps argument and translated. When e = nu_eps(1) the comparison of
    |eps q - 1|_r with n_r must be given as 'equal', 'greater' or 'less'.
    """
    n = L.n
    if n < TABLE_FLOOR:
        raise RangeError(f"small-coclique table needs n >= {TABLE_FLOOR}, got n = {n}")
    if L.family == LINEAR:
        arg = nu_eps(e, L.eps)
        if arg == 1:
            if rpart_relation not in T3_LINEAR_E1:
                raise DomainError("e = nu_eps(1) needs rpart_relation in {'equal', 'greater', 'less'}")
            t, js = T3_LINEAR_E1[rpart_relation]
            return t, {nu_eps(j, L.eps) for j in js(n)}
        for row_e, mod, res, t, js in _T3_LINEAR:
            if row_e == arg and n % mod == res:
                return t, {nu_eps(j, L.eps) for j in js(n)}
        return None
    for row_e, mod, res, t, js in _t3_rows(L):
        if row_e == e and n % mod == res:
            return t, set(js(n))
    return None


def table3_index_rows(L):
    """The e-values whose rows are checked on the index graph (e > 2)."""
    if L.family == LINEAR:
        return [nu_eps(3, L.eps), nu_eps(4, L.eps)]
    return [3, 4, 6]


# Closed forms for the anchored-coclique function zeta on M(L).

ZETA_FLOORS = {LINEAR: 45, "symplectic": 29, "odd_orthogonal": 29, (EVEN_ORTHOGONAL, 1): 30, (EVEN_ORTHOGONAL, -1): 30}


def zeta_floor(L):
    if L.family == EVEN_ORTHOGONAL:
        return ZETA_FLOORS[(EVEN_ORTHOGONAL, L.eps)]
    return ZETA_FLOORS[L.family]


def zeta_formula(i, L, version="proof"):
    """Closed form of zeta_L(i) for i in M(L).

    For O-_{2n} the stated form and the form derived in its proof differ in the
    first case (the stated version reads 'n odd' where the derivation needs
    'n even'); `version` selects which one is evaluated.
    """
    n, h = L.n, eta(i)
    if L.family == LINEAR:
        return nu_eps(i, L.eps)
    if L.family != EVEN_ORTHOGONAL:
        return (3 * h + 2) // 2 if n % 2 == 0 else (3 * h + 3) // 2
    if L.eps > 0:
        if n % 2 == 0:
            return (3 * h + 1) // 2
        return (3 * h + 2) // 2 if i % 2 == 0 else (3 * h + 3) // 2
    if version == "statement":
        # cases taken in the stated order; the first one swallows every odd n
        if n % 2 == 1:
            return (3 * h + 4) // 2
        return None
    if n % 2 == 0:
        return (3 * h + 4) // 2
    return (3 * h + 2) // 2 if i % 2 == 1 else (3 * h + 3) // 2


def n_minus_m_formula(L):
    """(N \\ M, M \\ N) as predicted by the closed forms."""
    n = L.n
    if L.family == LINEAR:
        if n % 6 == 5:
            return set(), {nu_eps((n + 1) // 3, L.eps)}
        return set(), set()
    if L.family != EVEN_ORTHOGONAL:
        return set(), set()
    r = n % 12
    if L.eps > 0:
        if r == 6:
            return {2 * n // 3}, set()
        if r == 9:
            return {2 * n // 3, n // 3}, set()
        return set(), set()
    if r in (0, 6):
        return {2 * n // 3}, set()
    if r == 9:
        return {2 * n // 3, n // 3}, set()
    return set(), set()


def eta_third_zeta(L):
    """zeta at the index with eta = n/3 lying in N \\ M, as a multiple of t.

    Returns (value, (numerator offset) k) with value = (2t + k)/3, or None.
    """
    n = L.n
    if L.family != EVEN_ORTHOGONAL:
        return None
    t = table1(L)[0]
    if L.eps > 0 and n % 12 in (6, 9):
        return (n + 1) // 2, 1
    if L.eps < 0 and n % 12 in (0, 6):
        return (n + 2) // 2, (2 if n % 12 == 6 else 1)
    if L.eps < 0 and n % 12 == 9:
        return (n + 1) // 2, 1
    return None


def t_window_formula(L):
    """(low offset, high offset, expected offsets) for T(L) near t.

    The expected set lists offsets a with t - a in T(L), for a in
    [low, high]. Returns None where only containment is stated.
    """
    n = L.n
    if L.family == LINEAR:
        return 1, 7, set(range(1, 8))
    if L.family != EVEN_ORTHOGONAL:
        r = n % 4
        if r in (0, 3):
            return 1, 6, {2, 3, 5, 6}
        if r == 2:
            return 1, 6, {1, 3, 4, 6}
        return 1, 6, {1, 2, 4, 5}
    if n % 2 == 1:
        return 1, 6, set(range(1, 7))
    if L.eps > 0:
        return (1, 6, {1, 3, 4, 6}) if n % 4 == 0 else (1, 6, {1, 2, 4, 5})
    if n % 4 == 0:
        return 1, 7, {1, 2, 4, 5, 7}
    if n == 30:
        return "all", None, {2, 3, 5}
    if n == 34:
        return "all", None, {2, 3, 5, 6}
    return 1, 8, {2, 3, 5, 6, 8}
