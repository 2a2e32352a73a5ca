"""Index-level prime graphs of classical groups and exact coclique search.

Vertices are the e-indices i > 2 whose primitive prime divisors divide |L|,
plus the characteristic, written CHAR. Two index classes are adjacent when
primes from them multiply to an element order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cliques import bits, clique_number, maximum_cliques
from .groups import EVEN_ORTHOGONAL, LINEAR, SYMPLECTIC, GroupDescriptor, phi_of_index, valid_indices
from .zsigmondy import DomainError, LemmaViolation, eta, nu_eps

CHAR = "p"


class AdjacencyConflict(LemmaViolation):
    """The two one-sided boundary rules disagreed on a pair."""


def _odd_ratio(i, j):
    return (j % i == 0 and (j // i) % 2 == 1) or (i % j == 0 and (i // j) % 2 == 1)


def boundary_set(i, L):
    """One-sided boundary set for even orthogonal groups.

    The indices j with eta(i) + eta(j) = n that are nonadjacent to i, as seen
    from i (empty for other families).
    """
    if L.family != EVEN_ORTHOGONAL:
        return set()
    a = L.n - eta(i)
    if a < 1:
        return set()
    if L.eps > 0:
        if i % 2:
            return {2 * a}
        return {a} if a % 2 else set()
    if i % 2 == 0:
        return {2 * a}
    return {a} if a % 2 else set()


def _shares_full_split_torus(i, j, L):
    # i and j both divide n: both primes lie in a cyclic torus of order q^n - 1
    return L.eps > 0 and L.n % i == 0 and L.n % j == 0


def _check_vertex(i, L, valid):
    if i == CHAR:
        raise DomainError("the characteristic is handled by char_nonadjacent")
    if i <= 2:
        raise DomainError(f"index {i} <= 2 is not a graph vertex")
    if i not in valid:
        raise DomainError(f"index {i} is not valid for {L}")


def nonadjacent(i, j, L, valid=None):
    """Whether primes r_i(q), r_j(q) are nonadjacent in the prime graph of L."""
    if valid is None:
        valid = valid_indices(L)
    _check_vertex(i, L, valid)
    _check_vertex(j, L, valid)
    if i == j:
        raise DomainError("indices must be distinct")
    return _nonadjacent(i, j, L.family, L.eps, L.n)


def _nonadjacent(i, j, family, eps, n):
    if family == LINEAR:
        a, b = nu_eps(i, eps), nu_eps(j, eps)
        return a + b > n and a % b != 0 and b % a != 0
    if _odd_ratio(i, j):
        return False
    s = eta(i) + eta(j)
    if s != n or family != EVEN_ORTHOGONAL:
        return s > n
    L = _Shape(family, n, eps)
    left = j in boundary_set(i, L)
    right = i in boundary_set(j, L)
    if left != right:
        raise AdjacencyConflict(f"boundary rules disagree on ({i}, {j}) for n={n}, eps={eps}")
    return left and not _shares_full_split_torus(i, j, L)


@dataclass(frozen=True)
class _Shape:
    family: str
    n: int
    eps: int


def char_nonadjacent(i, L):
    """Whether r_i(q) is nonadjacent to the characteristic.

    A unipotent element needs two dimensions of the natural module in linear,
    unitary and even orthogonal groups and one hyperbolic pair in symplectic
    and odd orthogonal groups; r_i(q) is adjacent to p iff its torus fits in
    the remaining rank.
    """
    phi = phi_of_index(i, L)
    if L.family in (LINEAR, EVEN_ORTHOGONAL):
        return phi >= L.n - 1
    return phi >= L.n


def graph_shape(L):
    """The data the index graph depends on: family, sign, n and empty classes."""
    family = SYMPLECTIC if L.family != LINEAR and L.family != EVEN_ORTHOGONAL else L.family
    verts = tuple(sorted(i for i in valid_indices(L) if i > 2))
    return family, L.eps, L.n, verts


@dataclass
class IndexGraph:
    group: GroupDescriptor
    labels: list  # vertex labels: indices, then CHAR last
    adj: list  # nonadjacency bitsets (edges of the complement of the prime graph)
    pos: dict = field(default_factory=dict)

    def __post_init__(self):
        self.pos = {v: k for k, v in enumerate(self.labels)}

    def mask(self, vertices):
        m = 0
        for v in vertices:
            m |= 1 << self.pos[v]
        return m

    def unmask(self, m):
        return {self.labels[k] for k in bits(m)}

    @property
    def indices(self):
        return [v for v in self.labels if v != CHAR]

    def nonadjacent(self, u, v):
        return bool(self.adj[self.pos[u]] >> self.pos[v] & 1)

    def edges(self):
        """Nonadjacent pairs (u, v) with u before v."""
        out = []
        for a, u in enumerate(self.labels):
            for b in bits(self.adj[a] >> (a + 1)):
                out.append((u, self.labels[a + 1 + b]))
        return out


@lru_cache(maxsize=None)
def _build(shape):
    family, eps, n, verts = shape
    labels = list(verts) + [CHAR]
    V = len(labels)
    adj = [0] * V
    S = _Shape(family, n, eps)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if _nonadjacent(verts[a], verts[b], family, eps, n):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    c = V - 1
    for a, i in enumerate(verts):
        phi = nu_eps(i, eps) if family == LINEAR else eta(i)
        far = phi >= n - 1 if family in (LINEAR, EVEN_ORTHOGONAL) else phi >= n
        if far:
            adj[a] |= 1 << c
            adj[c] |= 1 << a
    return labels, adj


def index_graph(L):
    labels, adj = _build(graph_shape(L))
    return IndexGraph(L, list(labels), list(adj))


@dataclass
class CocliqueReport:
    indices: set
    size: int
    includes_char: bool
    source: str
    intersection: set = None
    union: set = None

    def as_dict(self):
        d = {
            "indices": sorted(self.indices),
            "size": self.size,
            "includes_char": self.includes_char,
            "source": self.source,
        }
        if self.intersection is not None:
            d["E"] = sorted(self.intersection)
            d["J"] = sorted(self.union)
        return d


def _idx(s):
    return {v for v in s if v != CHAR}


@lru_cache(maxsize=None)
def _cocliques(shape):
    labels, adj = _build(shape)
    found = maximum_cliques(adj)
    return [frozenset(labels[k] for k in bits(m)) for m in found]


@lru_cache(maxsize=None)
def _anchored(shape, v):
    labels, adj = _build(shape)
    k = labels.index(v)
    found = maximum_cliques(adj, adj[k])
    return [frozenset(labels[b] for b in bits(m)) | {v} for m in found]


def max_coclique_exact(L, anchor=None):
    """A maximum coclique (through `anchor` if given) by exact search.

    The report also carries the intersection and union of all maximum
    (anchored) cocliques, with the anchor removed.
    """
    shape = graph_shape(L)
    if anchor is None:
        all_max = _cocliques(shape)
    else:
        if anchor != CHAR and anchor not in shape[3]:
            raise DomainError(f"{anchor} is not a vertex of the graph of {L}")
        all_max = _anchored(shape, anchor)
    best = min(all_max, key=lambda s: sorted(map(str, s)))
    drop = {anchor} if anchor is not None else set()
    inter = set.intersection(*(set(s) - drop for s in all_max))
    union = set.union(*(set(s) - drop for s in all_max))
    return CocliqueReport(
        indices=_idx(best),
        size=len(best),
        includes_char=CHAR in best,
        source="exact-search",
        intersection=_idx(inter),
        union=_idx(union),
    )


def t_of(L):
    labels, adj = _build(graph_shape(L))
    return clique_number(adj)


@lru_cache(maxsize=None)
def _anchored_size(shape, v):
    labels, adj = _build(shape)
    k = labels.index(v)
    return 1 + clique_number(adj, adj[k])


def t_anchored(i, L):
    """t(r_i, L): the largest coclique containing the vertex i (or CHAR)."""
    shape = graph_shape(L)
    if i != CHAR and i not in shape[3]:
        raise DomainError(f"{i} is not a vertex of the graph of {L}")
    return _anchored_size(shape, i)


def classify_large(i, L):
    """'large' if the index lies in some maximum coclique, else 'small'.

    The bounds phi >= n/2 (sufficient) and phi >= n/2 - 1 (necessary) are
    asserted around the exact answer when n >= 13.
    """
    large = t_anchored(i, L) == t_of(L)
    if L.n >= 13 and i != CHAR:
        phi = phi_of_index(i, L)
        if 2 * phi >= L.n and not large:
            raise LemmaViolation(f"phi = {phi} >= n/2 but index {i} is small in {L}")
        if large and 2 * phi < L.n - 2:
            raise LemmaViolation(f"index {i} is large in {L} with phi = {phi} < n/2 - 1")
    return "large" if large else "small"


@dataclass
class ZetaTable:
    group: GroupDescriptor
    t: int
    M: set
    N: set
    T: set
    zeta: dict

    def as_dict(self):
        t = self.t
        return {
            "group": str(self.group),
            "t": t,
            "M": sorted(self.M),
            "N": sorted(self.N),
            "T": sorted(self.T),
            "T_relative": [f"t-{t - x}" for x in sorted(self.T, reverse=True)],
            "zeta": {str(i): z for i, z in sorted(self.zeta.items())},
        }


def zeta_table(L):
    """M(L), N(L), T(L) and zeta from exact anchored coclique sizes.

    M = {i : phi > n/3, t(r_i) < t}, N = {i : 2t/3 < t(r_i) < t},
    zeta(i) = t(r_i), T = zeta(M and N). Thresholds are exact rationals.
    """
    t = t_of(L)
    n = L.n
    M, N, zeta = set(), set(), {}
    for i in graph_shape(L)[3]:
        z = t_anchored(i, L)
        if z >= t:
            continue
        phi = phi_of_index(i, L)
        if Fraction(phi) > Fraction(n, 3):
            M.add(i)
            zeta[i] = z
        if Fraction(2 * t, 3) < z:
            N.add(i)
            zeta[i] = z
    T = {zeta[i] for i in M & N}
    return ZetaTable(L, t, M, N, T, zeta)


def anchored_sizes(L):
    """{i: t(r_i, L)} for every index vertex, from exact search."""
    shape = graph_shape(L)
    return {i: _anchored_size(shape, i) for i in shape[3]}


def large_indices(L):
    t = t_of(L)
    return {i for i, z in anchored_sizes(L).items() if z == t}
