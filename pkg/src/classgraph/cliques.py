"""Exact maximum-clique search on small graphs stored as integer bitsets.

Cocliques of a prime graph are cliques of its nonadjacency graph, so the
searches here run on that complement. Branch and bound with greedy colouring
bounds, in the style of Tomita's MCQ.
"""

from __future__ import annotations


def bits(x):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _colour_order(adj, P):
    # greedy sequential colouring; returns vertices with nondecreasing colour
    order, bounds = [], []
    colour = 0
    U = P
    while U:
        colour += 1
        Q = U
        while Q:
            b = Q & -Q
            v = b.bit_length() - 1
            Q &= ~adj[v] & ~b
            U &= ~b
            order.append(v)
            bounds.append(colour)
    return order, bounds


def clique_number(adj, P=None):
    """Size of a largest clique inside the vertex set P (all vertices by default)."""
    if P is None:
        P = (1 << len(adj)) - 1
    best = [0]

    def expand(size, P):
        order, bounds = _colour_order(adj, P)
        for k in range(len(order) - 1, -1, -1):
            if size + bounds[k] <= best[0]:
                return
            v = order[k]
            NP = P & adj[v]
            if NP:
                expand(size + 1, NP)
            elif size + 1 > best[0]:
                best[0] = size + 1
            P &= ~(1 << v)

    if P:
        expand(0, P)
    return best[0]


def maximum_cliques(adj, P=None):
    """All cliques of largest size inside P, as a list of bitsets."""
    if P is None:
        P = (1 << len(adj)) - 1
    if not P:
        return [0]
    target = clique_number(adj, P)
    found = []

    def expand(cur, size, P):
        order, bounds = _colour_order(adj, P)
        for k in range(len(order) - 1, -1, -1):
            if size + bounds[k] < target:
                return
            v = order[k]
            NP = P & adj[v]
            nxt = cur | (1 << v)
            if NP:
                expand(nxt, size + 1, NP)
            elif size + 1 == target:
                found.append(nxt)
            P &= ~(1 << v)

    expand(0, 0, P)
    return found


def is_clique(adj, S):
    for v in bits(S):
        if S & ~adj[v] & ~(1 << v):
            return False
    return True
