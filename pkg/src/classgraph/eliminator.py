"""Arithmetic elimination of cross-characteristic candidates.

Given a classical group L over a field of characteristic p with t(L) >= 23,
and a classical group S over a field of characteristic v != p, find an
arithmetic contradiction with the hypothesis that S is the nonabelian
composition factor of a group isospectral to L.

Group-theoretic inputs the argument rests on are recorded as assumptions in
the narrative and are not re-proved here:

* transfer: a prime s of L with phi(s, L) > n/3 has t(s, S) = t(s, L); in
  particular primes large for L are large for S, and a coclique of such
  primes stays a coclique in S;
* p divides |S|, t(p, S) = t(p, L), and k = e(p, u) lies in K(l, S);
* the pairs (s, r) produced from the witness construction satisfy
  sr in omega(S) and psr not in omega(S).

Everything else (anchored sizes, preimages, congruences, covers) is computed
and re-checked by `verify_report`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .cliques import bits, maximum_cliques
from .groups import EVEN_ORTHOGONAL, LINEAR, GroupDescriptor, phi_of_index
from .primegraph import (
    CHAR,
    anchored_sizes,
    index_graph,
    large_indices,
    nonadjacent,
    t_anchored,
    t_of,
    zeta_table,
)
from .spectra import char_cover, torus_cover
from .tables import RangeError, table1
from .zsigmondy import DomainError, LemmaViolation, eta, mult_order, nu_eps

SCOPE_T = 23
PATTERNS = ("t-mismatch", "class-mismatch", "LnotinX", "SisnotX1", "tpLneq3", "tplneq2", "tplneq4")
CLASSES = ("X1", "X2", "Y1", "Y2", "Y3")


# Classes.

def classify(L):
    """Class label of L by family and n modulo 4.

    >>> classify(GroupDescriptor(LINEAR, 45, 5)), classify(GroupDescriptor(EVEN_ORTHOGONAL, 31, 5))
    ('X1', 'X2')
    >>> classify(GroupDescriptor("symplectic", 31, 5)), classify(GroupDescriptor(EVEN_ORTHOGONAL, 30, 5, -1))
    ('Y1', 'Y1')
    """
    n = L.n
    t = table1(L)[0]
    if t < SCOPE_T:
        raise RangeError(f"{L} has t = {t} < {SCOPE_T}")
    if L.family == LINEAR:
        return "X1"
    r = n % 4
    if L.family != EVEN_ORTHOGONAL:
        return {0: "Y1", 3: "Y1", 2: "Y2", 1: "Y3"}[r]
    if n % 2:
        return "X2"
    if L.eps > 0:
        return "Y2" if r == 0 else "Y3"
    return "Y1" if r == 2 else "Y3"


def class_from_T(L):
    """The class recomputed from T(L): L is in Y_i iff t - i is not in T(L)."""
    Z = zeta_table(L)
    missing = [i for i in (1, 2, 3) if Z.t - i not in Z.T]
    if not missing:
        return "X2" if L.family == EVEN_ORTHOGONAL else "X1"
    if len(missing) > 1:
        raise LemmaViolation(f"{L}: t - i missing from T for several i: {missing}")
    return f"Y{missing[0]}"


# Table of k = e(p, u) against l = t(p, S).

def k_candidates(l, S):
    """K(l, S): the possible values of e(p, u) when t(p, S) = l.

    >>> k_candidates(3, GroupDescriptor(LINEAR, 50, 7))
    {3}
    >>> sorted(k_candidates(4, GroupDescriptor(EVEN_ORTHOGONAL, 29, 7, 1)))
    [4, 6]
    >>> sorted(k_candidates(2, GroupDescriptor("symplectic", 30, 7)))
    [1, 2]
    """
    if l not in (2, 3, 4):
        raise DomainError("l must be 2, 3 or 4")
    m = S.n
    if S.family == LINEAR:
        if S.eps > 0:
            return {2: {2}, 3: {3}, 4: {4}}[l]
        return {2: {1}, 3: {6}, 4: {4}}[l]
    if l == 2:
        return {1, 2}
    if S.family != EVEN_ORTHOGONAL:
        if l == 3:
            return {4} if m % 4 in (2, 3) else set()
        r = m % 12
        if r in (0, 1, 5, 8, 9):
            return {4}
        if r == 10:
            return {3, 6}
        if r == 4:
            return {3, 4, 6}
        return set()
    if S.eps > 0:
        if l == 3:
            return {4} if m % 4 != 1 else set()
        if m % 6 == 4:
            return {3, 6}
        return {1: {4}, 9: {4}, 11: {6}, 5: {4, 6}}.get(m % 12, set())
    if l == 3:
        return {4} if m % 4 == 3 else set()
    r = m % 12
    if r == 11:
        return {3}
    if r == 5:
        return {3, 4}
    if r in (3, 7):
        return set()
    return {4}


def congruence_obstruction(j, k, S):
    """True when j is forbidden for e(s, u) by p | k_k(u).

    Linear/unitary: nu_eps(k) divides nu_eps(j). Otherwise j = k (mod 2k).

    >>> S = GroupDescriptor("symplectic", 30, 7)
    >>> congruence_obstruction(12, 4, S), congruence_obstruction(16, 4, S)
    (True, False)
    """
    if S.family == LINEAR:
        return nu_eps(j, S.eps) % nu_eps(k, S.eps) == 0
    return j % (2 * k) == k


# Witness pairs in L.

def rsnotprs_witnesses(j, L):
    """(i, i2) with r_i large, r_i r_j in omega(L), p r_i r_j not in omega(L).

    i2 is None unless the extra hypothesis holds; when present, r_i and r_i2
    are nonadjacent. Every claim is checked against the graph and covers.

    >>> rsnotprs_witnesses(13, GroupDescriptor("symplectic", 28, 3))
    (30, 15)
    """
    n = L.n
    if L.family == LINEAR:
        e = L.eps
        v = nu_eps(j, e)
        i = nu_eps(n - v, e)
        i2 = nu_eps(n - 1 - v, e) if 2 * v < n - 1 else None
    elif L.family != EVEN_ORTHOGONAL:
        a = n - eta(j)
        i, i2 = 2 * a, (a if a % 2 else None)
    else:
        h = eta(j)
        if 2 * h == n - 2 and n % 4 == 2:
            if L.eps < 0:
                raise LemmaViolation(f"{L}: eta(j) = n/2 - 1 with n = 2 mod 4 needs eps = +")
            # n + 1 is not an index of O+_2n; the second witness is 2(n/2 + 1)
            i, i2 = n // 2, n + 2
        elif 2 * h == n - 1:
            i, i2 = n + 1, None
        elif 2 * h < n - 1:
            a = n - 1 - h
            i = 2 * a
            if a % 2:
                i2 = a
            elif (j == h) == (L.eps > 0):
                i2 = a + 1
            else:
                i2 = 2 * (a + 1)
        else:
            raise DomainError(f"eta({j}) = {h} is too large for a witness in {L}")
    check_witness(j, i, L)
    if i2 is not None:
        check_witness(j, i2, L)
        if not nonadjacent(i, i2, L):
            raise LemmaViolation(f"{L}: witnesses {i} and {i2} are adjacent")
    return i, i2


def witness_ok(j, i, L):
    """r_i large, phi(r_i) < 2n/3, r_i r_j in omega(L), p r_i r_j not."""
    if i not in large_indices(L):
        return False
    if 3 * phi_of_index(i, L) >= 2 * L.n:
        return False
    return torus_cover([i, j], L) is not None and char_cover([i, j], L) is None


def check_witness(j, i, L):
    if not witness_ok(j, i, L):
        raise LemmaViolation(f"{L}: index {i} is not a witness for {j}")


def witness_set(j, L):
    """All indices i with the witness properties for j."""
    return sorted(i for i in large_indices(L) if i != j and witness_ok(j, i, L))


# Reports.

@dataclass
class Fact:
    fact: str
    source: str
    kind: str
    data: dict = field(default_factory=dict)

    def as_dict(self):
        return {"fact": self.fact, "source": self.source}


@dataclass
class ContradictionReport:
    L: GroupDescriptor
    S: GroupDescriptor
    pattern: str
    witnesses: dict
    narrative: list
    verified: bool = False

    def as_dict(self):
        return {
            "pair": [str(self.L), str(self.S)],
            "pattern": self.pattern,
            "witnesses": self.witnesses,
            "narrative": [f.as_dict() for f in self.narrative],
            "verified": self.verified,
        }


@dataclass
class NotEliminated:
    L: GroupDescriptor
    S: GroupDescriptor
    pattern: str
    open_cases: list
    narrative: list

    verified = False

    def as_dict(self):
        return {
            "pair": [str(self.L), str(self.S)],
            "pattern": None,
            "attempted": self.pattern,
            "open_cases": self.open_cases,
            "narrative": [f.as_dict() for f in self.narrative],
            "verified": False,
        }


def _e_char(p, u):
    """e(p, u), with the convention e(2, u) = 1 or 2 by u mod 4."""
    if p == 2:
        return 1 if u % 4 == 1 else 2
    return mult_order(p, u)


# Pigeonhole search.

class _Pigeonhole:
    """Is there an assignment of S-indices to the primes of a configuration?

    Variables: e(s_a, u) for each a in A (domain: indices of S with anchored
    size t(s_a, L)), and e(r, u) for each r in R (domain: large indices of S).
    Constraints: for each pair (a, r), s_a r in omega(S) and p s_a r not;
    the e(r, u) are distinct and pairwise nonadjacent in S.
    """

    def __init__(self, S, k, cover_cache):
        self.S = S
        self.k = k
        self.cache = cover_cache
        self.large = sorted(large_indices(S))

    def _cover(self, idx):
        key = tuple(sorted(set(idx)))
        if key not in self.cache:
            self.cache[key] = torus_cover(key, self.S) is not None
        return self.cache[key]

    def allowed(self, j, i):
        return self._cover((j, i)) and not self._cover((self.k, j, i))

    def _nonadj(self, x, y):
        return x != y and not self._cover((x, y))

    def solve(self, jdom, R, pairs):
        """An assignment as a dict, or None if none exists."""
        A = sorted(jdom)
        for js in product(*(jdom[a] for a in A)):
            J = dict(zip(A, js))
            doms = []
            for r in R:
                d = [i for i in self.large if all(self.allowed(J[a], i) for a in A if (a, r) in pairs)]
                doms.append(d)
            pick = self._assign(doms, [])
            if pick is not None:
                return {"j": J, "i": dict(zip(R, pick))}
        return None

    def _assign(self, doms, chosen):
        if len(chosen) == len(doms):
            return list(chosen)
        for i in doms[len(chosen)]:
            if all(self._nonadj(i, c) for c in chosen):
                out = self._assign(doms, chosen + [i])
                if out is not None:
                    return out
        return None


# The pipeline.

class _Run:
    def __init__(self, L, S):
        self.L, self.S = L, S
        self.facts = []

    def add(self, fact, source, kind, **data):
        self.facts.append(Fact(fact, source, kind, data))


def _check_pair(L, S):
    if L.p == S.p:
        raise DomainError(f"{L} and {S} share the characteristic {L.p}")
    t = table1(L)[0]
    if t < SCOPE_T:
        raise RangeError(f"{L} has t = {t}; elimination needs t >= {SCOPE_T}")


def eliminate(L, S):
    """A ContradictionReport for the pair (L, S), or NotEliminated."""
    _check_pair(L, S)
    run = _Run(L, S)
    tL, tS = t_of(L), t_of(S)
    run.add(f"t({L}) = {tL}", "exact coclique search", "t", group=L, value=tL)
    run.add(f"t({S}) = {tS}", "exact coclique search", "t", group=S, value=tS)
    if tL != tS:
        run.add("t(S) must equal t(L)", "assumption: independence numbers agree", "axiom")
        return _finish(run, "t-mismatch", {"t(L)": tL, "t(S)": tS})

    cL, cS = classify(L), classify(S)
    run.add(f"{L} lies in class {cL}", "class table", "class", group=L, label=cL)
    run.add(f"{S} lies in class {cS}", "class table", "class", group=S, label=cS)
    if cS.startswith("Y") and cS != cL:
        i = int(cS[1])
        x = tL - i
        run.add(f"t - {i} = {x} is not in T(S)", "zeta table of S", "in_T", group=S, x=x, member=False)
        run.add(f"t - {i} = {x} is in T(L)", "zeta table of L", "in_T", group=L, x=x, member=True)
        run.add(f"{x} > (2t+2)/3, so {x} is not an exceptional value", "inequality t - a > (2t+2)/3", "bound", t=tL, a=i)
        run.add(f"{x} = t(s, L) = t(s, S) for some s forces {x} into T(S)", "assumption: transfer", "axiom")
        return _finish(run, "class-mismatch", {"i": i, "x": x, "class(L)": cL, "class(S)": cS})

    l = t_anchored(CHAR, L)
    run.add(f"t(p, L) = {l}", "exact search through the characteristic", "tp", value=l)
    if cL in ("X1", "X2"):
        pattern = "LnotinX"
    elif cS == "X1":
        pattern = "SisnotX1"
    else:
        pattern = {3: "tpLneq3", 2: "tplneq2", 4: "tplneq4"}.get(l)
        if pattern is None:
            raise LemmaViolation(f"t(p, {L}) = {l} is not in {{2, 3, 4}}")
    K = k_candidates(l, S)
    run.add(f"K({l}, {S}) = {sorted(K)}", "table of e(p, u)", "K", l=l, value=sorted(K))
    run.add("k = e(p, u) lies in K(t(p, L), S)", "assumption: p divides |S| with t(p, S) = t(p, L)", "axiom")
    witnesses = {"l": l, "K": sorted(K), "e(p,u)": _e_char(L.p, S.q)}
    if not K:
        return _finish(run, pattern, witnesses)

    Z = zeta_table(L)
    zS = anchored_sizes(S)
    MN = sorted(Z.M & Z.N, key=lambda a: (-Z.zeta[a], a))
    pre = {}
    for a in MN:
        c = Z.zeta[a]
        if c not in pre:
            pre[c] = sorted(j for j, z in zS.items() if z == c)
    run.add("e(s, u) for s = r_a(q), a in M(L) and N(L), has anchored size zeta_L(a) in S",
            "assumption: transfer", "axiom")

    # an anchored size of L that S does not realize
    for a in MN:
        c = Z.zeta[a]
        if not pre[c]:
            run.add(f"zeta_L({a}) = {c}", "exact anchored search in L", "zeta", a=a, value=c)
            run.add(f"no index of {S} has anchored size {c}", "exact anchored search in S", "preimage", c=c, value=[])
            witnesses.update({"a": a, "c": c, "j": []})
            return _finish(run, pattern, witnesses)

    cases = {}
    open_cases = []
    cache = {}
    for k in sorted(K):
        case = _by_congruence(run, k, MN, Z, pre)
        if case is None:
            case = _by_pigeonhole(run, k, MN, Z, pre, cache)
        if case is None:
            open_cases.append(k)
        else:
            cases[str(k)] = case
    if open_cases:
        return NotEliminated(L, S, pattern, open_cases, run.facts)
    if len(cases) == 1:
        witnesses.update(next(iter(cases.values())))
        witnesses["k"] = int(next(iter(cases)))
    else:
        witnesses["cases"] = cases
    return _finish(run, pattern, witnesses)


def _by_congruence(run, k, MN, Z, pre):
    L, S = run.L, run.S
    for a in MN:
        c = Z.zeta[a]
        js = pre[c]
        if not all(congruence_obstruction(j, k, S) for j in js):
            continue
        i = witness_set(a, L)
        if not i:
            continue
        run.add(f"zeta_L({a}) = {c} with {a} in M(L) and N(L)", "exact anchored search in L", "zeta", a=a, value=c)
        run.add(f"indices of {S} with anchored size {c}: {js}", "exact anchored search in S", "preimage", c=c, value=js)
        run.add(f"r_{i[0]}(q) is a witness for {a}: large, r r_{a} in omega(L), p r r_{a} not",
                "torus covers in L", "witness", a=a, i=i[0])
        run.add(f"every j in {js} is excluded for k = {k}", "divisibility obstruction", "congruence", k=k, js=js)
        return {"k": k, "a": a, "c": c, "j": js, "i": i[0], "route": "congruence"}
    return None


def _cocliques_within(L, idx, limit=12):
    G = index_graph(L)
    m = G.mask(idx)
    found = maximum_cliques(G.adj, m)
    return [sorted(G.labels[b] for b in bits(x)) for x in found[:limit]]


def _by_pigeonhole(run, k, MN, Z, pre, cache):
    L, S = run.L, run.S
    solver = _Pigeonhole(S, k, cache)
    W = {a: witness_set(a, L) for a in MN}
    configs = [(a,) for a in MN] + list(combinations(MN, 2))
    best = None
    for A in configs:
        pool = sorted(set().union(*(W[a] for a in A)))
        for R in _cocliques_within(L, pool):
            if len(R) < 2 or (best is not None and (len(R), len(A), sorted(A)) >= best[0]):
                continue
            pairs = {(a, r) for a in A for r in R if r in W[a]}
            jdom = {a: pre[Z.zeta[a]] for a in A}
            if solver.solve(jdom, R, pairs) is None:
                best = ((len(R), len(A), sorted(A)), A, R, pairs, jdom)
    if best is None:
        return None
    _, A, R, pairs, jdom = best
    A = sorted(A)
    for a in A:
        run.add(f"zeta_L({a}) = {Z.zeta[a]} with {a} in M(L) and N(L)", "exact anchored search in L",
                "zeta", a=a, value=Z.zeta[a])
        run.add(f"indices of {S} with anchored size {Z.zeta[a]}: {jdom[a]}", "exact anchored search in S",
                "preimage", c=Z.zeta[a], value=jdom[a])
    for a, r in sorted(pairs):
        run.add(f"r_{r}(q) is a witness for {a}", "torus covers in L", "witness", a=a, i=r)
    run.add(f"{R} is a coclique of large primes of {L}", "prime graph of L", "coclique", indices=R)
    run.add("the coclique stays a coclique of large primes in S", "assumption: transfer", "axiom")
    run.add(f"no assignment of indices of {S} satisfies the pairs for k = {k}",
            "exhaustive search over torus covers in S", "pigeonhole",
            k=k, jdom={str(a): v for a, v in jdom.items()}, R=R, pairs=sorted(pairs))
    return {"k": k, "s_indices": A, "r_indices": R, "j": {str(a): jdom[a] for a in A}, "route": "pigeonhole"}


def _finish(run, pattern, witnesses):
    report = ContradictionReport(run.L, run.S, pattern, witnesses, run.facts)
    report.verified = verify_report(report)
    return report


# Re-verification.

def _verify_fact(f, L, S):
    d = f.data
    kind = f.kind
    if kind == "axiom":
        return True
    if kind == "t":
        return t_of(d["group"]) == d["value"]
    if kind == "class":
        g = d["group"]
        return classify(g) == d["label"] == class_from_T(g)
    if kind == "in_T":
        return (d["x"] in zeta_table(d["group"]).T) == d["member"]
    if kind == "bound":
        return tmaless2t3(d["t"], d["a"])
    if kind == "tp":
        return t_anchored(CHAR, L) == d["value"]
    if kind == "K":
        return sorted(k_candidates(d["l"], S)) == d["value"]
    if kind == "zeta":
        Z = zeta_table(L)
        return d["a"] in Z.M & Z.N and Z.zeta[d["a"]] == d["value"]
    if kind == "preimage":
        return sorted(j for j, z in anchored_sizes(S).items() if z == d["c"]) == d["value"]
    if kind == "witness":
        return witness_ok(d["a"], d["i"], L)
    if kind == "congruence":
        return all(congruence_obstruction(j, d["k"], S) for j in d["js"])
    if kind == "coclique":
        R = d["indices"]
        big = large_indices(L)
        return all(r in big for r in R) and all(nonadjacent(x, y, L) for x, y in combinations(R, 2))
    if kind == "pigeonhole":
        jdom = {int(a): v for a, v in d["jdom"].items()}
        pairs = {tuple(p) for p in d["pairs"]}
        return _Pigeonhole(S, d["k"], {}).solve(jdom, d["R"], pairs) is None
    raise DomainError(f"unknown fact kind {kind!r}")


def verify_report(report):
    """Recompute every checkable fact of a report."""
    return all(_verify_fact(f, report.L, report.S) for f in report.narrative)


# Standalone inequalities.

def tmaless2t3(t, a):
    """t - a > (2t + 2)/3, exactly."""
    return Fraction(t - a) > Fraction(2 * t + 2, 3)


def qbyq_exponent_exceeds_three(l, t, d):
    """10 l d / (3 t) > 3 via the split at l/t = 9/10 (d >= max(1, t - l))."""
    if d < 1 or d < t - l:
        raise DomainError("d must be at least max(1, t - l)")
    e = Fraction(10 * l * d, 3 * t)
    if Fraction(l, t) > Fraction(9, 10):
        lower = Fraction(10 * l, 3 * t)
        assert e >= lower
        return lower > 3
    lower = Fraction(10 * l, 3) * (1 - Fraction(l, t))
    assert e >= lower and lower >= Fraction(l, 3)
    return Fraction(l, 3) > 3


def tlints_exceptional(S):
    """The values zeta_S may take on N(S) outside M(S), as multiples of t."""
    m = S.n
    t = table1(S)[0]
    if S.family == EVEN_ORTHOGONAL:
        if S.eps > 0 and m % 12 in (6, 9):
            return {Fraction(2 * t + 1, 3)}
        if S.eps < 0 and m % 12 in (0, 9):
            return {Fraction(2 * t + 1, 3)}
        if S.eps < 0 and m % 12 == 6:
            return {Fraction(2 * t + 2, 3)}
    return set()


# Candidate enumeration.

SIGNED_TYPES = ((LINEAR, 1), (LINEAR, -1), ("symplectic", 1), ("odd_orthogonal", 1),
                (EVEN_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, -1))


def candidate_fields(p, q, chars=(2, 3, 5, 7)):
    """Field sizes u = v^g <= q^2 with v in chars and v != p."""
    out = []
    for v in chars:
        if v == p:
            continue
        u = v
        while u <= q * q:
            out.append(u)
            u *= v
    return sorted(out)


def candidates(L, chars=(2, 3, 5, 7), mmin=13):
    """Classical S over u = v^g <= q^2 with t(S) = t(L), by the closed-form t."""
    t = table1(L)[0]
    out = []
    for u in candidate_fields(L.p, L.q, chars):
        for fam, eps in SIGNED_TYPES:
            for m in range(mmin, 4 * t + 8):
                S = GroupDescriptor(fam, m, u, eps)
                if table1(S)[0] == t:
                    out.append(S)
    return out
